// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Benchmarks for the main eqvol pipelines, shared by the `pipelines`
//! bench target.

use std::f64::consts::TAU;
use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use eqvol::{
    centroaffine_frenet, centroaffine_frenet_fast, lift_representative, resample_equal_volume,
    sample_curve, sample_plane_curve, table1_experiment, Curve, DarbouxField, FramedPolygon, Mode,
    SampleGrid, Seed, Vec3,
};

const SIZES: [usize; 3] = [100, 1000, 10_000];

fn spiral(n: usize) -> eqvol::Polygon3 {
    sample_curve(&Curve::ExampleSpiral, 0.0, TAU, n, SampleGrid::HalfOpenStep).expect("spiral samples")
}

pub fn table1(c: &mut Criterion) {
    c.bench_function("table1/10,100,1000", |b| {
        b.iter(|| table1_experiment(black_box(&[10, 100, 1000])).unwrap())
    });
}

pub fn resample(c: &mut Criterion) {
    let mut g = c.benchmark_group("resample");
    for n in SIZES {
        let p = spiral(n);
        let df = DarbouxField::centroaffine(&p, Vec3::ZERO);
        let f = FramedPolygon::silhouette(p, Vec3::ZERO).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &(f, df), |b, (f, df)| {
            b.iter(|| resample_equal_volume(f, df).unwrap())
        });
    }
    g.finish();
}

pub fn frenet(c: &mut Criterion) {
    let mut g = c.benchmark_group("frenet");
    // Past a few thousand vertices the determinants cancel below the
    // exact-path spread limit.
    for n in [100, 1000] {
        let p = sample_curve(&Curve::ExampleSpiralRepresentative, 0.0, TAU, n, SampleGrid::HalfOpenStep).unwrap();
        g.bench_with_input(BenchmarkId::new("solve", n), &p, |b, p| {
            b.iter(|| centroaffine_frenet(p, Vec3::ZERO, Mode::Exact).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("determinant", n), &p, |b, p| {
            b.iter(|| centroaffine_frenet_fast(p, Vec3::ZERO).unwrap())
        });
    }
    g.finish();
}

pub fn lift(c: &mut Criterion) {
    let mut g = c.benchmark_group("lift");
    for n in SIZES {
        let p = sample_plane_curve(&Curve::ExampleSpiral, 0.0, TAU, n, SampleGrid::HalfOpenStep).unwrap();
        g.bench_with_input(BenchmarkId::new("default", n), &p, |b, p| {
            b.iter(|| lift_representative(p, Seed::Default).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("smooth", n), &p, |b, p| {
            b.iter(|| lift_representative(p, Seed::Smooth).unwrap())
        });
    }
    g.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    table1(c);
    resample(c);
    frenet(c);
    lift(c);
}
