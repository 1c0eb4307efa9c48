// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded fixture generators shared by the integration tests.

#![allow(dead_code)]

use std::io::Write;

use eqvol::{
    centroaffine_from_frenet, equal_area_from_curvature, framed_from_frenet, parallel_darboux,
    DarbouxField, FramedPolygon, PlanarEqualAreaPolygon, Polygon3, Vec2, Vec3,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Prints a result line on stderr, bypassing the test harness capture.
pub fn report(id: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "[{tag}] {id}: {detail}");
}

/// A twisted loop around the z axis above the origin: every face through
/// the origin is transversal.
pub fn random_polygon(r: &mut ChaCha8Rng, n: usize) -> Polygon3 {
    let mut th: f64 = 0.0;
    let pts = (0..n)
        .map(|_| {
            th += r.gen_range(0.15..0.45);
            let rad = r.gen_range(0.8..1.2);
            Vec3::new(rad * th.cos(), rad * th.sin(), r.gen_range(0.7..1.3))
        })
        .collect();
    Polygon3::open(pts).unwrap()
}

pub fn small_vec(r: &mut ChaCha8Rng, s: f64) -> Vec3 {
    Vec3::new(r.gen_range(-s..s), r.gen_range(-s..s), r.gen_range(-s..s))
}

/// Three vertices near a circle at height 1, advancing by `h`.
fn circle_seed(r: &mut ChaCha8Rng, h: f64) -> [Vec3; 3] {
    let p = |k: f64| Vec3::new((k * h).cos(), (k * h).sin(), 1.0);
    [
        p(0.0) + small_vec(r, 0.02),
        p(1.0) + small_vec(r, 0.02),
        p(2.0) + small_vec(r, 0.02),
    ]
}

/// An exactly equal-volume polygon about the origin with random
/// centro-affine coefficients close to those of a circle.
pub fn random_centroaffine(r: &mut ChaCha8Rng, n: usize) -> Polygon3 {
    let h: f64 = r.gen_range(0.2..0.4);
    let seed = circle_seed(r, h);
    let base = 2.0 - 2.0 * h.cos();
    let rho2: Vec<f64> = (0..n - 3).map(|_| base * r.gen_range(0.7..1.3)).collect();
    let tau: Vec<f64> = (0..n - 3).map(|_| r.gen_range(-0.02..0.02)).collect();
    centroaffine_from_frenet(seed, &rho2, &tau).unwrap()
}

/// An exactly equal-volume framed polygon with random σ, ρ₂ and τ.
pub fn random_framed(r: &mut ChaCha8Rng, n: usize) -> (FramedPolygon, DarbouxField) {
    loop {
        let h: f64 = r.gen_range(0.2..0.4);
        let seed = circle_seed(r, h);
        let xi0 = -seed[0] + small_vec(r, 0.1);
        let base = 2.0 - 2.0 * h.cos();
        let sigma: Vec<f64> = (0..n - 1).map(|_| r.gen_range(0.6..1.4)).collect();
        let rho2: Vec<f64> = (0..n - 3).map(|_| base * r.gen_range(0.7..1.3)).collect();
        let tau: Vec<f64> = (0..n - 3).map(|_| r.gen_range(-0.02..0.02)).collect();
        let Ok(f) = framed_from_frenet(seed, xi0, &sigma, &rho2, &tau) else {
            continue;
        };
        if let Ok(df) = parallel_darboux(&f, xi0.norm()) {
            return (f, df);
        }
    }
}

/// An open equal-area polygon with random affine curvature around that of a
/// regular polygon.
pub fn random_equal_area(r: &mut ChaCha8Rng, m: usize) -> PlanarEqualAreaPolygon {
    let h: f64 = r.gen_range(0.25..0.45);
    let base = 2.0 - 2.0 * h.cos();
    let kappa: Vec<f64> = (0..m - 3).map(|_| base * r.gen_range(0.6..1.4)).collect();
    let start = Vec2::new(r.gen_range(-0.5..0.5), r.gen_range(-0.5..0.5));
    let g1 = Vec2::new(1.0, 0.0) * r.gen_range(0.5..1.5);
    let g2 = Vec2::new(h.cos(), h.sin()) / g1.x;
    equal_area_from_curvature(start, g1, g2, &kappa).unwrap()
}

pub fn random_point2(r: &mut ChaCha8Rng, s: f64) -> Vec2 {
    Vec2::new(r.gen_range(-s..s), r.gen_range(-s..s))
}
