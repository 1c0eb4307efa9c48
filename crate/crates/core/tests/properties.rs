// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

mod support;

use eqvol::*;
use proptest::prelude::*;
use support::*;

fn vec3() -> impl Strategy<Value = Vec3> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn max_rel(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
        .fold(0.0, f64::max)
}

/// Product of shears, so the determinant is exactly one.
fn unimodular(s: [f64; 3]) -> impl Fn(Vec3) -> Vec3 {
    move |v: Vec3| {
        let v = Vec3::new(v.x + s[0] * v.y, v.y, v.z);
        let v = Vec3::new(v.x, v.y + s[1] * v.z, v.z);
        Vec3::new(v.x, v.y, v.z + s[2] * v.x)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det3_is_multilinear_and_alternating(u in vec3(), v in vec3(), w in vec3(), x in vec3(), a in -3.0..3.0f64) {
        let lhs = det3(u * a + x, v, w);
        let rhs = a * det3(u, v, w) + det3(x, v, w);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
        prop_assert!((det3(u, v, w) + det3(v, u, w)).abs() <= 1e-13);
        prop_assert!(det3(u, u, w).abs() <= 1e-13);
    }

    #[test]
    fn closed_differences_telescope(pts in prop::collection::vec(vec3(), 3..20)) {
        let s = GridSeq::vertex(pts.clone(), Topology::Closed);
        let d = s.forward_diff().unwrap();
        prop_assert_eq!(d.grid(), Grid::Side);
        let sum = d.values().iter().fold(Vec3::ZERO, |a, &v| a + v);
        prop_assert!(sum.norm() <= 1e-13);
        prop_assert_eq!(s.second_diff().unwrap(), d.forward_diff().unwrap());
        let open = GridSeq::vertex(pts, Topology::Open);
        prop_assert_eq!(open.forward_diff().unwrap().len(), open.len() - 1);
    }

    #[test]
    fn darboux_field_scales_with_its_seed(seed in any::<u64>(), s in 0.1..10.0f64) {
        let mut r = rng(seed);
        let p = random_polygon(&mut r, 20);
        let f = FramedPolygon::silhouette(p, small_vec(&mut r, 0.2)).unwrap();
        let a = parallel_darboux(&f, 1.0).unwrap();
        let b = parallel_darboux(&f, s).unwrap();
        for (x, y) in a.xi.values().iter().zip(b.xi.values()) {
            prop_assert!((*x * s - *y).norm() <= 1e-12 * y.norm());
        }
        for (x, y) in a.sigma.values().iter().zip(b.sigma.values()) {
            prop_assert!((x * s - y).abs() <= 1e-12 * y.abs());
        }
    }

    #[test]
    fn centroaffine_volumes_are_unimodular_invariant(
        seed in any::<u64>(),
        sh in (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64),
        shift in vec3(),
    ) {
        let mut r = rng(seed);
        let p = random_polygon(&mut r, 15);
        let a = unimodular([sh.0, sh.1, sh.2]);
        let q = Polygon3::open(p.vertices().iter().map(|&v| a(v) + shift).collect()).unwrap();
        let before = centroaffine_volumes(&p, Vec3::ZERO).unwrap();
        let after = centroaffine_volumes(&q, shift).unwrap();
        prop_assert!(max_rel(before.values(), after.values()) <= 1e-11);
    }

    #[test]
    fn silhouette_framing_is_a_cone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_polygon(&mut r, 25);
        let apex = small_vec(&mut r, 0.2);
        let f = FramedPolygon::silhouette(p, apex).unwrap();
        let df = parallel_darboux(&f, 1.0).unwrap();
        prop_assert!(relative_spread(df.sigma.values()) <= 1e-10);
        match classify_osculating(&f, &df, 1e-6).kind {
            Osculating::Cone { apex: a } => prop_assert!(a.distance(apex) <= 1e-9),
            k => prop_assert!(false, "{:?}", k),
        }
    }

    #[test]
    fn varying_sigma_is_not_a_cone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, df) = random_framed(&mut r, 20);
        prop_assert_eq!(classify_osculating(&f, &df, 1e-6).kind, Osculating::General);
    }

    #[test]
    fn focal_lines_do_not_depend_on_the_gauge(seed in any::<u64>(), shift in -0.05..0.05f64) {
        let mut r = rng(seed);
        let (f, df) = random_framed(&mut r, 16);
        let fr = frenet(&f, &df, Mode::Exact).unwrap();
        let a = focal_data(&f, &df, &fr, Gauge::new(3, 0.0)).unwrap();
        let b = focal_data(&f, &df, &fr, Gauge::new(3, shift)).unwrap();
        for (x, y) in a.lines.values.iter().zip(&b.lines.values) {
            let (x, y) = (x.unwrap(), y.unwrap());
            let scale = x.point.norm().max(1.0);
            prop_assert!(x.angle_sine(&y) <= 1e-8);
            prop_assert!(x.distance(y.point) <= 1e-8 * scale);
        }
    }

    #[test]
    fn frenet_identities_hold_on_equal_volume_polygons(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_centroaffine(&mut r, 14);
        let slow = centroaffine_frenet(&p, Vec3::ZERO, Mode::Exact).unwrap();
        let fast = centroaffine_frenet_fast(&p, Vec3::ZERO).unwrap();
        prop_assert!(max_rel(&slow.rho1.values, &fast.rho1.values) <= 1e-9);
        prop_assert!(max_rel(&slow.rho2.values, &fast.rho2.values) <= 1e-9);
        prop_assert!(max_rel(&slow.tau.values, &fast.tau.values) <= 1e-9);
        let df = DarbouxField::centroaffine(&p, Vec3::ZERO);
        prop_assert!(slow.compatibility_residuals(&df).values.iter().all(|&v| v <= 1e-9));
        prop_assert!(slow.tau_consistency().values.iter().all(|&v| v <= 1e-9));
    }

    #[test]
    fn planar_exactly_when_torsion_vanishes(seed in any::<u64>(), t in 0.01..0.05f64) {
        let mut r = rng(seed);
        let g = random_equal_area(&mut r, 20);
        let flat = Polygon3::open(
            g.big_gamma.values().iter().map(|&v| Vec3::from_planar(v, 1.0)).collect(),
        ).unwrap();
        let fr = centroaffine_frenet(&flat, Vec3::ZERO, Mode::Exact).unwrap();
        prop_assert!(fr.tau.values.iter().all(|v| v.abs() <= 1e-12));
        prop_assert!(planar_reduction(&flat, Vec3::Z).unwrap().equal_area);

        let p = random_centroaffine(&mut r, 14);
        let x = p.vertices();
        let h: f64 = 0.3;
        let rho2 = vec![2.0 - 2.0 * h.cos(); 11];
        let twisted = centroaffine_from_frenet([x[0], x[1], x[2]], &rho2, &vec![t; 11]).unwrap();
        let y = twisted.vertices();
        let normal = (y[1] - y[0]).cross(y[2] - y[1]);
        let not_planar = matches!(planar_reduction(&twisted, normal), Err(Error::NotPlanar { .. }));
        prop_assert!(not_planar);
    }

    #[test]
    fn resampling_is_idempotent(a in -0.3..0.3f64, b in 0.0..0.3f64, w in 0.0..0.5f64, n in 20..80usize) {
        // A smooth curve sampled at unevenly spaced parameters.
        let pts = (0..n)
            .map(|i| {
                let s = 4.0 * i as f64 / n as f64;
                let t = s + w * s.sin();
                Vec3::new(t.cos(), t.sin(), 1.0 + a * (2.0 * t).sin()) * (1.0 + b * t)
            })
            .collect();
        let f = FramedPolygon::silhouette(Polygon3::open(pts).unwrap(), Vec3::ZERO).unwrap();
        let df = parallel_darboux(&f, 1.0).unwrap();
        let once = resample_equal_volume(&f, &df).unwrap();
        let twice = resample_equal_volume(&once.framed, &once.field).unwrap();
        prop_assert_eq!(once.framed.polygon().vertices(), twice.framed.polygon().vertices());
    }

    #[test]
    fn lift_has_constant_volume(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_equal_area(&mut r, 20);
        // Any convex plane polygon: distort the equal-area one.
        let poly = Polygon2::open(
            g.big_gamma.values().iter().map(|v| Vec2::new(v.x * 1.3, v.y + 0.1 * v.x * v.x)).collect(),
        ).unwrap();
        let lift = lift_representative(&poly, Seed::Smooth);
        prop_assume!(lift.is_ok());
        let lift = lift.unwrap();
        let v = centroaffine_volumes(&lift.polygon, Vec3::ZERO).unwrap();
        prop_assert!(v.spread <= 1e-12, "{}", v.spread);
    }
}
