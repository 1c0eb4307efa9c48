// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Equal-volume lifts of convex plane polygons and their two discrete
//! projective lengths.

use std::f64::consts::TAU;

use crate::constructions::{sample_plane_curve, spiral_scale, Curve, SampleGrid};
use crate::error::{Error, Result};
use crate::geom::{det2, det3, signed_cbrt, Vec3};
use crate::invariants::{centroaffine_frenet, Mode};
use crate::polygon::{Polygon2, Polygon3};
use crate::seq::{Grid, Span, Topology};

/// `b(i) = [φ̃'(i−1/2), φ̃'(i+1/2)]` at the interior vertices, without the
/// sign check.
pub fn b_values(poly: &Polygon2) -> Result<Span<f64>> {
    let n = poly.len();
    if n < 3 {
        return Err(Error::TooShort { needed: 3, got: n });
    }
    let x = poly.vertices();
    let (first, range) = match poly.topology() {
        Topology::Open => (1, 1..n - 1),
        Topology::Closed => (0, 0..n),
    };
    let v = range
        .map(|i| det2(x[i] - x[(i + n - 1) % n], x[(i + 1) % n] - x[i]))
        .collect();
    Ok(Span::new(Grid::Vertex, poly.topology(), first, v))
}

/// Like [`b_values`], failing at the first vertex with `b(i) ≤ 0`.
pub fn b_sequence(poly: &Polygon2) -> Result<Span<f64>> {
    let b = b_values(poly)?;
    if let Some((vertex, &b)) = b.iter().find(|(_, &v)| !(v > 0.0)) {
        return Err(Error::Inflection { vertex, b });
    }
    Ok(b)
}

/// How the free data `a(0)`, `a(1)` and `c` of the lift are chosen.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Seed {
    Explicit { a1: f64, a2: f64, c: f64 },
    /// `a(0) = a(1) = 1`, `c` the geometric mean of `b`.
    Default,
    /// `c` the geometric mean of `b`; `a(0)`, `a(1)` chosen so that
    /// `log a` has the smallest third differences in the least-squares
    /// sense. Removes the period-3 oscillation a poor seed leaves in `a`.
    Smooth,
}

/// The seed actually used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Normalization {
    pub seed: Seed,
    pub a1: f64,
    pub a2: f64,
    pub c: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lift {
    pub polygon: Polygon3,
    pub a: Vec<f64>,
    pub normalization: Normalization,
}

fn geometric_mean(v: &[f64]) -> f64 {
    if v.iter().all(|&x| x == v[0]) {
        return v[0];
    }
    (v.iter().map(|x| x.ln()).sum::<f64>() / v.len() as f64).exp()
}

/// `log a` for seeds `(l1, l2)`, with or without the `log c − log b` forcing.
fn log_recursion(l1: f64, l2: f64, forcing: Option<(&[f64], f64)>, n: usize) -> Vec<f64> {
    let mut l = vec![0.0; n];
    l[0] = l1;
    l[1] = l2;
    for i in 1..n - 1 {
        let f = forcing.map_or(0.0, |(b, lc)| lc - b[i - 1].ln());
        l[i + 1] = f - l[i] - l[i - 1];
    }
    l
}

fn third_differences(l: &[f64]) -> Vec<f64> {
    l.windows(4)
        .map(|w| w[3] - 3.0 * w[2] + 3.0 * w[1] - w[0])
        .collect()
}

fn smooth_seed(b: &[f64], c: f64) -> Result<(f64, f64)> {
    let n = b.len() + 2;
    if n < 5 {
        return Ok((1.0, 1.0));
    }
    let p = third_differences(&log_recursion(0.0, 0.0, Some((b, c.ln())), n));
    let u = third_differences(&log_recursion(1.0, 0.0, None, n));
    let v = third_differences(&log_recursion(0.0, 1.0, None, n));
    let (mut uu, mut uv, mut vv, mut up, mut vp) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for k in 0..p.len() {
        uu += u[k] * u[k];
        uv += u[k] * v[k];
        vv += v[k] * v[k];
        up += u[k] * p[k];
        vp += v[k] * p[k];
    }
    let d = uu * vv - uv * uv;
    if !(d.abs() > 0.0) {
        return Ok((1.0, 1.0));
    }
    let x = -(up * vv - vp * uv) / d;
    let y = -(uu * vp - uv * up) / d;
    Ok((x.exp(), y.exp()))
}

/// Lifts a convex plane polygon to `φ(i) = a(i)(φ̃(i), 1)` with
/// `a(i−1)a(i)a(i+1)b(i) = c`, so every centro-affine volume equals `c`.
pub fn lift_representative(poly: &Polygon2, seed: Seed) -> Result<Lift> {
    if poly.is_closed() {
        return Err(Error::InvalidArgument(
            "lifting needs an open polygon".into(),
        ));
    }
    let b = b_sequence(poly)?;
    let b = &b.values;
    let n = poly.len();
    let (a1, a2, c) = match seed {
        Seed::Explicit { a1, a2, c } => (a1, a2, c),
        Seed::Default => (1.0, 1.0, geometric_mean(b)),
        Seed::Smooth => {
            let c = geometric_mean(b);
            let (a1, a2) = smooth_seed(b, c)?;
            (a1, a2, c)
        }
    };
    for (name, v) in [("a1", a1), ("a2", a2), ("c", c)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "{name} must be positive and finite, got {v}"
            )));
        }
    }
    let mut a = vec![a1, a2];
    for i in 1..n - 1 {
        let next = c / (a[i - 1] * a[i] * b[i - 1]);
        if !(next.is_finite() && next > 0.0) {
            return Err(Error::RecursionOverflow { index: i + 1 });
        }
        a.push(next);
    }
    let pts = poly
        .vertices()
        .iter()
        .zip(&a)
        .map(|(p, &ai)| Vec3::from_planar(*p, 1.0) * ai)
        .collect();
    Ok(Lift {
        polygon: Polygon3::open(pts)?,
        a,
        normalization: Normalization { seed, a1, a2, c },
    })
}

/// Which sides contribute to the projective lengths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Window {
    /// Every side where `ρ₁'` is defined (`2..N−2` on `N` vertices); each
    /// sum only takes the sides of that range where its own term exists.
    #[default]
    Table,
    /// Every side where each estimator's own term exists (`2..N−2` for
    /// `pl₁`, `1..N−3` for `pl₂`).
    Maximal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveLengthReport {
    pub pl1: f64,
    pub pl2: f64,
    /// `∛(ρ₁'(i+1/2) + 2τ(i+1/2))` per side.
    pub terms1: Span<f64>,
    /// `∛(ρ₂'(i+1/2) + 2τ(i+1/2))` per side.
    pub terms2: Span<f64>,
    pub window: Window,
    /// Median centro-affine volume of the input.
    pub c: f64,
}

impl ProjectiveLengthReport {
    /// Inclusive side ranges summed for `pl₁` and `pl₂`.
    pub fn summation_ranges(&self) -> [(usize, usize); 2] {
        [
            (self.terms1.first, self.terms1.end() - 1),
            (self.terms2.first, self.terms2.end() - 1),
        ]
    }
}

/// Projective lengths of an equal-volume lift (origin as centre):
/// `pl_k = Σ ∛(ρ_k'(i+1/2) + 2τ(i+1/2))` with
/// `ρ_k'(i+1/2) = ρ_k(i+1) − ρ_k(i)`.
pub fn projective_lengths(phi: &Polygon3, mode: Mode, window: Window) -> Result<ProjectiveLengthReport> {
    if phi.is_closed() {
        return Err(Error::InvalidArgument(
            "projective lengths need an open polygon".into(),
        ));
    }
    phi.require(6)?;
    let fr = centroaffine_frenet(phi, Vec3::ZERO, mode)?;
    let n = phi.len();
    let term = |r: &Span<f64>, k: usize| {
        let i = k as isize;
        let (r1, r0, t) = (*r.get(i + 1).unwrap(), *r.get(i).unwrap(), fr.tau_at(i).unwrap());
        let x = r1 - r0 + 2.0 * t;
        // The cube root magnifies rounding noise; drop it.
        if x.abs() <= 64.0 * f64::EPSILON * (r1.abs() + r0.abs() + 2.0 * t.abs()) {
            0.0
        } else {
            signed_cbrt(x)
        }
    };
    let r1 = 2..n - 2;
    let r2 = match window {
        Window::Table => 2..n - 3,
        Window::Maximal => 1..n - 3,
    };
    let t1: Vec<f64> = r1.clone().map(|k| term(&fr.rho1, k)).collect();
    let t2: Vec<f64> = r2.clone().map(|k| term(&fr.rho2, k)).collect();
    Ok(ProjectiveLengthReport {
        pl1: t1.iter().sum(),
        pl2: t2.iter().sum(),
        terms1: Span::new(Grid::Side, Topology::Open, r1.start, t1),
        terms2: Span::new(Grid::Side, Topology::Open, r2.start, t2),
        window,
        c: fr.c,
    })
}

/// `∫ ∛g(t) dt` over `[t0, t1]` by adaptive Simpson quadrature to 1e-10.
pub fn smooth_reference_length(g: impl Fn(f64) -> f64, t0: f64, t1: f64) -> Result<f64> {
    let f = |t: f64| -> Result<f64> {
        let v = g(t);
        if v.is_finite() {
            Ok(signed_cbrt(v))
        } else {
            Err(Error::InvalidArgument(format!(
                "integrand is not finite at t = {t}"
            )))
        }
    };
    let (fa, fm, fb) = (f(t0)?, f(0.5 * (t0 + t1))?, f(t1)?);
    let whole = (t1 - t0) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(&f, t0, t1, fa, fm, fb, whole, 1e-10, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson(
    f: &impl Fn(f64) -> Result<f64>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    Ok(simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

/// Projective length of the example spiral: `∫₀^{2π} ∛(40/27) dt`.
pub fn spiral_reference_length() -> f64 {
    smooth_reference_length(|_| 40.0 / 27.0, 0.0, TAU).expect("finite integrand")
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Table1Row {
    pub n: usize,
    pub h: f64,
    pub pl1: f64,
    pub pl2: f64,
}

/// Analytic seeds for the spiral: `a(t₀)`, `a(t₁)` from the known
/// representative and `c` its first volume.
pub fn spiral_seed(n: usize) -> Result<Seed> {
    let h = SampleGrid::HalfOpenStep.step(0.0, TAU, n);
    let rep = |t: f64| Curve::ExampleSpiralRepresentative.point(t);
    Ok(Seed::Explicit {
        a1: spiral_scale(0.0),
        a2: spiral_scale(h),
        c: det3(rep(0.0), rep(h), rep(2.0 * h)),
    })
}

/// The spiral experiment: for each `N`, sample on `[0, 2π)` with step
/// `2π/N`, lift with analytic seeds and compute both projective lengths.
pub fn table1_experiment(sizes: &[usize]) -> Result<Vec<Table1Row>> {
    sizes
        .iter()
        .map(|&n| {
            if n < 6 {
                return Err(Error::TooShort { needed: 6, got: n });
            }
            let poly = sample_plane_curve(&Curve::ExampleSpiral, 0.0, TAU, n, SampleGrid::HalfOpenStep)?;
            let lift = lift_representative(&poly, spiral_seed(n)?)?;
            let r = projective_lengths(&lift.polygon, Mode::Exact, Window::Table)?;
            Ok(Table1Row {
                n,
                h: SampleGrid::HalfOpenStep.step(0.0, TAU, n),
                pl1: r.pl1,
                pl2: r.pl2,
            })
        })
        .collect()
}
