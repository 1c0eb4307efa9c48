// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Generators: equal-area planar polygons, their support-function and area
//! lifts, polygons with prescribed Frenet coefficients, and sampled curves.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use crate::darboux::FramedPolygon;
use crate::error::{Error, Result};
use crate::geom::{det2, Vec2, Vec3};
use crate::polygon::{Polygon2, Polygon3};
use crate::seq::{median, Grid, GridSeq, Span, Topology};

/// Relative tolerance on `[γ(i), γ(i+1)]` for equal-area input.
pub const AREA_TOL: f64 = 1e-10;

/// A planar polygon `Γ` with vertices at half-integers and constant
/// `[γ(i), γ(i+1)]`, where `γ(i) = Γ(i+1/2) − Γ(i−1/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarEqualAreaPolygon {
    /// `Γ(i+1/2)` at slot `i`.
    pub big_gamma: GridSeq<Vec2>,
    /// `γ(i)`; slots `1..M` when open, all `M` slots when closed.
    pub gamma: Span<Vec2>,
    pub area_constant: f64,
}

impl PlanarEqualAreaPolygon {
    /// Builds the polygon from `Γ`, rejecting it unless it is equal-area.
    pub fn new(big_gamma: Vec<Vec2>, topology: Topology) -> Result<Self> {
        Polygon2::new(big_gamma.clone(), topology)?;
        let m = big_gamma.len();
        let (first, gamma): (usize, Vec<Vec2>) = match topology {
            Topology::Open => (1, (1..m).map(|i| big_gamma[i] - big_gamma[i - 1]).collect()),
            Topology::Closed => (
                0,
                (0..m)
                    .map(|i| big_gamma[i] - big_gamma[(i + m - 1) % m])
                    .collect(),
            ),
        };
        Self::from_parts(
            GridSeq::new(big_gamma, Grid::Side, topology),
            Span::new(Grid::Vertex, topology, first, gamma),
        )
    }

    /// Builds the polygon from separately supplied `Γ` and `γ`. Consistency
    /// of the two is checked by [`support_function`].
    pub fn from_parts(big_gamma: GridSeq<Vec2>, gamma: Span<Vec2>) -> Result<Self> {
        let g = &gamma.values;
        let pairs = match gamma.topology {
            Topology::Open => g.len().saturating_sub(1),
            Topology::Closed => g.len(),
        };
        if pairs == 0 {
            return Err(Error::TooShort {
                needed: 3,
                got: big_gamma.len(),
            });
        }
        let areas: Vec<f64> = (0..pairs)
            .map(|k| det2(g[k], g[(k + 1) % g.len()]))
            .collect();
        let c = median(&areas);
        let dev = areas.iter().fold(0.0f64, |m, a| m.max((a - c).abs()));
        if c == 0.0 || dev > AREA_TOL * c.abs() {
            return Err(Error::NotEqualArea {
                spread: if c == 0.0 { f64::INFINITY } else { dev / c.abs() },
            });
        }
        Ok(PlanarEqualAreaPolygon {
            big_gamma,
            gamma,
            area_constant: c,
        })
    }

    pub fn topology(&self) -> Topology {
        self.big_gamma.topology()
    }

    /// Slot of `Γ(i+1/2)`.
    pub fn vertex(&self, i: isize) -> Vec2 {
        *self.big_gamma.get(i).expect("index in range")
    }

    /// The same polygon scaled about the origin so that the area constant is
    /// `±1`, together with the scale factor used.
    pub fn normalized(&self) -> (PlanarEqualAreaPolygon, f64) {
        let s = self.area_constant.abs().powf(-0.5);
        let big: Vec<Vec2> = self.big_gamma.values().iter().map(|&p| p * s).collect();
        let gamma = self.gamma.map(|&g| g * s);
        let out = PlanarEqualAreaPolygon {
            big_gamma: GridSeq::new(big, Grid::Side, self.topology()),
            gamma,
            area_constant: self.area_constant.signum() * (self.area_constant.abs() * s * s),
        };
        (out, s)
    }

    /// Discrete affine curvature `κ(i)` with `γ(i+1) + γ(i−1) = (2 − κ(i)) γ(i)`.
    pub fn affine_curvature(&self) -> Span<f64> {
        let g = &self.gamma;
        let c = self.area_constant;
        let slots: Vec<usize> = match g.topology {
            Topology::Open => (g.first + 1..g.end().saturating_sub(1)).collect(),
            Topology::Closed => (0..g.len()).collect(),
        };
        let first = slots.first().copied().unwrap_or(g.first + 1);
        let v = slots
            .iter()
            .map(|&i| {
                let i = i as isize;
                2.0 + det2(*g.get(i + 1).unwrap(), *g.get(i - 1).unwrap()) / c
            })
            .collect();
        Span::new(Grid::Vertex, g.topology, first, v)
    }
}

/// Support function `z(i) = [Γ(i+1/2) − P, γ(i)] = [Γ(i−1/2) − P, γ(i)]`.
pub fn support_function(g: &PlanarEqualAreaPolygon, p: Vec2) -> Result<Span<f64>> {
    let mut z = Vec::with_capacity(g.gamma.len());
    for (i, &gi) in g.gamma.iter() {
        let i = i as isize;
        let a = det2(g.vertex(i) - p, gi);
        let b = det2(g.vertex(i - 1) - p, gi);
        let scale = gi.norm() * (g.vertex(i) - p).norm().max((g.vertex(i - 1) - p).norm());
        if (a - b).abs() > 1e-10 * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::InconsistentSupport { vertex: i as usize });
        }
        z.push(a);
    }
    Ok(Span::new(Grid::Vertex, g.gamma.topology, g.gamma.first, z))
}

/// `φ(i) = (γ(i), z(i))` after scaling `Γ` and `P` to area constant `±1`.
/// The result is equal-volume with respect to the origin, with volume 1.
pub fn silhouette_lift(g: &PlanarEqualAreaPolygon, p: Vec2) -> Result<Polygon3> {
    let (g, s) = g.normalized();
    let z = support_function(&g, p * s)?;
    let pts = g
        .gamma
        .values
        .iter()
        .zip(&z.values)
        .map(|(&gi, &zi)| Vec3::from_planar(gi, zi))
        .collect();
    Polygon3::new(pts, g.topology())
}

/// `Φ(i+1/2) = (Γ(i+1/2), Z(i+1/2))` with `Z(1/2) = 0` and
/// `Z(i+1/2) = Z(i−1/2) + z(i)`, on the normalized polygon. A closed `Γ`
/// is unrolled over one period, so the result always has `M + 1` vertices
/// when closed and `M` when open.
pub fn area_lift(g: &PlanarEqualAreaPolygon, p: Vec2) -> Result<Polygon3> {
    let (g, s) = g.normalized();
    let z = support_function(&g, p * s)?;
    let m = g.big_gamma.len();
    let mut big = Vec::with_capacity(m + 1);
    let mut acc = 0.0;
    big.push(Vec3::from_planar(g.vertex(0), 0.0));
    let zs: Vec<f64> = match g.topology() {
        Topology::Open => z.values.clone(),
        // z(0) belongs to the wrap-around side; it closes the period last.
        Topology::Closed => z.values[1..].iter().chain(&z.values[..1]).copied().collect(),
    };
    for (j, zj) in zs.iter().enumerate() {
        acc += zj;
        big.push(Vec3::from_planar(g.vertex(j as isize + 1), acc));
    }
    Polygon3::on_grid(big, Topology::Open, Grid::Side)
}

/// Residuals of `γ'' = −κγ` and `z'' = −κz + c` for the lift of `g` at `p`,
/// as the largest absolute deviation of either equation.
pub fn lift_residual(g: &PlanarEqualAreaPolygon, p: Vec2) -> Result<f64> {
    let (g, s) = g.normalized();
    let z = support_function(&g, p * s)?;
    let kappa = g.affine_curvature();
    let c = g.area_constant;
    let mut worst: f64 = 0.0;
    for (i, &k) in kappa.iter() {
        let i = i as isize;
        let gm = *g.gamma.get(i - 1).unwrap();
        let g0 = *g.gamma.get(i).unwrap();
        let gp = *g.gamma.get(i + 1).unwrap();
        let (zm, z0, zp) = (
            *z.get(i - 1).unwrap(),
            *z.get(i).unwrap(),
            *z.get(i + 1).unwrap(),
        );
        let r1 = (gp - g0 * 2.0 + gm + g0 * k).norm();
        let r2 = (zp - 2.0 * z0 + zm + k * z0 - c).abs();
        worst = worst.max(r1).max(r2);
    }
    Ok(worst)
}

/// Regular `N`-gon scaled to area constant 1, centred at the origin.
pub fn regular_equal_area(n: usize) -> Result<PlanarEqualAreaPolygon> {
    if n < 3 {
        return Err(Error::TooShort { needed: 3, got: n });
    }
    let th = TAU / n as f64;
    let r = ((2.0 - 2.0 * th.cos()) * th.sin()).powf(-0.5);
    let pts = (0..n)
        .map(|i| {
            let a = th * (i as f64 + 0.5);
            Vec2::new(r * a.cos(), r * a.sin())
        })
        .collect();
    PlanarEqualAreaPolygon::new(pts, Topology::Closed)
}

/// Open equal-area polygon from a curvature sequence:
/// `Γ(1/2) = start`, `γ(1) = g1`, `γ(2) = g2` and
/// `γ(i+1) = (2 − κ)γ(i) − γ(i−1)` for each `κ` in turn.
pub fn equal_area_from_curvature(
    start: Vec2,
    g1: Vec2,
    g2: Vec2,
    kappa: &[f64],
) -> Result<PlanarEqualAreaPolygon> {
    let mut gamma = vec![g1, g2];
    for &k in kappa {
        let l = gamma.len();
        gamma.push(gamma[l - 1] * (2.0 - k) - gamma[l - 2]);
    }
    let mut pts = vec![start];
    for g in &gamma {
        pts.push(*pts.last().unwrap() + *g);
    }
    PlanarEqualAreaPolygon::new(pts, Topology::Open)
}

/// Recovers the base point from a support function:
/// least squares for `[P, γ(i)] = [Γ(i+1/2), γ(i)] − z(i)`.
pub fn recover_base_point(g: &PlanarEqualAreaPolygon, z: &Span<f64>) -> Result<Vec2> {
    if z.len() != g.gamma.len() || z.first != g.gamma.first {
        return Err(Error::LengthMismatch {
            expected: g.gamma.len(),
            got: z.len(),
        });
    }
    // [P, γ] = P.x γ.y − P.y γ.x
    let (mut a11, mut a12, mut a22, mut b1, mut b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for ((i, &gi), &zi) in g.gamma.iter().zip(&z.values) {
        let rhs = det2(g.vertex(i as isize), gi) - zi;
        let (u, v) = (gi.y, -gi.x);
        a11 += u * u;
        a12 += u * v;
        a22 += v * v;
        b1 += u * rhs;
        b2 += v * rhs;
    }
    let d = a11 * a22 - a12 * a12;
    if d.abs() <= 1e-14 * (a11 * a22).max(f64::MIN_POSITIVE) {
        return Err(Error::InvalidArgument(
            "tangents do not span the plane".into(),
        ));
    }
    Ok(Vec2::new((b1 * a22 - b2 * a12) / d, (a11 * b2 - a12 * b1) / d))
}

/// Open polygon with prescribed centro-affine coefficients: starting from
/// three vertices, each new vertex solves
/// `φ''' = −ρ₂(i)φ' + τ φ(i+1)` on side `i+1/2`. The result has constant
/// volume `[φ(0), φ(1), φ(2)]`.
pub fn centroaffine_from_frenet(seed: [Vec3; 3], rho2: &[f64], tau: &[f64]) -> Result<Polygon3> {
    if rho2.len() != tau.len() {
        return Err(Error::LengthMismatch {
            expected: rho2.len(),
            got: tau.len(),
        });
    }
    let mut x = seed.to_vec();
    for (&r, &t) in rho2.iter().zip(tau) {
        let k = x.len() - 2;
        let (a, b, c) = (x[k - 1], x[k], x[k + 1]);
        // φ(k+2) = φ(k−1) − 3φ(k) + 3φ(k+1) + ρ₂φ(k) + (τ − ρ₂)φ(k+1)
        let next = a + b * (r - 3.0) + c * (3.0 + t - r);
        if !next.is_finite() {
            return Err(Error::RecursionOverflow { index: k + 2 });
        }
        x.push(next);
    }
    Polygon3::open(x)
}

/// Open framed polygon with prescribed Frenet coefficients.
///
/// `sigma` has one entry per side (`N − 1`), `rho2` and `tau` one per
/// interior side (`N − 3`). The returned directions are the parallel field
/// itself, so `parallel_darboux(f, ‖ξ(0)‖)` reproduces `ξ`.
pub fn framed_from_frenet(
    seed: [Vec3; 3],
    xi0: Vec3,
    sigma: &[f64],
    rho2: &[f64],
    tau: &[f64],
) -> Result<FramedPolygon> {
    if rho2.len() != tau.len() || sigma.len() != rho2.len() + 2 {
        return Err(Error::LengthMismatch {
            expected: rho2.len() + 2,
            got: sigma.len(),
        });
    }
    let mut x = seed.to_vec();
    let mut xi = vec![xi0];
    xi.push(xi0 - (x[1] - x[0]) * sigma[0]);
    xi.push(xi[1] - (x[2] - x[1]) * sigma[1]);
    for (j, (&r, &t)) in rho2.iter().zip(tau).enumerate() {
        let k = j + 1;
        let s = x[k + 1] - x[k];
        let d2 = x[k + 1] - x[k] * 2.0 + x[k - 1];
        let d3 = s * -r + xi[k + 1] * t;
        let s_next = s + d2 + d3;
        let next = x[k + 1] + s_next;
        if !next.is_finite() {
            return Err(Error::RecursionOverflow { index: k + 2 });
        }
        x.push(next);
        xi.push(xi[k + 1] - s_next * sigma[k + 1]);
    }
    FramedPolygon::new(Polygon3::open(x)?, xi)
}

/// Curves that can be sampled.
#[derive(Clone)]
pub enum Curve {
    /// `(e^{−t} cos t, e^{−t} sin t, 1)`: a planar spiral in the chart `z = 1`.
    ExampleSpiral,
    /// `2^{−1/3} e^{2t/3}` times the spiral: its centro-affine
    /// arc-length representative.
    ExampleSpiralRepresentative,
    /// `(a cos t, b sin t, 1)`.
    Ellipse { a: f64, b: f64 },
    Custom(Arc<dyn Fn(f64) -> Vec3 + Send + Sync>),
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::ExampleSpiral => f.write_str("ExampleSpiral"),
            Curve::ExampleSpiralRepresentative => f.write_str("ExampleSpiralRepresentative"),
            Curve::Ellipse { a, b } => write!(f, "Ellipse {{ a: {a}, b: {b} }}"),
            Curve::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Scale of the spiral representative, `2^{−1/3} e^{2t/3}`.
pub fn spiral_scale(t: f64) -> f64 {
    2f64.powf(-1.0 / 3.0) * (2.0 * t / 3.0).exp()
}

impl Curve {
    pub fn point(&self, t: f64) -> Vec3 {
        match self {
            Curve::ExampleSpiral => Vec3::new((-t).exp() * t.cos(), (-t).exp() * t.sin(), 1.0),
            Curve::ExampleSpiralRepresentative => Curve::ExampleSpiral.point(t) * spiral_scale(t),
            Curve::Ellipse { a, b } => Vec3::new(a * t.cos(), b * t.sin(), 1.0),
            Curve::Custom(f) => f(t),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleGrid {
    /// `N` samples with `h = (t1 − t0)/(N − 1)`, both ends included.
    IncludeBothEnds,
    /// `N` samples with `h = (t1 − t0)/N`; `t1` itself is not sampled.
    HalfOpenStep,
}

impl SampleGrid {
    pub fn step(self, t0: f64, t1: f64, n: usize) -> f64 {
        match self {
            SampleGrid::IncludeBothEnds => (t1 - t0) / (n - 1) as f64,
            SampleGrid::HalfOpenStep => (t1 - t0) / n as f64,
        }
    }
}

/// Parameters `t_i = t0 + i·h`, `i = 0..N`.
pub fn sample_parameters(t0: f64, t1: f64, n: usize, grid: SampleGrid) -> Result<Vec<f64>> {
    if n < 4 {
        return Err(Error::TooShort { needed: 4, got: n });
    }
    if !(t1 > t0) || !t0.is_finite() || !t1.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "parameter interval [{t0}, {t1}] is empty"
        )));
    }
    let h = grid.step(t0, t1, n);
    Ok((0..n).map(|i| t0 + i as f64 * h).collect())
}

/// Samples `curve` at `N` parameters as an open polygon.
pub fn sample_curve(curve: &Curve, t0: f64, t1: f64, n: usize, grid: SampleGrid) -> Result<Polygon3> {
    let ts = sample_parameters(t0, t1, n, grid)?;
    Polygon3::open(ts.into_iter().map(|t| curve.point(t)).collect())
}

/// Samples a planar curve (given in the chart `z = 1`) as a plane polygon.
pub fn sample_plane_curve(
    curve: &Curve,
    t0: f64,
    t1: f64,
    n: usize,
    grid: SampleGrid,
) -> Result<Polygon2> {
    if matches!(curve, Curve::ExampleSpiralRepresentative) {
        return Err(Error::InvalidArgument(
            "the spiral representative is not a plane curve".into(),
        ));
    }
    let p = sample_curve(curve, t0, t1, n, grid)?;
    Polygon2::open(p.vertices().iter().map(|v| v.xy()).collect())
}
