// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use crate::darboux::{DarbouxField, FramedPolygon};
use crate::equal_volume::{centroaffine_volumes, darboux_volumes};
use crate::error::{Error, Result};
use crate::geom::{det3, least_squares_pair, solve_in_plane, Vec3};
use crate::polygon::Polygon3;
use crate::seq::{Grid, Span, Topology};

/// Volume spread above which `Mode::Exact` refuses a polygon.
pub const EXACT_SPREAD_LIMIT: f64 = 1e-8;

/// How the Frenet systems are solved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// 2×2 solve in the face plane; the polygon must be equal-volume.
    #[default]
    Exact,
    /// Least squares in 3-space; the residual measures the volume defect.
    LeastSquares,
}

/// Discrete Frenet coefficients
/// `φ''' = −ρ₂(i) φ' + τ ξ(i+1) = −ρ₁(i+1) φ' + τ ξ(i)` on each side `i+1/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrenetData {
    pub rho1: Span<f64>,
    pub rho2: Span<f64>,
    /// τ from the ρ₂ equation.
    pub tau: Span<f64>,
    /// τ from the ρ₁ equation.
    pub tau_alt: Span<f64>,
    /// Median volume of the input.
    pub c: f64,
    /// Norm of the part of `φ'''` outside the face plane, per side.
    pub residual: Span<f64>,
    pub mode: Mode,
}

impl FrenetData {
    pub fn topology(&self) -> Topology {
        self.tau.topology
    }

    /// Sides carrying both solves.
    pub fn sides(&self) -> std::ops::Range<usize> {
        self.tau.first..self.tau.end()
    }

    pub fn rho1_at(&self, i: isize) -> Option<f64> {
        self.rho1.get(i).copied()
    }

    pub fn rho2_at(&self, i: isize) -> Option<f64> {
        self.rho2.get(i).copied()
    }

    pub fn tau_at(&self, k: isize) -> Option<f64> {
        self.tau.get(k).copied()
    }

    /// `|−τσ − (ρ₂(i) − ρ₁(i+1))| / max(1, |τσ|)` per side.
    pub fn compatibility_residuals(&self, df: &DarbouxField) -> Span<f64> {
        let v = self
            .sides()
            .map(|k| {
                let i = k as isize;
                let ts = self.tau.values[k - self.tau.first] * df.sigma(k);
                let d = self.rho2_at(i).unwrap() - self.rho1_at(i + 1).unwrap();
                (-ts - d).abs() / ts.abs().max(1.0)
            })
            .collect();
        Span::new(Grid::Side, self.topology(), self.tau.first, v)
    }

    /// `|τ − τ_alt| / max(1, |τ|)` per side.
    pub fn tau_consistency(&self) -> Span<f64> {
        let v = self
            .tau
            .values
            .iter()
            .zip(&self.tau_alt.values)
            .map(|(a, b)| (a - b).abs() / a.abs().max(1.0))
            .collect();
        Span::new(Grid::Side, self.topology(), self.tau.first, v)
    }
}

fn frenet_sides(n: usize, topology: Topology) -> std::ops::Range<usize> {
    match topology {
        Topology::Open => 1..n - 2,
        Topology::Closed => 0..n,
    }
}

/// `φ'''(k+1/2) = φ(k+2) − 3φ(k+1) + 3φ(k) − φ(k−1)`.
pub(crate) fn third_diff(p: &Polygon3, k: usize) -> Vec3 {
    let n = p.len();
    let x = |i: usize| p.vertices()[i % n];
    x(k + 2) - x(k + 1) * 3.0 + x(k) * 3.0 - x(k + n - 1)
}

fn solve(mode: Mode, a: Vec3, b: Vec3, t: Vec3, k: usize) -> Result<(f64, f64, f64)> {
    let normal = a.cross(b);
    match mode {
        Mode::Exact => {
            let (p, q) = solve_in_plane(a, b, t, normal).ok_or(Error::DegenerateFace { side: k })?;
            Ok((p, q, (t - a * p - b * q).norm()))
        }
        Mode::LeastSquares => least_squares_pair(a, b, t).ok_or(Error::DegenerateFace { side: k }),
    }
}

/// Frenet coefficients of a framed polygon with its parallel field.
///
/// On an open polygon with `N` vertices the solves exist for sides
/// `1..N-2`, so `ρ₂` covers vertices `1..N-2` and `ρ₁` vertices `2..N-1`.
pub fn frenet(f: &FramedPolygon, df: &DarbouxField, mode: Mode) -> Result<FrenetData> {
    f.polygon().require(4)?;
    let vols = darboux_volumes(f, df)?;
    if mode == Mode::Exact && vols.spread > EXACT_SPREAD_LIMIT {
        return Err(Error::NotEqualVolume {
            spread: vols.spread,
        });
    }
    let n = f.len();
    let sides = frenet_sides(n, f.topology());
    let first = sides.start;
    let (mut rho1, mut rho2, mut tau, mut tau_alt, mut residual) =
        (vec![], vec![], vec![], vec![], vec![]);
    for k in sides {
        let s = f.side(k);
        let t = third_diff(f.polygon(), k);
        let (r2, t1, res) = solve(mode, -s, df.xi(k + 1), t, k)?;
        let (r1, t2, _) = solve(mode, -s, df.xi(k), t, k)?;
        rho2.push(r2);
        rho1.push(r1);
        tau.push(t1);
        tau_alt.push(t2);
        residual.push(res);
    }
    Ok(assemble(f.topology(), first, rho1, rho2, tau, tau_alt, residual, vols.c_hat, mode))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    topology: Topology,
    first: usize,
    mut rho1: Vec<f64>,
    rho2: Vec<f64>,
    tau: Vec<f64>,
    tau_alt: Vec<f64>,
    residual: Vec<f64>,
    c: f64,
    mode: Mode,
) -> FrenetData {
    // ρ₁ from side k belongs to vertex k + 1.
    let rho1_first = match topology {
        Topology::Open => first + 1,
        Topology::Closed => {
            rho1.rotate_right(1);
            0
        }
    };
    FrenetData {
        rho1: Span::new(Grid::Vertex, topology, rho1_first, rho1),
        rho2: Span::new(Grid::Vertex, topology, first, rho2),
        tau: Span::new(Grid::Side, topology, first, tau),
        tau_alt: Span::new(Grid::Side, topology, first, tau_alt),
        c,
        residual: Span::new(Grid::Side, topology, first, residual),
        mode,
    }
}

/// Frenet coefficients of the silhouette framing `ξ = φ − O`, `σ ≡ −1`.
pub fn centroaffine_frenet(p: &Polygon3, origin: Vec3, mode: Mode) -> Result<FrenetData> {
    let f = FramedPolygon::silhouette(p.clone(), origin)?;
    let df = DarbouxField::centroaffine(p, origin);
    frenet(&f, &df, mode)
}

/// Closed-form centro-affine coefficients. With `c(i)` the volume at
/// vertex `i`:
///
/// * `ρ₂(i) = 3 + [φ(i+2), φ(i+1), φ(i−1)] / c(i)`
/// * `ρ₁(i+1) = 3 − [φ(i−1), φ(i), φ(i+2)] / c(i)`
/// * `τ(i+1/2) = ([φ(i−1), φ(i), φ(i+2)] + [φ(i+2), φ(i+1), φ(i−1)]) / c(i)`
///
/// all relative to `O`. Only valid on equal-volume input.
pub fn centroaffine_frenet_fast(p: &Polygon3, origin: Vec3) -> Result<FrenetData> {
    p.require(4)?;
    let vols = centroaffine_volumes(p, origin)?;
    if vols.spread > EXACT_SPREAD_LIMIT {
        return Err(Error::NotEqualVolume {
            spread: vols.spread,
        });
    }
    let n = p.len();
    let x = |i: usize| p.vertices()[i % n] - origin;
    let sides = frenet_sides(n, p.topology());
    let first = sides.start;
    let (mut rho1, mut rho2, mut tau) = (vec![], vec![], vec![]);
    for k in sides {
        let (a, b, c, d) = (x(k + n - 1), x(k), x(k + 1), x(k + 2));
        let vol = det3(a, b, c);
        let d1 = det3(d, c, a);
        let d2 = det3(a, b, d);
        rho2.push(3.0 + d1 / vol);
        rho1.push(3.0 - d2 / vol);
        tau.push((d1 + d2) / vol);
    }
    let residual = vec![0.0; tau.len()];
    Ok(assemble(
        p.topology(),
        first,
        rho1,
        rho2,
        tau.clone(),
        tau,
        residual,
        vols.c_hat,
        Mode::Exact,
    ))
}
