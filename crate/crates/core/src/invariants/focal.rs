// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use crate::darboux::{osculating_points, DarbouxField, FramedPolygon, OsculatingPoint};
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::invariants::frenet::FrenetData;
use crate::mesh::Mesh;
use crate::seq::{median, relative_spread, Grid, Span, Topology};

/// Which vertex `λ` is pinned at, and to what value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gauge {
    pub anchor_index: usize,
    pub anchor_value: f64,
}

impl Gauge {
    pub fn new(anchor_index: usize, anchor_value: f64) -> Self {
        Gauge {
            anchor_index,
            anchor_value,
        }
    }
}

/// Anti-difference of τ: `λ(i) − λ(i+1) = τ(i+1/2)` with `λ` fixed at the
/// anchor. Open input on sides `a..b` gives `λ` on vertices `a..=b`.
pub fn lambda_from_tau(tau: &Span<f64>, anchor_index: usize, anchor_value: f64) -> Result<Span<f64>> {
    let m = tau.len();
    match tau.topology {
        Topology::Open => {
            let first = tau.first;
            if anchor_index < first || anchor_index > first + m {
                return Err(Error::AnchorOutOfRange {
                    index: anchor_index,
                });
            }
            let mut lam = vec![0.0; m + 1];
            let a = anchor_index - first;
            lam[a] = anchor_value;
            for j in a..m {
                lam[j + 1] = lam[j] - tau.values[j];
            }
            for j in (0..a).rev() {
                lam[j] = lam[j + 1] + tau.values[j];
            }
            Ok(Span::new(Grid::Vertex, Topology::Open, first, lam))
        }
        Topology::Closed => {
            let sum: f64 = tau.values.iter().sum();
            let scale: f64 = tau.values.iter().map(|t| t.abs()).sum();
            if sum.abs() > 1e-12 * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::GaugeObstruction { sum });
            }
            if anchor_index >= m {
                return Err(Error::AnchorOutOfRange {
                    index: anchor_index,
                });
            }
            let mut lam = vec![0.0; m];
            lam[anchor_index] = anchor_value;
            for s in 0..m - 1 {
                let j = (anchor_index + s) % m;
                lam[(j + 1) % m] = lam[j] - tau.values[j];
            }
            Ok(Span::new(Grid::Vertex, Topology::Closed, 0, lam))
        }
    }
}

/// A line `point + t·direction`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub point: Vec3,
    pub direction: Vec3,
}

impl Line {
    pub fn at(&self, t: f64) -> Vec3 {
        self.point + self.direction * t
    }

    /// Distance from `p` to the line.
    pub fn distance(&self, p: Vec3) -> f64 {
        let u = self.direction / self.direction.norm();
        let r = p - self.point;
        (r - u * r.dot(u)).norm()
    }

    /// Sine of the angle between the two directions.
    pub fn angle_sine(&self, o: &Line) -> f64 {
        let a = self.direction / self.direction.norm();
        let b = o.direction / o.direction.norm();
        a.cross(b).norm()
    }
}

/// Gauge field, affine normals and focal lines.
#[derive(Clone, Debug, PartialEq)]
pub struct FocalSetData {
    pub lambda: Span<f64>,
    /// `η(i) = φ''(i) + λ(i)ξ(i)`.
    pub eta: Span<Vec3>,
    /// `μ(i+1/2) = ρ₁(i+1) + σλ(i+1)`.
    pub mu: Span<f64>,
    /// Difference of the two expressions for μ, relative to `max(1, |μ|)`.
    pub mu_residual: Span<f64>,
    /// `Q(i+1/2)`; `None` where μ = 0.
    pub q: Span<Option<Vec3>>,
    pub q_residual: Span<f64>,
    /// `O(i+1/2)`; `None` where σ = 0.
    pub o: Span<Option<Vec3>>,
    /// `l(i+1/2)` through O and Q; `None` where both are at infinity.
    pub lines: Span<Option<Line>>,
    pub gauge: Gauge,
}

impl FocalSetData {
    pub fn sides(&self) -> std::ops::Range<usize> {
        self.mu.first..self.mu.end()
    }

    /// `η(i+1) − η(i) + μ φ'` relative to `‖η(i)‖ + ‖η(i+1)‖`.
    pub fn eta_residuals(&self, f: &FramedPolygon) -> Span<f64> {
        let v = self
            .sides()
            .map(|k| {
                let i = k as isize;
                let (a, b) = (*self.eta.get(i).unwrap(), *self.eta.get(i + 1).unwrap());
                let mu = *self.mu.get(i).unwrap();
                (b - a + f.side(k) * mu).norm() / (a.norm() + b.norm())
            })
            .collect();
        Span::new(Grid::Side, self.mu.topology, self.mu.first, v)
    }
}

fn second_diff_at(f: &FramedPolygon, i: usize) -> Vec3 {
    let n = f.len();
    f.side(i) - f.side(i + n - 1)
}

/// Focal data for a Frenet solution. The gauge anchor must lie in the
/// vertex range of λ (the τ sides plus one).
pub fn focal_data(
    f: &FramedPolygon,
    df: &DarbouxField,
    fr: &FrenetData,
    gauge: Gauge,
) -> Result<FocalSetData> {
    let lambda = lambda_from_tau(&fr.tau, gauge.anchor_index, gauge.anchor_value)?;
    let topology = fr.topology();
    let first_v = lambda.first;
    let eta: Vec<Vec3> = lambda
        .iter()
        .map(|(i, &l)| second_diff_at(f, i) + df.xi(i) * l)
        .collect();
    let eta = Span::new(Grid::Vertex, topology, first_v, eta);
    let oscul = osculating_points(f, df);

    let (mut mu, mut mu_res, mut q, mut q_res, mut o, mut lines) =
        (vec![], vec![], vec![], vec![], vec![], vec![]);
    for k in fr.sides() {
        let i = k as isize;
        let sg = df.sigma(k);
        let (l0, l1) = (*lambda.get(i).unwrap(), *lambda.get(i + 1).unwrap());
        let m1 = fr.rho1_at(i + 1).unwrap() + sg * l1;
        let m2 = fr.rho2_at(i).unwrap() + sg * l0;
        mu.push(m1);
        mu_res.push((m1 - m2).abs() / m1.abs().max(1.0));

        let (e0, e1) = (*eta.get(i).unwrap(), *eta.get(i + 1).unwrap());
        let qk = if m1 != 0.0 && (e0.norm() / m1.abs()).is_finite() {
            let a = f.vertex(k) + e0 / m1;
            let b = f.vertex(k + 1) + e1 / m1;
            let scale = (e0.norm() / m1.abs()).max(f.side(k).norm());
            q_res.push(a.distance(b) / scale);
            Some((a + b) * 0.5)
        } else {
            q_res.push(0.0);
            None
        };
        let ok = match oscul.values()[k] {
            OsculatingPoint::Finite { point, .. } => Some(point),
            OsculatingPoint::AtInfinity => None,
        };
        let line = match (ok, qk) {
            (Some(op), Some(qp)) if op.distance(qp) > 0.0 => Some(Line {
                point: op,
                direction: qp - op,
            }),
            (Some(op), _) => Some(Line {
                point: op,
                direction: e0,
            }),
            (None, Some(qp)) => Some(Line {
                point: qp,
                direction: df.xi(k),
            }),
            (None, None) => None,
        };
        q.push(qk);
        o.push(ok);
        lines.push(line);
    }
    let first = fr.tau.first;
    let side = |v| Span::new(Grid::Side, topology, first, v);
    Ok(FocalSetData {
        lambda,
        eta,
        mu: side(mu),
        mu_residual: side(mu_res),
        q: Span::new(Grid::Side, topology, first, q),
        q_residual: side(q_res),
        o: Span::new(Grid::Side, topology, first, o),
        lines: Span::new(Grid::Side, topology, first, lines),
        gauge,
    })
}

/// End points along a line, covering both O and Q and reaching `extent`
/// beyond them. The line direction is flipped to follow `orient` when given.
fn segment_on(line: &Line, q: Option<Vec3>, extent: f64, orient: Option<Vec3>) -> (Vec3, Vec3, Vec3) {
    let mut u = line.direction / line.direction.norm();
    if let Some(o) = orient {
        if u.dot(o) < 0.0 {
            u = -u;
        }
    }
    let tq = q.map_or(0.0, |q| (q - line.point).dot(u));
    let (lo, hi) = (tq.min(0.0) - extent, tq.max(0.0) + extent);
    (line.point + u * lo, line.point + u * hi, u)
}

/// The focal polyhedron: for each vertex `i` whose two adjacent lines
/// exist, the face of the affine normal plane between `l(i−1/2)` and
/// `l(i+1/2)`, reaching `extent` beyond O and Q along each line. Every line
/// is also exported as a polyline.
pub fn focal_set_mesh(fd: &FocalSetData, extent: f64) -> Mesh {
    let mut mesh = Mesh::new();
    let pts: Vec<Vec3> = fd
        .o
        .values
        .iter()
        .chain(&fd.q.values)
        .flatten()
        .copied()
        .collect();
    let scale = crate::polygon::diameter(&pts) + extent;
    let weld = 1e-12 * scale;
    let m = fd.lines.len();
    let closed = fd.lines.topology == Topology::Closed;
    let pairs = if closed { m } else { m.saturating_sub(1) };
    for j in 0..pairs {
        let (a, b) = (j, (j + 1) % m);
        let (Some(la), Some(lb)) = (fd.lines.values[a], fd.lines.values[b]) else {
            continue;
        };
        let (a0, a1, ua) = segment_on(&la, fd.q.values[a], extent, None);
        let (b0, b1, _) = segment_on(&lb, fd.q.values[b], extent, Some(ua));
        mesh.push_face(&[a0, a1, b1, b0], weld);
    }
    for (k, line) in fd.lines.values.iter().enumerate() {
        if let Some(l) = line {
            let (p0, p1, _) = segment_on(l, fd.q.values[k], extent, None);
            mesh.push_line(&[p0, p1], weld);
        }
    }
    mesh
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Focal {
    SingleLine { line: Line },
    General,
}

/// Single line exactly when σ and μ are both constant to `tol`.
pub fn classify_focal(df: &DarbouxField, fd: &FocalSetData, tol: f64) -> Focal {
    let sigma: Vec<f64> = fd.sides().map(|k| df.sigma(k)).collect();
    if sigma.is_empty() || relative_spread(&sigma) > tol || relative_spread(&fd.mu.values) > tol {
        return Focal::General;
    }
    let avg = |v: &[Option<Vec3>]| {
        let p: Vec<Vec3> = v.iter().flatten().copied().collect();
        (!p.is_empty()).then(|| p.iter().fold(Vec3::ZERO, |a, &x| a + x) / p.len() as f64)
    };
    let o = avg(&fd.o.values);
    let q = avg(&fd.q.values);
    let line = match (o, q) {
        (Some(o), Some(q)) if o.distance(q) > 0.0 => Line {
            point: o,
            direction: q - o,
        },
        _ => match fd.lines.values.iter().flatten().next() {
            Some(l) => *l,
            None => return Focal::General,
        },
    };
    Focal::SingleLine { line }
}

/// `μ'(i) = μ(i+1/2) − μ(i−1/2)` against `ρ₁'(i+1/2) − σ₀τ(i+1/2)` and
/// `ρ₂'(i−1/2) − σ₀τ(i−1/2)`, for a field with constant `σ = σ₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct MuPrimeReport {
    pub sigma0: f64,
    pub mu_prime: Span<f64>,
    pub via_rho1: Span<f64>,
    pub via_rho2: Span<f64>,
    /// Largest difference between `μ'` and either expression.
    pub max_residual: f64,
}

pub fn mu_prime_check(df: &DarbouxField, fr: &FrenetData, fd: &FocalSetData) -> Result<MuPrimeReport> {
    let sigma: Vec<f64> = fd.sides().map(|k| df.sigma(k)).collect();
    if relative_spread(&sigma) > 1e-9 {
        return Err(Error::NotSilhouette);
    }
    let s0 = median(&sigma);
    let topology = fr.topology();
    let verts: Vec<usize> = match topology {
        Topology::Open => (fd.mu.first + 1..fd.mu.end()).collect(),
        Topology::Closed => (0..fd.mu.len()).collect(),
    };
    let first = verts.first().copied().unwrap_or(fd.mu.first + 1);
    let (mut mp, mut r1, mut r2) = (vec![], vec![], vec![]);
    let mut worst: f64 = 0.0;
    for &i in &verts {
        let i = i as isize;
        let mu_p = fd.mu.get(i).unwrap() - fd.mu.get(i - 1).unwrap();
        let a = fr.rho1_at(i + 1).unwrap() - fr.rho1_at(i).unwrap() - s0 * fr.tau_at(i).unwrap();
        let b = fr.rho2_at(i).unwrap() - fr.rho2_at(i - 1).unwrap() - s0 * fr.tau_at(i - 1).unwrap();
        worst = worst.max((mu_p - a).abs()).max((mu_p - b).abs());
        mp.push(mu_p);
        r1.push(a);
        r2.push(b);
    }
    let span = |v| Span::new(Grid::Vertex, topology, first, v);
    Ok(MuPrimeReport {
        sigma0: s0,
        mu_prime: span(mp),
        via_rho1: span(r1),
        via_rho2: span(r2),
        max_residual: worst,
    })
}
