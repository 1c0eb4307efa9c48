// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Polygons framed on quad-faced polyhedra: the parallel Darboux field, the
//! osculating developable and its cone test.

use crate::error::{Error, Result};
use crate::geom::{det3, solve_in_plane, Vec3};
use crate::mesh::Mesh;
use crate::polygon::Polygon3;
use crate::seq::{median, relative_spread, Grid, GridSeq, Topology};

/// Default relative coplanarity tolerance for the quad faces.
pub const DEFAULT_TOL_FACE: f64 = 1e-8;
/// Default tolerance for [`classify_osculating`].
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-6;

// Consecutive unit directions closer than this (sine of the angle) are
// treated as parallel: the face is a parallelogram strip.
const PARALLEL_EPS: f64 = 1e-12;

/// A polygon together with one edge direction `d(i)` per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct FramedPolygon {
    polygon: Polygon3,
    directions: GridSeq<Vec3>,
}

impl FramedPolygon {
    pub fn new(polygon: Polygon3, directions: Vec<Vec3>) -> Result<Self> {
        if directions.len() != polygon.len() {
            return Err(Error::LengthMismatch {
                expected: polygon.len(),
                got: directions.len(),
            });
        }
        if let Some(index) = directions.iter().position(|d| !d.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if let Some(index) = directions.iter().position(|&d| d == Vec3::ZERO) {
            return Err(Error::ZeroDirection { index });
        }
        let topology = polygon.topology();
        Ok(FramedPolygon {
            polygon,
            directions: GridSeq::new(directions, Grid::Vertex, topology),
        })
    }

    /// Frames a polygon by the rays from `apex`, `d(i) = φ(i) − apex`.
    pub fn silhouette(polygon: Polygon3, apex: Vec3) -> Result<Self> {
        let d = polygon.vertices().iter().map(|&p| p - apex).collect();
        Self::new(polygon, d)
    }

    /// Frames every vertex with the same direction.
    pub fn prism(polygon: Polygon3, direction: Vec3) -> Result<Self> {
        let d = vec![direction; polygon.len()];
        Self::new(polygon, d)
    }

    /// Builds a consistent framing from rough guide directions. `d(0)` is
    /// taken as given; each later `d(i + 1)` is the guide projected into the
    /// plane of `φ'(i + 1/2)` and `d(i)`, so every open face is planar. For
    /// a closed polygon the closing face is left as it falls.
    pub fn from_guides(polygon: Polygon3, guides: &[Vec3]) -> Result<Self> {
        if guides.len() != polygon.len() {
            return Err(Error::LengthMismatch {
                expected: polygon.len(),
                got: guides.len(),
            });
        }
        let mut d = Vec::with_capacity(guides.len());
        d.push(guides[0]);
        for k in 0..guides.len() - 1 {
            let n = polygon
                .side(k)
                .cross(d[k])
                .normalized()
                .ok_or(Error::NotTransversal {
                    vertex: k,
                    margin: 0.0,
                })?;
            let g = guides[k + 1];
            let proj = g - n * g.dot(n);
            if proj.norm() <= 1e-12 * g.norm() {
                return Err(Error::ZeroDirection { index: k + 1 });
            }
            d.push(proj);
        }
        Self::new(polygon, d)
    }

    pub fn polygon(&self) -> &Polygon3 {
        &self.polygon
    }

    pub fn directions(&self) -> &[Vec3] {
        self.directions.values()
    }

    pub fn direction(&self, i: usize) -> Vec3 {
        self.directions.values()[i % self.len()]
    }

    pub fn unit_direction(&self, i: usize) -> Vec3 {
        let d = self.direction(i);
        d / d.norm()
    }

    pub fn len(&self) -> usize {
        self.polygon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygon.is_empty()
    }

    pub fn topology(&self) -> Topology {
        self.polygon.topology()
    }

    pub fn is_closed(&self) -> bool {
        self.polygon.is_closed()
    }

    pub fn side_count(&self) -> usize {
        self.polygon.side_count()
    }

    pub fn vertex(&self, i: usize) -> Vec3 {
        self.polygon.vertices()[i % self.len()]
    }

    pub fn side(&self, k: usize) -> Vec3 {
        self.polygon.side(k)
    }

    pub fn reversed(&self) -> FramedPolygon {
        let mut d = self.directions().to_vec();
        d.reverse();
        FramedPolygon {
            polygon: self.polygon.reversed(),
            directions: GridSeq::new(d, Grid::Vertex, self.topology()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FrameViolation {
    NonPlanarFace { side: usize, residual: f64 },
    NotTransversal { vertex: usize, margin: f64 },
}

impl From<FrameViolation> for Error {
    fn from(v: FrameViolation) -> Error {
        match v {
            FrameViolation::NonPlanarFace { side, residual } => {
                Error::NonPlanarFace { side, residual }
            }
            FrameViolation::NotTransversal { vertex, margin } => {
                Error::NotTransversal { vertex, margin }
            }
        }
    }
}

/// Per-side coplanarity residuals and per-vertex transversality margins.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameReport {
    /// `|[φ', d(i), d(i+1)]| / (‖φ'‖‖d(i)‖‖d(i+1)‖)` per side.
    pub coplanarity: GridSeq<f64>,
    /// Smallest sine of the angle between `d(i)` and its adjacent sides.
    pub transversality: GridSeq<f64>,
    pub violations: Vec<FrameViolation>,
}

impl FrameReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn max_coplanarity(&self) -> f64 {
        self.coplanarity.values().iter().copied().fold(0.0, f64::max)
    }

    pub fn first_error(&self) -> Option<Error> {
        self.violations.first().map(|&v| v.into())
    }
}

pub fn validate_frame(f: &FramedPolygon, tol_face: f64) -> FrameReport {
    let n = f.len();
    let sides = f.side_count();
    let mut violations = Vec::new();
    let mut coplanarity = Vec::with_capacity(sides);
    for k in 0..sides {
        let s = f.side(k);
        let (a, b) = (f.direction(k), f.direction(k + 1));
        let r = det3(s, a, b).abs() / (s.norm() * a.norm() * b.norm());
        if r > tol_face {
            violations.push(FrameViolation::NonPlanarFace {
                side: k,
                residual: r,
            });
        }
        coplanarity.push(r);
    }
    let mut transversality = Vec::with_capacity(n);
    for i in 0..n {
        let d = f.unit_direction(i);
        let mut margin = f64::INFINITY;
        let adjacent = [
            (i > 0 || f.is_closed()).then(|| (i + n - 1) % n),
            (i < sides).then_some(i),
        ];
        for k in adjacent.into_iter().flatten() {
            let s = f.side(k);
            margin = margin.min(d.cross(s / s.norm()).norm());
        }
        if margin <= tol_face {
            violations.push(FrameViolation::NotTransversal { vertex: i, margin });
        }
        transversality.push(margin);
    }
    // Report faces before vertices in index order.
    violations.sort_by_key(|v| match *v {
        FrameViolation::NonPlanarFace { side, .. } => (side, 0),
        FrameViolation::NotTransversal { vertex, .. } => (vertex, 1),
    });
    FrameReport {
        coplanarity: GridSeq::new(coplanarity, Grid::Side, f.topology()),
        transversality: GridSeq::new(transversality, Grid::Vertex, f.topology()),
        violations,
    }
}

/// The parallel Darboux field: `ξ(i)` along `d(i)` with
/// `ξ(i+1) − ξ(i) = −σ(i+1/2) φ'(i+1/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DarbouxField {
    pub xi: GridSeq<Vec3>,
    pub sigma: GridSeq<f64>,
    /// For closed polygons, `s(N)/s(0)`: the scale the recursion returns
    /// with after one loop. `1` means the field closes up.
    pub holonomy: Option<f64>,
}

impl DarbouxField {
    pub fn xi(&self, i: usize) -> Vec3 {
        self.xi.values()[i % self.xi.len()]
    }

    pub fn sigma(&self, k: usize) -> f64 {
        self.sigma.values()[k % self.sigma.len()]
    }

    /// The silhouette field `ξ(i) = φ(i) − O`, `σ ≡ −1`.
    pub fn centroaffine(p: &Polygon3, origin: Vec3) -> DarbouxField {
        let xi = p.vertices().iter().map(|&v| v - origin).collect();
        DarbouxField {
            xi: GridSeq::new(xi, Grid::Vertex, p.topology()),
            sigma: GridSeq::new(vec![-1.0; p.side_count()], Grid::Side, p.topology()),
            holonomy: p.is_closed().then_some(1.0),
        }
    }

    /// Relative residuals `‖ξ(i+1) − ξ(i) + σ φ'‖ / (‖ξ(i)‖ + ‖ξ(i+1)‖)`.
    pub fn residuals(&self, f: &FramedPolygon) -> Vec<f64> {
        (0..f.side_count())
            .map(|k| {
                let (a, b) = (self.xi(k), self.xi(k + 1));
                (b - a + f.side(k) * self.sigma(k)).norm() / (a.norm() + b.norm())
            })
            .collect()
    }
}

/// Integrates the parallel Darboux field from `ξ(0) = seed_scale · d̂(0)`.
///
/// Consecutive parallel directions make the face a parallelogram strip; the
/// scale is carried across unchanged (up to the orientation of `d`) and
/// `σ = 0` there.
pub fn parallel_darboux(f: &FramedPolygon, seed_scale: f64) -> Result<DarbouxField> {
    if seed_scale == 0.0 || !seed_scale.is_finite() {
        return Err(Error::InvalidArgument(
            "seed scale must be finite and nonzero".into(),
        ));
    }
    if let Some(e) = validate_frame(f, DEFAULT_TOL_FACE).first_error() {
        return Err(e);
    }
    let n = f.len();
    let sides = f.side_count();
    let mut s = Vec::with_capacity(n + 1);
    let mut sigma = Vec::with_capacity(sides);
    s.push(seed_scale);
    for k in 0..sides {
        let (u, w) = (f.unit_direction(k), f.unit_direction(k + 1));
        let side = f.side(k);
        let normal = u.cross(w);
        let sk = s[k];
        if normal.norm() <= PARALLEL_EPS {
            sigma.push(0.0);
            s.push(if u.dot(w) > 0.0 { sk } else { -sk });
            continue;
        }
        let (p, q) = solve_in_plane(u, w, side, normal).ok_or(Error::DegenerateFace { side: k })?;
        if p.abs() <= 1e-14 * side.norm() || q == 0.0 {
            return Err(Error::DegenerateFrame { side: k });
        }
        sigma.push(sk / p);
        s.push(-q * sk / p);
    }
    let holonomy = f.is_closed().then(|| s[n] / s[0]);
    s.truncate(n);
    let xi = s
        .iter()
        .enumerate()
        .map(|(i, &si)| f.unit_direction(i) * si)
        .collect();
    Ok(DarbouxField {
        xi: GridSeq::new(xi, Grid::Vertex, f.topology()),
        sigma: GridSeq::new(sigma, Grid::Side, f.topology()),
        holonomy,
    })
}

/// Where the two support lines of a face meet.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OsculatingPoint {
    /// `point` is the midpoint of the evaluations from both ends of the
    /// side; `residual` is their distance relative to the side scale.
    Finite { point: Vec3, residual: f64 },
    /// `σ = 0`: the support lines are parallel.
    AtInfinity,
}

impl OsculatingPoint {
    pub fn point(&self) -> Option<Vec3> {
        match *self {
            OsculatingPoint::Finite { point, .. } => Some(point),
            OsculatingPoint::AtInfinity => None,
        }
    }
}

/// `O(i+1/2) = φ(i) + ξ(i)/σ(i+1/2)`, evaluated from both ends of each side.
pub fn osculating_points(f: &FramedPolygon, df: &DarbouxField) -> GridSeq<OsculatingPoint> {
    let pts = (0..f.side_count())
        .map(|k| {
            let sg = df.sigma(k);
            let (a, b) = (df.xi(k), df.xi(k + 1));
            let reach = a.norm().max(b.norm());
            let side = f.side(k).norm();
            // Also treat σ as zero when O would sit absurdly far away.
            if sg == 0.0 || sg.abs() * side * 1e13 <= reach {
                return OsculatingPoint::AtInfinity;
            }
            let o1 = f.vertex(k) + a / sg;
            let o2 = f.vertex(k + 1) + b / sg;
            let scale = (reach / sg.abs()).max(side);
            OsculatingPoint::Finite {
                point: (o1 + o2) * 0.5,
                residual: o1.distance(o2) / scale,
            }
        })
        .collect();
    GridSeq::new(pts, Grid::Side, f.topology())
}

/// Support line `x(i, u) = φ(i) + u ξ(i)`.
fn support(f: &FramedPolygon, df: &DarbouxField, i: usize, u: f64) -> Vec3 {
    f.vertex(i) + df.xi(i) * u
}

/// The osculating developable: one face per side between the support lines
/// through its endpoints, reaching `extent` along them and clipped at `O`
/// when the lines meet within that reach.
pub fn osculating_developable(f: &FramedPolygon, df: &DarbouxField, extent: f64) -> Mesh {
    let mut mesh = Mesh::new();
    let weld = 1e-9 * (f.polygon().diameter() + extent);
    for k in 0..f.side_count() {
        let reach = df.xi(k).norm().max(df.xi(k + 1).norm());
        let e = extent / reach;
        let (mut lo, mut hi) = (-e, e);
        let sg = df.sigma(k);
        if sg != 0.0 {
            let star = 1.0 / sg;
            if star > 0.0 {
                hi = hi.min(star);
            } else {
                lo = lo.max(star);
            }
        }
        mesh.push_face(
            &[
                support(f, df, k, lo),
                support(f, df, k, hi),
                support(f, df, k + 1, hi),
                support(f, df, k + 1, lo),
            ],
            weld,
        );
    }
    mesh
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Osculating {
    Cone { apex: Vec3 },
    Cylinder,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OsculatingClass {
    pub kind: Osculating,
    /// Relative spread of σ; 0 for a perfect silhouette.
    pub quality: f64,
}

/// Decides whether the osculating developable is a cone, a cylinder, or
/// neither.
pub fn classify_osculating(f: &FramedPolygon, df: &DarbouxField, tol: f64) -> OsculatingClass {
    let sigma = df.sigma.values();
    let quality = relative_spread(sigma);
    let xi_scale = median(&df.xi.values().iter().map(|x| x.norm()).collect::<Vec<_>>());
    let side_scale = median(
        &(0..f.side_count())
            .map(|k| f.side(k).norm())
            .collect::<Vec<_>>(),
    );
    let floor = tol * xi_scale / side_scale;
    let max_abs = sigma.iter().fold(0.0f64, |m, s| m.max(s.abs()));
    let min_abs = sigma.iter().fold(f64::INFINITY, |m, s| m.min(s.abs()));
    let kind = if max_abs <= floor {
        Osculating::Cylinder
    } else if quality <= tol && min_abs > floor {
        let pts: Vec<Vec3> = osculating_points(f, df)
            .values()
            .iter()
            .filter_map(OsculatingPoint::point)
            .collect();
        let apex = pts.iter().fold(Vec3::ZERO, |a, &p| a + p) / pts.len() as f64;
        Osculating::Cone { apex }
    } else {
        Osculating::General
    };
    OsculatingClass { kind, quality }
}
