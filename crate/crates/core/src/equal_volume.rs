// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Equal-volume conditions and the inductive equal-volume resampler.

use crate::darboux::{parallel_darboux, DarbouxField, FramedPolygon};
use crate::error::{Error, Result};
use crate::geom::{det3, Vec3};
use crate::polygon::Polygon3;
use crate::seq::{median, Grid, Span, Topology};

/// Triple-product volumes over the interior vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeReport {
    pub volumes: Span<f64>,
    /// Median volume.
    pub c_hat: f64,
    /// `max |v - c_hat| / |c_hat|`.
    pub spread: f64,
}

impl VolumeReport {
    pub fn from_span(volumes: Span<f64>) -> VolumeReport {
        let c_hat = median(&volumes.values);
        let dev = volumes
            .values
            .iter()
            .fold(0.0f64, |m, v| m.max((v - c_hat).abs()));
        let spread = if dev == 0.0 {
            0.0
        } else if c_hat != 0.0 {
            dev / c_hat.abs()
        } else {
            f64::INFINITY
        };
        VolumeReport {
            volumes,
            c_hat,
            spread,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.volumes.values
    }
}

fn interior(n: usize, topology: Topology) -> (usize, std::ops::Range<usize>) {
    match topology {
        Topology::Open => (1, 1..n - 1),
        Topology::Closed => (0, 0..n),
    }
}

/// `[φ'(i−1/2), φ'(i+1/2), ξ(i)]` at every interior vertex.
pub fn darboux_volumes(f: &FramedPolygon, df: &DarbouxField) -> Result<VolumeReport> {
    f.polygon().require(3)?;
    let n = f.len();
    let (first, range) = interior(n, f.topology());
    let v = range
        .map(|i| det3(f.side((i + n - 1) % n), f.side(i), df.xi(i)))
        .collect();
    Ok(VolumeReport::from_span(Span::new(
        Grid::Vertex,
        f.topology(),
        first,
        v,
    )))
}

/// `[φ(i−1) − O, φ(i) − O, φ(i+1) − O]` at every interior vertex.
pub fn centroaffine_volumes(p: &Polygon3, origin: Vec3) -> Result<VolumeReport> {
    p.require(3)?;
    let n = p.len();
    let x = |i: usize| p.vertices()[i % n] - origin;
    let (first, range) = interior(n, p.topology());
    let v = range
        .map(|i| det3(x(i + n - 1), x(i), x(i + 1)))
        .collect();
    Ok(VolumeReport::from_span(Span::new(
        p.grid(),
        p.topology(),
        first,
        v,
    )))
}

/// Volumes of a polygon `Φ` on the side grid: the centro-affine volumes of
/// its difference polygon with respect to the origin.
pub fn space_volumes(big_phi: &Polygon3) -> Result<VolumeReport> {
    big_phi.seq().expect_grid(Grid::Side)?;
    big_phi.require(4)?;
    let d = big_phi.seq().forward_diff()?;
    let p = Polygon3::on_grid(d.into_values(), big_phi.topology(), Grid::Vertex)?;
    centroaffine_volumes(&p, Vec3::ZERO)
}

/// Constant to `tol` (relative) and of one sign.
pub fn is_equal_volume(r: &VolumeReport, tol: f64) -> bool {
    let v = r.values();
    !v.is_empty()
        && r.spread <= tol
        && (v.iter().all(|&x| x > 0.0) || v.iter().all(|&x| x < 0.0))
}

/// Per-side defect of the equal-volume condition: the volume increment
/// `[φ'(i+1/2), φ'''(i+1/2), ξ(i)]` and the out-of-face component of
/// `φ'''(i+1/2)`. Both vanish exactly when `φ'''` lies in the face plane.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceDefects {
    pub increments: Span<f64>,
    pub out_of_face: Span<f64>,
}

pub fn face_defects(f: &FramedPolygon, df: &DarbouxField) -> Result<FaceDefects> {
    f.polygon().require(4)?;
    let n = f.len();
    let range = match f.topology() {
        Topology::Open => 1..n - 2,
        Topology::Closed => 0..n,
    };
    let first = range.start;
    let mut inc = Vec::new();
    let mut out = Vec::new();
    for k in range {
        let s = f.side(k);
        let t = f.side(k + 1) - f.side(k) * 2.0 + f.side(k + n - 1);
        let xi = df.xi(k);
        let d = det3(s, t, xi);
        inc.push(d);
        out.push(d.abs() / s.cross(xi).norm());
    }
    Ok(FaceDefects {
        increments: Span::new(Grid::Side, f.topology(), first, inc),
        out_of_face: Span::new(Grid::Side, f.topology(), first, out),
    })
}

/// Why the resampler stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// The input polyline ran out while still approaching the next plane.
    EndOfInput,
    /// The remaining polyline turned away from the next plane without
    /// crossing it.
    Truncated,
    /// The output reached the input vertex count.
    VertexLimit,
}

/// Where an output vertex sits on the input polyline: side `segment` at
/// chord parameter `t ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolylinePosition {
    pub segment: usize,
    pub t: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Resampled {
    pub framed: FramedPolygon,
    pub field: DarbouxField,
    pub termination: Termination,
    pub positions: Vec<PolylinePosition>,
}

// Signed distances this close to zero count as "on the plane".
fn on_plane(g: f64, x: Vec3, p: Vec3) -> bool {
    g.abs() <= 16.0 * f64::EPSILON * (x.norm() + p.norm())
}

/// Rebuilds an open framed polygon as an equal-volume one.
///
/// The first three vertices are kept. Each further vertex is the first
/// forward crossing of the input polyline with the plane through the
/// vertex three places back, parallel to the current face. Its direction
/// interpolates the input directions by chord parameter on the crossing
/// side, projected into the new face plane when needed to keep that face
/// planar. Input vertices lying on the plane are reused bit for bit, so an
/// equal-volume input comes back unchanged.
pub fn resample_equal_volume(f: &FramedPolygon, df: &DarbouxField) -> Result<Resampled> {
    if f.is_closed() {
        return Err(Error::InvalidArgument(
            "resampling needs an open polygon".into(),
        ));
    }
    f.polygon().require(4)?;
    let x = f.polygon().vertices();
    let d = f.directions();
    let n = x.len();

    let mut pts: Vec<Vec3> = x[..3].to_vec();
    let mut dirs: Vec<Vec3> = d[..3].to_vec();
    let mut positions: Vec<PolylinePosition> = (0..3)
        .map(|segment| PolylinePosition { segment, t: 0.0 })
        .collect();
    // Current location: on side `seg` at parameter `t`.
    let (mut seg, mut t) = (2usize, 0.0f64);
    let termination = loop {
        if pts.len() >= n {
            break Termination::VertexLimit;
        }
        let j = pts.len() - 3;
        let anchor = pts[j];
        let face = pts[j + 2] - pts[j + 1];
        let Some(normal) = face.cross(dirs[j + 1]).normalized() else {
            return Err(Error::DegenerateFace { side: j + 1 });
        };
        let g = |p: Vec3| normal.dot(p - anchor);

        let start = if t == 0.0 { x[seg] } else { x[seg].lerp(x[seg + 1], t) };
        let mut prev = g(start);
        let mut prev_pt = start;
        let mut found = None;
        let mut approaching = true;
        for m in seg + 1..n {
            let gm = g(x[m]);
            if on_plane(gm, x[m], anchor) {
                found = Some((m, 0.0));
                break;
            }
            if !on_plane(prev, prev_pt, anchor) && (gm > 0.0) != (prev > 0.0) {
                let s = prev / (prev - gm);
                let lo = if m - 1 == seg { t } else { 0.0 };
                found = Some((m - 1, lo + (1.0 - lo) * s));
                break;
            }
            if gm.abs() > prev.abs() {
                approaching = false;
            }
            prev = gm;
            prev_pt = x[m];
        }
        let Some((m, tm)) = found else {
            break if approaching {
                Termination::EndOfInput
            } else {
                Termination::Truncated
            };
        };
        let (p, mut dn) = if tm == 0.0 {
            (x[m], d[m])
        } else if tm >= 1.0 {
            (x[m + 1], d[m + 1])
        } else {
            (x[m].lerp(x[m + 1], tm), d[m].lerp(d[m + 1], tm))
        };
        let (m, tm) = if tm >= 1.0 { (m + 1, 0.0) } else { (m, tm) };
        if p == pts[pts.len() - 1] {
            break Termination::Truncated;
        }
        let side = p - pts[j + 2];
        if let Some(fnorm) = side.cross(dirs[j + 2]).normalized() {
            let off = dn.dot(fnorm);
            if off.abs() > 1e-14 * dn.norm() {
                dn -= fnorm * off;
            }
        }
        pts.push(p);
        dirs.push(dn);
        positions.push(PolylinePosition { segment: m, t: tm });
        seg = m;
        t = tm;
    };
    let framed = FramedPolygon::new(Polygon3::open(pts)?, dirs)?;
    let seed = df.xi(0).dot(f.unit_direction(0));
    let field = parallel_darboux(&framed, seed)?;
    Ok(Resampled {
        framed,
        field,
        termination,
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::DEFAULT_TOL_FACE;

    fn square_z1() -> Polygon3 {
        Polygon3::open(vec![
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(-1.0, 1.0, 1.0),
            Vec3::new(-1.0, -1.0, 1.0),
            Vec3::new(1.0, -1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn square_volumes() {
        let p = square_z1();
        let f = FramedPolygon::silhouette(p.clone(), Vec3::ZERO).unwrap();
        let df = DarbouxField::centroaffine(&p, Vec3::ZERO);
        let r = darboux_volumes(&f, &df).unwrap();
        assert_eq!(r.values(), &[4.0, 4.0]);
        assert_eq!(r.volumes.first, 1);
        let c = centroaffine_volumes(&p, Vec3::ZERO).unwrap();
        assert_eq!(c.values(), r.values());
        assert!(is_equal_volume(&c, 1e-12));

        let closed = Polygon3::closed(p.vertices().to_vec()).unwrap();
        let c = centroaffine_volumes(&closed, Vec3::ZERO).unwrap();
        assert_eq!(c.values(), &[4.0; 4]);
    }

    #[test]
    fn planar_polygon_through_origin_has_zero_volumes() {
        let p = Polygon3::open(vec![
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.3, 1.0, 0.0),
            Vec3::new(-1.0, 0.2, 0.0),
            Vec3::new(-0.4, -1.0, 0.0),
        ])
        .unwrap();
        let r = centroaffine_volumes(&p, Vec3::ZERO).unwrap();
        assert!(r.values().iter().all(|&v| v == 0.0));
        assert!(!is_equal_volume(&r, 1e-8));
    }

    #[test]
    fn space_volumes_of_cumulative_sum() {
        let mut acc = Vec3::new(0.5, -0.25, 2.0);
        let mut big = vec![acc];
        for v in square_z1().vertices() {
            acc += *v;
            big.push(acc);
        }
        let big = Polygon3::on_grid(big, Topology::Open, Grid::Side).unwrap();
        assert_eq!(space_volumes(&big).unwrap().values(), &[4.0, 4.0]);
        assert!(matches!(
            space_volumes(&square_z1()),
            Err(Error::WrongGrid { .. })
        ));
    }

    fn spiral(n: usize) -> FramedPolygon {
        let h = std::f64::consts::TAU / n as f64;
        let pts = (0..n)
            .map(|i| {
                // Warped parameter: uniform samples would already be equal-volume.
                let s = i as f64 * h;
                let t = s + 0.1 * s.sin();
                let a = (2.0 * t / 3.0).exp() * 2f64.powf(-1.0 / 3.0);
                Vec3::new(a * (-t).exp() * t.cos(), a * (-t).exp() * t.sin(), a)
            })
            .collect();
        FramedPolygon::silhouette(Polygon3::open(pts).unwrap(), Vec3::ZERO).unwrap()
    }

    #[test]
    fn resampled_spiral_is_equal_volume_and_idempotent() {
        let f = spiral(400);
        let df = parallel_darboux(&f, f.vertex(0).norm()).unwrap();
        assert!(darboux_volumes(&f, &df).unwrap().spread > 1e-3);
        let r = resample_equal_volume(&f, &df).unwrap();
        assert!(r.framed.len() > 300);
        let v = darboux_volumes(&r.framed, &r.field).unwrap();
        assert!(v.spread <= 1e-9, "spread {}", v.spread);
        assert!(crate::darboux::validate_frame(&r.framed, DEFAULT_TOL_FACE).is_valid());

        let again = resample_equal_volume(&r.framed, &r.field).unwrap();
        assert_eq!(again.framed.polygon().vertices(), r.framed.polygon().vertices());
    }

    #[test]
    fn defects_vanish_on_equal_volume_input() {
        let p = square_z1();
        let f = FramedPolygon::silhouette(p.clone(), Vec3::ZERO).unwrap();
        let df = DarbouxField::centroaffine(&p, Vec3::ZERO);
        let d = face_defects(&f, &df).unwrap();
        assert_eq!(d.increments.values, vec![0.0]);
        let vols = darboux_volumes(&f, &df).unwrap();
        assert_eq!(vols.values()[1] - vols.values()[0], d.increments.values[0]);
    }

    #[test]
    fn tail_turning_back_truncates() {
        // After a few steps the polyline retreats along itself.
        let mut pts: Vec<Vec3> = (0..8)
            .map(|i| {
                let t = 0.3 * i as f64;
                Vec3::new(t.cos(), t.sin(), 1.0 + 0.05 * t)
            })
            .collect();
        let back: Vec<Vec3> = pts[3..7].iter().rev().map(|p| *p * 0.999).collect();
        pts.extend(back);
        let p = Polygon3::open(pts).unwrap();
        let f = FramedPolygon::silhouette(p, Vec3::ZERO).unwrap();
        let df = parallel_darboux(&f, 1.0).unwrap();
        let r = resample_equal_volume(&f, &df).unwrap();
        assert_eq!(r.termination, Termination::Truncated);
    }
}
