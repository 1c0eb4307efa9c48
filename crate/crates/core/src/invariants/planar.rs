// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::geom::{det3, Vec3};
use crate::invariants::frenet::third_diff;
use crate::polygon::Polygon3;
use crate::seq::{median, Grid, Span, Topology};

/// A planar polygon read as an equal-area polygon of its plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarReduction {
    pub normal: Vec3,
    /// `[φ'(i−1/2), φ'(i+1/2)]` measured in the plane, per interior vertex.
    pub areas: Span<f64>,
    /// `max |a − median| / |median|` over the areas.
    pub area_spread: f64,
    pub equal_area: bool,
    /// Discrete affine curvature from `φ''' = −ρ φ'`, per side.
    pub rho: Span<f64>,
    /// Component of `φ'''` off the tangent direction, relative to `‖φ'''‖`.
    pub rho_residual: Span<f64>,
    /// Evolute vertices `φ(i) + φ''(i)/ρ(i+1/2)`, per side (`None` where
    /// ρ = 0).
    pub evolute: Span<Option<Vec3>>,
}

/// Tolerance on the area spread for `equal_area`.
pub const EQUAL_AREA_TOL: f64 = 1e-9;

/// Equal-area test, affine curvature and evolute of a polygon lying in a
/// plane with normal `normal`.
pub fn planar_reduction(p: &Polygon3, normal: Vec3) -> Result<PlanarReduction> {
    p.require(4)?;
    let nrm = normal
        .normalized()
        .ok_or_else(|| Error::InvalidArgument("plane normal is zero".into()))?;
    let x = p.vertices();
    let base = x[0];
    let deviation = x
        .iter()
        .fold(0.0f64, |m, &v| m.max((v - base).dot(nrm).abs()));
    if deviation > 1e-9 * p.diameter() {
        return Err(Error::NotPlanar { deviation });
    }
    let n = p.len();
    let topology = p.topology();
    let side = |k: usize| p.side(k % n);
    let (vfirst, verts) = match topology {
        Topology::Open => (1, 1..n - 1),
        Topology::Closed => (0, 0..n),
    };
    let areas: Vec<f64> = verts.map(|i| det3(side(i + n - 1), side(i), nrm)).collect();
    let c = median(&areas);
    let dev = areas.iter().fold(0.0f64, |m, a| m.max((a - c).abs()));
    let area_spread = if dev == 0.0 { 0.0 } else { dev / c.abs() };

    let (sfirst, sides) = match topology {
        Topology::Open => (1, 1..n - 2),
        Topology::Closed => (0, 0..n),
    };
    let (mut rho, mut res, mut ev) = (vec![], vec![], vec![]);
    for k in sides {
        let s = side(k);
        let w = side(k + n - 1);
        let t = third_diff(p, k);
        let r = -det3(t, w, nrm) / det3(s, w, nrm);
        rho.push(r);
        res.push(det3(s, t, nrm).abs() / (s.norm() * t.norm()).max(f64::MIN_POSITIVE));
        if r != 0.0 {
            let a = x[k % n] + (side(k) - side(k + n - 1)) / r;
            let b = x[(k + 1) % n] + (side(k + 1) - side(k)) / r;
            ev.push(Some((a + b) * 0.5));
        } else {
            ev.push(None);
        }
    }
    Ok(PlanarReduction {
        normal: nrm,
        areas: Span::new(Grid::Vertex, topology, vfirst, areas),
        area_spread,
        equal_area: area_spread <= EQUAL_AREA_TOL && c != 0.0,
        rho: Span::new(Grid::Side, topology, sfirst, rho),
        rho_residual: Span::new(Grid::Side, topology, sfirst, res),
        evolute: Span::new(Grid::Side, topology, sfirst, ev),
    })
}
