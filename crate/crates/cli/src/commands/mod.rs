// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

pub mod analyze;
pub mod meshes;
pub mod plength;
pub mod resample;
pub mod table1;

use std::path::Path;

use eqvol::invariants::EXACT_SPREAD_LIMIT;
use eqvol::{
    centroaffine_volumes, darboux_volumes, parallel_darboux, DarbouxField, FramedPolygon, Mode,
    Span, Vec3, VolumeReport,
};
use serde::Serialize;

use crate::document::{Kind, PolygonDocument};
use crate::failure::{Context, Failure};
use crate::FramingArgs;

/// A framed polygon with its parallel field, ready for the invariants.
pub struct Framed {
    pub framed: FramedPolygon,
    pub field: DarbouxField,
    pub volumes: VolumeReport,
    /// The silhouette centre when framed by rays.
    pub origin: Option<Vec3>,
}

impl Framed {
    /// Exact solves when the volumes are constant, least squares otherwise.
    pub fn mode(&self) -> Mode {
        if self.volumes.spread <= EXACT_SPREAD_LIMIT {
            Mode::Exact
        } else {
            log::warn!(
                "polygon is not equal-volume (spread {:.3e}); using least squares",
                self.volumes.spread
            );
            Mode::LeastSquares
        }
    }
}

pub fn load(input: &Path, framing: &FramingArgs) -> Result<Framed, Failure> {
    let doc = PolygonDocument::read(input)?;
    log::info!("read {} vertices from {}", doc.vertices.len(), input.display());
    match (doc.kind, framing.origin) {
        (Kind::Framed3, None) => {
            let framed = doc.framed()?;
            let field = parallel_darboux(&framed, framed.direction(0).norm()).during("parallel_darboux")?;
            let volumes = darboux_volumes(&framed, &field).during("darboux_volumes")?;
            Ok(Framed {
                framed,
                field,
                volumes,
                origin: None,
            })
        }
        (_, Some(o)) if !framing.framed => {
            let p = doc.polygon3()?;
            let volumes = centroaffine_volumes(&p, o).during("centroaffine_volumes")?;
            let field = DarbouxField::centroaffine(&p, o);
            let framed = FramedPolygon::silhouette(p, o)?;
            Ok(Framed {
                framed,
                field,
                volumes,
                origin: Some(o),
            })
        }
        _ => Err(Failure::input(
            "this command needs directions: pass --origin x,y,z to frame by rays from a point, \
             or give a framed3 document (--framed)",
        )),
    }
}

#[derive(Serialize)]
pub struct Series<T> {
    pub first: usize,
    pub values: Vec<T>,
}

impl<T: Clone> From<&Span<T>> for Series<T> {
    fn from(s: &Span<T>) -> Self {
        Series {
            first: s.first,
            values: s.values.clone(),
        }
    }
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Quality numbers print as `0` when exactly zero.
pub fn short(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x:.3e}")
    }
}
