// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use eqvol::{darboux_volumes, resample_equal_volume, Termination};
use serde_json::json;

use super::load;
use crate::document::PolygonDocument;
use crate::failure::{Context, Failure};
use crate::FramingArgs;

pub fn run(input: &Path, framing: &FramingArgs, out: &Path) -> Result<i32, Failure> {
    let fr = load(input, framing)?;
    let r = resample_equal_volume(&fr.framed, &fr.field).during("resample")?;
    let vols = darboux_volumes(&r.framed, &r.field).during("darboux_volumes")?;
    let termination = match r.termination {
        Termination::EndOfInput => "end-of-input",
        Termination::Truncated => "truncated",
        Termination::VertexLimit => "vertex-limit",
    };
    if r.termination == Termination::Truncated {
        log::warn!(
            "input turned away from the next plane; output truncated to {} of {} vertices",
            r.framed.len(),
            fr.framed.len()
        );
    }
    let mut doc = PolygonDocument::from_framed(&r.framed);
    let m = &mut doc.metadata;
    m.insert("source".into(), json!(input.display().to_string()));
    m.insert("termination".into(), json!(termination));
    m.insert("truncated".into(), json!(r.termination == Termination::Truncated));
    m.insert("input_vertices".into(), json!(fr.framed.len()));
    m.insert("output_vertices".into(), json!(r.framed.len()));
    m.insert("volume".into(), json!(vols.c_hat));
    m.insert("volume_spread".into(), json!(vols.spread));
    m.insert("input_volume_spread".into(), json!(fr.volumes.spread));
    doc.write(out)?;
    log::info!("wrote {} vertices to {}", r.framed.len(), out.display());
    Ok(0)
}
