// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::path::Path;

use eqvol::{
    classify_focal, focal_data, focal_set_mesh, frenet, osculating_developable, Focal, Gauge,
};

use super::{load, max_abs};
use crate::document::write_file;
use crate::failure::{Context, Failure};
use crate::FramingArgs;

fn extent_or_default(extent: Option<f64>, diameter: f64) -> Result<f64, Failure> {
    match extent {
        Some(e) if e > 0.0 && e.is_finite() => Ok(e),
        Some(e) => Err(Failure::input(format!("--extent must be positive, got {e}"))),
        None => Ok(2.0 * diameter),
    }
}

pub fn focal(input: &Path, framing: &FramingArgs, obj: &Path, extent: Option<f64>) -> Result<i32, Failure> {
    let fr_in = load(input, framing)?;
    let (f, df) = (&fr_in.framed, &fr_in.field);
    let extent = extent_or_default(extent, f.polygon().diameter())?;
    let fr = frenet(f, df, fr_in.mode()).during("frenet")?;
    let fd = focal_data(f, df, &fr, Gauge::new(fr.tau.first, 0.0)).during("focal_data")?;
    let mut mesh = focal_set_mesh(&fd, extent);
    // Coincident lines weld onto the same vertices.
    mesh.lines.dedup();

    let mut text = String::from("# discrete affine focal set\n");
    let single = matches!(
        classify_focal(df, &fd, eqvol::darboux::DEFAULT_CLASSIFY_TOL),
        Focal::SingleLine { .. }
    );
    let lines = &fd.lines.values;
    for j in 0..lines.len().saturating_sub(1) {
        if let (Some(a), Some(b)) = (lines[j], lines[j + 1]) {
            let scale = a.point.norm().max(f.polygon().diameter());
            if single || (a.angle_sine(&b) <= 1e-12 && a.distance(b.point) <= 1e-12 * scale) {
                let _ = writeln!(text, "# degenerate face between sides {} and {}", fd.mu.first + j, fd.mu.first + j + 1);
            }
        }
    }
    if single {
        text += "# focal set is a single line\n";
    }
    text += &mesh.to_obj();

    // A polygon in a plane L: the section of the focal set by L is the
    // planar evolute, through the points Q.
    let rho_scale = max_abs(&fr.rho2.values).max(1.0);
    if max_abs(&fr.tau.values) <= 1e-9 * rho_scale {
        let qs: Vec<_> = fd.q.values.iter().flatten().copied().collect();
        if qs.len() >= 2 {
            text += "g evolute\n";
            let base = mesh.vertices.len();
            for q in &qs {
                let _ = writeln!(text, "v {:.17e} {:.17e} {:.17e}", q.x, q.y, q.z);
            }
            text.push('l');
            for i in 0..qs.len() {
                let _ = write!(text, " {}", base + i + 1);
            }
            text.push('\n');
        }
    }
    write_file(obj, &text)?;

    let at_infinity: Vec<usize> = fd
        .sides()
        .zip(fd.o.values.iter().zip(&fd.q.values))
        .filter(|(_, (o, q))| o.is_none() || q.is_none())
        .map(|(k, _)| k)
        .collect();
    if !at_infinity.is_empty() {
        log::warn!(
            "sigma = 0 or mu = 0 on sides {at_infinity:?}: O or Q is at infinity there"
        );
        return Ok(2);
    }
    Ok(0)
}

pub fn developable(input: &Path, framing: &FramingArgs, obj: &Path, extent: Option<f64>) -> Result<i32, Failure> {
    let fr_in = load(input, framing)?;
    let (f, df) = (&fr_in.framed, &fr_in.field);
    let extent = extent_or_default(extent, f.polygon().diameter())?;
    let mesh = osculating_developable(f, df, extent);
    let text = String::from("# osculating developable\n") + &mesh.to_obj();
    write_file(obj, &text)?;
    let flat: Vec<usize> = (0..f.side_count()).filter(|&k| df.sigma(k) == 0.0).collect();
    if !flat.is_empty() {
        log::warn!("sigma = 0 on sides {flat:?}: those faces are parallel strips cut at the extent");
        return Ok(2);
    }
    Ok(0)
}
