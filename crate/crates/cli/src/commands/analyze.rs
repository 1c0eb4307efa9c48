// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use eqvol::{
    classify_focal, classify_osculating, focal_data, frenet, relative_spread, Focal, Gauge,
    Osculating,
};
use serde::Serialize;

use super::{load, max_abs, short, Series};
use crate::document::write_file;
use crate::failure::{Context, Failure};
use crate::FramingArgs;

#[derive(Serialize)]
struct Volumes {
    c: f64,
    spread: f64,
    values: Series<f64>,
}

#[derive(Serialize)]
struct FrenetOut {
    mode: String,
    rho1: Series<f64>,
    rho2: Series<f64>,
    tau: Series<f64>,
    compatibility: Series<f64>,
    tau_consistency: Series<f64>,
}

#[derive(Serialize)]
struct FocalOut {
    gauge_anchor: usize,
    mu: Series<f64>,
    mu_spread: f64,
    mu_residual_max: f64,
    q_residual_max: f64,
}

#[derive(Serialize)]
struct Classification {
    osculating: &'static str,
    quality: f64,
    apex: Option<[f64; 3]>,
    focal: String,
    planar: bool,
}

#[derive(Serialize)]
struct Report {
    vertices: usize,
    closed: bool,
    framing: &'static str,
    origin: Option<[f64; 3]>,
    volumes: Volumes,
    sigma: Vec<f64>,
    holonomy: Option<f64>,
    frenet: FrenetOut,
    focal: Option<FocalOut>,
    classification: Classification,
}

pub fn run(input: &Path, framing: &FramingArgs, tol: f64, json: Option<&Path>) -> Result<i32, Failure> {
    let fr_in = load(input, framing)?;
    let (f, df) = (&fr_in.framed, &fr_in.field);
    let mode = fr_in.mode();
    let fr = frenet(f, df, mode).during("frenet")?;

    let osc = classify_osculating(f, df, tol);
    let (kind, apex) = match osc.kind {
        Osculating::Cone { apex } => ("cone", Some(apex.to_array())),
        Osculating::Cylinder => ("cylinder", None),
        Osculating::General => ("general", None),
    };

    // The focal set needs a gauge; a closed polygon may not admit one.
    let (focal_out, focal_class) = match focal_data(f, df, &fr, Gauge::new(fr.tau.first, 0.0)) {
        Ok(fd) => {
            let class = match classify_focal(df, &fd, tol) {
                Focal::SingleLine { .. } => "single-line".to_string(),
                Focal::General => "general".to_string(),
            };
            let out = FocalOut {
                gauge_anchor: fd.gauge.anchor_index,
                mu_spread: relative_spread(&fd.mu.values),
                mu_residual_max: max_abs(&fd.mu_residual.values),
                q_residual_max: max_abs(&fd.q_residual.values),
                mu: (&fd.mu).into(),
            };
            (Some(out), class)
        }
        Err(e) => {
            log::warn!("focal set unavailable: {e}");
            (None, format!("unavailable ({e})"))
        }
    };

    let rho_scale = max_abs(&fr.rho2.values).max(1.0);
    let planar = max_abs(&fr.tau.values) <= tol * rho_scale;

    let report = Report {
        vertices: f.len(),
        closed: f.is_closed(),
        framing: if fr_in.origin.is_some() { "silhouette" } else { "framed" },
        origin: fr_in.origin.map(|o| o.to_array()),
        volumes: Volumes {
            c: fr_in.volumes.c_hat,
            spread: fr_in.volumes.spread,
            values: (&fr_in.volumes.volumes).into(),
        },
        sigma: df.sigma.values().to_vec(),
        holonomy: df.holonomy,
        frenet: FrenetOut {
            mode: format!("{mode:?}").to_lowercase(),
            rho1: (&fr.rho1).into(),
            rho2: (&fr.rho2).into(),
            tau: (&fr.tau).into(),
            compatibility: (&fr.compatibility_residuals(df)).into(),
            tau_consistency: (&fr.tau_consistency()).into(),
        },
        focal: focal_out,
        classification: Classification {
            osculating: kind,
            quality: osc.quality,
            apex,
            focal: focal_class.clone(),
            planar,
        },
    };

    println!("vertices: {}", report.vertices);
    println!("volume: {:.12e}", report.volumes.c);
    println!("volume spread: {}", short(report.volumes.spread));
    println!("frenet mode: {}", report.frenet.mode);
    println!(
        "compatibility residual: {}",
        short(max_abs(&report.frenet.compatibility.values))
    );
    if let Some(fo) = &report.focal {
        println!("mu spread: {}", short(fo.mu_spread));
    }
    println!("classification: {kind}, quality {}", short(osc.quality));
    println!("focal: {focal_class}");
    println!("planar: {}", if planar { "yes" } else { "no" });

    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        write_file(path, &text)?;
    }
    Ok(0)
}
