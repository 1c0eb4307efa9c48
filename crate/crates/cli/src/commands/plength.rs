// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use eqvol::{b_sequence, lift_representative, projective_lengths, Mode, Seed, Window};
use serde::Serialize;

use super::Series;
use crate::document::{write_file, PolygonDocument};
use crate::failure::{Context, Failure};

#[derive(Serialize)]
struct Normalization {
    seed: &'static str,
    a1: f64,
    a2: f64,
    c: f64,
}

#[derive(Serialize)]
struct Report {
    pl1: f64,
    pl2: f64,
    window: &'static str,
    /// Inclusive side ranges of the two sums.
    summation: [(usize, usize); 2],
    terms1: Series<f64>,
    terms2: Series<f64>,
    normalization: Normalization,
    b: Series<f64>,
}

pub fn run(input: &Path, seed: Seed, window: Window, report: Option<&Path>) -> Result<i32, Failure> {
    let doc = PolygonDocument::read(input)?;
    let poly = doc.polygon2()?;
    let b = b_sequence(&poly).during("b_sequence")?;
    let lift = lift_representative(&poly, seed).during("lift_representative")?;
    let r = projective_lengths(&lift.polygon, Mode::Exact, window).during("projective_lengths")?;
    let n = lift.normalization;
    let out = Report {
        pl1: r.pl1,
        pl2: r.pl2,
        window: match window {
            Window::Table => "table",
            Window::Maximal => "maximal",
        },
        summation: r.summation_ranges(),
        terms1: (&r.terms1).into(),
        terms2: (&r.terms2).into(),
        normalization: Normalization {
            seed: match n.seed {
                Seed::Explicit { .. } => "explicit",
                Seed::Default => "default",
                Seed::Smooth => "smooth",
            },
            a1: n.a1,
            a2: n.a2,
            c: n.c,
        },
        b: (&b).into(),
    };
    println!("pl1: {}", out.pl1);
    println!("pl2: {}", out.pl2);
    if let Some(path) = report {
        let text = serde_json::to_string_pretty(&out).expect("report serializes") + "\n";
        write_file(path, &text)?;
    }
    Ok(0)
}
