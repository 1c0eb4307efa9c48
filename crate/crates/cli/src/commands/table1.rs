// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use eqvol::table1_experiment;

use crate::document::write_file;
use crate::failure::{Context, Failure};

/// `h` is truncated, not rounded, to five decimals.
fn truncated(h: f64) -> String {
    format!("{:.5}", (h * 1e5).floor() / 1e5)
}

pub fn render(sizes: &[usize]) -> Result<String, Failure> {
    let rows = table1_experiment(sizes).during("table1")?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::input(format!("csv: {e}"));
    w.write_record(["N", "h", "pl1", "pl2"]).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            truncated(r.h),
            format!("{:.5}", r.pl1),
            format!("{:.5}", r.pl2),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("ascii table"))
}

pub fn run(sizes: &[usize], csv: Option<&Path>) -> Result<i32, Failure> {
    let text = render(sizes)?;
    match csv {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}
