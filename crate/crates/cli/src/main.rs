// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! `eqvol`: affine invariants of equal-volume polygons from the command line.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 numeric degeneracy.
//! Set `EQVOL_LOG` (`error`, `warn`, `info`, `debug`) to change how much
//! is reported on stderr.

mod commands;
mod document;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eqvol::Vec3;

use crate::failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "eqvol", version, about = "Affine invariants of equal-volume polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// How a plain polygon gets its Darboux directions.
#[derive(Args, Debug, Clone)]
pub struct FramingArgs {
    /// Frame by the rays from this point: x,y,z.
    #[arg(long, value_parser = parse_point, conflicts_with = "framed")]
    pub origin: Option<Vec3>,
    /// Use the directions stored in a framed3 document.
    #[arg(long)]
    pub framed: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Volumes, Frenet coefficients, focal data and classification.
    Analyze {
        input: PathBuf,
        #[command(flatten)]
        framing: FramingArgs,
        /// Relative tolerance for the cone, single-line and planar tests.
        #[arg(long, default_value_t = eqvol::darboux::DEFAULT_CLASSIFY_TOL)]
        tol: f64,
        /// Write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rebuild a framed polygon as an equal-volume one.
    Resample {
        input: PathBuf,
        #[command(flatten)]
        framing: FramingArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Projective lengths of a convex plane polygon.
    Plength {
        input: PathBuf,
        #[arg(long, requires_all = ["a2", "c"], conflicts_with = "auto_seed")]
        a1: Option<f64>,
        #[arg(long, requires_all = ["a1", "c"])]
        a2: Option<f64>,
        #[arg(long, requires_all = ["a1", "a2"])]
        c: Option<f64>,
        /// Pick a(0), a(1) so that log a is as smooth as possible.
        #[arg(long)]
        auto_seed: bool,
        /// Sum over every side where each term exists.
        #[arg(long)]
        maximal_window: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Export the discrete affine focal set as OBJ.
    Focal {
        input: PathBuf,
        #[command(flatten)]
        framing: FramingArgs,
        #[arg(long)]
        obj: PathBuf,
        /// Reach of the faces beyond O and Q (default: twice the diameter).
        #[arg(long)]
        extent: Option<f64>,
    },
    /// Export the osculating developable as OBJ.
    Developable {
        input: PathBuf,
        #[command(flatten)]
        framing: FramingArgs,
        #[arg(long)]
        obj: PathBuf,
        #[arg(long)]
        extent: Option<f64>,
    },
    /// Projective lengths of the sampled example spiral.
    Table1 {
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 100, 1000])]
        sizes: Vec<usize>,
        /// Write the table here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_point(s: &str) -> Result<Vec3, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [x, y, z] if v.iter().all(|c| c.is_finite()) => Ok(Vec3::new(x, y, z)),
        _ => Err(format!("expected three finite numbers x,y,z, got {s:?}")),
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Analyze {
            input,
            framing,
            tol,
            json,
        } => commands::analyze::run(&input, &framing, tol, json.as_deref()),
        Command::Resample {
            input,
            framing,
            out,
        } => commands::resample::run(&input, &framing, &out),
        Command::Plength {
            input,
            a1,
            a2,
            c,
            auto_seed,
            maximal_window,
            report,
        } => {
            let seed = match (a1, a2, c) {
                (Some(a1), Some(a2), Some(c)) => eqvol::Seed::Explicit { a1, a2, c },
                _ if auto_seed => eqvol::Seed::Smooth,
                _ => eqvol::Seed::Default,
            };
            let window = if maximal_window {
                eqvol::Window::Maximal
            } else {
                eqvol::Window::Table
            };
            commands::plength::run(&input, seed, window, report.as_deref())
        }
        Command::Focal {
            input,
            framing,
            obj,
            extent,
        } => commands::meshes::focal(&input, &framing, &obj, extent),
        Command::Developable {
            input,
            framing,
            obj,
            extent,
        } => commands::meshes::developable(&input, &framing, &obj, extent),
        Command::Table1 { sizes, csv } => commands::table1::run(&sizes, csv.as_deref()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("EQVOL_LOG", "warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code() as u8)
        }
    }
}
