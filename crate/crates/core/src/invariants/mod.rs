// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Discrete Frenet coefficients, the λ-gauge, the affine focal set and the
//! planar equal-area reduction.

mod focal;
mod frenet;
mod planar;

pub use focal::{
    classify_focal, focal_data, focal_set_mesh, lambda_from_tau, mu_prime_check, Focal,
    FocalSetData, Gauge, Line, MuPrimeReport,
};
pub use frenet::{
    centroaffine_frenet, centroaffine_frenet_fast, frenet, FrenetData, Mode, EXACT_SPREAD_LIMIT,
};
pub use planar::{planar_reduction, PlanarReduction, EQUAL_AREA_TOL};
