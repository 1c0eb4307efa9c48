// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Discrete affine invariants of polygons in 3-space.
//!
//! A polygon framed on a quad-faced polyhedron carries a parallel Darboux
//! field ([`darboux`]). When its volumes are constant ([`equal_volume`]) it
//! has discrete Frenet coefficients, a focal set and, for planar curves seen
//! through their centro-affine lift, projective lengths ([`invariants`],
//! [`projective`]). [`constructions`] builds the fixtures that realize the
//! special cases.

pub mod constructions;
pub mod darboux;
pub mod equal_volume;
pub mod error;
pub mod geom;
pub mod invariants;
pub mod mesh;
pub mod polygon;
pub mod projective;
pub mod seq;

pub use darboux::{
    classify_osculating, osculating_developable, osculating_points, parallel_darboux,
    validate_frame, DarbouxField, FrameReport, FramedPolygon, Osculating, OsculatingClass,
    OsculatingPoint,
};
pub use error::{Error, Result};
pub use geom::{det2, det3, signed_cbrt, Vec2, Vec3};
pub use mesh::Mesh;
pub use polygon::{Polygon2, Polygon3};
pub use seq::{median, relative_spread, Grid, GridSeq, Span, Topology};
pub use equal_volume::{
    centroaffine_volumes, darboux_volumes, face_defects, is_equal_volume, resample_equal_volume,
    space_volumes, PolylinePosition, Resampled, Termination, VolumeReport,
};
pub use invariants::{
    centroaffine_frenet, centroaffine_frenet_fast, classify_focal, focal_data, focal_set_mesh,
    frenet, lambda_from_tau, mu_prime_check, planar_reduction, Focal, FocalSetData, FrenetData,
    Gauge, Line, Mode, PlanarReduction,
};
pub use constructions::{
    area_lift, centroaffine_from_frenet, equal_area_from_curvature, framed_from_frenet,
    recover_base_point, regular_equal_area, sample_curve, sample_plane_curve, silhouette_lift,
    support_function, Curve, PlanarEqualAreaPolygon, SampleGrid,
};
pub use projective::{
    b_sequence, lift_representative, projective_lengths, table1_experiment, Lift, Seed,
    Table1Row, Window,
};
