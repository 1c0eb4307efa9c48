// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use crate::seq::Grid;

/// Errors raised by the geometric operations in this crate.
///
/// Indices are zero-based storage slots. Side slot `k` is the side joining
/// vertex slots `k` and `k + 1`.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("need at least {needed} entries, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("non-finite coordinate at index {index}")]
    NonFinite { index: usize },
    #[error("vertex {index} repeats its predecessor")]
    RepeatedVertex { index: usize },
    #[error("expected a sequence on the {expected:?} grid, found {found:?}")]
    WrongGrid { expected: Grid, found: Grid },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("direction at vertex {index} is zero")]
    ZeroDirection { index: usize },
    #[error("face of side {side} is not planar (relative residual {residual:.3e})")]
    NonPlanarFace { side: usize, residual: f64 },
    #[error("direction at vertex {vertex} is not transversal to the polygon (margin {margin:.3e})")]
    NotTransversal { vertex: usize, margin: f64 },
    #[error("side {side} is parallel to the direction at its far end; the Darboux recursion is singular")]
    DegenerateFrame { side: usize },
    #[error("polygon is not equal-volume (relative spread {spread:.3e}); resample it or use least-squares mode")]
    NotEqualVolume { spread: f64 },
    #[error("face basis of side {side} is degenerate")]
    DegenerateFace { side: usize },
    #[error("closed polygon has no global gauge: tau sums to {sum:.6e}")]
    GaugeObstruction { sum: f64 },
    #[error("anchor index {index} is outside the available range")]
    AnchorOutOfRange { index: usize },
    #[error("b({vertex}) = {b:.6e} is not positive: the polygon has an inflection and b(i) > 0 is required")]
    Inflection { vertex: usize, b: f64 },
    #[error("lift recursion left the floating-point range at vertex {index}")]
    RecursionOverflow { index: usize },
    #[error("polygon is not planar (deviation {deviation:.3e})")]
    NotPlanar { deviation: f64 },
    #[error("planar polygon is not equal-area (relative spread {spread:.3e})")]
    NotEqualArea { spread: f64 },
    #[error("the two support-function expressions disagree at vertex {vertex}")]
    InconsistentSupport { vertex: usize },
    #[error("field is not a silhouette field (sigma is not constant)")]
    NotSilhouette,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
