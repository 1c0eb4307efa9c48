// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Sequences on the integer (vertex) and half-integer (side) grids.
//!
//! A value written at the half-integer index `i + 1/2` is stored at integer
//! slot `i`. Every module in the crate uses this convention.

use std::ops::Sub;

use crate::error::{Error, Result};

/// Which lattice a sequence lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grid {
    /// Integer indices `i`, one per polygon vertex.
    Vertex,
    /// Half-integer indices `i + 1/2`, stored at slot `i`.
    Side,
}

impl Grid {
    /// The grid a difference lands on.
    pub fn dual(self) -> Grid {
        match self {
            Grid::Vertex => Grid::Side,
            Grid::Side => Grid::Vertex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Topology {
    Open,
    Closed,
}

/// A full sequence over one grid. Closed sequences use index arithmetic
/// modulo their length.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSeq<T> {
    values: Vec<T>,
    grid: Grid,
    topology: Topology,
}

impl<T> GridSeq<T> {
    pub fn new(values: Vec<T>, grid: Grid, topology: Topology) -> Self {
        GridSeq {
            values,
            grid,
            topology,
        }
    }

    pub fn vertex(values: Vec<T>, topology: Topology) -> Self {
        Self::new(values, Grid::Vertex, topology)
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.topology == Topology::Closed
    }

    /// Entry at `index`, wrapping for closed sequences.
    pub fn get(&self, index: isize) -> Option<&T> {
        let n = self.values.len() as isize;
        if n == 0 {
            return None;
        }
        match self.topology {
            Topology::Closed => Some(&self.values[index.rem_euclid(n) as usize]),
            Topology::Open => (0..n).contains(&index).then(|| &self.values[index as usize]),
        }
    }

    /// Fails unless the sequence lives on `grid`.
    pub fn expect_grid(&self, grid: Grid) -> Result<()> {
        if self.grid == grid {
            Ok(())
        } else {
            Err(Error::WrongGrid {
                expected: grid,
                found: self.grid,
            })
        }
    }
}

impl<T: Copy + Sub<Output = T>> GridSeq<T> {
    /// `f'(i + 1/2) = f(i + 1) - f(i)`. The result lives on the dual grid;
    /// an open sequence loses one entry, a closed one keeps its length.
    pub fn forward_diff(&self) -> Result<GridSeq<T>> {
        let n = self.values.len();
        if n < 2 {
            return Err(Error::TooShort { needed: 2, got: n });
        }
        let values = match self.topology {
            Topology::Open => self.values.windows(2).map(|w| w[1] - w[0]).collect(),
            Topology::Closed => (0..n)
                .map(|k| self.values[(k + 1) % n] - self.values[k])
                .collect(),
        };
        Ok(GridSeq::new(values, self.grid.dual(), self.topology))
    }

    /// Two forward differences; back on the original grid.
    pub fn second_diff(&self) -> Result<GridSeq<T>> {
        let n = self.values.len();
        if n < 3 {
            return Err(Error::TooShort { needed: 3, got: n });
        }
        self.forward_diff()?.forward_diff()
    }
}

/// A contiguous window of values on one grid, `first..first + len`.
///
/// Invariants that need several neighbours exist only on part of an open
/// polygon; a `Span` records exactly where. For closed polygons the window
/// covers every slot and lookups wrap.
#[derive(Clone, Debug, PartialEq)]
pub struct Span<T> {
    pub grid: Grid,
    pub topology: Topology,
    pub first: usize,
    pub values: Vec<T>,
}

impl<T> Span<T> {
    pub fn new(grid: Grid, topology: Topology, first: usize, values: Vec<T>) -> Self {
        Span {
            grid,
            topology,
            first,
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One past the last covered slot.
    pub fn end(&self) -> usize {
        self.first + self.values.len()
    }

    /// Value at slot `index`, or `None` outside the window. Closed spans wrap.
    pub fn get(&self, index: isize) -> Option<&T> {
        let n = self.values.len() as isize;
        if n == 0 {
            return None;
        }
        match self.topology {
            Topology::Closed => {
                Some(&self.values[(index - self.first as isize).rem_euclid(n) as usize])
            }
            Topology::Open => {
                let k = index - self.first as isize;
                (0..n).contains(&k).then(|| &self.values[k as usize])
            }
        }
    }

    pub fn at(&self, index: usize) -> Option<&T> {
        self.get(index as isize)
    }

    /// `(slot, value)` pairs in order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, v)| (self.first + k, v))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Span<U> {
        Span::new(
            self.grid,
            self.topology,
            self.first,
            self.values.iter().map(f).collect(),
        )
    }
}

/// Median of a slice (mean of the two middle values for even lengths).
pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

/// `(max - min) / median|v|`, the relative spread used to decide whether a
/// sequence is constant. Zero for an all-zero sequence, infinite when the
/// values vary around a zero median.
pub fn relative_spread(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let range = hi - lo;
    let abs: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    let scale = median(&abs);
    if range == 0.0 {
        0.0
    } else if scale > 0.0 {
        range / scale
    } else {
        f64::INFINITY
    }
}
