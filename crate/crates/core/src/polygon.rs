// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::geom::{Vec2, Vec3};
use crate::seq::{Grid, GridSeq, Topology};

/// An ordered vertex list in 3-space, open or closed.
///
/// Construction rejects non-finite coordinates and repeated consecutive
/// vertices, reporting the first offending index.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon3 {
    vertices: GridSeq<Vec3>,
}

/// An ordered vertex list in the plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon2 {
    vertices: GridSeq<Vec2>,
}

fn check_vertices<T: Copy + PartialEq>(
    pts: &[T],
    topology: Topology,
    finite: impl Fn(T) -> bool,
) -> Result<()> {
    if pts.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: pts.len(),
        });
    }
    if let Some(index) = pts.iter().position(|&p| !finite(p)) {
        return Err(Error::NonFinite { index });
    }
    if let Some(k) = pts.windows(2).position(|w| w[0] == w[1]) {
        return Err(Error::RepeatedVertex { index: k + 1 });
    }
    if topology == Topology::Closed && pts[0] == pts[pts.len() - 1] {
        return Err(Error::RepeatedVertex { index: 0 });
    }
    Ok(())
}

impl Polygon3 {
    pub fn new(vertices: Vec<Vec3>, topology: Topology) -> Result<Self> {
        Self::on_grid(vertices, topology, Grid::Vertex)
    }

    pub fn open(vertices: Vec<Vec3>) -> Result<Self> {
        Self::new(vertices, Topology::Open)
    }

    pub fn closed(vertices: Vec<Vec3>) -> Result<Self> {
        Self::new(vertices, Topology::Closed)
    }

    /// A polygon whose vertices sit on the given grid. Polygons such as
    /// `Φ(i + 1/2)` whose differences form a vertex polygon live on
    /// [`Grid::Side`].
    pub fn on_grid(vertices: Vec<Vec3>, topology: Topology, grid: Grid) -> Result<Self> {
        check_vertices(&vertices, topology, Vec3::is_finite)?;
        Ok(Polygon3 {
            vertices: GridSeq::new(vertices, grid, topology),
        })
    }

    pub fn vertices(&self) -> &[Vec3] {
        self.vertices.values()
    }

    pub fn seq(&self) -> &GridSeq<Vec3> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn topology(&self) -> Topology {
        self.vertices.topology()
    }

    pub fn grid(&self) -> Grid {
        self.vertices.grid()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.is_closed()
    }

    /// Vertex at `index`, wrapping when closed.
    pub fn at(&self, index: isize) -> Option<Vec3> {
        self.vertices.get(index).copied()
    }

    /// Number of sides: `N - 1` when open, `N` when closed.
    pub fn side_count(&self) -> usize {
        match self.topology() {
            Topology::Open => self.len() - 1,
            Topology::Closed => self.len(),
        }
    }

    /// `φ'(k + 1/2) = φ(k + 1) - φ(k)`.
    pub fn side(&self, k: usize) -> Vec3 {
        let n = self.len();
        self.vertices()[(k + 1) % n] - self.vertices()[k % n]
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        diameter(self.vertices())
    }

    pub fn reversed(&self) -> Polygon3 {
        let mut v = self.vertices().to_vec();
        v.reverse();
        Polygon3 {
            vertices: GridSeq::new(v, self.grid(), self.topology()),
        }
    }

    /// Requires at least `needed` vertices.
    pub fn require(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            Err(Error::TooShort {
                needed,
                got: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

impl Polygon2 {
    pub fn new(vertices: Vec<Vec2>, topology: Topology) -> Result<Self> {
        check_vertices(&vertices, topology, Vec2::is_finite)?;
        Ok(Polygon2 {
            vertices: GridSeq::new(vertices, Grid::Vertex, topology),
        })
    }

    pub fn open(vertices: Vec<Vec2>) -> Result<Self> {
        Self::new(vertices, Topology::Open)
    }

    pub fn closed(vertices: Vec<Vec2>) -> Result<Self> {
        Self::new(vertices, Topology::Closed)
    }

    pub fn vertices(&self) -> &[Vec2] {
        self.vertices.values()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn topology(&self) -> Topology {
        self.vertices.topology()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.is_closed()
    }

    pub fn at(&self, index: isize) -> Option<Vec2> {
        self.vertices.get(index).copied()
    }

    /// The polygon placed in the plane `z = height`.
    pub fn embed(&self, height: f64) -> Polygon3 {
        Polygon3 {
            vertices: GridSeq::new(
                self.vertices()
                    .iter()
                    .map(|&p| Vec3::from_planar(p, height))
                    .collect(),
                Grid::Vertex,
                self.topology(),
            ),
        }
    }
}

pub(crate) fn diameter(pts: &[Vec3]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            d = d.max(a.distance(*b));
        }
    }
    d
}
