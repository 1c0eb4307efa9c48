// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Polygonal meshes for the osculating developable and the focal set, with
//! Wavefront OBJ export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::polygon::diameter;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Vec3>,
    /// Planar faces as vertex-index loops of length ≥ 3.
    pub faces: Vec<Vec<usize>>,
    /// Polylines exported as OBJ `l` records.
    pub lines: Vec<Vec<usize>>,
}

impl Mesh {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a vertex, reusing an existing one within `weld` distance.
    pub fn push_vertex(&mut self, p: Vec3, weld: f64) -> usize {
        if weld > 0.0 {
            if let Some(i) = self.vertices.iter().position(|q| q.distance(p) <= weld) {
                return i;
            }
        }
        self.vertices.push(p);
        self.vertices.len() - 1
    }

    /// Adds a face through the given points, dropping consecutive duplicates
    /// created by welding. Returns the face index, or `None` when fewer than
    /// three distinct corners remain.
    pub fn push_face(&mut self, pts: &[Vec3], weld: f64) -> Option<usize> {
        let mut idx: Vec<usize> = Vec::with_capacity(pts.len());
        for &p in pts {
            let i = self.push_vertex(p, weld);
            if idx.last() != Some(&i) {
                idx.push(i);
            }
        }
        while idx.len() > 1 && idx.first() == idx.last() {
            idx.pop();
        }
        if idx.len() < 3 {
            return None;
        }
        self.faces.push(idx);
        Some(self.faces.len() - 1)
    }

    pub fn push_line(&mut self, pts: &[Vec3], weld: f64) {
        let idx = pts.iter().map(|&p| self.push_vertex(p, weld)).collect();
        self.lines.push(idx);
    }

    pub fn face_points(&self, f: usize) -> Vec<Vec3> {
        self.faces[f].iter().map(|&i| self.vertices[i]).collect()
    }

    /// Vector area of a face (half the sum of edge cross products).
    pub fn face_area_vector(&self, f: usize) -> Vec3 {
        let pts = self.face_points(f);
        let mut a = Vec3::ZERO;
        for k in 0..pts.len() {
            a += pts[k].cross(pts[(k + 1) % pts.len()]);
        }
        a * 0.5
    }

    /// Largest distance of a face corner from the best plane through the
    /// face (normal from the vector area, through the centroid).
    pub fn face_planarity(&self, f: usize) -> f64 {
        let pts = self.face_points(f);
        let Some(n) = self.face_area_vector(f).normalized() else {
            return 0.0;
        };
        let c = pts.iter().fold(Vec3::ZERO, |acc, &p| acc + p) / pts.len() as f64;
        pts.iter()
            .map(|&p| (p - c).dot(n).abs())
            .fold(0.0, f64::max)
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.vertices)
    }

    /// Checks index ranges and face planarity to `rel_tol · diameter`.
    pub fn validate(&self, rel_tol: f64) -> Result<()> {
        let n = self.vertices.len();
        for loops in [&self.faces, &self.lines] {
            if let Some(bad) = loops.iter().flatten().find(|&&i| i >= n) {
                return Err(Error::InvalidArgument(format!(
                    "mesh index {bad} out of range ({n} vertices)"
                )));
            }
        }
        if let Some(f) = self.faces.iter().position(|f| f.len() < 3) {
            return Err(Error::InvalidArgument(format!(
                "face {f} has fewer than three corners"
            )));
        }
        let tol = rel_tol * self.diameter().max(f64::MIN_POSITIVE);
        for f in 0..self.faces.len() {
            let dev = self.face_planarity(f);
            if dev > tol {
                return Err(Error::NotPlanar { deviation: dev });
            }
        }
        Ok(())
    }

    /// Wavefront OBJ text with `v`, `f` and `l` records (1-based indices).
    pub fn to_obj(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let _ = writeln!(s, "v {:.17e} {:.17e} {:.17e}", v.x, v.y, v.z);
        }
        for f in &self.faces {
            s.push('f');
            for i in f {
                let _ = write!(s, " {}", i + 1);
            }
            s.push('\n');
        }
        for l in &self.lines {
            s.push('l');
            for i in l {
                let _ = write!(s, " {}", i + 1);
            }
            s.push('\n');
        }
        s
    }
}
