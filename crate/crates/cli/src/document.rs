// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! The polygon interchange document (JSON) and bare CSV vertex lists.

use std::fs;
use std::path::Path;

use eqvol::{FramedPolygon, Grid, Polygon2, Polygon3, Topology, Vec2, Vec3};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::failure::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Polygon3,
    Polygon2,
    Framed3,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridName {
    #[default]
    Vertex,
    Side,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonDocument {
    pub kind: Kind,
    #[serde(default)]
    pub closed: bool,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directions: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub grid: GridName,
    #[serde(default)]
    pub metadata: Map<String, Value>,
}

fn arity(kind: Kind) -> usize {
    match kind {
        Kind::Polygon2 => 2,
        Kind::Polygon3 | Kind::Framed3 => 3,
    }
}

impl PolygonDocument {
    pub fn check(&self) -> Result<(), Failure> {
        if self.vertices.is_empty() {
            return Err(Failure::input("document has no vertices"));
        }
        let n = arity(self.kind);
        if let Some(i) = self.vertices.iter().position(|v| v.len() != n) {
            return Err(Failure::input(format!(
                "vertex {i} has {} coordinates, {:?} needs {n}",
                self.vertices[i].len(),
                self.kind
            )));
        }
        match (&self.directions, self.kind) {
            (Some(d), Kind::Framed3) => {
                if d.len() != self.vertices.len() {
                    return Err(Failure::input(format!(
                        "{} directions for {} vertices",
                        d.len(),
                        self.vertices.len()
                    )));
                }
                if let Some(i) = d.iter().position(|v| v.len() != 3) {
                    return Err(Failure::input(format!("direction {i} needs 3 coordinates")));
                }
            }
            (None, Kind::Framed3) => return Err(Failure::input("framed3 document has no directions")),
            (Some(_), _) => return Err(Failure::input("only framed3 documents carry directions")),
            (None, _) => {}
        }
        Ok(())
    }

    pub fn topology(&self) -> Topology {
        if self.closed {
            Topology::Closed
        } else {
            Topology::Open
        }
    }

    fn points3(v: &[Vec<f64>]) -> Vec<Vec3> {
        v.iter().map(|c| Vec3::new(c[0], c[1], c[2])).collect()
    }

    /// The vertices as a space polygon; plane polygons sit at height 1.
    pub fn polygon3(&self) -> Result<Polygon3, Failure> {
        let grid = match self.grid {
            GridName::Vertex => Grid::Vertex,
            GridName::Side => Grid::Side,
        };
        let pts = match self.kind {
            Kind::Polygon2 => self
                .vertices
                .iter()
                .map(|c| Vec3::new(c[0], c[1], 1.0))
                .collect(),
            _ => Self::points3(&self.vertices),
        };
        Ok(Polygon3::on_grid(pts, self.topology(), grid)?)
    }

    pub fn polygon2(&self) -> Result<Polygon2, Failure> {
        if self.kind != Kind::Polygon2 {
            return Err(Failure::input(format!(
                "expected a polygon2 document, got {:?}",
                self.kind
            )));
        }
        let pts = self.vertices.iter().map(|c| Vec2::new(c[0], c[1])).collect();
        Ok(Polygon2::new(pts, self.topology())?)
    }

    pub fn framed(&self) -> Result<FramedPolygon, Failure> {
        let Some(d) = &self.directions else {
            return Err(Failure::input(format!(
                "expected a framed3 document, got {:?}",
                self.kind
            )));
        };
        Ok(FramedPolygon::new(self.polygon3()?, Self::points3(d))?)
    }

    pub fn from_framed(f: &FramedPolygon) -> Self {
        PolygonDocument {
            kind: Kind::Framed3,
            closed: f.is_closed(),
            vertices: f.polygon().vertices().iter().map(|v| v.to_array().to_vec()).collect(),
            directions: Some(f.directions().iter().map(|v| v.to_array().to_vec()).collect()),
            grid: GridName::Vertex,
            metadata: Map::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, Failure> {
        let doc: PolygonDocument = serde_json::from_str(text)
            .map_err(|e| Failure::input(format!("malformed document: {e}")))?;
        doc.check()?;
        Ok(doc)
    }

    /// One vertex per record, two or three columns, no header. Lines
    /// starting with `#` are skipped.
    pub fn from_csv(text: &str) -> Result<Self, Failure> {
        let mut rd = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut vertices = Vec::new();
        for (i, rec) in rd.records().enumerate() {
            let rec = rec.map_err(|e| Failure::input(format!("malformed CSV: {e}")))?;
            let row = rec
                .iter()
                .map(|f| f.parse::<f64>())
                .collect::<Result<Vec<f64>, _>>()
                .map_err(|e| Failure::input(format!("CSV record {i}: {e}")))?;
            vertices.push(row);
        }
        let kind = match vertices.first().map(Vec::len) {
            Some(2) => Kind::Polygon2,
            Some(3) => Kind::Polygon3,
            Some(k) => return Err(Failure::input(format!("CSV rows need 2 or 3 columns, got {k}"))),
            None => return Err(Failure::input("CSV file has no vertices")),
        };
        let doc = PolygonDocument {
            kind,
            closed: false,
            vertices,
            directions: None,
            grid: GridName::Vertex,
            metadata: Map::new(),
        };
        doc.check()?;
        Ok(doc)
    }

    pub fn read(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
        let csv = path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        if csv {
            Self::from_csv(&text)
        } else {
            Self::from_json(&text)
        }
    }

    pub fn write(&self, path: &Path) -> Result<(), Failure> {
        write_file(path, &self.to_json())
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}
