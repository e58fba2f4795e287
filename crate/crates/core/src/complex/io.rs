//! Serializable mirror of complexes and decorations.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CellId, Complex, Decoration};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellEntry {
    pub id: CellId,
    pub dim: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub id: CellId,
    pub tail: CellId,
    pub head: CellId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub id: CellId,
    pub circuit: Vec<CellId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecorationFile {
    pub north: CellId,
    pub south: CellId,
    pub meridian_ew: Vec<CellId>,
    pub meridian_we: Vec<CellId>,
    pub west: Vec<CellId>,
    pub east: Vec<CellId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub cells: Vec<CellEntry>,
    #[serde(default)]
    pub edges: Vec<EdgeEntry>,
    #[serde(default)]
    pub faces: Vec<FaceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ball: Option<CellId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoration: Option<DecorationFile>,
}

impl ComplexFile {
    pub fn from_parts(c: &Complex, d: Option<&Decoration>) -> ComplexFile {
        ComplexFile {
            cells: c.cells().map(|(id, dim)| CellEntry { id, dim }).collect(),
            edges: c
                .edges()
                .map(|(id, (tail, head))| EdgeEntry { id, tail, head })
                .collect(),
            faces: c
                .faces()
                .map(|(id, circ)| FaceEntry {
                    id,
                    circuit: circ.to_vec(),
                })
                .collect(),
            ball: c.ball(),
            decoration: d.map(|d| DecorationFile {
                north: d.north,
                south: d.south,
                meridian_ew: d.meridian_ew.clone(),
                meridian_we: d.meridian_we.clone(),
                west: d.west.iter().copied().collect(),
                east: d.east.iter().copied().collect(),
            }),
        }
    }

    pub fn into_parts(self) -> Result<(Complex, Option<Decoration>)> {
        let mut c = Complex::new();
        let mut seen = BTreeSet::new();
        for cell in &self.cells {
            if !seen.insert(cell.id) {
                return Err(Error::Parse(format!("duplicate cell id {}", cell.id)));
            }
            if cell.dim > 3 {
                return Err(Error::Parse(format!(
                    "cell {} has dimension {}",
                    cell.id, cell.dim
                )));
            }
            c.cells.insert(cell.id, cell.dim);
        }
        for e in self.edges {
            if c.cells.get(&e.id) != Some(&1) {
                return Err(Error::Parse(format!(
                    "edge {} is not declared as a 1-cell",
                    e.id
                )));
            }
            c.edges.insert(e.id, (e.tail, e.head));
        }
        for f in self.faces {
            if c.cells.get(&f.id) != Some(&2) {
                return Err(Error::Parse(format!(
                    "face {} is not declared as a 2-cell",
                    f.id
                )));
            }
            c.faces.insert(f.id, f.circuit);
        }
        if let Some(b) = self.ball {
            if c.cells.get(&b) != Some(&3) {
                return Err(Error::Parse(format!(
                    "ball {b} is not declared as a 3-cell"
                )));
            }
            c.ball = Some(b);
        }
        let d = self.decoration.map(|d| Decoration {
            north: d.north,
            south: d.south,
            meridian_ew: d.meridian_ew,
            meridian_we: d.meridian_we,
            west: d.west.into_iter().collect(),
            east: d.east.into_iter().collect(),
        });
        if let Some(d) = &d {
            let ids = [d.north, d.south]
                .into_iter()
                .chain(d.meridian_ew.iter().copied())
                .chain(d.meridian_we.iter().copied());
            for id in ids
                .chain(d.west.iter().copied())
                .chain(d.east.iter().copied())
            {
                if !c.contains(id) {
                    return Err(Error::UnknownId(id));
                }
            }
        }
        Ok((c, d))
    }
}
