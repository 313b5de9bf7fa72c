//! Drawing file formats.
//!
//! Geometric: `{"n": int, "edges": [[u,v],..], "coords": [[xn,xd,yn,yd],..]}`
//! with each rational coordinate as a numerator/denominator pair.
//!
//! Combinatorial: `{"n": int, "edges": [[u,v],..], "crossings": [[[u1,v1],[u2,v2]],..]}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{count_crossings, CombinatorialDrawing, Crossing, Point, StraightLineDrawing};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometricDrawingFile {
    pub n: usize,
    pub edges: Vec<Edge>,
    pub coords: Vec<[i64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CombinatorialDrawingFile {
    pub n: usize,
    pub edges: Vec<Edge>,
    pub crossings: Vec<Crossing>,
}

/// Either drawing document; the variant is decided by which of `coords`
/// and `crossings` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DrawingFile {
    Geometric(GeometricDrawingFile),
    Combinatorial(CombinatorialDrawingFile),
}

fn graph_from(n: usize, edges: &[Edge]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().map(|e| e.endpoints()))
}

impl GeometricDrawingFile {
    pub fn to_drawing(&self) -> Result<StraightLineDrawing> {
        let graph = graph_from(self.n, &self.edges)?;
        let coords = self
            .coords
            .iter()
            .map(|&[xn, xd, yn, yd]| {
                if xd == 0 || yd == 0 {
                    return Err(Error::InvalidDrawing(
                        "zero denominator in coordinates".into(),
                    ));
                }
                Ok(Point::new(
                    BigRational::new(xn.into(), xd.into()),
                    BigRational::new(yn.into(), yd.into()),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        StraightLineDrawing::new(graph, coords)
    }
}

impl TryFrom<&StraightLineDrawing> for GeometricDrawingFile {
    type Error = Error;

    fn try_from(d: &StraightLineDrawing) -> Result<Self> {
        let small = |x: &BigInt| {
            x.to_i64().ok_or_else(|| {
                Error::InvalidDrawing(format!("coordinate component {x} exceeds 64 bits"))
            })
        };
        let coords = d
            .coords
            .iter()
            .map(|p| {
                Ok([
                    small(p.x.numer())?,
                    small(p.x.denom())?,
                    small(p.y.numer())?,
                    small(p.y.denom())?,
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeometricDrawingFile {
            n: d.graph.vertex_count(),
            edges: d.graph.edges().copied().collect(),
            coords,
        })
    }
}

impl CombinatorialDrawingFile {
    pub fn to_drawing(&self) -> Result<CombinatorialDrawing> {
        let graph = graph_from(self.n, &self.edges)?;
        Ok(CombinatorialDrawing::new(graph, self.crossings.clone()))
    }
}

impl From<&CombinatorialDrawing> for CombinatorialDrawingFile {
    fn from(d: &CombinatorialDrawing) -> Self {
        CombinatorialDrawingFile {
            n: d.graph.vertex_count(),
            edges: d.graph.edges().copied().collect(),
            crossings: d.crossings.clone(),
        }
    }
}

impl StraightLineDrawing {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&GeometricDrawingFile::try_from(
            self,
        )?)?)
    }
}

impl CombinatorialDrawing {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&CombinatorialDrawingFile::from(
            self,
        ))?)
    }
}

/// Reads either drawing format and returns its combinatorial form. A
/// geometric drawing has its crossings counted exactly.
pub fn load_drawing_json(text: &str) -> Result<CombinatorialDrawing> {
    match serde_json::from_str::<DrawingFile>(text) {
        Ok(DrawingFile::Geometric(file)) => Ok(count_crossings(&file.to_drawing()?)?.1),
        Ok(DrawingFile::Combinatorial(file)) => file.to_drawing(),
        Err(_) => {
            // re-parse loosely to report something more useful than the
            // untagged-enum message
            let value: serde_json::Value = serde_json::from_str(text)?;
            let has = |k: &str| value.get(k).is_some();
            Err(Error::InvalidDrawing(
                match (has("coords"), has("crossings")) {
                    (true, true) => "document has both coords and crossings".into(),
                    (false, false) => "document has neither coords nor crossings".into(),
                    _ => "malformed drawing document".into(),
                },
            ))
        }
    }
}
