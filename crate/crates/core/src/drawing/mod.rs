//! Drawings of graphs and exact crossing counts.
//!
//! A [`StraightLineDrawing`] places vertices at exact rational coordinates;
//! its crossings are derived with exact orientation predicates. A
//! [`CombinatorialDrawing`] only records which edge pairs cross and is what
//! the biplanarizer consumes.

mod construct;
mod geometry;
mod json;

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};

pub use construct::{
    cylindrical_drawing, guy_number, zarankiewicz_drawing, zarankiewicz_number, CYLINDRICAL_RANGE,
};
pub use geometry::count_crossings;
pub use json::{load_drawing_json, CombinatorialDrawingFile, DrawingFile, GeometricDrawingFile};

/// An unordered pair of distinct edges, stored smaller edge first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[Edge; 2]", into = "[Edge; 2]")]
pub struct Crossing(Edge, Edge);

impl Crossing {
    pub fn new(a: Edge, b: Edge) -> Self {
        if a <= b {
            Crossing(a, b)
        } else {
            Crossing(b, a)
        }
    }

    pub fn edges(&self) -> (Edge, Edge) {
        (self.0, self.1)
    }

    pub fn involves(&self, e: &Edge) -> bool {
        self.0 == *e || self.1 == *e
    }

    /// The other edge of the pair, if `e` is one of them.
    pub fn partner(&self, e: &Edge) -> Option<Edge> {
        if self.0 == *e {
            Some(self.1)
        } else if self.1 == *e {
            Some(self.0)
        } else {
            None
        }
    }
}

impl From<[Edge; 2]> for Crossing {
    fn from([a, b]: [Edge; 2]) -> Self {
        Crossing::new(a, b)
    }
}

impl From<Crossing> for [Edge; 2] {
    fn from(c: Crossing) -> Self {
        [c.0, c.1]
    }
}

/// A graph together with the set of edge pairs that cross in some drawing.
///
/// Geometric realizability is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialDrawing {
    pub graph: Graph,
    pub crossings: Vec<Crossing>,
}

impl CombinatorialDrawing {
    pub fn new(graph: Graph, crossings: Vec<Crossing>) -> Self {
        CombinatorialDrawing { graph, crossings }
    }

    pub fn crossing_free(graph: Graph) -> Self {
        CombinatorialDrawing {
            graph,
            crossings: Vec::new(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Diagnoses the first violated invariant, if any.
    pub fn check(&self) -> Result<(), String> {
        let mut seen = BTreeSet::new();
        for c in &self.crossings {
            let (a, b) = c.edges();
            for e in [a, b] {
                if !self.graph.contains_edge(&e) {
                    return Err(format!("crossing references missing edge {e}"));
                }
            }
            if a == b {
                return Err(format!("edge {a} crosses itself"));
            }
            if a.shares_endpoint(&b) {
                return Err(format!("adjacent edges {a} and {b} cross"));
            }
            if !seen.insert(*c) {
                return Err(format!("pair {a} x {b} listed twice"));
            }
        }
        Ok(())
    }
}

/// True iff every crossing pair references two existing, non-adjacent edges
/// and no pair is listed twice.
pub fn validate_drawing(d: &CombinatorialDrawing) -> bool {
    d.check().is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }
}

/// A straight-line drawing with one exact rational position per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraightLineDrawing {
    pub graph: Graph,
    pub coords: Vec<Point>,
}

impl StraightLineDrawing {
    pub fn new(graph: Graph, coords: Vec<Point>) -> crate::Result<Self> {
        if coords.len() != graph.vertex_count() {
            return Err(crate::Error::InvalidDrawing(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.vertex_count()
            )));
        }
        Ok(StraightLineDrawing { graph, coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn adjacent_pair_is_invalid() {
        let g = complete(4);
        let d = CombinatorialDrawing::new(g, vec![Crossing::new(Edge::new(0, 1), Edge::new(1, 2))]);
        assert!(!validate_drawing(&d));
    }

    #[test]
    fn empty_crossing_set_is_valid() {
        assert!(validate_drawing(&CombinatorialDrawing::crossing_free(
            complete(6)
        )));
    }

    #[test]
    fn duplicates_and_missing_edges_are_invalid() {
        let g = complete(4);
        let c = Crossing::new(Edge::new(0, 2), Edge::new(1, 3));
        let dup = CombinatorialDrawing::new(
            g.clone(),
            vec![c, Crossing::new(Edge::new(1, 3), Edge::new(0, 2))],
        );
        assert!(!validate_drawing(&dup));
        let mut h = g.clone();
        h.remove_edge(&Edge::new(0, 2));
        assert!(!validate_drawing(&CombinatorialDrawing::new(h, vec![c])));
        assert!(validate_drawing(&CombinatorialDrawing::new(g, vec![c])));
    }

    #[test]
    fn crossing_is_unordered() {
        let a = Edge::new(0, 2);
        let b = Edge::new(1, 3);
        assert_eq!(Crossing::new(a, b), Crossing::new(b, a));
        assert_eq!(Crossing::new(b, a).partner(&a), Some(b));
        assert_eq!(
            serde_json::to_string(&Crossing::new(b, a)).unwrap(),
            "[[0,2],[1,3]]"
        );
    }
}
