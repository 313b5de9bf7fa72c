use serde::{Deserialize, Serialize};

use super::is_planar;
use crate::graph::{complete, complete_bipartite, is_isomorphic_small, Edge, Graph};

/// Where a graph sits among the nonplanar graphs with at most ten edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SmallNonplanarClass {
    #[serde(rename = "planar")]
    Planar,
    #[serde(rename = "K5")]
    K5,
    #[serde(rename = "K33")]
    K33,
    /// `K_{3,3}` plus one more edge anywhere: inside a side, pendant, or
    /// disjoint from the `K_{3,3}`.
    #[serde(rename = "K33-plus-edge")]
    K33PlusEdge,
    /// `K_{3,3}` with one edge subdivided once.
    #[serde(rename = "K33-subdivided")]
    K33Subdivided,
    #[serde(rename = "other-nonplanar")]
    OtherNonplanar,
}

/// Classifies the edge-induced subgraph of `g`; isolated vertices are
/// ignored.
pub fn classify_small_nonplanar(g: &Graph) -> SmallNonplanarClass {
    let (h, _) = g.edge_induced();
    if is_planar(&h) {
        return SmallNonplanarClass::Planar;
    }
    match h.edge_count() {
        9 if iso(&h, &complete_bipartite(3, 3)) => SmallNonplanarClass::K33,
        10 if iso(&h, &complete(5)) => SmallNonplanarClass::K5,
        10 if iso(&h, &subdivided_k33()) => SmallNonplanarClass::K33Subdivided,
        10 if extra_edge_over_k33(&h).is_some() => SmallNonplanarClass::K33PlusEdge,
        _ => SmallNonplanarClass::OtherNonplanar,
    }
}

/// For a graph that is `K_{3,3}` plus one edge, returns that extra edge
/// (in `g`'s labels).
pub(crate) fn extra_edge_over_k33(g: &Graph) -> Option<Edge> {
    let k33 = complete_bipartite(3, 3);
    g.edges().copied().find(|e| {
        let mut rest = g.clone();
        rest.remove_edge(e);
        let (core, _) = rest.edge_induced();
        core.vertex_count() == 6 && core.edge_count() == 9 && iso(&core, &k33)
    })
}

fn iso(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && is_isomorphic_small(a, b).unwrap_or(false)
}

fn subdivided_k33() -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    pairs.retain(|&p| p != (0, 3));
    pairs.extend([(0, 6), (6, 3)]);
    Graph::from_edges(7, pairs).expect("static graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, grid};

    fn k33_plus(extra: &[(usize, usize)], n: usize) -> Graph {
        let pairs = (0..3)
            .flat_map(|a| (3..6).map(move |b| (a, b)))
            .chain(extra.iter().copied());
        Graph::from_edges(n, pairs).unwrap()
    }

    #[test]
    fn eight_edge_graphs_are_planar() {
        assert_eq!(
            classify_small_nonplanar(&cycle(8)),
            SmallNonplanarClass::Planar
        );
        let mut k33 = complete_bipartite(3, 3);
        k33.remove_edge(&Edge::new(0, 3));
        assert_eq!(classify_small_nonplanar(&k33), SmallNonplanarClass::Planar);
        assert_eq!(
            classify_small_nonplanar(&grid(3, 3)),
            SmallNonplanarClass::Planar
        );
    }

    #[test]
    fn named_classes() {
        assert_eq!(
            classify_small_nonplanar(&complete(5)),
            SmallNonplanarClass::K5
        );
        assert_eq!(
            classify_small_nonplanar(&complete_bipartite(3, 3)),
            SmallNonplanarClass::K33
        );
        assert_eq!(
            classify_small_nonplanar(&subdivided_k33()),
            SmallNonplanarClass::K33Subdivided
        );
    }

    #[test]
    fn extra_edge_family() {
        // inside one side
        assert_eq!(
            classify_small_nonplanar(&k33_plus(&[(0, 1)], 6)),
            SmallNonplanarClass::K33PlusEdge
        );
        // pendant
        assert_eq!(
            classify_small_nonplanar(&k33_plus(&[(0, 6)], 7)),
            SmallNonplanarClass::K33PlusEdge
        );
        // vertex-disjoint
        assert_eq!(
            classify_small_nonplanar(&k33_plus(&[(6, 7)], 8)),
            SmallNonplanarClass::K33PlusEdge
        );
        assert_eq!(
            extra_edge_over_k33(&k33_plus(&[(6, 7)], 8)),
            Some(Edge::new(6, 7))
        );
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let g = k33_plus(&[], 12);
        assert_eq!(classify_small_nonplanar(&g), SmallNonplanarClass::K33);
        let shifted =
            Graph::from_edges(20, complete(5).edges().map(|e| (e.u() + 10, e.v() + 10))).unwrap();
        assert_eq!(classify_small_nonplanar(&shifted), SmallNonplanarClass::K5);
    }

    #[test]
    fn larger_nonplanar_graphs_are_other() {
        assert_eq!(
            classify_small_nonplanar(&complete(6)),
            SmallNonplanarClass::OtherNonplanar
        );
        assert_eq!(
            classify_small_nonplanar(&k33_plus(&[(0, 1), (3, 4)], 6)),
            SmallNonplanarClass::OtherNonplanar
        );
    }
}
