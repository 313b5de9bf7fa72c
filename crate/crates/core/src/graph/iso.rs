//! Isomorphism and orderly enumeration for small graphs.
//!
//! The canonical code of a graph on at most 8 vertices is the minimum, over
//! all vertex orderings, of the upper-triangle adjacency bit-string read
//! column by column (bit `(i, j)` for `i < j`, `j` outer). Earlier bits are
//! more significant, so the minimum string is the minimum integer. The
//! search is branch-and-bound over partial orderings; it is exact, not an
//! invariant-based approximation.

use std::collections::BTreeSet;

use super::{Edge, Graph};
use crate::error::{Error, Result};

pub const ISOMORPHISM_VERTEX_LIMIT: usize = 12;
pub const CANONICAL_VERTEX_LIMIT: usize = 8;
pub const ENUMERATION_VERTEX_LIMIT: usize = 8;

/// Decides isomorphism for graphs with at most 12 vertices by backtracking
/// over degree-compatible vertex maps.
pub fn is_isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.vertex_count() > ISOMORPHISM_VERTEX_LIMIT {
            return Err(Error::SizeLimit {
                what: "vertex count",
                actual: g.vertex_count(),
                limit: ISOMORPHISM_VERTEX_LIMIT,
            });
        }
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let deg1 = g1.degrees();
    let deg2 = g2.degrees();
    let mut sorted1 = deg1.clone();
    let mut sorted2 = deg2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(false);
    }

    let adj1 = masks(g1);
    let adj2 = masks(g2);
    // Map high-degree vertices first; they constrain the most.
    let mut order: Vec<usize> = (0..g1.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg1[v]), v));

    let mut image = vec![usize::MAX; g1.vertex_count()];
    let mut used = 0u16;
    Ok(extend_map(
        0, &order, &deg1, &deg2, &adj1, &adj2, &mut image, &mut used,
    ))
}

#[allow(clippy::too_many_arguments)]
fn extend_map(
    depth: usize,
    order: &[usize],
    deg1: &[usize],
    deg2: &[usize],
    adj1: &[u16],
    adj2: &[u16],
    image: &mut [usize],
    used: &mut u16,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..deg2.len() {
        if *used & (1 << w) != 0 || deg2[w] != deg1[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| {
            let a = adj1[v] & (1 << x) != 0;
            let b = adj2[w] & (1 << image[x]) != 0;
            a == b
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend_map(depth + 1, order, deg1, deg2, adj1, adj2, image, used) {
            return true;
        }
        *used &= !(1 << w);
        image[v] = usize::MAX;
    }
    false
}

fn masks(g: &Graph) -> Vec<u16> {
    let mut m = vec![0u16; g.vertex_count()];
    for e in g.edges() {
        m[e.u()] |= 1 << e.v();
        m[e.v()] |= 1 << e.u();
    }
    m
}

/// Canonical code of a graph with at most 8 vertices. Two graphs with the
/// same vertex count are isomorphic iff their codes are equal.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > CANONICAL_VERTEX_LIMIT {
        return Err(Error::SizeLimit {
            what: "vertex count",
            actual: n,
            limit: CANONICAL_VERTEX_LIMIT,
        });
    }
    let adj: Vec<u8> = masks(g).into_iter().map(|m| m as u8).collect();
    Ok(canonical_from_masks(&adj))
}

fn canonical_from_masks(adj: &[u8]) -> u64 {
    let n = adj.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut search = CanonSearch {
        adj,
        total,
        best: u64::MAX,
        perm: [0; CANONICAL_VERTEX_LIMIT],
    };
    search.descend(0, 0, 0, 0);
    if search.best == u64::MAX {
        0
    } else {
        search.best
    }
}

struct CanonSearch<'a> {
    adj: &'a [u8],
    total: usize,
    best: u64,
    perm: [usize; CANONICAL_VERTEX_LIMIT],
}

impl CanonSearch<'_> {
    fn descend(&mut self, pos: usize, used: u8, prefix: u64, len: usize) {
        let n = self.adj.len();
        if pos == n {
            self.best = self.best.min(prefix);
            return;
        }
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            let mut next = prefix;
            for &placed in &self.perm[..pos] {
                next = (next << 1) | u64::from(self.adj[placed] >> v & 1);
            }
            let next_len = len + pos;
            if self.best != u64::MAX && next > self.best >> (self.total - next_len) {
                continue;
            }
            self.perm[pos] = v;
            self.descend(pos + 1, used | (1 << v), next, next_len);
        }
    }
}

fn decode(code: u64, n: usize) -> Vec<u8> {
    let total = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u8; n];
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn graph_from_masks(adj: &[u8]) -> Graph {
    let mut edges = BTreeSet::new();
    for (u, &m) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if m >> v & 1 == 1 {
                edges.insert(Edge::new(u, v));
            }
        }
    }
    Graph::from_edge_set(adj.len(), edges)
}

/// Streams one representative of every isomorphism class of graphs with at
/// most `max_vertices` vertices, at most `max_edges` edges, and minimum
/// degree at least 1. Classes are produced by increasing edge count, then by
/// canonical code; each representative carries no isolated vertices.
pub fn enumerate_graphs(max_vertices: usize, max_edges: usize) -> Result<GraphEnumeration> {
    if max_vertices > ENUMERATION_VERTEX_LIMIT {
        return Err(Error::SizeLimit {
            what: "max_vertices",
            actual: max_vertices,
            limit: ENUMERATION_VERTEX_LIMIT,
        });
    }
    Ok(GraphEnumeration {
        n: max_vertices,
        max_edges,
        edges: 0,
        level: vec![0],
        cursor: 1,
    })
}

/// Level-by-level orderly generation: every graph on `n` vertices with
/// `e + 1` edges arises from one with `e` edges by adding an edge, so each
/// level is the canonical closure of the previous one. Graphs with fewer
/// non-isolated vertices are represented padded to `n` vertices.
#[derive(Debug, Clone)]
pub struct GraphEnumeration {
    n: usize,
    max_edges: usize,
    edges: usize,
    level: Vec<u64>,
    cursor: usize,
}

impl GraphEnumeration {
    fn advance_level(&mut self) -> bool {
        if self.edges >= self.max_edges || self.level.is_empty() {
            return false;
        }
        let n = self.n;
        let mut next = BTreeSet::new();
        for &code in &self.level {
            let adj = decode(code, n);
            for u in 0..n {
                for v in u + 1..n {
                    if adj[u] >> v & 1 == 1 {
                        continue;
                    }
                    let mut child = adj.clone();
                    child[u] |= 1 << v;
                    child[v] |= 1 << u;
                    next.insert(canonical_from_masks(&child));
                }
            }
        }
        self.level = next.into_iter().collect();
        self.edges += 1;
        self.cursor = 0;
        !self.level.is_empty()
    }
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.cursor >= self.level.len() {
            if !self.advance_level() {
                return None;
            }
        }
        let code = self.level[self.cursor];
        self.cursor += 1;
        let padded = graph_from_masks(&decode(code, self.n));
        Some(padded.edge_induced().0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(
            g.vertex_count(),
            g.edges().map(|e| (perm[e.u()], perm[e.v()])),
        )
        .unwrap()
    }

    #[test]
    fn relabeled_k33_is_isomorphic() {
        let k = complete_bipartite(3, 3);
        let h = relabel(&k, &[4, 0, 2, 5, 1, 3]);
        assert!(is_isomorphic_small(&k, &h).unwrap());
    }

    #[test]
    fn k5_vs_k33_plus_edge() {
        let mut k33e = complete_bipartite(3, 3);
        k33e = Graph::from_edges(6, k33e.edges().map(|e| e.endpoints()).chain([(0, 1)])).unwrap();
        assert!(!is_isomorphic_small(&complete(5), &k33e).unwrap());
    }

    #[test]
    fn hexagon_vs_two_triangles() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic_small(&cycle(6), &two).unwrap());
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(matches!(
            is_isomorphic_small(&complete(13), &complete(13)),
            Err(Error::SizeLimit { .. })
        ));
        assert!(canonical_code(&complete(9)).is_err());
        assert!(enumerate_graphs(9, 3).is_err());
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (5, 6)]).unwrap();
        let h = relabel(&g, &[6, 2, 4, 0, 1, 3, 5]);
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        let p = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6)]).unwrap();
        assert_ne!(canonical_code(&g).unwrap(), canonical_code(&p).unwrap());
    }

    #[test]
    fn decode_inverts_canonical_code() {
        let g = complete_bipartite(3, 4);
        let code = canonical_code(&g).unwrap();
        let back = graph_from_masks(&decode(code, 7));
        assert!(is_isomorphic_small(&g, &back).unwrap());
    }

    #[test]
    fn tiny_enumerations() {
        let one: Vec<_> = enumerate_graphs(2, 1).unwrap().collect();
        assert_eq!(one, vec![complete(2)]);
        let three: Vec<_> = enumerate_graphs(3, 3).unwrap().collect();
        assert_eq!(three.len(), 3);
        assert_eq!(enumerate_graphs(0, 5).unwrap().count(), 0);
        assert_eq!(enumerate_graphs(1, 5).unwrap().count(), 0);
    }
}
