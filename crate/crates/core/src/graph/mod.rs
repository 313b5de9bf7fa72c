//! Simple undirected graphs, family generators, the edge-list text format,
//! and small-graph isomorphism / enumeration.

mod io;
mod iso;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use io::{load_graph, serialize_graph};
pub use iso::{
    canonical_code, enumerate_graphs, is_isomorphic_small, GraphEnumeration,
    CANONICAL_VERTEX_LIMIT, ENUMERATION_VERTEX_LIMIT, ISOMORPHISM_VERTEX_LIMIT,
};

/// An undirected edge, stored with its endpoints ordered so that `u < v`.
///
/// Edges are identified by this pair everywhere in the crate, never by an
/// index into an edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.has_endpoint(other.u) || self.has_endpoint(other.v)
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        Edge::try_new(a, b)
            .ok_or_else(|| serde::de::Error::custom(format!("self-loop at vertex {a}")))
    }
}

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Invariants: no self-loops, no duplicate edges, every endpoint is below
/// `vertex_count`, and a bipartition (when present) is proper.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    bipartition: Option<Vec<u8>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            bipartition: None,
        }
    }

    /// Builds a graph from endpoint pairs, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in pairs {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub(crate) fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.v < n));
        Graph {
            n,
            edges,
            bipartition: None,
        }
    }

    /// Attaches a two-coloring; every edge must join the two classes.
    pub fn with_bipartition(mut self, colors: Vec<u8>) -> Result<Self> {
        if colors.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "bipartition has {} entries for {} vertices",
                colors.len(),
                self.n
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c > 1) {
            return Err(Error::InvalidGraph(format!("color {c} is not 0 or 1")));
        }
        if let Some(e) = self.edges.iter().find(|e| colors[e.u] == colors[e.v]) {
            return Err(Error::InvalidGraph(format!(
                "edge {e} lies inside a color class"
            )));
        }
        self.bipartition = Some(colors);
        Ok(self)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let e = Edge::try_new(a, b)
            .ok_or_else(|| Error::InvalidGraph(format!("self-loop at vertex {a}")))?;
        if e.v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge {e} references a vertex outside 0..{}",
                self.n
            )));
        }
        if let Some(colors) = &self.bipartition {
            if colors[e.u] == colors[e.v] {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} lies inside a color class"
                )));
            }
        }
        if !self.edges.insert(e) {
            return Err(Error::InvalidGraph(format!("duplicate edge {e}")));
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn bipartition(&self) -> Option<&[u8]> {
        self.bipartition.as_deref()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The same vertex set restricted to `edges`; edges not in `self` are
    /// rejected.
    pub fn spanning_subgraph<'a, I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            if !self.edges.contains(e) {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} is not in the host graph"
                )));
            }
            set.insert(*e);
        }
        Ok(Graph::from_edge_set(self.n, set))
    }

    /// Drops isolated vertices and relabels the rest in increasing order.
    /// Returns the new graph and, for each new vertex, its original id.
    pub fn edge_induced(&self) -> (Graph, Vec<usize>) {
        let deg = self.degrees();
        let old_ids: Vec<usize> = (0..self.n).filter(|&v| deg[v] > 0).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(new_id[e.u], new_id[e.v]))
            .collect();
        (Graph::from_edge_set(old_ids.len(), edges), old_ids)
    }

    /// Number of vertices with at least one incident edge.
    pub fn non_isolated_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d > 0).count()
    }
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .collect();
    Graph::from_edge_set(n, edges)
}

/// The complete bipartite graph `K_{p,q}`: vertices `0..p` form one side,
/// `p..p+q` the other.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let edges = (0..p)
        .flat_map(|u| (p..p + q).map(move |v| Edge::new(u, v)))
        .collect();
    let colors = (0..p + q).map(|v| u8::from(v >= p)).collect();
    Graph::from_edge_set(p + q, edges)
        .with_bipartition(colors)
        .expect("complete bipartite coloring is proper")
}

/// The cycle `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect();
    Graph::from_edge_set(n, edges)
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|i| Edge::new(i - 1, i)).collect();
    Graph::from_edge_set(n, edges)
}

/// The `rows x cols` grid graph.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = BTreeSet::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.insert(Edge::new(id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.insert(Edge::new(id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edge_set(rows * cols, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(complete(0).edge_count(), 0);
        assert_eq!(complete(0).vertex_count(), 0);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete(25).edge_count(), 300);
        for n in 0..=100 {
            assert_eq!(complete(n).edge_count(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn complete_bipartite_counts() {
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        let k = complete_bipartite(15, 15);
        assert_eq!((k.vertex_count(), k.edge_count()), (30, 225));
        assert_eq!(complete_bipartite(0, 5).edge_count(), 0);
        for p in 0..=100 {
            for q in [0, 1, 7, 100] {
                assert_eq!(complete_bipartite(p, q).edge_count(), p * q);
            }
        }
        assert!(k.bipartition().is_some());
    }

    #[test]
    fn rejects_invalid_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let colored = Graph::from_edges(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_bipartition(vec![0, 1, 0])
            .unwrap();
        let mut g = colored.clone();
        assert!(g.add_edge(0, 2).is_err());
        assert!(Graph::from_edges(3, [(0, 2)])
            .unwrap()
            .with_bipartition(vec![0, 1, 0])
            .is_err());
    }

    #[test]
    fn edge_is_normalized() {
        let e = Edge::new(5, 2);
        assert_eq!(e.endpoints(), (2, 5));
        assert_eq!(e.other(2), Some(5));
        assert_eq!(e.other(3), None);
        assert!(Edge::try_new(4, 4).is_none());
        assert_eq!(serde_json::to_string(&e).unwrap(), "[2,5]");
        let back: Edge = serde_json::from_str("[5,2]").unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn edge_induced_drops_isolated() {
        let g = Graph::from_edges(6, [(1, 4), (4, 5)]).unwrap();
        let (h, ids) = g.edge_induced();
        assert_eq!(ids, vec![1, 4, 5]);
        assert_eq!(h.vertex_count(), 3);
        assert!(h.contains_edge(&Edge::new(0, 1)));
        assert!(h.contains_edge(&Edge::new(1, 2)));
    }

    #[test]
    fn small_families() {
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(grid(3, 3).edge_count(), 12);
    }
}
