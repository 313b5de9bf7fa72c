use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::is_planar;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    #[serde(rename = "K5-subdivision")]
    K5Subdivision,
    #[serde(rename = "K33-subdivision")]
    K33Subdivision,
}

/// A subdivision of `K_5` or `K_{3,3}` inside a host graph.
///
/// For `K33Subdivision` the first three branch vertices form one side.
/// Each path runs from one branch vertex to another through subdivision
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: WitnessKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    pub fn edges(&self) -> BTreeSet<Edge> {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])))
            .collect()
    }

    /// Checks the witness against `host`: path edges exist, paths are
    /// internally disjoint and avoid branch vertices internally, and the
    /// paths contract to exactly the edges of `K_5` or `K_{3,3}` on the
    /// branch vertices.
    pub fn validate(&self, host: &Graph) -> Result<(), String> {
        let (branch_count, path_count) = match self.kind {
            WitnessKind::K5Subdivision => (5, 10),
            WitnessKind::K33Subdivision => (6, 9),
        };
        if self.branch_vertices.len() != branch_count {
            return Err(format!(
                "expected {branch_count} branch vertices, found {}",
                self.branch_vertices.len()
            ));
        }
        if self.paths.len() != path_count {
            return Err(format!(
                "expected {path_count} paths, found {}",
                self.paths.len()
            ));
        }
        let branch: BTreeSet<usize> = self.branch_vertices.iter().copied().collect();
        if branch.len() != branch_count {
            return Err("branch vertices repeat".into());
        }
        let mut required: BTreeSet<(usize, usize)> = BTreeSet::new();
        match self.kind {
            WitnessKind::K5Subdivision => {
                for (i, &a) in self.branch_vertices.iter().enumerate() {
                    for &b in &self.branch_vertices[i + 1..] {
                        required.insert((a.min(b), a.max(b)));
                    }
                }
            }
            WitnessKind::K33Subdivision => {
                for &a in &self.branch_vertices[..3] {
                    for &b in &self.branch_vertices[3..] {
                        required.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
        let mut interior_seen = BTreeSet::new();
        for path in &self.paths {
            if path.len() < 2 {
                return Err(format!("path {path:?} is too short"));
            }
            let (a, b) = (path[0], path[path.len() - 1]);
            if !required.remove(&(a.min(b), a.max(b))) {
                return Err(format!("path {a}..{b} is not a missing branch edge"));
            }
            for w in path.windows(2) {
                let e = Edge::try_new(w[0], w[1]).ok_or("path repeats a vertex")?;
                if !host.contains_edge(&e) {
                    return Err(format!("edge {e} is not in the host graph"));
                }
            }
            for &x in &path[1..path.len() - 1] {
                if branch.contains(&x) {
                    return Err(format!("path passes through branch vertex {x}"));
                }
                if !interior_seen.insert(x) {
                    return Err(format!("subdivision vertex {x} is shared"));
                }
            }
        }
        if !required.is_empty() {
            return Err(format!("branch pairs without a path: {required:?}"));
        }
        Ok(())
    }
}

/// Finds a Kuratowski subdivision in `g`, or `None` when `g` is planar.
///
/// Deletes edges one at a time while the graph stays nonplanar; what is
/// left is an edge-minimal nonplanar subgraph, which is a subdivision of
/// `K_5` or `K_{3,3}`. Quadratic in the edge count.
pub fn kuratowski_witness(g: &Graph) -> Option<KuratowskiWitness> {
    if is_planar(g) {
        return None;
    }
    let mut h = g.clone();
    for e in g.edges() {
        h.remove_edge(e);
        if is_planar(&h) {
            h.add_edge(e.u(), e.v()).expect("re-adding a removed edge");
        }
    }
    Some(trace_subdivision(&h))
}

fn trace_subdivision(h: &Graph) -> KuratowskiWitness {
    let adj = h.adjacency();
    let branch: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| adj[v].len() >= 3)
        .collect();
    let is_branch = |v: usize| adj[v].len() >= 3;

    let mut paths: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for &start in &branch {
        for &first in &adj[start] {
            let mut path = vec![start, first];
            let (mut prev, mut cur) = (start, first);
            while !is_branch(cur) {
                let next = adj[cur]
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .expect("subdivision vertices have degree 2");
                path.push(next);
                prev = cur;
                cur = next;
            }
            // keep each path once, oriented from the smaller end
            let end = cur;
            if start < end {
                paths.insert((start, end, path[1]), path);
            }
        }
    }
    let paths: Vec<Vec<usize>> = paths.into_values().collect();

    if branch.len() == 5 {
        return KuratowskiWitness {
            kind: WitnessKind::K5Subdivision,
            branch_vertices: branch,
            paths,
        };
    }
    debug_assert_eq!(
        branch.len(),
        6,
        "minimal nonplanar graph has 5 or 6 branch vertices"
    );
    // two-color the branch vertices through the contracted edges
    let mut side: BTreeMap<usize, u8> = BTreeMap::new();
    side.insert(branch[0], 0);
    let mut changed = true;
    while changed {
        changed = false;
        for p in &paths {
            let (a, b) = (p[0], p[p.len() - 1]);
            match (side.get(&a).copied(), side.get(&b).copied()) {
                (Some(s), None) => {
                    side.insert(b, 1 - s);
                    changed = true;
                }
                (None, Some(s)) => {
                    side.insert(a, 1 - s);
                    changed = true;
                }
                _ => {}
            }
        }
    }
    let mut ordered: Vec<usize> = branch
        .iter()
        .copied()
        .filter(|v| side.get(v) == Some(&0))
        .collect();
    ordered.extend(branch.iter().copied().filter(|v| side.get(v) == Some(&1)));
    KuratowskiWitness {
        kind: WitnessKind::K33Subdivision,
        branch_vertices: ordered,
        paths,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, grid};

    #[test]
    fn k5_is_its_own_witness() {
        let g = complete(5);
        let w = kuratowski_witness(&g).unwrap();
        assert_eq!(w.kind, WitnessKind::K5Subdivision);
        assert_eq!(w.paths.len(), 10);
        assert!(w.paths.iter().all(|p| p.len() == 2));
        w.validate(&g).unwrap();
    }

    #[test]
    fn subdivided_k33() {
        let mut pairs: Vec<(usize, usize)> =
            (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        pairs.retain(|&p| p != (0, 3));
        pairs.extend([(0, 6), (6, 3)]);
        let g = Graph::from_edges(7, pairs).unwrap();
        let w = kuratowski_witness(&g).unwrap();
        assert_eq!(w.kind, WitnessKind::K33Subdivision);
        let long: Vec<_> = w.paths.iter().filter(|p| p.len() == 3).collect();
        assert_eq!(long.len(), 1);
        w.validate(&g).unwrap();
    }

    #[test]
    fn planar_grid_has_no_witness() {
        assert!(kuratowski_witness(&grid(3, 3)).is_none());
    }

    #[test]
    fn validator_rejects_tampering() {
        let g = complete_bipartite(3, 3);
        let mut w = kuratowski_witness(&g).unwrap();
        w.validate(&g).unwrap();
        w.paths.pop();
        assert!(w.validate(&g).is_err());

        let g5 = complete(5);
        let mut w5 = kuratowski_witness(&g5).unwrap();
        w5.paths[0] = vec![w5.paths[0][0], w5.paths[0][0]];
        assert!(w5.validate(&g5).is_err());
    }

    #[test]
    fn witness_in_dense_graph() {
        let g = complete(8);
        let w = kuratowski_witness(&g).unwrap();
        w.validate(&g).unwrap();
        let wb = kuratowski_witness(&complete_bipartite(4, 5)).unwrap();
        wb.validate(&complete_bipartite(4, 5)).unwrap();
    }
}
