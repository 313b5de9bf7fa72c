use std::collections::BTreeSet;

use super::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::planarity::is_planar;

pub const EXHAUSTIVE_EDGE_LIMIT: usize = 20;

/// Every graph with at most this many edges is planar.
const ALWAYS_PLANAR_EDGES: usize = 8;

/// Searches all two-part splits of the edges, the first edge pinned to the
/// first part, pruning as soon as a part turns nonplanar. Returns a witness
/// or `None` when the graph is not biplanar.
pub fn exhaustive_biplanarity(g: &Graph) -> Result<Option<Decomposition>> {
    if g.edge_count() > EXHAUSTIVE_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "edge count for exhaustive search",
            actual: g.edge_count(),
            limit: EXHAUSTIVE_EDGE_LIMIT,
        });
    }
    let edges: Vec<Edge> = g.edges().copied().collect();
    let mut parts = [BTreeSet::new(), BTreeSet::new()];
    let found = search(g.vertex_count(), &edges, 0, &mut parts);
    Ok(found.then(|| Decomposition::from_sets(g.vertex_count(), parts.to_vec(), None)))
}

fn search(n: usize, edges: &[Edge], i: usize, parts: &mut [BTreeSet<Edge>; 2]) -> bool {
    let Some(&e) = edges.get(i) else { return true };
    let sides = if i == 0 { 1 } else { 2 };
    for side in 0..sides {
        parts[side].insert(e);
        let ok = parts[side].len() <= ALWAYS_PLANAR_EDGES
            || is_planar(&Graph::from_edge_set(n, parts[side].clone()));
        if ok && search(n, edges, i + 1, parts) {
            return true;
        }
        parts[side].remove(&e);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite};

    #[test]
    fn witnesses() {
        for g in [
            complete(6),
            complete_bipartite(3, 3),
            complete(5),
            complete_bipartite(4, 4),
        ] {
            let d = exhaustive_biplanarity(&g).unwrap().expect("biplanar");
            d.check(&g).unwrap();
        }
        let single = Graph::from_edges(2, [(0, 1)]).unwrap();
        let d = exhaustive_biplanarity(&single).unwrap().unwrap();
        assert_eq!(d.parts, vec![vec![Edge::new(0, 1)], vec![]]);
    }

    #[test]
    fn refuses_large() {
        assert!(matches!(
            exhaustive_biplanarity(&complete(8)),
            Err(Error::SizeLimit { actual: 28, .. })
        ));
    }
}
