//! Splitting a graph with few crossings into two planar graphs.
//!
//! [`biplanarize_low_crossing`] peels crossed edges off a drawing until it
//! is crossing-free. The peeled edges form the second part; when they are
//! nonplanar they have at most ten edges, so they are `K_5`, `K_{3,3}`, a
//! subdivided `K_{3,3}`, or `K_{3,3}` plus an edge, and one edge swap
//! between the parts fixes them.

mod exhaustive;
mod generate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::drawing::{CombinatorialDrawing, Crossing};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::planarity::{classify_small_nonplanar, is_planar, SmallNonplanarClass};

pub use exhaustive::{exhaustive_biplanarity, EXHAUSTIVE_EDGE_LIMIT};
pub use generate::{
    random_low_crossing_drawing, random_low_crossing_instance, MAX_TARGET_CROSSINGS,
};

/// Crossing count up to which the swap argument is guaranteed to succeed.
pub const GUARANTEED_CROSSINGS: usize = 10;

/// One edge taken out by [`greedy_peel`], with its crossings at that moment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Removal {
    pub edge: Edge,
    pub crossings: usize,
    pub partners: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PeelTrace {
    pub removals: Vec<Removal>,
    /// Crossings left after the last removal; always empty.
    pub residual: Vec<Crossing>,
}

impl PeelTrace {
    pub fn removed_edges(&self) -> BTreeSet<Edge> {
        self.removals.iter().map(|r| r.edge).collect()
    }
}

/// Repeatedly removes an edge with the most remaining crossings, ties going
/// to the smallest edge, until no crossing is left.
pub fn greedy_peel(d: &CombinatorialDrawing) -> Result<PeelTrace> {
    d.check().map_err(Error::InvalidDrawing)?;
    let mut live: BTreeMap<Edge, BTreeSet<Edge>> = BTreeMap::new();
    for c in &d.crossings {
        let (a, b) = c.edges();
        live.entry(a).or_default().insert(b);
        live.entry(b).or_default().insert(a);
    }
    let mut trace = PeelTrace::default();
    loop {
        // strict comparison keeps the smallest edge among equal counts
        let mut pick: Option<(Edge, usize)> = None;
        for (e, ps) in &live {
            if ps.len() > pick.map_or(0, |p| p.1) {
                pick = Some((*e, ps.len()));
            }
        }
        let Some((edge, _)) = pick else { break };
        let partners: Vec<Edge> = live.remove(&edge).unwrap_or_default().into_iter().collect();
        for p in &partners {
            if let Some(ps) = live.get_mut(p) {
                ps.remove(&edge);
            }
        }
        trace.removals.push(Removal {
            edge,
            crossings: partners.len(),
            partners,
        });
    }
    Ok(trace)
}

/// How a decomposition was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// The peeled edges were planar as they stood.
    Direct,
    /// `removed` went back into the drawing and its partner `partner` was
    /// peeled instead, following the case analysis.
    Swap { removed: Edge, partner: Edge },
    /// Same move, found by trying every crossing pair. Heuristic; only
    /// reached outside the guaranteed domain or on drawings that are not
    /// realizable.
    Repair { removed: Edge, partner: Edge },
}

/// Edge sets partitioning a host graph, each with its planarity verdict.
///
/// JSON: `{"parts": [[[u,v],..],[[u,v],..]], "planar": [true, true]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<Vec<Edge>>,
    pub planar: Vec<bool>,
    #[serde(skip)]
    pub route: Option<Route>,
}

impl Decomposition {
    pub(crate) fn from_sets(n: usize, sets: Vec<BTreeSet<Edge>>, route: Option<Route>) -> Self {
        let planar = sets
            .iter()
            .map(|s| is_planar(&Graph::from_edge_set(n, s.clone())))
            .collect();
        Decomposition {
            parts: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            planar,
            route,
        }
    }

    /// Edges moved off the first part.
    pub fn moved(&self) -> usize {
        self.parts.iter().skip(1).map(Vec::len).sum()
    }

    /// Re-derives every claim against `host`: the parts are disjoint, cover
    /// its edges exactly, and each is planar.
    pub fn check(&self, host: &Graph) -> Result<(), String> {
        if self.parts.len() != self.planar.len() {
            return Err("one planarity verdict per part expected".into());
        }
        let mut seen = BTreeSet::new();
        for (i, part) in self.parts.iter().enumerate() {
            for e in part {
                if !host.contains_edge(e) {
                    return Err(format!("part {i} has edge {e} not in the host"));
                }
                if !seen.insert(*e) {
                    return Err(format!("edge {e} is in two parts"));
                }
            }
            let g = Graph::from_edge_set(host.vertex_count(), part.iter().copied().collect());
            if !is_planar(&g) {
                return Err(format!("part {i} is not planar"));
            }
            if !self.planar[i] {
                return Err(format!("part {i} is planar but marked otherwise"));
            }
        }
        if seen.len() != host.edge_count() {
            return Err(format!(
                "parts cover {} of {} edges",
                seen.len(),
                host.edge_count()
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    InputInvalid,
    G2OtherNonplanar,
    PostSwapNonplanar,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::InputInvalid => "input-invalid",
            FailureKind::G2OtherNonplanar => "G2-other-nonplanar",
            FailureKind::PostSwapNonplanar => "post-swap-nonplanar",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
    /// Set when a drawing with at most ten crossings could not be split;
    /// that contradicts the swap argument and points at a bug.
    pub alarm: bool,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)?;
        if self.alarm {
            f.write_str(" (internal-correctness alarm)")?;
        }
        Ok(())
    }
}

impl std::error::Error for Failure {}

struct Split {
    n: usize,
    first: BTreeSet<Edge>,
    second: BTreeSet<Edge>,
}

impl Split {
    fn planar(&self, s: &BTreeSet<Edge>) -> bool {
        is_planar(&Graph::from_edge_set(self.n, s.clone()))
    }

    /// Moves `removed` back to the first part and `partner` out of it.
    fn swapped(&self, removed: Edge, partner: Edge) -> Option<Split> {
        if !self.second.contains(&removed) || !self.first.contains(&partner) {
            return None;
        }
        let mut first = self.first.clone();
        let mut second = self.second.clone();
        first.remove(&partner);
        first.insert(removed);
        second.remove(&removed);
        second.insert(partner);
        let s = Split {
            n: self.n,
            first,
            second,
        };
        (s.planar(&s.first) && s.planar(&s.second)).then_some(s)
    }

    fn finish(self, route: Route) -> Decomposition {
        Decomposition::from_sets(self.n, vec![self.first, self.second], Some(route))
    }
}

/// Splits the edges of a drawn graph into two planar parts.
///
/// Guaranteed for drawings with at most ten crossings; larger drawings get
/// the same pipeline plus a repair search over all crossing pairs.
pub fn biplanarize_low_crossing(
    d: &CombinatorialDrawing,
) -> std::result::Result<Decomposition, Failure> {
    let trace = greedy_peel(d).map_err(|e| Failure {
        kind: FailureKind::InputInvalid,
        message: e.to_string(),
        alarm: false,
    })?;
    let n = d.graph.vertex_count();
    let second = trace.removed_edges();
    let first: BTreeSet<Edge> = d
        .graph
        .edges()
        .filter(|e| !second.contains(e))
        .copied()
        .collect();
    let split = Split { n, first, second };
    let in_domain = d.crossing_count() <= GUARANTEED_CROSSINGS;

    if !split.planar(&split.first) {
        return Err(Failure {
            kind: FailureKind::InputInvalid,
            message: "the crossing-free subdrawing is nonplanar, so the drawing is not realizable"
                .into(),
            alarm: false,
        });
    }
    if split.planar(&split.second) {
        return Ok(split.finish(Route::Direct));
    }

    let g2 = Graph::from_edge_set(n, split.second.clone());
    let class = classify_small_nonplanar(&g2);
    for (removed, partner) in swap_candidates(d, &trace, &g2, class) {
        if let Some(s) = split.swapped(removed, partner) {
            return Ok(s.finish(Route::Swap { removed, partner }));
        }
    }

    for c in &d.crossings {
        let (a, b) = c.edges();
        for (removed, partner) in [(a, b), (b, a)] {
            if let Some(s) = split.swapped(removed, partner) {
                return Ok(s.finish(Route::Repair { removed, partner }));
            }
        }
    }

    let (kind, what) = match class {
        SmallNonplanarClass::OtherNonplanar => (
            FailureKind::G2OtherNonplanar,
            format!(
                "peeled part has {} edges and is not one of the small nonplanar classes",
                g2.edge_count()
            ),
        ),
        _ => (
            FailureKind::PostSwapNonplanar,
            format!("no single swap makes the peeled {class:?} part planar"),
        ),
    };
    Err(Failure {
        kind,
        message: format!("{what}; drawing has {} crossings", d.crossing_count()),
        alarm: in_domain,
    })
}

/// `(removed, partner)` pairs the case analysis allows, in trial order.
fn swap_candidates(
    d: &CombinatorialDrawing,
    trace: &PeelTrace,
    g2: &Graph,
    class: SmallNonplanarClass,
) -> Vec<(Edge, Edge)> {
    let peeled = trace.removed_edges();
    let partners_in_first = |e: Edge| -> Vec<Edge> {
        d.crossings
            .iter()
            .filter_map(|c| c.partner(&e))
            .filter(|f| !peeled.contains(f))
            .collect()
    };
    let pair_up = |edges: Vec<Edge>| -> Vec<(Edge, Edge)> {
        edges
            .into_iter()
            .flat_map(|e| partners_in_first(e).into_iter().map(move |f| (e, f)))
            .collect()
    };
    match class {
        SmallNonplanarClass::K5 | SmallNonplanarClass::K33 => {
            let last = trace.removals.last().expect("nonplanar part is nonempty");
            last.partners.iter().map(|&f| (last.edge, f)).collect()
        }
        SmallNonplanarClass::K33Subdivided => {
            let deg = g2.degrees();
            let middle = (0..g2.vertex_count()).find(|&v| deg[v] == 2);
            pair_up(
                g2.edges()
                    .filter(|e| middle.is_none_or(|m| !e.has_endpoint(m)))
                    .copied()
                    .collect(),
            )
        }
        SmallNonplanarClass::K33PlusEdge => {
            let (core, ids) = g2.edge_induced();
            let extra = crate::planarity::extra_edge_over_k33(&core)
                .map(|e| Edge::new(ids[e.u()], ids[e.v()]));
            pair_up(g2.edges().filter(|e| Some(**e) != extra).copied().collect())
        }
        SmallNonplanarClass::Planar | SmallNonplanarClass::OtherNonplanar => Vec::new(),
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    //! Combinatorial drawings whose peeled part lands in each nonplanar
    //! class. A core graph on low labels has every edge crossed once by a
    //! private blocker edge on high labels; the tie-break peels the core.

    use super::*;

    pub fn blocked(core: &[(usize, usize)], core_vertices: usize) -> CombinatorialDrawing {
        let mut pairs: Vec<(usize, usize)> = core.to_vec();
        let mut crossings = Vec::new();
        for (i, &(a, b)) in core.iter().enumerate() {
            let x = core_vertices + 2 * i;
            pairs.push((x, x + 1));
            crossings.push(Crossing::new(Edge::new(a, b), Edge::new(x, x + 1)));
        }
        let n = core_vertices + 2 * core.len();
        CombinatorialDrawing::new(Graph::from_edges(n, pairs).unwrap(), crossings)
    }

    pub fn k33_pairs() -> Vec<(usize, usize)> {
        (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()
    }

    pub fn k5_pairs() -> Vec<(usize, usize)> {
        (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect()
    }
}
