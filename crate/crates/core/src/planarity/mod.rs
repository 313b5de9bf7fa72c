//! Planarity testing, Kuratowski witnesses, and classification of the
//! nonplanar graphs with at most ten edges.

mod classify;
mod kuratowski;
mod lr;

use crate::graph::Graph;

pub(crate) use classify::extra_edge_over_k33;
pub use classify::{classify_small_nonplanar, SmallNonplanarClass};
pub use kuratowski::{kuratowski_witness, KuratowskiWitness, WitnessKind};

/// Returns true iff `g` has a crossing-free drawing in the plane.
///
/// Linear time; deterministic.
pub fn is_planar(g: &Graph) -> bool {
    lr::lr_planar(g)
}
