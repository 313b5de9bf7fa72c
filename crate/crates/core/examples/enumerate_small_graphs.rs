//! Counts isomorphism classes with up to 8 vertices and 10 edges (no
//! isolated vertices) and sorts the nonplanar ones into named classes.
//!
//! cargo run --release --example enumerate_small_graphs

use std::collections::BTreeMap;

use crossplane::graph::enumerate_graphs;
use crossplane::planarity::{classify_small_nonplanar, SmallNonplanarClass};

fn main() -> crossplane::Result<()> {
    let mut per_edges: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut classes: BTreeMap<(usize, SmallNonplanarClass), usize> = BTreeMap::new();
    for g in enumerate_graphs(8, 10)? {
        let class = classify_small_nonplanar(&g);
        let row = per_edges.entry(g.edge_count()).or_default();
        row.0 += 1;
        if class != SmallNonplanarClass::Planar {
            row.1 += 1;
            *classes.entry((g.edge_count(), class)).or_default() += 1;
        }
    }
    println!("edges  classes  nonplanar");
    for (m, (all, nonplanar)) in &per_edges {
        println!("{m:>5}  {all:>7}  {nonplanar:>9}");
    }
    for ((m, class), count) in &classes {
        println!("{m} edges: {class:?} x{count}");
    }
    Ok(())
}
