//! Tests planarity and extracts a Kuratowski subdivision when it fails.
//!
//! cargo run --example planarity_witness

use crossplane::graph::{complete, complete_bipartite, grid, Graph};
use crossplane::planarity::{is_planar, kuratowski_witness};

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("simple graph")
}

fn main() {
    let cases = [
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K3,3", complete_bipartite(3, 3)),
        ("4x5 grid", grid(4, 5)),
        ("Petersen", petersen()),
    ];
    for (name, g) in cases {
        print!("{name:<10} planar={:<5}", is_planar(&g));
        match kuratowski_witness(&g) {
            Some(w) => {
                w.validate(&g).expect("witness checks out");
                println!(
                    " {:?} on {:?}, {} edges",
                    w.kind,
                    w.branch_vertices,
                    w.edges().len()
                );
            }
            None => println!(),
        }
    }
}
