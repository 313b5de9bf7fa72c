//! Brute-force biplanarity for graphs with at most 20 edges.
//!
//! cargo run --release --example exhaustive_oracle

use crossplane::biplanarize::exhaustive_biplanarity;
use crossplane::graph::{complete, complete_bipartite};

fn main() -> crossplane::Result<()> {
    for (name, g) in [
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K4,4", complete_bipartite(4, 4)),
        ("K4,5", complete_bipartite(4, 5)),
    ] {
        match exhaustive_biplanarity(&g)? {
            Some(w) => {
                w.check(&g).expect("valid witness");
                let sizes: Vec<usize> = w.parts.iter().map(Vec::len).collect();
                println!("{name:<5} biplanar, parts of {sizes:?}");
            }
            None => println!("{name:<5} not biplanar"),
        }
    }
    match exhaustive_biplanarity(&complete(7)) {
        Err(e) => println!("K7: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
