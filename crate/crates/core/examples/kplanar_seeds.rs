//! Seed bounds for k planes: Ackerman's bound at K_{14k-3}, the bipartite
//! cascade at K_{8k+2,8k+2}.
//!
//! cargo run --example kplanar_seeds

use crossplane::bounds::{kplanar_seed_bound, Family};

fn main() -> crossplane::Result<()> {
    println!(
        "{:>3} {:>12} {:>10} {:>16} {:>10}",
        "k", "complete", "value", "bipartite", "value"
    );
    for k in 1..=10 {
        let c = kplanar_seed_bound(Family::Complete, k)?;
        let b = kplanar_seed_bound(Family::Bipartite, k)?;
        println!(
            "{k:>3} {:>12} {:>10} {:>16} {:>10}",
            c.instance()?.to_string(),
            c.value,
            b.instance()?.to_string(),
            b.value
        );
    }
    Ok(())
}
