//! Runs the counting chains by hand: seed, chain, then scale to large
//! instances.
//!
//! cargo run --example counting_chains

use crossplane::bounds::{
    bipartite_chain, complete_chain, hereditary_lift, scale_bipartite, scale_complete, ChainMode,
    LinearBound,
};

fn main() -> crossplane::Result<()> {
    let tier3 = LinearBound::cascade_tiers()[2].clone();
    let lifted = hereditary_lift(&tier3, 2)?;
    let seed = lifted.ceil_at(30, 225);
    println!("{lifted}");
    println!("seed at K_{{15,15}}: {seed}");
    for mode in [ChainMode::PerStep, ChainMode::Nested] {
        let row: Vec<String> = (15..=21)
            .map(|n| bipartite_chain(15, n, seed, mode).map(|v| v.to_string()))
            .collect::<crossplane::Result<_>>()?;
        println!("{mode:<9} {}", row.join(" "));
    }
    for (p, q) in [(30, 30), (40, 60), (100, 100)] {
        println!("K_{{{p},{q}}} >= {}", scale_bipartite(21, 817, p, q)?);
    }

    let lifted = hereditary_lift(&LinearBound::ackerman(), 2)?;
    let seed = lifted.ceil_at(25, 300);
    let at57 = complete_chain(25, 57, seed)?;
    println!("{lifted}");
    println!("K_25 >= {seed}, K_57 >= {at57}");
    for n in [60, 100, 200, 1000] {
        println!(
            "K_{n} >= {}  (n^4/694 = {})",
            scale_complete(57, at57, n)?,
            (n as u128).pow(4) / 694
        );
    }
    Ok(())
}
