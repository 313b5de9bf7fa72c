//! Searches for the best certified lower bound on cr_k of a complete or
//! complete bipartite graph and prints the certificate.
//!
//! cargo run --example best_bound -- 21 21 2
//! cargo run --example best_bound -- 57 2

use crossplane::bounds::{best_lower_bound, Instance};

fn main() -> crossplane::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (instance, k) = match args[..] {
        [n, k] => (Instance::Complete(n), k),
        [p, q, k] => (Instance::Bipartite(p, q), k),
        _ => (Instance::Bipartite(21, 21), 2),
    };
    let cert = best_lower_bound(instance, k)?;
    println!("cr_{k}({instance}) >= {}", cert.value);
    for step in &cert.steps {
        println!("  {:<70} {}", format!("{:?}", step.op), step.result);
    }
    println!("{}", cert.to_json()?);
    Ok(())
}
