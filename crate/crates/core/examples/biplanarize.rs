//! Splits low-crossing drawings into two planar parts.
//!
//! cargo run --release --example biplanarize [-- COUNT]
//!
//! Set CROSSPLANE_THREADS to spread the batch over threads.

use std::collections::BTreeMap;

use crossplane::biplanarize::{
    biplanarize_low_crossing, greedy_peel, random_low_crossing_instance, Route,
};
use crossplane::harness::{par_map, thread_count};

fn main() -> crossplane::Result<()> {
    let d = random_low_crossing_instance(7, 10)?;
    println!(
        "seed 7: {} edges, {} crossings",
        d.graph.edge_count(),
        d.crossing_count()
    );
    for r in greedy_peel(&d)?.removals {
        println!("  peel {} ({} crossings)", r.edge, r.crossings);
    }
    let dec = biplanarize_low_crossing(&d).expect("at most ten crossings");
    println!("{}", dec.to_json()?);

    let count: u64 = std::env::args()
        .nth(1)
        .map_or(1000, |a| a.parse().expect("count"));
    let seeds: Vec<u64> = (0..count).collect();
    let routes = par_map(&seeds, |&s| {
        let d = random_low_crossing_instance(s, (s % 11) as usize).expect("generator");
        biplanarize_low_crossing(&d).map(|dec| match dec.route {
            Some(Route::Direct) | None => "direct",
            Some(Route::Swap { .. }) => "swap",
            Some(Route::Repair { .. }) => "repair",
        })
    });
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for r in routes {
        let key = r.map_or_else(|f| f.kind.to_string(), str::to_string);
        *tally.entry(key).or_default() += 1;
    }
    println!(
        "{count} drawings on {} thread(s): {tally:?}",
        thread_count()
    );
    Ok(())
}
