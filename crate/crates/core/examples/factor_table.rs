//! Approximation factors of the density bounds, and the range of c*.
//!
//! cargo run --example factor_table

use crossplane::bounds::{approx_factor_table, cstar_lower, format_rational};

fn main() {
    println!("{:<16} {:>8} {:>8}   exact", "quantity", "prior", "new");
    for r in approx_factor_table() {
        println!(
            "{:<16} {:>8} {:>8}   {} / {}",
            r.quantity,
            r.prior_display(),
            r.new_display(),
            format_rational(&r.prior),
            format_rational(&r.new)
        );
    }
    println!("c* >= {}", format_rational(&cstar_lower()));
}
