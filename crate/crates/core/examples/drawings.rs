//! Builds the Zarankiewicz drawings of K_{p,q} and the cylindrical drawings
//! of K_n and checks their crossing counts against Z(p,q) and Z(n).
//!
//! cargo run --release --example drawings

use crossplane::drawing::{
    count_crossings, cylindrical_drawing, guy_number, zarankiewicz_drawing, zarankiewicz_number,
    CYLINDRICAL_RANGE,
};

fn main() -> crossplane::Result<()> {
    println!("Zarankiewicz drawings, rows p = 2..8, columns q = 2..8");
    for p in 2..=8 {
        let row: Vec<String> = (2..=8)
            .map(|q| {
                let (c, _) = count_crossings(&zarankiewicz_drawing(p, q)?)?;
                assert_eq!(c as u128, zarankiewicz_number(p as u64, q as u64));
                Ok(format!("{c:>4}"))
            })
            .collect::<crossplane::Result<_>>()?;
        println!("{}", row.join(""));
    }
    println!("cylindrical drawings");
    for n in CYLINDRICAL_RANGE {
        let c = cylindrical_drawing(n)?.crossing_count();
        println!("  K_{n:<3} {c:>4}  Z = {}", guy_number(n as u64));
    }
    Ok(())
}
