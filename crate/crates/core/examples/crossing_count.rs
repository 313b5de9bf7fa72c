//! Counts crossings of a straight-line drawing with exact arithmetic and
//! writes both drawing file formats.
//!
//! cargo run --example crossing_count

use crossplane::drawing::{count_crossings, load_drawing_json, Point, StraightLineDrawing};
use crossplane::graph::complete;

fn main() -> crossplane::Result<()> {
    // K5 with one vertex inside the triangle of three others
    let pts = [(0, 0), (4, 0), (2, 4), (-3, -3), (0, -1)];
    let d = StraightLineDrawing::new(
        complete(5),
        pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
    )?;
    let (count, combinatorial) = count_crossings(&d)?;
    println!("{count} crossing(s)");
    for c in &combinatorial.crossings {
        let (a, b) = c.edges();
        println!("  {a} x {b}");
    }

    let geometric = d.to_json()?;
    println!("geometric file:\n{geometric}");
    println!("combinatorial file:\n{}", combinatorial.to_json()?);
    assert_eq!(load_drawing_json(&geometric)?.crossing_count(), count);
    Ok(())
}
