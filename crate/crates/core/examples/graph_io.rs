//! Reads an edge list, prints it back, and compares canonical codes.
//!
//! cargo run --example graph_io

use crossplane::graph::{canonical_code, is_isomorphic_small, load_graph, serialize_graph};

const PETAL: &str = "\
# a 4-cycle with a chord, plus an isolated vertex
# vertices 6
0 1
1 2
2 3
3 0
0 2
";

fn main() -> crossplane::Result<()> {
    let g = load_graph(PETAL)?;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    print!("{}", serialize_graph(&g));

    // same graph, relabeled
    let h = load_graph("# vertices 6\n5 4\n4 3\n3 5\n3 1\n1 5\n")?;
    println!("isomorphic: {}", is_isomorphic_small(&g, &h)?);
    println!(
        "canonical codes: {:#x} {:#x}",
        canonical_code(&g)?,
        canonical_code(&h)?
    );

    match load_graph("0 1\n1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
