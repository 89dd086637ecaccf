//! Parsing, degree arithmetic and canonical serialization.

use fancore::{Multigraph, Result};

pub fn run_example() -> Result<()> {
    let g = Multigraph::parse("# fat triangle\na b 1\na c 1\nb c 2\nvertex lonely\n")?;
    for v in g.vertices() {
        println!("{}: d = {}, mu = {}", g.label(v), g.degree(v)?, g.vertex_mult(v)?);
    }
    println!("max degree {}, ore bound {}", g.max_degree(), g.ore_bound());
    println!("multiforest: {}", g.is_multiforest());
    print!("{}", g.serialize());

    let reparsed = Multigraph::parse(&g.serialize())?;
    assert_eq!(reparsed, g);

    if let Err(e) = Multigraph::parse("a b 1\na a 2") {
        println!("rejected: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
