//! Fan-recolouring against the exact chromatic index.

use fancore::{chromatic_index_exact, fan_bound, fan_colouring, Multigraph, Result};

pub fn run_example() -> Result<()> {
    let g = Multigraph::parse("a b 2\nb c 2\nc d 1\nd a 1\na c 1")?;
    let (chi, optimal) = chromatic_index_exact(&g, 24)?;
    assert!(optimal.verify());
    println!("max degree {}, chi' {chi}, fan bound {}, ore bound {}", g.max_degree(), fan_bound(&g, 1 << 20)?, g.ore_bound());

    for k in g.max_degree()..=g.ore_bound() {
        match fan_colouring(&g, k)? {
            Some(c) => {
                assert!(c.verify());
                println!("k = {k}: coloured with {} colours", c.colours_used());
            }
            None => println!("k = {k}: gave up"),
        }
    }
    for line in optimal.to_lines() {
        println!("  {line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
