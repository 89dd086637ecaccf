//! Exhaustive sweep: chromatic index against the degree and fan bounds on small multigraphs.

use fancore::enumerate::multigraphs;
use fancore::{chromatic_index_exact, fan_bound, fan_colouring, Result};

pub fn run_example() -> Result<()> {
    let (mut graphs, mut tight) = (0, 0);
    for g in multigraphs(3, 3, 2).into_iter().chain(multigraphs(4, 3, 2)) {
        if g.is_edgeless() {
            continue;
        }
        let (chi, _) = chromatic_index_exact(&g, 24)?;
        let fan = fan_bound(&g, 1 << 20)?;
        assert!(chi <= fan && chi <= g.ore_bound());
        assert!(fan_colouring(&g, fan)?.is_some_and(|c| c.verify()));
        graphs += 1;
        tight += usize::from(chi == fan);
    }
    println!("{graphs} multigraphs checked, fan bound tight on {tight}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
