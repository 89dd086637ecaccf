//! Corefan and fan number with self-certifying witnesses.

use fancore::fan::{DEFAULT_COREFAN_CLASS_CAP, DEFAULT_FAN_SUBGRAPH_CAP};
use fancore::{corefan, corefan_bruteforce, fan_number, Multigraph, Result};

fn fixture(name: &str) -> Result<Multigraph> {
    let path = format!("{}/fixtures/{name}.graph", env!("CARGO_MANIFEST_DIR"));
    Multigraph::parse(&std::fs::read_to_string(path).expect("fixture exists"))
}

pub fn run_example() -> Result<()> {
    for name in ["double-edge", "fig1-h", "fig1-h1", "fig2-h4"] {
        let h = fixture(name)?;
        let report = corefan(&h, DEFAULT_COREFAN_CLASS_CAP)?;
        assert!(report.certify());
        assert_eq!(report.value, corefan_bruteforce(&h, 1 << 16)?);
        let witness = report.witness_subgraph.as_ref().map(|k| k.materialize().class_count()).unwrap_or(0);
        println!("{name}: corefan {} (witness with {witness} classes)", report.value);
    }

    let g = fixture("fat-triangle-t0")?;
    let fan = fan_number(&g, DEFAULT_FAN_SUBGRAPH_CAP)?;
    assert!(fan.certify());
    let (x, y) = fan.witness_pair.unwrap();
    println!("fat triangle: fan {} attained at ({}, {})", fan.value, g.label(x), g.label(y));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
