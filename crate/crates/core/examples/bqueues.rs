//! Full B-queues: greedy construction against exhaustive search.

use fancore::{exhaustive_full_bqueue, greedy_full_bqueue, Multigraph, Result};

fn fixture(name: &str) -> Result<Multigraph> {
    let path = format!("{}/fixtures/{name}.graph", env!("CARGO_MANIFEST_DIR"));
    Multigraph::parse(&std::fs::read_to_string(path).expect("fixture exists"))
}

pub fn run_example() -> Result<()> {
    for name in ["forest", "c5", "cycle-pendant", "fig2-h4"] {
        let b = fixture(name)?;
        let greedy = greedy_full_bqueue(&b)?;
        let exhaustive = exhaustive_full_bqueue(&b, 10)?;
        assert_eq!(greedy.is_some(), exhaustive.is_some());
        match greedy {
            Some(q) => {
                assert!(q.validate()?);
                let labels: Vec<&str> = q.us.iter().map(|&u| b.label(u)).collect();
                println!("{name}: queue {}", labels.join(" "));
            }
            None => println!("{name}: no full B-queue"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
