//! Build a witness graph around a double edge and re-verify it.

use fancore::{build_circulant_with_matching, construct_witness, verify_witness, Multigraph, Result};

pub fn run_example() -> Result<()> {
    let (circulant, matched) = build_circulant_with_matching(6, 4, 6)?;
    println!("circulant: {} classes, matched set {:?}", circulant.class_count(), matched);

    let h = Multigraph::parse("a b 2")?;
    let (g, plan) = construct_witness(&h, 0)?;
    println!(
        "witness: {} vertices, D = {}, r = {}, |S_r| = {}, |S_r-1| = {}",
        g.vertex_count(),
        plan.d,
        plan.r,
        plan.s_r.len(),
        plan.s_r1.len()
    );
    let report = verify_witness(&h, 0, &g, &plan);
    print!("{report}");
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
