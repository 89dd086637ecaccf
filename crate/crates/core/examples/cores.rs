//! t-cores of the fat triangles and the two colouring hypotheses.

use fancore::{check_theorem4_hypothesis, check_theorem5_hypothesis, t_core, Multigraph, Result};

pub fn run_example() -> Result<()> {
    for t in 0..3u32 {
        let g = Multigraph::from_labelled_edges(&[("a", "b", t + 1), ("a", "c", t + 1), ("b", "c", t + 2)])?;
        let core = t_core(&g, t);
        let check = check_theorem4_hypothesis(&g, t);
        println!(
            "t = {t}: core has {} vertices, core multiplicity {}, multiforest hypothesis {}",
            core.vertex_count(),
            check.report.core_mult,
            check.holds
        );
    }

    // a 4-cycle of maximum-degree vertices, then the same with a pendant edge in the core
    let mut g = Multigraph::parse("a b 1\nb c 1\nc d 1\nd a 1\na pa 1\nb pb 1\nc pc 1\nd pd 1")?;
    println!("cycle core: B-queue hypothesis {}", check_theorem5_hypothesis(&g, 0)?.holds);
    let pa = g.index_of("pa").unwrap();
    for q in ["q1", "q2"] {
        let v = g.add_vertex(q)?;
        g.set_mult(pa, v, 1)?;
    }
    println!("cycle plus pendant: B-queue hypothesis {}", check_theorem5_hypothesis(&g, 0)?.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
