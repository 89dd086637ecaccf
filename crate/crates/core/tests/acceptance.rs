use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fancore::bqueue::{exhaustive_full_bqueue, greedy_full_bqueue};
use fancore::colouring::{chromatic_index_exact, fan_colouring};
use fancore::core_analysis::{check_theorem4_hypothesis, edges_above, t_core};
use fancore::enumerate::{multigraphs, simple_graphs, simple_graphs_up_to_iso, vertex_pairs};
use fancore::fan::{corefan, corefan_bruteforce, fan_bound, fan_number, min_cfan_degree};
use fancore::graph::{Multigraph, SubgraphSelection};
use fancore::witness::{construct_witness, verify_witness};
use rand::{Rng, SeedableRng};

const FAN_CAP: u128 = 1 << 20;
const CLASS_CAP: usize = 20;
const BRUTE_CAP: u128 = 1 << 16;

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn fixture(name: &str) -> Multigraph {
    let path = format!("{}/fixtures/{name}.graph", env!("CARGO_MANIFEST_DIR"));
    Multigraph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn within(elapsed: Duration, limit: Duration, mut outcome: Outcome) -> Outcome {
    outcome.passed &= elapsed < limit;
    outcome.detail = format!("{}; {:.2?} of {:?}", outcome.detail, elapsed, limit);
    outcome
}

fn fat_triangle_sharpness() -> Outcome {
    let mut failures = Vec::new();
    for t in 0..3u32 {
        let g = fixture(&format!("fat-triangle-t{t}"));
        let (chi, colouring) = chromatic_index_exact(&g, 24).unwrap();
        let expected_core = Multigraph::from_labelled_edges(&[("b", "c", t + 2)]).unwrap();
        let check = check_theorem4_hypothesis(&g, t);
        let ok = chi == 3 * t + 4
            && colouring.verify()
            && g.max_degree() == 2 * t + 3
            && t_core(&g, t) == expected_core
            && !check.holds
            && check.report.core_mult == t + 2;
        if !ok {
            failures.push(format!("t={t}: chi {chi}, delta {}", g.max_degree()));
        }
    }
    Outcome { passed: failures.is_empty(), detail: format!("t in 0..=2, failures {failures:?}") }
}

fn forest_core_graphs() -> Outcome {
    let mut instances: Vec<Multigraph> = (1..=6)
        .flat_map(simple_graphs_up_to_iso)
        .filter(|g| !g.is_edgeless() && check_theorem4_hypothesis(g, 0).holds)
        .collect();
    let from_small = instances.len();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut seen = BTreeSet::new();
    let pairs = vertex_pairs(7);
    while instances.len() < from_small + 150 {
        let p = rng.gen_range(0.15..0.75);
        let mask: u32 = pairs.iter().enumerate().fold(0, |m, (i, _)| m | (u32::from(rng.gen_bool(p)) << i));
        if !seen.insert(mask) {
            continue;
        }
        let edges: Vec<_> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &(u, v))| (u, v, 1)).collect();
        let g = Multigraph::from_edges(7, &edges).unwrap();
        if !g.is_edgeless() && check_theorem4_hypothesis(&g, 0).holds {
            instances.push(g);
        }
    }
    let mut failures = 0;
    for g in &instances {
        let delta = g.max_degree();
        let coloured = fan_colouring(g, delta).unwrap().is_some_and(|c| c.verify());
        let (chi, _) = chromatic_index_exact(g, 24).unwrap();
        if !coloured || chi != delta {
            failures += 1;
        }
    }
    Outcome {
        passed: failures == 0 && instances.len() >= 200,
        detail: format!(
            "{} instances ({from_small} iso classes on <= 6 vertices, {} sampled on 7), {failures} failures",
            instances.len(),
            instances.len() - from_small
        ),
    }
}

fn small_multigraphs() -> Vec<Multigraph> {
    (1..=4).flat_map(|n| multigraphs(n, 4, 3)).collect()
}

fn ore_and_fan_bounds() -> Outcome {
    let graphs = small_multigraphs();
    let mut violations = 0;
    for g in &graphs {
        let (chi, _) = chromatic_index_exact(g, 24).unwrap();
        if chi > g.ore_bound() || chi > fan_bound(g, FAN_CAP).unwrap() {
            violations += 1;
        }
    }
    Outcome { passed: violations == 0, detail: format!("{} multigraphs, {violations} violations", graphs.len()) }
}

fn corefan_reductions() -> Outcome {
    let graphs = small_multigraphs();
    let (mut brute_mismatch, mut reduced_to_full, mut full_to_reduced) = (0, 0, 0);
    let mut first_counterexample = None;
    for h in &graphs {
        let value = corefan(h, CLASS_CAP).unwrap().value;
        if value != corefan_bruteforce(h, BRUTE_CAP).unwrap() {
            brute_mismatch += 1;
        }
        for t in 0..=3 {
            let reduced = corefan(&edges_above(h, t), CLASS_CAP).unwrap().value;
            if reduced <= t && value > t {
                reduced_to_full += 1;
            }
            if value <= t && reduced > t {
                full_to_reduced += 1;
                first_counterexample.get_or_insert_with(|| {
                    let classes: Vec<String> = h.classes().map(|c| format!("{}{}x{}", c.u, c.v, c.mult)).collect();
                    format!("H = {{{}}}, t = {t}: corefan(H) = {value}, corefan(H>t) = {reduced}", classes.join(", "))
                });
            }
        }
    }
    Outcome {
        passed: brute_mismatch == 0 && reduced_to_full == 0 && full_to_reduced == 0,
        detail: format!(
            "{} multigraphs, t in 0..=3: {brute_mismatch} full-multiplicity mismatches, \
             {reduced_to_full} failures of corefan(H>t) <= t => corefan(H) <= t, \
             {full_to_reduced} failures of the converse{}",
            graphs.len(),
            first_counterexample.map_or(String::new(), |c| format!(" (first: {c})"))
        ),
    }
}

fn constant_multiplicity_lifting() -> Outcome {
    let (mut checked, mut violations) = (0, 0);
    for b in (1..=5).flat_map(simple_graphs) {
        let values: Vec<u32> = (0..=2u32).map(|s| corefan(&b.map_mults(|_| s + 1), CLASS_CAP).unwrap().value).collect();
        for s in 0..=2u32 {
            for t in s + 1..=2 {
                checked += 1;
                if values[s as usize] <= s && values[t as usize] > t {
                    violations += 1;
                }
            }
        }
    }
    Outcome { passed: violations == 0, detail: format!("{checked} (B, s, t) triples, {violations} violations") }
}

fn bqueue_implies_corefan_zero() -> Outcome {
    let (mut with_queue, mut violations) = (0, 0);
    for g in (1..=6).flat_map(simple_graphs_up_to_iso) {
        if greedy_full_bqueue(&g).unwrap().is_some() {
            with_queue += 1;
            if corefan(&g, CLASS_CAP).unwrap().value != 0 {
                violations += 1;
            }
        }
    }
    let mut remarks = Vec::new();
    for name in ["fig2-h4", "h5"] {
        let h = fixture(name);
        let ok = corefan(&h, CLASS_CAP).unwrap().value == 0
            && greedy_full_bqueue(&h).unwrap().is_none()
            && exhaustive_full_bqueue(&h, 10).unwrap().is_none();
        remarks.push(format!("{name} {}", if ok { "reproduced" } else { "differs" }));
    }
    Outcome {
        passed: violations == 0 && remarks.iter().all(|r| r.ends_with("reproduced")),
        detail: format!("{with_queue} graphs with a full B-queue, {violations} violations; {}", remarks.join(", ")),
    }
}

fn vertex_deleted_witness() -> Outcome {
    let h = fixture("fig1-h");
    let v = h.index_of("v").unwrap();
    let report = corefan(&h, CLASS_CAP).unwrap();
    let mut minus_v = SubgraphSelection::full(&h);
    minus_v.remove_vertex(v).unwrap();
    minus_v.strip_isolated();
    let certificate = min_cfan_degree(&minus_v).unwrap().map_or(0, |m| m.0);
    let witness_is_h_minus_v = report.witness_subgraph.as_ref() == Some(&minus_v);
    let h1 = corefan(&fixture("fig1-h1"), CLASS_CAP).unwrap().value;
    Outcome {
        passed: report.value >= 1 && certificate >= 1 && witness_is_h_minus_v && report.certify() && h1 <= 1,
        detail: format!(
            "corefan(H) = {}, witness is H-v: {witness_is_h_minus_v}, min cdeg on H-v = {certificate}, corefan(H_1) = {h1}",
            report.value
        ),
    }
}

fn greedy_matches_exhaustive() -> Outcome {
    let (mut graphs, mut disagreements) = (0, 0);
    for g in (1..=6).flat_map(simple_graphs) {
        graphs += 1;
        let greedy = greedy_full_bqueue(&g).unwrap();
        let exhaustive = exhaustive_full_bqueue(&g, 10).unwrap();
        let valid = greedy.as_ref().is_none_or(|q| q.validate().unwrap() && q.is_full());
        if greedy.is_some() != exhaustive.is_some() || !valid {
            disagreements += 1;
        }
    }
    Outcome { passed: disagreements == 0, detail: format!("{graphs} labelled graphs, {disagreements} disagreements") }
}

fn witness_construction() -> Outcome {
    let mut parts = Vec::new();
    let mut passed = true;
    for name in ["double-edge", "fig1-h"] {
        let h = fixture(name);
        let (g, plan) = construct_witness(&h, 0).unwrap();
        let report = verify_witness(&h, 0, &g, &plan);
        passed &= report.passed() && report.checks.len() == 4;
        parts.push(format!(
            "{name}: {} vertices, D = {}, r = {}, checks {}",
            g.vertex_count(),
            plan.d,
            plan.r,
            if report.passed() { "pass" } else { "fail" }
        ));
    }
    Outcome { passed, detail: parts.join("; ") }
}

fn self_certification() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(10);
    let (mut reports, mut mismatches) = (0, 0);
    while reports < 1000 {
        let n = rng.gen_range(2..=5);
        let mut g = Multigraph::with_vertices(n);
        for (u, v) in vertex_pairs(n) {
            if rng.gen_bool(0.5) {
                g.set_mult(u, v, rng.gen_range(1..=3)).unwrap();
            }
        }
        if g.class_count() > 6 {
            continue;
        }
        let core = corefan(&g, CLASS_CAP).unwrap();
        if !core.certify() || core.value != corefan_bruteforce(&g, BRUTE_CAP).unwrap() {
            mismatches += 1;
        }
        let fan = fan_number(&g, FAN_CAP).unwrap();
        if !fan.certify() {
            mismatches += 1;
        }
        reports += 2;
    }
    Outcome { passed: mismatches == 0, detail: format!("{reports} reports, {mismatches} mismatches") }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("fat-triangle sharpness", Duration::from_secs(5), fat_triangle_sharpness),
        ("forest 0-core graphs are class one", Duration::from_secs(60), forest_core_graphs),
        ("Ore and Fan bounds", Duration::from_secs(600), ore_and_fan_bounds),
        ("corefan reductions agree with brute force", Duration::MAX, corefan_reductions),
        ("constant-multiplicity lifting", Duration::MAX, constant_multiplicity_lifting),
        ("full B-queue implies corefan 0, converse fails", Duration::MAX, bqueue_implies_corefan_zero),
        ("corefan of the H-v example", Duration::MAX, vertex_deleted_witness),
        ("greedy B-queue equals exhaustive search", Duration::from_secs(300), greedy_matches_exhaustive),
        ("witness construction verified", Duration::from_secs(60), witness_construction),
        ("FanReports self-certify", Duration::MAX, self_certification),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let outcome = if *limit == Duration::MAX {
            Outcome { detail: format!("{}; {:.2?}", outcome.detail, start.elapsed()), ..outcome }
        } else {
            within(start.elapsed(), *limit, outcome)
        };
        failed += usize::from(!outcome.passed);
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if outcome.passed { "PASS" } else { "FAIL" },
            name,
            outcome.detail
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
