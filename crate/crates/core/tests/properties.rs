use std::collections::BTreeSet;

use fancore::bqueue::greedy_full_bqueue;
use fancore::colouring::{chromatic_index_exact, fan_colouring};
use fancore::core_analysis::{check_theorem4_hypothesis, check_theorem5_hypothesis, edges_above, t_core};
use fancore::enumerate::{multigraphs, simple_graphs, vertex_pairs};
use fancore::fan::{corefan, fan_bound, fan_number, lemma13_condition};
use fancore::graph::{Multigraph, SubgraphSelection};
use fancore::witness::{construct_witness, verify_witness};
use proptest::prelude::*;

fn multigraph(max_n: usize, max_mult: u32) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = vertex_pairs(n);
        proptest::collection::vec(prop_oneof![2 => Just(0u32), 3 => 1..=max_mult], pairs.len()).prop_map(move |ms| {
            let edges: Vec<_> =
                pairs.iter().zip(ms).filter(|(_, m)| *m > 0).map(|(&(u, v), m)| (u, v, m)).collect();
            Multigraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn fixture(name: &str) -> Multigraph {
    let path = format!("{}/fixtures/{name}.graph", env!("CARGO_MANIFEST_DIR"));
    Multigraph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_dominates_multiplicity(g in multigraph(7, 4)) {
        for v in g.vertices() {
            prop_assert!(g.degree(v).unwrap() >= g.vertex_mult(v).unwrap());
        }
    }

    #[test]
    fn serialization_is_canonical(g in multigraph(7, 4)) {
        let text = g.serialize();
        let back = Multigraph::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn induced_is_monotone(g in multigraph(6, 3), mask in 0u32..64, extra in 0u32..64) {
        let small: BTreeSet<_> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        let large: BTreeSet<_> = g.vertices().filter(|&v| (mask | extra) >> v & 1 == 1).collect();
        let (a, b) = (g.induced(&small).unwrap(), g.induced(&large).unwrap());
        for c in a.classes() {
            let (u, v) = (b.index_of(a.label(c.u)).unwrap(), b.index_of(a.label(c.v)).unwrap());
            prop_assert_eq!(b.mult(u, v), c.mult);
        }
        prop_assert_eq!(g.induced(&g.vertices().collect()).unwrap(), g.clone());
    }

    #[test]
    fn selections_never_exceed_parent_degrees(g in multigraph(6, 3), cut in proptest::collection::vec(0u32..4, 15)) {
        let mults: Vec<u32> = g.classes().zip(cut.iter().cycle()).map(|(c, &k)| c.mult.saturating_sub(k)).collect();
        let sel = SubgraphSelection::from_class_mults(&g, &mults).unwrap();
        let k = sel.materialize();
        for v in k.vertices() {
            let p = g.index_of(k.label(v)).unwrap();
            prop_assert!(k.degree(v).unwrap() <= g.degree(p).unwrap());
        }
    }

    #[test]
    fn t_cores_shrink_and_recheck(g in multigraph(7, 4)) {
        let delta = g.max_degree();
        let mut previous: Option<BTreeSet<String>> = None;
        for t in 0..=delta + g.max_mult() {
            let core = t_core(&g, t);
            let labels: BTreeSet<String> = core.labels().iter().cloned().collect();
            if let Some(prev) = &previous {
                prop_assert!(labels.is_subset(prev));
            }
            for l in &labels {
                let v = g.index_of(l).unwrap();
                prop_assert!(g.degree(v).unwrap() + g.vertex_mult(v).unwrap() > delta + t);
            }
            let above = edges_above(&g, t);
            prop_assert_eq!(above.labels(), g.labels());
            previous = Some(labels);
        }
        prop_assert_eq!(t_core(&g, delta + g.max_mult()).vertex_count(), 0);
    }

    #[test]
    fn fan_colouring_meets_degree_bounds(g in multigraph(8, 4)) {
        for k in [g.ore_bound(), g.max_degree() + g.max_mult()] {
            let c = fan_colouring(&g, k).unwrap();
            prop_assert!(c.as_ref().is_some_and(|c| c.verify()), "failed at k = {}", k);
            prop_assert_eq!(c, fan_colouring(&g, k).unwrap());
        }
    }

    #[test]
    fn exact_and_constructive_colourings_agree(g in multigraph(5, 3)) {
        prop_assume!(g.edge_count() <= 16);
        let (chi, c) = chromatic_index_exact(&g, 24).unwrap();
        prop_assert!(c.verify() && c.k == chi);
        prop_assert!(chi <= g.ore_bound());
        for k in g.max_degree()..=g.ore_bound() {
            if fan_colouring(&g, k).unwrap().is_some() {
                prop_assert!(chi <= k);
            }
        }
    }

    #[test]
    fn greedy_bqueues_validate(g in multigraph(9, 1)) {
        if let Some(q) = greedy_full_bqueue(&g).unwrap() {
            prop_assert!(q.validate().unwrap() && q.is_full());
        }
    }
}

#[test]
fn hypotheses_bound_the_chromatic_index() {
    for g in (2..=4).flat_map(|n| multigraphs(n, 4, 3)) {
        let (chi, _) = chromatic_index_exact(&g, 24).unwrap();
        let fan = fan_bound(&g, 1 << 20).unwrap();
        let delta = g.max_degree();
        for t in 0..=3 {
            let th4 = check_theorem4_hypothesis(&g, t).holds;
            let th5 = check_theorem5_hypothesis(&g, t).unwrap().holds;
            assert!(!th4 || th5, "multiforest hypothesis without B-queue hypothesis:\n{g}");
            if th5 {
                assert!(chi <= delta + t, "t = {t}:\n{g}");
                assert!(corefan(&t_core(&g, t), 20).unwrap().value <= t, "t = {t}:\n{g}");
            }
            if corefan(&t_core(&g, t), 20).unwrap().value <= t {
                assert!(fan <= delta + t, "t = {t}:\n{g}");
            }
        }
    }
}

#[test]
fn constant_multiplicity_condition_matches_corefan() {
    for b in (2..=5).flat_map(simple_graphs) {
        for t in 0..=2u32 {
            let h = b.map_mults(|_| t + 1);
            let condition = lemma13_condition(&h, t, 20).unwrap().holds;
            assert_eq!(condition, corefan(&h, 20).unwrap().value <= t, "t = {t}:\n{h}");
        }
    }
}

#[test]
fn lifting_holds_up_to_multiplicity_four() {
    for b in (2..=4).flat_map(simple_graphs) {
        let values: Vec<u32> = (0..=3u32).map(|s| corefan(&b.map_mults(|_| s + 1), 20).unwrap().value).collect();
        for s in 0..=3usize {
            for t in s + 1..=3 {
                assert!(values[s] > s as u32 || values[t] <= t as u32, "s = {s}, t = {t}:\n{b}");
            }
        }
    }
}

#[test]
fn reported_values_are_bounded() {
    for g in (2..=4).flat_map(|n| multigraphs(n, 4, 3)) {
        let bound = g.max_degree() + g.max_mult();
        assert!(corefan(&g, 20).unwrap().value <= bound);
        assert!(fan_number(&g, 1 << 20).unwrap().value <= bound);
    }
}

#[test]
fn witnesses_verify_for_every_fixture_with_large_corefan() {
    let mut built = 0;
    for name in ["double-edge", "fig1-h", "fig1-h1", "c3", "fat-triangle-t0", "fat-triangle-t1"] {
        let h = fixture(name);
        let value = corefan(&h, 20).unwrap().value;
        for t in 0..value {
            let (g, plan) = construct_witness(&h, t).unwrap();
            assert!(plan.conditions_hold(h.max_degree()));
            let report = verify_witness(&h, t, &g, &plan);
            assert!(report.passed(), "{name}, t = {t}:\n{report}");
            built += 1;
        }
        assert!(construct_witness(&h, value).is_err());
    }
    assert!(built >= 3);
}
