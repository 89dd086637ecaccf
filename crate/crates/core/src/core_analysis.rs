//! t-cores and the structural hypotheses that bound the chromatic index by `Δ + t`.

use std::collections::BTreeSet;

use crate::bqueue::greedy_full_bqueue;
use crate::error::Result;
use crate::graph::{Multigraph, Vertex};

/// Vertices `v` of `g` with `d(v) + μ(v) > Δ(g) + t`, in index order.
pub fn t_core_vertices(g: &Multigraph, t: u32) -> BTreeSet<Vertex> {
    let threshold = g.max_degree() as u64 + t as u64;
    g.vertices()
        .filter(|&v| (g.degree_unchecked(v) + g.vertex_mult_unchecked(v)) as u64 > threshold)
        .collect()
}

/// The t-core: the subgraph induced by the vertices with `d(v) + μ(v) > Δ + t`.
/// Degrees and multiplicities are measured in `g`; threshold vertices without
/// threshold neighbours remain as isolated core vertices.
pub fn t_core(g: &Multigraph, t: u32) -> Multigraph {
    g.induced(&t_core_vertices(g, t)).expect("core vertices belong to g")
}

/// The subgraph of `h` on all of its vertices keeping only the pairs of multiplicity above `t`.
pub fn edges_above(h: &Multigraph, t: u32) -> Multigraph {
    h.map_mults(|m| if m > t { m } else { 0 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreReport {
    pub t: u32,
    /// The t-core `H`.
    pub core: Multigraph,
    /// Largest multiplicity inside `H` (zero if edgeless).
    pub core_mult: u32,
    /// Simple graph `B` underlying the multiplicity-`(t+1)` pairs of `H`, on all of
    /// `V(H)`. Present only when `core_mult <= t + 1`.
    pub max_mult_simple: Option<Multigraph>,
}

impl CoreReport {
    pub fn new(g: &Multigraph, t: u32) -> Self {
        let core = t_core(g, t);
        let core_mult = core.max_mult();
        let max_mult_simple =
            (core_mult <= t + 1).then(|| edges_above(&core, t).underlying_simple());
        Self { t, core, core_mult, max_mult_simple }
    }
}

/// Outcome of a hypothesis check together with the core data it was based on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub holds: bool,
    pub report: CoreReport,
}

/// The t-core has multiplicity at most `t + 1` and its multiplicity-`(t+1)` pairs form a multiforest.
pub fn check_theorem4_hypothesis(g: &Multigraph, t: u32) -> HypothesisCheck {
    let report = CoreReport::new(g, t);
    let holds = report.max_mult_simple.as_ref().is_some_and(|b| b.is_multiforest());
    HypothesisCheck { holds, report }
}

/// The t-core has multiplicity at most `t + 1` and the simple graph `B` of its
/// multiplicity-`(t+1)` pairs has a full B-queue.
pub fn check_theorem5_hypothesis(g: &Multigraph, t: u32) -> Result<HypothesisCheck> {
    let report = CoreReport::new(g, t);
    let holds = match &report.max_mult_simple {
        Some(b) => greedy_full_bqueue(b)?.is_some(),
        None => false,
    };
    Ok(HypothesisCheck { holds, report })
}
