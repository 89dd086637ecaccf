//! Fan degree, fan number, cfan degree and corefan.
//!
//! Both degree notions are threshold searches: the smallest nonnegative
//! integer for which a family of sums over vertex sets `Z ⊆ N(x)` with
//! `y ∈ Z` is at most one. For a fixed threshold the worst `Z` is `y` plus
//! every other neighbour with a positive term, so the search never
//! enumerates subsets. The max-min numbers enumerate subgraphs and are
//! guarded by caps.
//!
//! Subgraph enumeration order is colexicographic over the per-class
//! multiplicity vector (class 0 varies fastest, classes in lexicographic
//! endpoint order). Ordered pairs are scanned class by class, `(u, v)` before
//! `(v, u)`. Ties keep the first candidate found.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Class, Multigraph, SubgraphSelection, Vertex};

/// Default cap on `Π (μ(e) + 1)` for [`fan_number`].
pub const DEFAULT_FAN_SUBGRAPH_CAP: u128 = 1 << 20;
/// Default cap on the number of parallel classes for [`corefan`] and [`lemma13_condition`].
pub const DEFAULT_COREFAN_CLASS_CAP: usize = 20;
/// Default cap on `Π (μ(e) + 1)` for [`corefan_bruteforce`].
pub const DEFAULT_BRUTE_SUBGRAPH_CAP: u128 = 1 << 16;

/// Which max-min number a [`FanReport`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    Fan,
    Corefan,
}

/// A threshold value together with a vertex set certifying it.
///
/// For a positive value, `z` violates the defining inequality one step below
/// the value. For a zero value, `z` is `{y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdWitness {
    pub value: u32,
    pub z: BTreeSet<Vertex>,
}

/// A max-min value with the maximising subgraph, the minimising pair and a `Z` set.
#[derive(Clone, Debug)]
pub struct FanReport<'g> {
    pub metric: Metric,
    pub value: u32,
    pub witness_subgraph: Option<SubgraphSelection<'g>>,
    pub witness_pair: Option<(Vertex, Vertex)>,
    pub witness_z: BTreeSet<Vertex>,
}

impl<'g> FanReport<'g> {
    fn edgeless(metric: Metric) -> Self {
        Self { metric, value: 0, witness_subgraph: None, witness_pair: None, witness_z: BTreeSet::new() }
    }

    /// Re-evaluates the defining sums on the witness and checks they reproduce `value`.
    pub fn certify(&self) -> bool {
        let (Some(sub), Some((x, y))) = (&self.witness_subgraph, self.witness_pair) else {
            return self.value == 0 && self.witness_z.is_empty();
        };
        if sub.mult(x, y) == 0 || !self.witness_z.contains(&y) {
            return false;
        }
        if self.witness_z.iter().any(|&z| sub.mult(x, z) == 0) {
            return false;
        }
        let degree = |a: Vertex, b: Vertex| match self.metric {
            Metric::Fan => fan_degree(sub, a, b).map(|w| w.value),
            Metric::Corefan => cfan_degree(sub, a, b).map(|w| w.value),
        };
        let mut min = u32::MAX;
        for ((u, v), _) in sub.pairs() {
            for (a, b) in [(u, v), (v, u)] {
                match degree(a, b) {
                    Ok(d) => min = min.min(d),
                    Err(_) => return false,
                }
            }
        }
        if min != self.value || degree(x, y).ok() != Some(self.value) {
            return false;
        }
        if self.value == 0 {
            return true;
        }
        let below = self.value as i64 - 1;
        let host = sub.parent();
        match self.metric {
            Metric::Corefan => {
                let sum: i64 = self
                    .witness_z
                    .iter()
                    .map(|&z| {
                        sub.degree(z) as i64 - host.degree_unchecked(z) as i64 + sub.mult(x, z) as i64 - below
                    })
                    .sum();
                sum > 1
            }
            Metric::Fan => {
                let sum: i64 = self
                    .witness_z
                    .iter()
                    .map(|&z| sub.degree(z) as i64 + sub.mult(x, z) as i64 - below)
                    .sum();
                let cond_i = sub.degree(x) as i64 + sub.degree(y) as i64 - sub.mult(x, y) as i64;
                self.witness_z.len() >= 2 && sum >= 2 && cond_i > below
            }
        }
    }
}

/// Smallest `l >= 0` with `(y_term - l) + Σ max(0, o - l) <= 1`.
fn cfan_threshold(y_term: i64, others: &[i64]) -> u32 {
    let upper = others.iter().copied().fold(y_term, i64::max).max(0);
    (0..=upper)
        .find(|&l| (y_term - l) + others.iter().map(|&o| (o - l).max(0)).sum::<i64>() <= 1)
        .unwrap_or(upper) as u32
}

/// Largest sum over `Z ⊆ others ∪ {y}` with `y ∈ Z` and `|Z| >= 2`, at threshold `k`.
fn worst_pair_sum(y_term: i64, others: &[i64], k: i64) -> Option<i64> {
    if others.is_empty() {
        return None;
    }
    let positive: i64 = others.iter().map(|&o| (o - k).max(0)).sum();
    let rest = if positive > 0 { positive } else { others.iter().map(|&o| o - k).max().unwrap() };
    Some(y_term - k + rest)
}

/// Smallest `k >= 0` such that `k >= cond_i` or every admissible `Z` sums to at most one.
fn fan_threshold(cond_i: i64, y_term: i64, others: &[i64]) -> u32 {
    let upper = cond_i.max(0);
    (0..=upper)
        .find(|&k| k >= cond_i || worst_pair_sum(y_term, others, k).is_none_or(|s| s <= 1))
        .unwrap_or(upper) as u32
}

/// Dense view of a graph's parallel classes for fast subgraph enumeration.
pub(crate) struct Table {
    pub(crate) classes: Vec<Class>,
    /// For every vertex: `(neighbour, class index)` in neighbour order.
    pub(crate) incident: Vec<Vec<(Vertex, usize)>>,
}

impl Table {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let classes: Vec<Class> = g.classes().collect();
        let mut incident = vec![Vec::new(); g.vertex_count()];
        for (i, c) in classes.iter().enumerate() {
            incident[c.u].push((c.v, i));
            incident[c.v].push((c.u, i));
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        Self { classes, incident }
    }

    pub(crate) fn degrees(&self, a: &[u32], out: &mut [i64]) {
        out.iter_mut().for_each(|d| *d = 0);
        for (c, &m) in self.classes.iter().zip(a) {
            out[c.u] += m as i64;
            out[c.v] += m as i64;
        }
    }

    fn subgraph_count(&self) -> u128 {
        self.classes.iter().fold(1u128, |acc, c| acc.saturating_mul(c.mult as u128 + 1))
    }

    /// cdeg for the ordered pair `(x, y)` of class `cxy`, with host degrees `host`.
    fn cdeg(&self, a: &[u32], deg: &[i64], host: &[i64], x: Vertex, y: Vertex, buf: &mut Vec<i64>) -> u32 {
        buf.clear();
        let mut y_term = 0;
        for &(z, ci) in &self.incident[x] {
            let m = a[ci];
            if m == 0 {
                continue;
            }
            let term = deg[z] - host[z] + m as i64;
            if z == y {
                y_term = term;
            } else {
                buf.push(term);
            }
        }
        cfan_threshold(y_term, buf)
    }

    pub(crate) fn fdeg(&self, a: &[u32], deg: &[i64], x: Vertex, y: Vertex, cxy: usize, buf: &mut Vec<i64>) -> u32 {
        buf.clear();
        let mut y_term = 0;
        for &(z, ci) in &self.incident[x] {
            let m = a[ci];
            if m == 0 {
                continue;
            }
            let term = deg[z] + m as i64;
            if z == y {
                y_term = term;
            } else {
                buf.push(term);
            }
        }
        let cond_i = deg[x] + deg[y] - a[cxy] as i64;
        fan_threshold(cond_i, y_term, buf)
    }

    /// Minimum of `eval` over ordered pairs of the assignment, abandoning once it drops to `floor`.
    fn min_over_pairs(
        &self,
        a: &[u32],
        floor: Option<u32>,
        mut eval: impl FnMut(Vertex, Vertex, usize) -> u32,
    ) -> Option<(u32, (Vertex, Vertex))> {
        let mut best: Option<(u32, (Vertex, Vertex))> = None;
        for (ci, c) in self.classes.iter().enumerate() {
            if a[ci] == 0 {
                continue;
            }
            for (x, y) in [(c.u, c.v), (c.v, c.u)] {
                let d = eval(x, y, ci);
                if best.is_none_or(|(b, _)| d < b) {
                    best = Some((d, (x, y)));
                    if floor.is_some_and(|f| d <= f) {
                        return best;
                    }
                }
            }
        }
        best
    }
}

/// Odometer over `0..=bound[i]` per coordinate, coordinate 0 fastest, skipping the all-zero vector.
fn next_assignment(a: &mut [u32], bound: &[u32]) -> bool {
    for (x, &b) in a.iter_mut().zip(bound) {
        if *x < b {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}

/// Shared max-min driver. `full_only` restricts to full-multiplicity subgraphs.
fn max_min(
    g: &Multigraph,
    table: &Table,
    full_only: bool,
    mut eval: impl FnMut(&[u32], &[i64], Vertex, Vertex, usize) -> u32,
) -> Option<(u32, Vec<u32>, (Vertex, Vertex))> {
    let bound: Vec<u32> =
        table.classes.iter().map(|c| if full_only { 1 } else { c.mult }).collect();
    let mut step = vec![0u32; bound.len()];
    let mut a = vec![0u32; bound.len()];
    let mut deg = vec![0i64; g.vertex_count()];
    let mut best: Option<(u32, Vec<u32>, (Vertex, Vertex))> = None;
    while next_assignment(&mut step, &bound) {
        for ((ai, &s), c) in a.iter_mut().zip(&step).zip(&table.classes) {
            *ai = if full_only { s * c.mult } else { s };
        }
        table.degrees(&a, &mut deg);
        let floor = best.as_ref().map(|b| b.0);
        let Some((value, pair)) = table.min_over_pairs(&a, floor, |x, y, ci| eval(&a, &deg, x, y, ci))
        else {
            continue;
        };
        if floor.is_none_or(|f| value > f) {
            best = Some((value, a.clone(), pair));
        }
    }
    best
}

fn check_subgraph_cap(table: &Table, cap: u128) -> Result<()> {
    let needed = table.subgraph_count();
    if needed > cap {
        return Err(Error::Resource { what: "subgraph enumeration", needed, cap });
    }
    Ok(())
}

fn check_class_cap(table: &Table, cap: usize) -> Result<()> {
    if table.classes.len() > cap {
        return Err(Error::Resource {
            what: "parallel classes",
            needed: table.classes.len() as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// Terms `(z, term)` for every neighbour of `x` in the selection.
fn neighbour_terms(
    sel: &SubgraphSelection<'_>,
    x: Vertex,
    term: impl Fn(Vertex, u32) -> i64,
) -> Vec<(Vertex, i64)> {
    sel.neighbours(x).into_iter().map(|(z, m)| (z, term(z, m))).collect()
}

fn require_edge(sel: &SubgraphSelection<'_>, x: Vertex, y: Vertex) -> Result<()> {
    sel.parent().check_vertex(x)?;
    sel.parent().check_vertex(y)?;
    if sel.mult(x, y) == 0 {
        return Err(Error::domain(format!(
            "`{} {}` is not an edge of the selection",
            sel.parent().label(x),
            sel.parent().label(y)
        )));
    }
    Ok(())
}

/// Fan degree `deg_J(x, y)` of an edge of `j`, with a certifying `Z`.
pub fn fan_degree(j: &SubgraphSelection<'_>, x: Vertex, y: Vertex) -> Result<ThresholdWitness> {
    require_edge(j, x, y)?;
    let terms = neighbour_terms(j, x, |z, m| j.degree(z) as i64 + m as i64);
    let y_term = terms.iter().find(|(z, _)| *z == y).map(|t| t.1).unwrap();
    let others: Vec<(Vertex, i64)> = terms.into_iter().filter(|(z, _)| *z != y).collect();
    let other_terms: Vec<i64> = others.iter().map(|t| t.1).collect();
    let cond_i = j.degree(x) as i64 + j.degree(y) as i64 - j.mult(x, y) as i64;
    let value = fan_threshold(cond_i, y_term, &other_terms);
    let mut z = BTreeSet::from([y]);
    if value > 0 {
        let k = value as i64 - 1;
        z.extend(others.iter().filter(|(_, t)| *t > k).map(|(v, _)| *v));
        if z.len() < 2 {
            // no positive term among the others: take the largest, first in index order
            let (best, _) = others.iter().fold(others[0], |acc, &o| if o.1 > acc.1 { o } else { acc });
            z.insert(best);
        }
    }
    Ok(ThresholdWitness { value, z })
}

/// cfan degree `cdeg_{H,K}(x, y)` of an edge of `k`, where `H` is `k`'s parent.
pub fn cfan_degree(k: &SubgraphSelection<'_>, x: Vertex, y: Vertex) -> Result<ThresholdWitness> {
    require_edge(k, x, y)?;
    let host = k.parent();
    let terms = neighbour_terms(k, x, |z, m| {
        k.degree(z) as i64 - host.degree_unchecked(z) as i64 + m as i64
    });
    let y_term = terms.iter().find(|(z, _)| *z == y).map(|t| t.1).unwrap();
    let others: Vec<(Vertex, i64)> = terms.into_iter().filter(|(z, _)| *z != y).collect();
    let other_terms: Vec<i64> = others.iter().map(|t| t.1).collect();
    let value = cfan_threshold(y_term, &other_terms);
    let mut z = BTreeSet::from([y]);
    if value > 0 {
        let l = value as i64 - 1;
        z.extend(others.iter().filter(|(_, t)| *t > l).map(|(v, _)| *v));
    }
    Ok(ThresholdWitness { value, z })
}

/// Minimum cfan degree over the ordered pairs of `k`, with the first minimising pair.
pub fn min_cfan_degree(k: &SubgraphSelection<'_>) -> Result<Option<(u32, (Vertex, Vertex))>> {
    let mut best: Option<(u32, (Vertex, Vertex))> = None;
    for ((u, v), _) in k.pairs() {
        for (x, y) in [(u, v), (v, u)] {
            let d = cfan_degree(k, x, y)?.value;
            if best.is_none_or(|(b, _)| d < b) {
                best = Some((d, (x, y)));
            }
        }
    }
    Ok(best)
}

fn report_from<'g>(
    g: &'g Multigraph,
    metric: Metric,
    best: Option<(u32, Vec<u32>, (Vertex, Vertex))>,
) -> Result<FanReport<'g>> {
    let Some((value, a, (x, y))) = best else { return Ok(FanReport::edgeless(metric)) };
    let mut sub = SubgraphSelection::from_class_mults(g, &a)?;
    sub.strip_isolated();
    let witness = match metric {
        Metric::Fan => fan_degree(&sub, x, y)?,
        Metric::Corefan => cfan_degree(&sub, x, y)?,
    };
    debug_assert_eq!(witness.value, value);
    Ok(FanReport {
        metric,
        value,
        witness_subgraph: Some(sub),
        witness_pair: Some((x, y)),
        witness_z: witness.z,
    })
}

/// Fan number: the maximum over edge-nonempty sub-multiplicity assignments `J`
/// of the minimum fan degree over ordered pairs of `J`; zero for edgeless graphs.
pub fn fan_number(g: &Multigraph, cap: u128) -> Result<FanReport<'_>> {
    let table = Table::new(g);
    check_subgraph_cap(&table, cap)?;
    let mut buf = Vec::new();
    let best = max_min(g, &table, false, |a, deg, x, y, ci| table.fdeg(a, deg, x, y, ci, &mut buf));
    report_from(g, Metric::Fan, best)
}

/// `max(Δ(g), fan(g))`, the fan-based upper bound on the chromatic index.
pub fn fan_bound(g: &Multigraph, cap: u128) -> Result<u32> {
    Ok(g.max_degree().max(fan_number(g, cap)?.value))
}

/// Corefan, maximising over nonempty full-multiplicity subgraphs only.
pub fn corefan(h: &Multigraph, class_cap: usize) -> Result<FanReport<'_>> {
    let table = Table::new(h);
    check_class_cap(&table, class_cap)?;
    let host: Vec<i64> = h.degrees().into_iter().map(i64::from).collect();
    let mut buf = Vec::new();
    let best = max_min(h, &table, true, |a, deg, x, y, _| table.cdeg(a, deg, &host, x, y, &mut buf));
    report_from(h, Metric::Corefan, best)
}

/// Corefan by enumeration of every nonempty sub-multiplicity assignment.
pub fn corefan_bruteforce(h: &Multigraph, cap: u128) -> Result<u32> {
    let table = Table::new(h);
    check_subgraph_cap(&table, cap)?;
    let host: Vec<i64> = h.degrees().into_iter().map(i64::from).collect();
    let mut buf = Vec::new();
    let best = max_min(h, &table, false, |a, deg, x, y, _| table.cdeg(a, deg, &host, x, y, &mut buf));
    Ok(best.map_or(0, |b| b.0))
}

/// `Z(K)`: vertices of `k` whose degree in `k` equals their degree in the parent.
pub fn zset(k: &SubgraphSelection<'_>) -> BTreeSet<Vertex> {
    let host = k.parent();
    k.vertices().filter(|&v| k.degree(v) == host.degree_unchecked(v)).collect()
}

/// One full-multiplicity subgraph examined by [`lemma13_condition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantMultCase {
    /// Inclusion flag per parallel class, aligned with `h.classes()`.
    pub classes: Vec<bool>,
    /// First ordered pair `(x, y)` with `|(N_H(x) ∩ Z(K)) - y| <= d_H(y) - d_K(y)`.
    pub qualifying_pair: Option<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantMultReport {
    pub cases: Vec<ConstantMultCase>,
    pub holds: bool,
}

/// For a graph of constant multiplicity `t + 1`, checks every nonempty
/// full-multiplicity subgraph `K` for an edge `xy` with
/// `|(N_H(x) ∩ Z(K)) - y| <= d_H(y) - d_K(y)`.
pub fn lemma13_condition(h: &Multigraph, t: u32, class_cap: usize) -> Result<ConstantMultReport> {
    if let Some(c) = h.classes().find(|c| c.mult != t + 1) {
        return Err(Error::domain(format!(
            "expected constant multiplicity {}, found {} on `{} {}`",
            t + 1,
            c.mult,
            h.label(c.u),
            h.label(c.v)
        )));
    }
    let table = Table::new(h);
    check_class_cap(&table, class_cap)?;
    let host: Vec<i64> = h.degrees().into_iter().map(i64::from).collect();
    let bound = vec![1u32; table.classes.len()];
    let mut step = vec![0u32; bound.len()];
    let mut a = vec![0u32; bound.len()];
    let mut deg = vec![0i64; h.vertex_count()];
    let mut cases = Vec::new();
    while next_assignment(&mut step, &bound) {
        for ((ai, &s), c) in a.iter_mut().zip(&step).zip(&table.classes) {
            *ai = s * c.mult;
        }
        table.degrees(&a, &mut deg);
        let in_z: Vec<bool> = h.vertices().map(|v| deg[v] == host[v]).collect();
        let mut qualifying = None;
        'pairs: for (ci, c) in table.classes.iter().enumerate() {
            if a[ci] == 0 {
                continue;
            }
            for (x, y) in [(c.u, c.v), (c.v, c.u)] {
                let lhs = h.neighbours(x).filter(|&(z, _)| z != y && in_z[z]).count() as i64;
                if lhs <= host[y] - deg[y] {
                    qualifying = Some((x, y));
                    break 'pairs;
                }
            }
        }
        cases.push(ConstantMultCase { classes: step.iter().map(|&s| s == 1).collect(), qualifying_pair: qualifying });
    }
    let holds = cases.iter().all(|c| c.qualifying_pair.is_some());
    Ok(ConstantMultReport { cases, holds })
}
