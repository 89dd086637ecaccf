//! Exhaustive generators for small graphs.

use crate::graph::{Multigraph, Vertex};

/// All unordered pairs `i < j` of `0..n` in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every labelled simple graph on vertices `0..n`.
pub fn simple_graphs(n: usize) -> impl Iterator<Item = Multigraph> {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() < 64, "too many pairs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| from_mask(n, &pairs, mask))
}

fn from_mask(n: usize, pairs: &[(Vertex, Vertex)], mask: u64) -> Multigraph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &(u, v))| (u, v, 1))
        .collect();
    Multigraph::from_edges(n, &edges).expect("pairs are valid")
}

/// One representative per isomorphism class of simple graphs on `n` vertices.
///
/// Canonical form is the smallest edge mask over all vertex permutations, so this
/// is only practical for `n <= 7`.
pub fn simple_graphs_up_to_iso(n: usize) -> Vec<Multigraph> {
    let pairs = vertex_pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |acc, (_, &(u, v))| {
                    acc | 1 << index[p[u]][p[v]]
                })
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            out.push(from_mask(n, &pairs, canon));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

/// Every labelled multigraph on `0..n` with at most `max_classes` parallel
/// classes, each of multiplicity in `1..=max_mult`.
pub fn multigraphs(n: usize, max_classes: usize, max_mult: u32) -> Vec<Multigraph> {
    let pairs = vertex_pairs(n);
    let mut out = Vec::new();
    let mut mults = vec![0u32; pairs.len()];
    fill(&pairs, 0, 0, max_classes, max_mult, &mut mults, n, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    pairs: &[(Vertex, Vertex)],
    at: usize,
    used: usize,
    max_classes: usize,
    max_mult: u32,
    mults: &mut Vec<u32>,
    n: usize,
    out: &mut Vec<Multigraph>,
) {
    if at == pairs.len() {
        let edges: Vec<_> =
            pairs.iter().zip(mults.iter()).filter(|(_, &m)| m > 0).map(|(&(u, v), &m)| (u, v, m)).collect();
        out.push(Multigraph::from_edges(n, &edges).expect("pairs are valid"));
        return;
    }
    mults[at] = 0;
    fill(pairs, at + 1, used, max_classes, max_mult, mults, n, out);
    if used < max_classes {
        for m in 1..=max_mult {
            mults[at] = m;
            fill(pairs, at + 1, used + 1, max_classes, max_mult, mults, n, out);
        }
        mults[at] = 0;
    }
}
