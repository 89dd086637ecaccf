//! Proper edge-colourings of multigraphs.
//!
//! [`fan_colouring`] is a constructive colourer built on multigraph Vizing
//! fans: an uncoloured edge `xy` is coloured by rotating colours along a fan
//! at `x`, after at most one alternating-path (Kempe chain) swap. When the
//! fan at `x` is maximal and its missing-colour sets are pairwise disjoint,
//! the fan inequality holds at `x`; that cannot happen once
//! `k >= max_v d(v) + μ(v)`, nor when the edge's fan degree is at most `k`.
//! Edges are therefore inserted in the reverse of a minimum-fan-degree
//! peeling order, so the colourer succeeds whenever `k` is at least the fan
//! number bound.
//!
//! [`chromatic_index_exact`] is an independent backtracking oracle.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fan::Table;
use crate::graph::{Multigraph, Vertex};

/// Default cap on the number of edge instances for [`chromatic_index_exact`].
pub const DEFAULT_INSTANCE_CAP: u64 = 24;

/// A colour in `1..=k` for every copy of every parallel class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring<'g> {
    pub graph: &'g Multigraph,
    pub k: u32,
    /// Keyed by `(u, v)` with `u < v`; one colour per copy, in copy order.
    pub assignment: BTreeMap<(Vertex, Vertex), Vec<u32>>,
}

impl<'g> EdgeColouring<'g> {
    /// Checks totality and properness.
    pub fn verify(&self) -> bool {
        let total = self.graph.classes().all(|c| {
            self.assignment
                .get(&(c.u, c.v))
                .is_some_and(|cols| cols.len() == c.mult as usize && cols.iter().all(|&x| x >= 1 && x <= self.k))
        });
        if !total || self.assignment.len() != self.graph.class_count() {
            return false;
        }
        let mut seen = vec![Vec::<u32>::new(); self.graph.vertex_count()];
        for (&(u, v), cols) in &self.assignment {
            for &c in cols {
                for w in [u, v] {
                    if seen[w].contains(&c) {
                        return false;
                    }
                    seen[w].push(c);
                }
            }
        }
        true
    }

    /// Number of distinct colours actually used.
    pub fn colours_used(&self) -> u32 {
        let mut cols: Vec<u32> = self.assignment.values().flatten().copied().collect();
        cols.sort_unstable();
        cols.dedup();
        cols.len() as u32
    }

    /// `<u> <v> <copy> <colour>` lines in class order.
    pub fn to_lines(&self) -> Vec<String> {
        self.assignment
            .iter()
            .flat_map(|(&(u, v), cols)| {
                cols.iter().enumerate().map(move |(i, c)| {
                    format!("{} {} {} {}", self.graph.label(u), self.graph.label(v), i, c)
                })
            })
            .collect()
    }

    /// Parses lines produced by [`EdgeColouring::to_lines`].
    pub fn from_lines(graph: &'g Multigraph, k: u32, text: &str) -> Result<Self> {
        let mut assignment: BTreeMap<(Vertex, Vertex), Vec<(usize, u32)>> = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let [a, b, copy, col] = toks[..] else {
                return Err(Error::parse(i + 1, format!("malformed colouring line `{line}`")));
            };
            let lookup = |l: &str| {
                graph.index_of(l).ok_or_else(|| Error::parse(i + 1, format!("unknown vertex `{l}`")))
            };
            let (u, v) = (lookup(a)?, lookup(b)?);
            let copy: usize = copy.parse().map_err(|_| Error::parse(i + 1, "bad copy index"))?;
            let col: u32 = col.parse().map_err(|_| Error::parse(i + 1, "bad colour"))?;
            assignment.entry(crate::graph::pair(u, v)).or_default().push((copy, col));
        }
        let assignment = assignment
            .into_iter()
            .map(|(p, mut cols)| {
                cols.sort_unstable();
                (p, cols.into_iter().map(|c| c.1).collect())
            })
            .collect();
        Ok(Self { graph, k, assignment })
    }
}

/// Mutable partial colouring indexed by edge instance; colours are `0..k` internally.
struct Palette {
    ends: Vec<(Vertex, Vertex)>,
    colour: Vec<Option<usize>>,
    /// `at[v][c]`: the instance coloured `c` at `v`.
    at: Vec<Vec<Option<usize>>>,
    k: usize,
}

impl Palette {
    fn new(n: usize, k: usize, ends: Vec<(Vertex, Vertex)>) -> Self {
        let m = ends.len();
        Self { ends, colour: vec![None; m], at: vec![vec![None; k]; n], k }
    }

    fn other(&self, e: usize, v: Vertex) -> Vertex {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn missing(&self, v: Vertex, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn first_missing(&self, v: Vertex) -> Option<usize> {
        (0..self.k).find(|&c| self.missing(v, c))
    }

    fn common_missing(&self, a: Vertex, b: Vertex) -> Option<usize> {
        (0..self.k).find(|&c| self.missing(a, c) && self.missing(b, c))
    }

    fn set(&mut self, e: usize, c: usize) {
        let (a, b) = self.ends[e];
        debug_assert!(self.colour[e].is_none() && self.missing(a, c) && self.missing(b, c));
        self.colour[e] = Some(c);
        self.at[a][c] = Some(e);
        self.at[b][c] = Some(e);
    }

    fn clear(&mut self, e: usize) {
        if let Some(c) = self.colour[e].take() {
            let (a, b) = self.ends[e];
            self.at[a][c] = None;
            self.at[b][c] = None;
        }
    }

    /// Follows the path alternating `first`, `second`, ... from `start`; returns edges and end vertex.
    fn alternating_path(&self, start: Vertex, first: usize, second: usize) -> (Vec<usize>, Vertex) {
        let mut edges = Vec::new();
        let (mut v, mut c) = (start, first);
        while let Some(e) = self.at[v][c] {
            if edges.len() > self.ends.len() {
                break;
            }
            edges.push(e);
            v = self.other(e, v);
            c = if c == first { second } else { first };
        }
        (edges, v)
    }

    /// Exchanges colours `a` and `b` on the given edges.
    fn swap(&mut self, edges: &[usize], a: usize, b: usize) {
        let old: Vec<usize> = edges.iter().map(|&e| self.colour[e].unwrap()).collect();
        for &e in edges {
            self.clear(e);
        }
        for (&e, &c) in edges.iter().zip(&old) {
            self.set(e, if c == a { b } else { a });
        }
    }

    /// Every edge in the `(a, b)`-component containing `v`.
    fn component(&self, v: Vertex, a: usize, b: usize) -> Vec<usize> {
        let mut seen = vec![false; self.ends.len()];
        let mut stack = vec![v];
        let mut edges = Vec::new();
        while let Some(w) = stack.pop() {
            for c in [a, b] {
                if let Some(e) = self.at[w][c] {
                    if !seen[e] {
                        seen[e] = true;
                        edges.push(e);
                        stack.push(self.other(e, w));
                    }
                }
            }
        }
        edges
    }
}

/// A fan at a centre vertex: distinct neighbours with their fan edges.
struct Fan {
    vertices: Vec<Vertex>,
    edges: Vec<usize>,
    /// `pred[i]`: an earlier fan position whose vertex misses the colour of `edges[i]`.
    pred: Vec<usize>,
}

impl Fan {
    fn chain(&self, head: usize) -> Vec<usize> {
        let mut chain = vec![head];
        let mut i = head;
        while i != 0 {
            i = self.pred[i];
            chain.push(i);
        }
        chain
    }
}

/// Shifts colours down the predecessor chain of `head`, giving `head`'s edge colour `alpha`.
fn shift(p: &mut Palette, fan: &Fan, head: usize, alpha: usize) {
    let chain = fan.chain(head);
    let old: Vec<Option<usize>> = chain.iter().map(|&i| p.colour[fan.edges[i]]).collect();
    for &i in &chain {
        p.clear(fan.edges[i]);
    }
    p.set(fan.edges[chain[0]], alpha);
    for s in 1..chain.len() {
        p.set(fan.edges[chain[s]], old[s - 1].expect("chain edges above the root are coloured"));
    }
}

fn chain_is_valid(p: &Palette, fan: &Fan, head: usize, alpha: usize) -> bool {
    if !p.missing(fan.vertices[head], alpha) {
        return false;
    }
    fan.chain(head).iter().all(|&i| {
        i == 0 || p.colour[fan.edges[i]].is_some_and(|c| p.missing(fan.vertices[fan.pred[i]], c))
    })
}

/// Tries to colour the uncoloured instance `e0` with a fan centred at `x`.
fn fan_recolour(p: &mut Palette, e0: usize, x: Vertex) -> bool {
    let n = p.at.len();
    let y0 = p.other(e0, x);
    let mut fan = Fan { vertices: vec![y0], edges: vec![e0], pred: vec![0] };
    let mut pos: Vec<Option<usize>> = vec![None; n];
    pos[y0] = Some(0);
    loop {
        let newest = fan.vertices.len() - 1;
        if let Some(alpha) = p.common_missing(x, fan.vertices[newest]) {
            shift(p, &fan, newest, alpha);
            return true;
        }
        let extension = (0..p.k).find_map(|c| {
            let e = p.at[x][c]?;
            let w = p.other(e, x);
            if pos[w].is_some() {
                return None;
            }
            let j = fan.vertices.iter().position(|&y| p.missing(y, c))?;
            Some((w, e, j))
        });
        match extension {
            Some((w, e, j)) => {
                pos[w] = Some(fan.vertices.len());
                fan.vertices.push(w);
                fan.edges.push(e);
                fan.pred.push(j);
            }
            None => break,
        }
    }

    // Maximal fan with m(x) disjoint from every m(y). Look for two fan
    // vertices sharing a missing colour.
    let Some(alpha) = p.first_missing(x) else { return false };
    let shared = (0..p.k).find_map(|beta| {
        let mut holders = fan.vertices.iter().enumerate().filter(|(_, &y)| p.missing(y, beta));
        let (i, _) = holders.next()?;
        let (j, _) = holders.next()?;
        Some((beta, i, j))
    });
    let Some((beta, i, j)) = shared else { return false };
    let (_, x_end) = p.alternating_path(x, beta, alpha);
    let c = if x_end != fan.vertices[j] { j } else { i };
    let (path, w) = p.alternating_path(fan.vertices[c], alpha, beta);
    p.swap(&path, alpha, beta);
    let mut candidates = vec![c];
    if let Some(m) = pos[w] {
        if m != c {
            candidates.push(m);
        }
    }
    for head in candidates {
        if chain_is_valid(p, &fan, head, alpha) {
            shift(p, &fan, head, alpha);
            return true;
        }
    }
    debug_assert!(false, "one of the two fan chains stays valid after the swap");
    false
}

/// Removal order: repeatedly drop one copy of the class whose ordered pair has
/// minimum fan degree in the remaining graph. Returns `(class, centre)` pairs in removal order.
fn peeling_order(g: &Multigraph, table: &Table) -> Vec<(usize, Vertex)> {
    let mut a: Vec<u32> = table.classes.iter().map(|c| c.mult).collect();
    let mut deg: Vec<i64> = vec![0; g.vertex_count()];
    table.degrees(&a, &mut deg);
    let total: u32 = a.iter().sum();
    let mut order = Vec::with_capacity(total as usize);
    let mut buf = Vec::new();
    for _ in 0..total {
        let mut best: Option<(u32, usize, Vertex)> = None;
        for (ci, c) in table.classes.iter().enumerate() {
            if a[ci] == 0 {
                continue;
            }
            for (x, y) in [(c.u, c.v), (c.v, c.u)] {
                let d = table.fdeg(&a, &deg, x, y, ci, &mut buf);
                if best.is_none_or(|b| d < b.0) {
                    best = Some((d, ci, x));
                }
            }
        }
        let (_, ci, x) = best.expect("edges remain");
        a[ci] -= 1;
        let c = table.classes[ci];
        deg[c.u] -= 1;
        deg[c.v] -= 1;
        order.push((ci, x));
    }
    order
}

/// Colours `g` with `k >= Δ(g)` colours by fan recolouring.
///
/// Always succeeds when `k >= max_v d(v) + μ(v)` or `k >= fan(g)`. Below
/// those bounds each stuck edge gets `|V| * k` perturbation attempts before
/// the colourer gives up and returns `None`.
pub fn fan_colouring(g: &Multigraph, k: u32) -> Result<Option<EdgeColouring<'_>>> {
    let delta = g.max_degree();
    if k < delta {
        return Err(Error::domain(format!("k = {k} is below the maximum degree {delta}")));
    }
    let table = Table::new(g);
    let order = peeling_order(g, &table);
    let ends: Vec<(Vertex, Vertex)> =
        order.iter().rev().map(|&(ci, _)| (table.classes[ci].u, table.classes[ci].v)).collect();
    let mut p = Palette::new(g.vertex_count(), k as usize, ends);
    let budget = (g.vertex_count() as u64).saturating_mul(k as u64).max(1);
    for (e, &(_, centre)) in order.iter().rev().enumerate() {
        let other = p.other(e, centre);
        if !insert(&mut p, e, centre, other, budget) {
            return Ok(None);
        }
    }
    let mut assignment: BTreeMap<(Vertex, Vertex), Vec<u32>> = BTreeMap::new();
    for (e, &(u, v)) in p.ends.iter().enumerate() {
        let c = p.colour[e].expect("every instance coloured") as u32 + 1;
        assignment.entry((u, v)).or_default().push(c);
    }
    for cols in assignment.values_mut() {
        cols.sort_unstable();
    }
    Ok(Some(EdgeColouring { graph: g, k, assignment }))
}

fn insert(p: &mut Palette, e: usize, centre: Vertex, other: Vertex, budget: u64) -> bool {
    if fan_recolour(p, e, centre) || fan_recolour(p, e, other) {
        return true;
    }
    for attempt in 0..budget {
        // perturb with a Kempe swap at the far endpoint, then retry both centres
        let Some(alpha) = p.first_missing(centre) else { return false };
        let gamma = (attempt % p.k as u64) as usize;
        if gamma != alpha {
            let comp = p.component(other, alpha, gamma);
            p.swap(&comp, alpha, gamma);
        }
        if fan_recolour(p, e, centre) || fan_recolour(p, e, other) {
            return true;
        }
    }
    false
}

/// Exact chromatic index by backtracking, with an optimal colouring.
pub fn chromatic_index_exact(g: &Multigraph, cap: u64) -> Result<(u32, EdgeColouring<'_>)> {
    let total = g.edge_count();
    if total > cap {
        return Err(Error::Resource { what: "edge instances", needed: total as u128, cap: cap as u128 });
    }
    if total == 0 {
        return Ok((0, EdgeColouring { graph: g, k: 0, assignment: BTreeMap::new() }));
    }
    let classes: Vec<_> = g.classes().collect();
    let mut k = g.max_degree();
    loop {
        if k > 64 {
            return Err(Error::Resource { what: "colours", needed: k as u128, cap: 64 });
        }
        let mut search = Backtrack {
            classes: &classes,
            k,
            used: vec![0u64; g.vertex_count()],
            cols: vec![Vec::new(); classes.len()],
            remaining: total,
            max_used: -1,
        };
        if search.solve() {
            let assignment = classes
                .iter()
                .zip(search.cols)
                .map(|(c, cols)| ((c.u, c.v), cols.into_iter().map(|x| x + 1).collect()))
                .collect();
            return Ok((k, EdgeColouring { graph: g, k, assignment }));
        }
        k += 1;
    }
}

struct Backtrack<'a> {
    classes: &'a [crate::graph::Class],
    k: u32,
    used: Vec<u64>,
    /// Colours already given to each class's copies, strictly increasing.
    cols: Vec<Vec<u32>>,
    remaining: u64,
    max_used: i64,
}

impl Backtrack<'_> {
    fn solve(&mut self) -> bool {
        if self.remaining == 0 {
            return true;
        }
        // most constrained class with uncoloured copies
        let mut pick: Option<(usize, u32)> = None;
        for (ci, c) in self.classes.iter().enumerate() {
            if self.cols[ci].len() == c.mult as usize {
                continue;
            }
            let avail = self.k - (self.used[c.u] | self.used[c.v]).count_ones();
            if pick.is_none_or(|p| avail < p.1) {
                pick = Some((ci, avail));
            }
        }
        let (ci, avail) = pick.unwrap();
        let c = self.classes[ci];
        let left = c.mult - self.cols[ci].len() as u32;
        if avail < left {
            return false;
        }
        let lo = self.cols[ci].last().map_or(0, |&x| x + 1);
        let hi = (self.max_used + 1).min(self.k as i64 - 1);
        for col in lo as i64..=hi {
            let bit = 1u64 << col;
            if (self.used[c.u] | self.used[c.v]) & bit != 0 {
                continue;
            }
            let prev_max = self.max_used;
            self.used[c.u] |= bit;
            self.used[c.v] |= bit;
            self.cols[ci].push(col as u32);
            self.max_used = self.max_used.max(col);
            self.remaining -= 1;
            if self.solve() {
                return true;
            }
            self.remaining += 1;
            self.max_used = prev_max;
            self.cols[ci].pop();
            self.used[c.u] &= !bit;
            self.used[c.v] &= !bit;
        }
        false
    }
}
