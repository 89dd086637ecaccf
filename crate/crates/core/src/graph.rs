//! Loopless multigraphs stored as multiplicity counters on vertex pairs.
//!
//! Vertices carry arbitrary string labels externally and dense indices
//! internally. Every deterministic ordering in the crate (parallel classes,
//! neighbourhoods, enumeration) follows the dense index order, which is the
//! insertion order of the labels.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index.
pub type Vertex = usize;

/// A loopless multigraph.
///
/// Parallel edges are not stored individually: each unordered pair `{u, v}`
/// carries a multiplicity, and pairs of multiplicity zero are absent.
#[derive(Clone, Debug, Default)]
pub struct Multigraph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<BTreeMap<Vertex, u32>>,
}

/// One parallel class: the pair `u < v` and its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Class {
    pub u: Vertex,
    pub v: Vertex,
    pub mult: u32,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph on `n` vertices labelled `0..n`, without edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for i in 0..n {
            g.add_vertex(&i.to_string()).expect("fresh labels");
        }
        g
    }

    /// Builds a graph on `n` numerically labelled vertices from `(u, v, mult)` triples.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, u32)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v, m) in edges {
            g.add_mult(u, v, m)?;
        }
        Ok(g)
    }

    /// Builds a graph from labelled `(u, v, mult)` triples, declaring labels on first use.
    pub fn from_labelled_edges(edges: &[(&str, &str, u32)]) -> Result<Self> {
        let mut g = Self::new();
        for &(a, b, m) in edges {
            let u = g.vertex(a)?;
            let v = g.vertex(b)?;
            g.add_mult(u, v, m)?;
        }
        Ok(g)
    }

    /// Adds a vertex with a new label and returns its index.
    pub fn add_vertex(&mut self, label: &str) -> Result<Vertex> {
        check_label(label)?;
        if self.index.contains_key(label) {
            return Err(Error::domain(format!("duplicate vertex label `{label}`")));
        }
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), v);
        self.adj.push(BTreeMap::new());
        Ok(v)
    }

    /// Returns the index of `label`, declaring it if absent.
    pub fn vertex(&mut self, label: &str) -> Result<Vertex> {
        match self.index.get(label) {
            Some(&v) => Ok(v),
            None => self.add_vertex(label),
        }
    }

    /// Sets the multiplicity of `{u, v}`; zero removes the pair.
    pub fn set_mult(&mut self, u: Vertex, v: Vertex, mult: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::domain(format!("loop at vertex `{}`", self.labels[u])));
        }
        if mult == 0 {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
        } else {
            self.adj[u].insert(v, mult);
            self.adj[v].insert(u, mult);
        }
        Ok(())
    }

    /// Adds `mult` parallel copies to `{u, v}`.
    pub fn add_mult(&mut self, u: Vertex, v: Vertex, mult: u32) -> Result<()> {
        let current = if u < self.adj.len() { self.mult(u, v) } else { 0 };
        self.set_mult(u, v, current + mult)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.labels.len()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::domain(format!("unknown vertex index {v}")))
        }
    }

    /// Multiplicity of `{u, v}`; zero when absent or out of range.
    pub fn mult(&self, u: Vertex, v: Vertex) -> u32 {
        self.adj.get(u).and_then(|m| m.get(&v)).copied().unwrap_or(0)
    }

    /// Neighbours of `v` with the multiplicity of the joining pair, in index order.
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        self.adj[v].iter().map(|(&u, &m)| (u, m))
    }

    /// Parallel classes in lexicographic endpoint order.
    pub fn classes(&self) -> impl Iterator<Item = Class> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.range(u + 1..).map(move |(&v, &mult)| Class { u, v, mult })
        })
    }

    pub fn class_count(&self) -> usize {
        self.adj.iter().map(|m| m.len()).sum::<usize>() / 2
    }

    /// Total number of edges, counting parallel copies.
    pub fn edge_count(&self) -> u64 {
        self.classes().map(|c| c.mult as u64).sum()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|m| m.is_empty())
    }

    pub fn is_simple(&self) -> bool {
        self.classes().all(|c| c.mult == 1)
    }

    /// Degree of `v`, each parallel copy counted once.
    pub fn degree(&self, v: Vertex) -> Result<u32> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    pub(crate) fn degree_unchecked(&self, v: Vertex) -> u32 {
        self.adj[v].values().sum()
    }

    /// Largest multiplicity of a pair at `v`; zero when `v` is isolated.
    pub fn vertex_mult(&self, v: Vertex) -> Result<u32> {
        self.check_vertex(v)?;
        Ok(self.vertex_mult_unchecked(v))
    }

    pub(crate) fn vertex_mult_unchecked(&self, v: Vertex) -> u32 {
        self.adj[v].values().copied().max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.vertices().map(|v| self.degree_unchecked(v)).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.vertices().map(|v| self.degree_unchecked(v)).max().unwrap_or(0)
    }

    /// Largest multiplicity in the graph.
    pub fn max_mult(&self) -> u32 {
        self.classes().map(|c| c.mult).max().unwrap_or(0)
    }

    /// `max_v d(v) + μ(v)`, the degree-plus-multiplicity bound on the chromatic index.
    pub fn ore_bound(&self) -> u32 {
        self.vertices()
            .map(|v| self.degree_unchecked(v) + self.vertex_mult_unchecked(v))
            .max()
            .unwrap_or(0)
    }

    /// Same vertices, every present pair reduced to multiplicity one.
    pub fn underlying_simple(&self) -> Multigraph {
        self.map_mults(|_| 1)
    }

    /// Same vertices, with each pair's multiplicity replaced by `f(mult)` (zero drops it).
    pub fn map_mults(&self, f: impl Fn(u32) -> u32) -> Multigraph {
        let mut g = self.clone();
        for nbrs in &mut g.adj {
            nbrs.retain(|_, m| {
                *m = f(*m);
                *m > 0
            });
        }
        g
    }

    /// Subgraph induced by `s`, keeping full multiplicities and the parent's vertex order.
    pub fn induced(&self, s: &BTreeSet<Vertex>) -> Result<Multigraph> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let mut g = Multigraph::new();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for &v in s {
            new_index[v] = g.add_vertex(&self.labels[v])?;
        }
        for c in self.classes() {
            if s.contains(&c.u) && s.contains(&c.v) {
                g.set_mult(new_index[c.u], new_index[c.v], c.mult)?;
            }
        }
        Ok(g)
    }

    /// True iff the underlying simple graph is acyclic.
    pub fn is_multiforest(&self) -> bool {
        let mut parent: Vec<usize> = self.vertices().collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for c in self.classes() {
            let (a, b) = (find(&mut parent, c.u), find(&mut parent, c.v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Parses the line-oriented text format.
    ///
    /// `#` starts a comment, `vertex <label>` declares a vertex and
    /// `<label> <label> <mult>` declares a parallel class.
    pub fn parse(text: &str) -> Result<Multigraph> {
        let mut g = Multigraph::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", label] => {
                    g.vertex(label).map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
                [a, b, m] => {
                    let mult: i64 = m
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("bad multiplicity `{m}`")))?;
                    if mult < 0 {
                        return Err(Error::parse(line_no, format!("negative multiplicity {mult}")));
                    }
                    if mult == 0 || mult > u32::MAX as i64 {
                        return Err(Error::parse(line_no, format!("multiplicity {mult} out of range")));
                    }
                    if a == b {
                        return Err(Error::parse(line_no, format!("loop at `{a}`")));
                    }
                    let u = g.vertex(a).map_err(|e| Error::parse(line_no, e.to_string()))?;
                    let v = g.vertex(b).map_err(|e| Error::parse(line_no, e.to_string()))?;
                    if g.mult(u, v) > 0 {
                        return Err(Error::parse(line_no, format!("duplicate pair `{a} {b}`")));
                    }
                    g.set_mult(u, v, mult as u32)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
                _ => return Err(Error::parse(line_no, format!("malformed line `{}`", raw.trim()))),
            }
        }
        Ok(g)
    }

    /// Canonical text: every vertex declared in index order, then classes in lexicographic order.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.contains(char::is_whitespace) || label.contains('#') {
        return Err(Error::domain(format!("invalid vertex label `{label}`")));
    }
    Ok(())
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            writeln!(f, "vertex {l}")?;
        }
        for c in self.classes() {
            writeln!(f, "{} {} {}", self.labels[c.u], self.labels[c.v], c.mult)?;
        }
        Ok(())
    }
}

/// Label-preserving equality: same label set and the same multiplicity on every labelled pair.
impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        if self.vertex_count() != other.vertex_count() || self.class_count() != other.class_count() {
            return false;
        }
        let map: Option<Vec<Vertex>> = self.labels.iter().map(|l| other.index_of(l)).collect();
        let Some(map) = map else { return false };
        self.classes().all(|c| other.mult(map[c.u], map[c.v]) == c.mult)
    }
}

impl Eq for Multigraph {}

/// Normalised key for an unordered pair.
pub fn pair(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A sub-multiplicity assignment on a parent graph together with a vertex mask.
#[derive(Clone, Debug)]
pub struct SubgraphSelection<'g> {
    parent: &'g Multigraph,
    submult: BTreeMap<(Vertex, Vertex), u32>,
    vertex_mask: Vec<bool>,
}

impl<'g> SubgraphSelection<'g> {
    /// The parent itself.
    pub fn full(parent: &'g Multigraph) -> Self {
        let submult = parent.classes().map(|c| ((c.u, c.v), c.mult)).collect();
        Self { parent, submult, vertex_mask: vec![true; parent.vertex_count()] }
    }

    /// All parent vertices, no edges.
    pub fn empty(parent: &'g Multigraph) -> Self {
        Self { parent, submult: BTreeMap::new(), vertex_mask: vec![true; parent.vertex_count()] }
    }

    /// Builds a selection from per-class multiplicities aligned with `parent.classes()`.
    /// The vertex mask is the whole parent vertex set.
    pub fn from_class_mults(parent: &'g Multigraph, mults: &[u32]) -> Result<Self> {
        let classes: Vec<Class> = parent.classes().collect();
        if classes.len() != mults.len() {
            return Err(Error::domain("class multiplicity vector has the wrong length"));
        }
        let mut s = Self::empty(parent);
        for (c, &m) in classes.iter().zip(mults) {
            s.set(c.u, c.v, m)?;
        }
        Ok(s)
    }

    pub fn parent(&self) -> &'g Multigraph {
        self.parent
    }

    /// Selects `m` copies of `{u, v}`; both endpoints join the vertex mask.
    pub fn set(&mut self, u: Vertex, v: Vertex, m: u32) -> Result<()> {
        self.parent.check_vertex(u)?;
        self.parent.check_vertex(v)?;
        let full = self.parent.mult(u, v);
        if m > full {
            return Err(Error::domain(format!(
                "selected multiplicity {m} exceeds parent multiplicity {full} on `{} {}`",
                self.parent.label(u),
                self.parent.label(v)
            )));
        }
        if m == 0 {
            self.submult.remove(&pair(u, v));
        } else {
            self.submult.insert(pair(u, v), m);
            self.vertex_mask[u] = true;
            self.vertex_mask[v] = true;
        }
        Ok(())
    }

    /// Removes `v` from the mask together with its incident pairs.
    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        self.parent.check_vertex(v)?;
        self.submult.retain(|&(a, b), _| a != v && b != v);
        self.vertex_mask[v] = false;
        Ok(())
    }

    /// Drops mask vertices that have no selected edge.
    pub fn strip_isolated(&mut self) {
        let mut touched = vec![false; self.vertex_mask.len()];
        for &(u, v) in self.submult.keys() {
            touched[u] = true;
            touched[v] = true;
        }
        self.vertex_mask = touched;
    }

    pub fn mult(&self, u: Vertex, v: Vertex) -> u32 {
        self.submult.get(&pair(u, v)).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((Vertex, Vertex), u32)> + '_ {
        self.submult.iter().map(|(&p, &m)| (p, m))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertex_mask.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertex_mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v)
    }

    pub fn has_edges(&self) -> bool {
        !self.submult.is_empty()
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.submult
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Neighbours of `v` inside the selection, with selected multiplicities.
    pub fn neighbours(&self, v: Vertex) -> Vec<(Vertex, u32)> {
        self.parent
            .neighbours(v)
            .filter_map(|(u, _)| {
                let m = self.mult(u, v);
                (m > 0).then_some((u, m))
            })
            .collect()
    }

    /// True iff every selected class is kept at its full parent multiplicity.
    pub fn is_full_multiplicity(&self) -> bool {
        self.submult.iter().all(|(&(u, v), &m)| self.parent.mult(u, v) == m)
    }

    /// Per-class multiplicities aligned with `parent.classes()`.
    pub fn class_mults(&self) -> Vec<u32> {
        self.parent.classes().map(|c| self.mult(c.u, c.v)).collect()
    }

    /// Realises the selection as a standalone graph on the masked vertices.
    pub fn materialize(&self) -> Multigraph {
        let mut g = Multigraph::new();
        let mut new_index = vec![usize::MAX; self.parent.vertex_count()];
        for v in self.vertices() {
            new_index[v] = g.add_vertex(self.parent.label(v)).expect("labels are unique");
        }
        for (&(u, v), &m) in &self.submult {
            g.set_mult(new_index[u], new_index[v], m).expect("endpoints are masked");
        }
        g
    }
}

impl PartialEq for SubgraphSelection<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent)
            && self.submult == other.submult
            && self.vertex_mask == other.vertex_mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fat_triangle(t: u32) -> Multigraph {
        Multigraph::from_labelled_edges(&[("a", "b", t + 1), ("a", "c", t + 1), ("b", "c", t + 2)])
            .unwrap()
    }

    #[test]
    fn degrees_and_multiplicities() {
        let g = fat_triangle(0);
        let b = g.index_of("b").unwrap();
        assert_eq!(g.degree(b).unwrap(), 3);
        assert_eq!(g.vertex_mult(b).unwrap(), 2);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(fat_triangle(1).max_degree(), 5);

        let mut iso = Multigraph::new();
        let x = iso.add_vertex("x").unwrap();
        assert_eq!(iso.degree(x).unwrap(), 0);
        assert_eq!(iso.vertex_mult(x).unwrap(), 0);
        assert_eq!(iso.max_degree(), 0);
        assert_eq!(Multigraph::new().max_degree(), 0);

        let double = Multigraph::parse("x y 2").unwrap();
        assert_eq!(double.degree(0).unwrap(), 2);

        let star = Multigraph::from_edges(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        assert_eq!(star.vertex_mult(0).unwrap(), 1);
        assert!(matches!(star.degree(9), Err(Error::Domain(_))));
        assert!(matches!(star.vertex_mult(9), Err(Error::Domain(_))));
    }

    #[test]
    fn underlying_and_induced() {
        let double = Multigraph::parse("a b 2").unwrap();
        assert_eq!(double.underlying_simple(), Multigraph::parse("a b 1").unwrap());
        let k3 = Multigraph::parse("a b 1\na c 1\nb c 1").unwrap();
        assert_eq!(fat_triangle(0).underlying_simple(), k3);
        assert_eq!(k3.underlying_simple(), k3);

        let g = fat_triangle(0);
        let bc: BTreeSet<_> = [g.index_of("b").unwrap(), g.index_of("c").unwrap()].into();
        assert_eq!(g.induced(&bc).unwrap(), Multigraph::parse("b c 2").unwrap());
        assert_eq!(g.induced(&BTreeSet::new()).unwrap(), Multigraph::new());
        assert_eq!(g.induced(&g.vertices().collect()).unwrap(), g);
        assert!(g.induced(&[7].into()).is_err());
    }

    #[test]
    fn multiforests() {
        assert!(Multigraph::parse("a b 2").unwrap().is_multiforest());
        assert!(!fat_triangle(0).is_multiforest());
        let path = Multigraph::from_edges(4, &[(0, 1, 3), (1, 2, 1), (2, 3, 7)]).unwrap();
        assert!(path.is_multiforest());
    }

    #[test]
    fn parse_examples_and_errors() {
        let g = Multigraph::parse("# comment\na b 2\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.mult(0, 1), 2);

        let g = Multigraph::parse("vertex x").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_edgeless());

        let err = |s: &str| match Multigraph::parse(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("a a 1"), 1);
        assert_eq!(err("a b 1\nb c -2"), 2);
        assert_eq!(err("a b 1\n\nb a 3"), 3);
        assert_eq!(err("a b"), 1);
        assert_eq!(err("a b x"), 1);
        assert_eq!(err("a b 0"), 1);
    }

    #[test]
    fn selections() {
        let g = fat_triangle(1);
        let mut k = SubgraphSelection::empty(&g);
        k.set(1, 2, 2).unwrap();
        assert!(k.set(1, 2, 4).is_err());
        assert_eq!(k.degree(1), 2);
        assert!(!k.is_full_multiplicity());
        k.strip_isolated();
        assert_eq!(k.vertices().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(k.materialize(), Multigraph::parse("b c 2").unwrap());
        for v in g.vertices() {
            assert!(k.degree(v) <= g.degree(v).unwrap());
        }
    }
}
