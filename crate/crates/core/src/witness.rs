//! Witness graphs whose t-core is a prescribed `H` and whose fan number
//! exceeds `Δ + t`.
//!
//! The build has three stages. Every vertex `x_i` of a corefan witness `K`
//! receives pendant classes of multiplicity `r` and `r - 1` to fresh vertex
//! sets `S_r` and `S_{r-1}`. The set `S` then carries a regular circulant
//! whose planted matching on `S_r` gets multiplicity `r - 3` and every other
//! edge `r - 1`. Vertices of `H` outside `K` are padded with pendants.
//! [`verify_witness`] re-checks the result in polynomial time.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::core_analysis::t_core;
use crate::error::{Error, Result};
use crate::fan::{corefan, fan_degree, min_cfan_degree, DEFAULT_COREFAN_CLASS_CAP};
use crate::graph::{Multigraph, SubgraphSelection, Vertex};

/// A `k`-regular simple circulant on `0..n` together with the matched set
/// `S_r = 0..r`, whose perfect matching is `{2j, 2j + 1}`.
pub fn build_circulant_with_matching(n: usize, k: usize, r: usize) -> Result<(Multigraph, Vec<Vertex>)> {
    if k % 2 == 1 || r % 2 == 1 {
        return Err(Error::domain(format!("k = {k} and r = {r} must both be even")));
    }
    if r > n || (k >= n && n > 0) {
        return Err(Error::domain(format!("need r <= n and k < n, got n = {n}, k = {k}, r = {r}")));
    }
    if k == 0 && r > 0 {
        return Err(Error::domain("a 0-regular graph has no matching to plant"));
    }
    let mut g = Multigraph::with_vertices(n);
    for i in 0..n {
        for d in 1..=k / 2 {
            g.set_mult(i, (i + d) % n, 1)?;
        }
    }
    Ok((g, (0..r).collect()))
}

/// Parameters and vertex sets of one construction, keyed by vertex label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub t: u32,
    pub d: u32,
    pub r: u32,
    /// Regular degree of the circulant on `S`.
    pub reg_k: u32,
    /// Vertices `x_1..x_p` of `K`, in index order of `H`.
    pub core: Vec<String>,
    /// Classes of `K` as `(u, v, multiplicity)`.
    pub k_edges: Vec<(String, String, u32)>,
    /// `(a_{i,r}, a_{i,r-1})` per core vertex, aligned with `core`.
    pub splits: Vec<(u32, u32)>,
    pub s_r: Vec<String>,
    pub s_r1: Vec<String>,
    /// The planted perfect matching on `S_r`.
    pub matching: Vec<(String, String)>,
}

impl ConstructionPlan {
    pub fn p(&self) -> usize {
        self.core.len()
    }

    /// Checks the parameter conditions for a core of maximum degree `delta_h`.
    pub fn conditions_hold(&self, delta_h: u32) -> bool {
        let (d, r, t) = (self.d as u64, self.r as u64, self.t as u64);
        let m = (d + t) / (r - 1).max(1);
        r >= delta_h as u64 + 6 + t
            && r % 2 == 0
            && d >= 3 * r + t
            && d >= delta_h as u64 + 2 * r * r
            && (d + t) % (r - 1) == 0
            && m % 2 == 0
            && m >= 4
            && self.reg_k as u64 == m - 2
    }

    /// Parses the `key=value` sidecar written by [`fmt::Display`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut plan = ConstructionPlan {
            t: 0,
            d: 0,
            r: 0,
            reg_k: 0,
            core: Vec::new(),
            k_edges: Vec::new(),
            splits: Vec::new(),
            s_r: Vec::new(),
            s_r1: Vec::new(),
            matching: Vec::new(),
        };
        let mut seen = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::parse(i + 1, format!("{msg}: `{raw}`"));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let toks: Vec<&str> = value.split_whitespace().collect();
            let num = |s: &str| s.parse::<u32>().map_err(|_| bad("expected a nonnegative integer"));
            let one = || match toks[..] {
                [v] => num(v),
                _ => Err(bad("expected one value")),
            };
            seen.insert(key.trim().to_string());
            match key.trim() {
                "t" => plan.t = one()?,
                "D" => plan.d = one()?,
                "r" => plan.r = one()?,
                "reg_k" => plan.reg_k = one()?,
                "p" => {
                    one()?;
                }
                "core" => plan.core = toks.iter().map(|s| s.to_string()).collect(),
                "s_r" => plan.s_r = toks.iter().map(|s| s.to_string()).collect(),
                "s_r1" => plan.s_r1 = toks.iter().map(|s| s.to_string()).collect(),
                "k_edge" => match toks[..] {
                    [u, v, m] => plan.k_edges.push((u.to_string(), v.to_string(), num(m)?)),
                    _ => return Err(bad("expected `u v mult`")),
                },
                "split" => match toks[..] {
                    [_, a, b] => plan.splits.push((num(a)?, num(b)?)),
                    _ => return Err(bad("expected `vertex a_r a_r1`")),
                },
                "matching" => match toks[..] {
                    [u, v] => plan.matching.push((u.to_string(), v.to_string())),
                    _ => return Err(bad("expected `u v`")),
                },
                _ => return Err(bad("unknown key")),
            }
        }
        for key in ["t", "D", "r", "reg_k", "core"] {
            if !seen.contains(key) {
                return Err(Error::parse(0, format!("missing key `{key}`")));
            }
        }
        if plan.splits.len() != plan.core.len() {
            return Err(Error::parse(0, "one split line is required per core vertex"));
        }
        Ok(plan)
    }
}

impl fmt::Display for ConstructionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "t={}", self.t)?;
        writeln!(f, "D={}", self.d)?;
        writeln!(f, "r={}", self.r)?;
        writeln!(f, "reg_k={}", self.reg_k)?;
        writeln!(f, "p={}", self.p())?;
        writeln!(f, "core={}", self.core.join(" "))?;
        for (u, v, m) in &self.k_edges {
            writeln!(f, "k_edge={u} {v} {m}")?;
        }
        for (x, (a, b)) in self.core.iter().zip(&self.splits) {
            writeln!(f, "split={x} {a} {b}")?;
        }
        writeln!(f, "s_r={}", self.s_r.join(" "))?;
        writeln!(f, "s_r1={}", self.s_r1.join(" "))?;
        for (u, v) in &self.matching {
            writeln!(f, "matching={u} {v}")?;
        }
        Ok(())
    }
}

/// Smallest even `r >= Δ(H) + 6 + t`, then the smallest admissible `D` for it.
fn choose_r_d(delta_h: u32, t: u32) -> (u32, u32) {
    let mut r = delta_h + 6 + t;
    if r % 2 == 1 {
        r += 1;
    }
    let floor = (3 * r + t).max(delta_h + 2 * r * r);
    let mut m = (floor + t).div_ceil(r - 1).max(4);
    if m % 2 == 1 {
        m += 1;
    }
    while m * (r - 1) < floor + t {
        m += 2;
    }
    (r, m * (r - 1) - t)
}

/// Parameters for `h`, `t` and a corefan witness `k_sub` (its parent must be `h`).
pub fn choose_params(h: &Multigraph, t: u32, k_sub: &SubgraphSelection<'_>) -> Result<ConstructionPlan> {
    if !std::ptr::eq(k_sub.parent(), h) {
        return Err(Error::domain("the witness subgraph must select from h"));
    }
    match min_cfan_degree(k_sub)? {
        Some((value, _)) if value > t => {}
        Some((value, (x, y))) => {
            return Err(Error::domain(format!(
                "cfan degree of `{} {}` is {value}, not above t = {t}",
                h.label(x),
                h.label(y)
            )))
        }
        None => return Err(Error::domain("the witness subgraph has no edges")),
    }
    let core: Vec<Vertex> = k_sub.vertices().collect();
    if core.iter().any(|&v| k_sub.degree(v) == 0) {
        return Err(Error::domain("the witness subgraph has isolated vertices"));
    }
    let delta_h = h.max_degree();
    let (r, d) = choose_r_d(delta_h, t);
    let mut splits: Vec<(u32, u32)> = core
        .iter()
        .map(|&x| {
            let di = d - h.degree_unchecked(x);
            let (alpha, beta) = (di / (r - 1), di % (r - 1));
            (beta, alpha - beta)
        })
        .collect();
    if splits.iter().map(|s| s.0).sum::<u32>() % 2 == 1 {
        let first = &mut splits[0];
        if first.1 < r {
            return Err(Error::domain("the parity adjustment would make a split negative"));
        }
        *first = (first.0 + (r - 1), first.1 - r);
    }
    let s_r_count: u32 = splits.iter().map(|s| s.0).sum();
    let s_r1_count: u32 = splits.iter().map(|s| s.1).sum();
    let sr_prefix = fresh_prefix(h, "sr");
    let sq_prefix = fresh_prefix(h, "sq");
    let s_r: Vec<String> = (0..s_r_count).map(|i| format!("{sr_prefix}{i}")).collect();
    let s_r1: Vec<String> = (0..s_r1_count).map(|i| format!("{sq_prefix}{i}")).collect();
    let matching = s_r.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
    Ok(ConstructionPlan {
        t,
        d,
        r,
        reg_k: (d + t) / (r - 1) - 2,
        core: core.iter().map(|&v| h.label(v).to_string()).collect(),
        k_edges: k_sub
            .pairs()
            .map(|((u, v), m)| (h.label(u).to_string(), h.label(v).to_string(), m))
            .collect(),
        splits,
        s_r,
        s_r1,
        matching,
    })
}

/// `_stem`, with extra leading underscores until no label of `h` starts with it.
fn fresh_prefix(h: &Multigraph, stem: &str) -> String {
    let mut prefix = format!("_{stem}");
    while h.labels().iter().any(|l| l.starts_with(&prefix)) {
        prefix.insert(0, '_');
    }
    prefix
}

/// Builds the witness graph for `h` and `t`, using the corefan witness of `h`.
pub fn construct_witness(h: &Multigraph, t: u32) -> Result<(Multigraph, ConstructionPlan)> {
    let report = corefan(h, DEFAULT_COREFAN_CLASS_CAP)?;
    if report.value <= t {
        return Err(Error::CorefanTooSmall { corefan: report.value, t });
    }
    let k_sub = report.witness_subgraph.expect("positive corefan has a witness");
    let plan = choose_params(h, t, &k_sub)?;
    let g = build_from_plan(h, &plan)?;
    Ok((g, plan))
}

/// Runs the three stages of the construction for a given plan.
pub fn build_from_plan(h: &Multigraph, plan: &ConstructionPlan) -> Result<Multigraph> {
    let (r, d) = (plan.r, plan.d);
    let mut g = h.clone();
    let s_r: Vec<Vertex> = plan.s_r.iter().map(|l| g.add_vertex(l)).collect::<Result<_>>()?;
    let s_r1: Vec<Vertex> = plan.s_r1.iter().map(|l| g.add_vertex(l)).collect::<Result<_>>()?;

    // stage 1
    let (mut next_r, mut next_r1) = (s_r.iter(), s_r1.iter());
    for (label, &(a_r, a_r1)) in plan.core.iter().zip(&plan.splits) {
        let x = lookup(h, label)?;
        for (count, pool, mult) in [(a_r, &mut next_r, r), (a_r1, &mut next_r1, r - 1)] {
            for _ in 0..count {
                let &s = pool.next().ok_or_else(|| Error::domain("plan splits exceed its vertex sets"))?;
                g.set_mult(x, s, mult)?;
            }
        }
    }

    // stage 2
    let s: Vec<Vertex> = s_r.iter().chain(&s_r1).copied().collect();
    let (circulant, _) = build_circulant_with_matching(s.len(), plan.reg_k as usize, s_r.len())?;
    let matched: BTreeSet<(Vertex, Vertex)> = plan
        .matching
        .iter()
        .map(|(u, v)| Ok(crate::graph::pair(lookup(&g, u)?, lookup(&g, v)?)))
        .collect::<Result<_>>()?;
    for c in circulant.classes() {
        let (u, v) = (s[c.u], s[c.v]);
        let mult = if matched.contains(&crate::graph::pair(u, v)) { r - 3 } else { r - 1 };
        g.set_mult(u, v, mult)?;
    }

    // stage 3
    let in_core: BTreeSet<&str> = plan.core.iter().map(String::as_str).collect();
    let prefix = fresh_prefix(h, "p");
    let mut fresh = 0usize;
    for v in h.vertices().filter(|&v| !in_core.contains(h.label(v))) {
        let mut deficit = d - h.degree_unchecked(v);
        let mut mult = r - 1;
        while deficit > 0 {
            let w = g.add_vertex(&format!("{prefix}{fresh}"))?;
            fresh += 1;
            g.set_mult(v, w, mult.min(deficit))?;
            deficit -= mult.min(deficit);
            mult = 1;
        }
    }
    Ok(g)
}

fn lookup(g: &Multigraph, label: &str) -> Result<Vertex> {
    g.index_of(label).ok_or_else(|| Error::domain(format!("unknown vertex `{label}`")))
}

/// One named check of [`verify_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub name: &'static str,
    pub passed: bool,
    /// The first failing vertex or edge, or a summary when the check passes.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessVerification {
    pub checks: Vec<WitnessCheck>,
}

impl WitnessVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for WitnessVerification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {} {}", c.name, if c.passed { "pass" } else { "fail" }, c.detail)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, failure: Option<String>, summary: impl FnOnce() -> String) -> WitnessCheck {
    match failure {
        Some(detail) => WitnessCheck { name, passed: false, detail },
        None => WitnessCheck { name, passed: true, detail: summary() },
    }
}

/// Re-checks a witness: degrees on `H`, the t-core, the degree targets on `S`,
/// and the fan degree of every edge of `J = K ∪ {edges meeting S}` against `D + t`.
pub fn verify_witness(h: &Multigraph, t: u32, g: &Multigraph, plan: &ConstructionPlan) -> WitnessVerification {
    let d = plan.d as i64;
    let bound = d + t as i64;
    let resolve = |labels: &[String]| -> std::result::Result<Vec<Vertex>, String> {
        labels.iter().map(|l| g.index_of(l).ok_or_else(|| format!("vertex `{l}` missing from G"))).collect()
    };

    let degrees = (|| {
        if g.max_degree() as i64 != d {
            return Some(format!("max degree {} differs from D = {d}", g.max_degree()));
        }
        h.labels().iter().find_map(|l| match g.index_of(l) {
            None => Some(format!("vertex `{l}` of H missing from G")),
            Some(v) if g.degree_unchecked(v) as i64 != d => {
                Some(format!("vertex `{l}` has degree {}", g.degree_unchecked(v)))
            }
            Some(_) => None,
        })
    })();
    let degrees = check("degrees", degrees, || format!("max degree {d} attained on all {} vertices of H", h.vertex_count()));

    let core = t_core(g, t);
    let core_failure = (core != *h).then(|| {
        format!("t-core has {} vertices and {} classes", core.vertex_count(), core.class_count())
    });
    let core_check = check("t-core", core_failure, || "t-core equals H".into());

    let (s_r, s_r1) = match (resolve(&plan.s_r), resolve(&plan.s_r1)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            let fail = |name| WitnessCheck { name, passed: false, detail: e.clone() };
            return WitnessVerification { checks: vec![degrees, core_check, fail("targets"), fail("fan-degree")] };
        }
    };
    let r = plan.r as i64;
    let targets = s_r1
        .iter()
        .map(|&v| (v, d - (r - 1) + t as i64))
        .chain(s_r.iter().map(|&v| (v, d - r + t as i64)))
        .find_map(|(v, want)| {
            let got = g.degree_unchecked(v) as i64;
            (got != want).then(|| format!("vertex `{}` has degree {got}, expected {want}", g.label(v)))
        });
    let targets = check("targets", targets, || {
        format!("{} vertices of S_r and {} of S_r-1 on target", s_r.len(), s_r1.len())
    });

    let fan = witness_subgraph(g, plan, &s_r, &s_r1).and_then(|j| {
        for ((u, v), _) in j.pairs() {
            for (x, y) in [(u, v), (v, u)] {
                if let Some(err) = edge_certificate(&j, x, y, bound) {
                    return Err(format!("edge `{} {}`: {err}", g.label(x), g.label(y)));
                }
            }
        }
        Ok(j.pairs().count())
    });
    let fan = match fan {
        Ok(classes) => WitnessCheck {
            name: "fan-degree",
            passed: true,
            detail: format!("all {classes} classes of J exceed D+t = {bound} in both orientations"),
        },
        Err(detail) => WitnessCheck { name: "fan-degree", passed: false, detail },
    };
    WitnessVerification { checks: vec![degrees, core_check, targets, fan] }
}

/// `J`: the classes of `K` plus every class of `G` with an endpoint in `S`.
fn witness_subgraph<'g>(
    g: &'g Multigraph,
    plan: &ConstructionPlan,
    s_r: &[Vertex],
    s_r1: &[Vertex],
) -> std::result::Result<SubgraphSelection<'g>, String> {
    let mut j = SubgraphSelection::empty(g);
    for (u, v, m) in &plan.k_edges {
        let (Some(a), Some(b)) = (g.index_of(u), g.index_of(v)) else {
            return Err(format!("edge `{u} {v}` of K missing from G"));
        };
        j.set(a, b, *m).map_err(|e| e.to_string())?;
    }
    let in_s: BTreeMap<Vertex, ()> = s_r.iter().chain(s_r1).map(|&v| (v, ())).collect();
    for c in g.classes() {
        if in_s.contains_key(&c.u) || in_s.contains_key(&c.v) {
            j.set(c.u, c.v, c.mult).map_err(|e| e.to_string())?;
        }
    }
    Ok(j)
}

/// Checks that both fan-degree conditions fail at `k` for the ordered pair `(x, y)`.
fn edge_certificate(j: &SubgraphSelection<'_>, x: Vertex, y: Vertex, k: i64) -> Option<String> {
    let cond_i = j.degree(x) as i64 + j.degree(y) as i64 - j.mult(x, y) as i64;
    if cond_i <= k {
        return Some(format!("degree sum {cond_i} is at most {k}"));
    }
    let witness = match fan_degree(j, x, y) {
        Ok(w) => w,
        Err(e) => return Some(e.to_string()),
    };
    if (witness.value as i64) <= k {
        return Some(format!("fan degree {} is at most {k}", witness.value));
    }
    let sum: i64 = witness.z.iter().map(|&z| j.degree(z) as i64 + j.mult(x, z) as i64 - k).sum();
    if witness.z.len() < 2 || sum < 2 {
        return Some(format!("Z of size {} sums to {sum}", witness.z.len()));
    }
    None
}
