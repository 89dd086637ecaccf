//! B-queues of simple graphs.
//!
//! A B-queue is a sequence of distinct vertices `u_1..u_q` with reach sets
//! `S_0 = ∅` and `S_i = N(u_i) ∪ {u_i} ∪ S_{i-1}`, where every step adds one
//! or two vertices and at most one of them differs from `u_i`. The queue is
//! full when `S_q` is the whole vertex set.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};

/// Default vertex cap for [`exhaustive_full_bqueue`].
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct BQueue<'g> {
    pub graph: &'g Multigraph,
    pub us: Vec<Vertex>,
    /// `sets[0]` is `S_0`; `sets.len() == us.len() + 1` for a well-formed queue.
    pub sets: Vec<BTreeSet<Vertex>>,
}

impl<'g> BQueue<'g> {
    /// Builds the queue induced by a vertex sequence, computing the reach sets.
    pub fn from_sequence(graph: &'g Multigraph, us: Vec<Vertex>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new()];
        for &u in &us {
            graph.check_vertex(u)?;
            let mut next = sets.last().unwrap().clone();
            next.insert(u);
            next.extend(graph.neighbours(u).map(|(w, _)| w));
            sets.push(next);
        }
        Ok(Self { graph, us, sets })
    }

    /// True iff the reach set covers every vertex.
    pub fn is_full(&self) -> bool {
        self.sets.last().is_some_and(|s| s.len() == self.graph.vertex_count())
    }

    /// Checks every B-queue condition.
    pub fn validate(&self) -> Result<bool> {
        require_simple(self.graph)?;
        if self.sets.len() != self.us.len() + 1 || !self.sets[0].is_empty() {
            return Ok(false);
        }
        let mut used = HashSet::new();
        for (i, &u) in self.us.iter().enumerate() {
            if !self.graph.contains(u) || !used.insert(u) {
                return Ok(false);
            }
            let (prev, cur) = (&self.sets[i], &self.sets[i + 1]);
            let mut expected = prev.clone();
            expected.insert(u);
            expected.extend(self.graph.neighbours(u).map(|(w, _)| w));
            if *cur != expected {
                return Ok(false);
            }
            let added: Vec<Vertex> = cur.difference(prev).copied().collect();
            if added.is_empty() || added.len() > 2 {
                return Ok(false);
            }
            if added.iter().filter(|&&w| w != u).count() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn require_simple(b: &Multigraph) -> Result<()> {
    if b.is_simple() {
        Ok(())
    } else {
        Err(Error::domain("B-queues are defined on simple graphs"))
    }
}

/// Vertices `u` would add to `reached`, or `None` if `u` is not a legal next step.
fn step_gain(b: &Multigraph, reached: &[bool], u: Vertex) -> Option<Vec<Vertex>> {
    let mut gain = Vec::with_capacity(2);
    if !reached[u] {
        gain.push(u);
    }
    for (w, _) in b.neighbours(u) {
        if !reached[w] {
            gain.push(w);
            if gain.len() > 2 {
                return None;
            }
        }
    }
    let others = gain.iter().filter(|&&w| w != u).count();
    (!gain.is_empty() && gain.len() <= 2 && others <= 1).then_some(gain)
}

/// Greedy search: repeatedly takes the lowest-indexed unused vertex that is a
/// legal next step. Returns the full queue, or `None` when the greedy gets stuck.
pub fn greedy_full_bqueue(b: &Multigraph) -> Result<Option<BQueue<'_>>> {
    require_simple(b)?;
    let n = b.vertex_count();
    let mut reached = vec![false; n];
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut us = Vec::new();
    while remaining > 0 {
        let pick = b
            .vertices()
            .filter(|&u| !used[u])
            .find_map(|u| step_gain(b, &reached, u).map(|g| (u, g)));
        let Some((u, gain)) = pick else { return Ok(None) };
        used[u] = true;
        for w in gain {
            reached[w] = true;
            remaining -= 1;
        }
        us.push(u);
    }
    BQueue::from_sequence(b, us).map(Some)
}

/// Backtracking search over all legal vertex sequences; the oracle for the greedy.
pub fn exhaustive_full_bqueue(b: &Multigraph, cap: usize) -> Result<Option<BQueue<'_>>> {
    require_simple(b)?;
    let n = b.vertex_count();
    let cap = cap.min(64);
    if n > cap {
        return Err(Error::Resource { what: "exhaustive B-queue vertices", needed: n as u128, cap: cap as u128 });
    }
    // reachability depends only on the reached set; failed sets are memoised
    let mut failed: HashSet<u64> = HashSet::new();
    let mut used = vec![false; n];
    let mut us = Vec::new();
    let mut reached = vec![false; n];
    if search(b, &mut reached, &mut used, &mut us, &mut failed) {
        BQueue::from_sequence(b, us).map(Some)
    } else {
        Ok(None)
    }
}

fn search(
    b: &Multigraph,
    reached: &mut Vec<bool>,
    used: &mut Vec<bool>,
    us: &mut Vec<Vertex>,
    failed: &mut HashSet<u64>,
) -> bool {
    if reached.iter().all(|&r| r) {
        return true;
    }
    let key = reached.iter().enumerate().fold(0u64, |k, (i, &r)| k | ((r as u64) << i));
    if failed.contains(&key) {
        return false;
    }
    for u in b.vertices() {
        if used[u] {
            continue;
        }
        let Some(gain) = step_gain(b, reached, u) else { continue };
        used[u] = true;
        us.push(u);
        for &w in &gain {
            reached[w] = true;
        }
        if search(b, reached, used, us, failed) {
            return true;
        }
        for &w in &gain {
            reached[w] = false;
        }
        us.pop();
        used[u] = false;
    }
    failed.insert(key);
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        Multigraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn validate_examples() {
        let k2 = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        let q = BQueue { graph: &k2, us: vec![0], sets: vec![BTreeSet::new(), [0, 1].into()] };
        assert!(q.validate().unwrap());
        assert!(q.is_full());

        let c3 = cycle(3);
        for u in 0..3 {
            assert!(!BQueue::from_sequence(&c3, vec![u]).unwrap().validate().unwrap());
        }

        let edgeless = Multigraph::with_vertices(0);
        let empty = BQueue::from_sequence(&edgeless, vec![]).unwrap();
        assert!(empty.validate().unwrap());
        assert!(empty.is_full());

        let double = Multigraph::from_edges(2, &[(0, 1, 2)]).unwrap();
        assert!(BQueue::from_sequence(&double, vec![0]).unwrap().validate().is_err());
    }

    #[test]
    fn invalid_queues_are_rejected() {
        let p3 = Multigraph::from_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        // repeated vertex
        let q = BQueue::from_sequence(&p3, vec![0, 0]).unwrap();
        assert!(!q.validate().unwrap());
        // wrong reach set
        let q = BQueue { graph: &p3, us: vec![0], sets: vec![BTreeSet::new(), [0].into()] };
        assert!(!q.validate().unwrap());
        // S_0 must be empty
        let q = BQueue { graph: &p3, us: vec![], sets: vec![[0].into()] };
        assert!(!q.validate().unwrap());
    }

    #[test]
    fn greedy_on_forests_cycles_and_pendants() {
        let forest = Multigraph::from_edges(7, &[(0, 1, 1), (1, 2, 1), (1, 3, 1), (4, 5, 1)]).unwrap();
        let q = greedy_full_bqueue(&forest).unwrap().unwrap();
        assert!(q.validate().unwrap() && q.is_full());

        for n in 3..8 {
            assert!(greedy_full_bqueue(&cycle(n)).unwrap().is_none());
        }

        let mut cp = cycle(5);
        let p = cp.add_vertex("p").unwrap();
        cp.set_mult(0, p, 1).unwrap();
        let q = greedy_full_bqueue(&cp).unwrap().unwrap();
        assert!(q.validate().unwrap() && q.is_full());
    }

    #[test]
    fn exhaustive_examples() {
        let path = Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert!(exhaustive_full_bqueue(&path, 10).unwrap().is_some());
        assert!(exhaustive_full_bqueue(&cycle(5), 10).unwrap().is_none());
        let mut cp = cycle(4);
        let p = cp.add_vertex("p").unwrap();
        cp.set_mult(2, p, 1).unwrap();
        let q = exhaustive_full_bqueue(&cp, 10).unwrap().unwrap();
        assert!(q.validate().unwrap() && q.is_full());
        assert!(matches!(exhaustive_full_bqueue(&cycle(11), 10), Err(Error::Resource { .. })));
    }

    #[test]
    fn isolated_vertices_are_enqueued() {
        let g = Multigraph::from_edges(3, &[(0, 1, 1)]).unwrap();
        let q = greedy_full_bqueue(&g).unwrap().unwrap();
        assert!(q.validate().unwrap() && q.is_full());
        assert!(q.us.contains(&2));
    }
}
