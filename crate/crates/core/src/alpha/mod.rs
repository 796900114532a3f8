//! Exact maximum (weight) independent sets and the packing quantities built on them.
//!
//! One branch-and-bound serves both the unweighted and the weighted problem.
//! Reductions: component splitting, isolated vertices, neighbourhood
//! domination, and (unit weights only) degree-2 folding. Branching is on a
//! vertex of maximum degree, lowest id first, so witnesses are reproducible.

mod fractional;
mod packing;

use std::ops::Add;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::graph::{SimpleGraph, Vertex};

pub use fractional::{fractional_chromatic, fractional_chromatic_exhaustive, FractionalChromatic, FRACTIONAL_CAP};
pub use packing::{
    bad_packing, lb_t, max_disjoint_packing, triangle_packing, triangle_packing_number,
    BAD_PACKING_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisResult {
    pub size: usize,
    pub witness: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingResult {
    pub size: usize,
    pub witness: Vec<Vec<Vertex>>,
}

pub trait Weight: Clone + Ord + Add<Output = Self> {
    fn zero() -> Self;
    /// Whether every weight of this type is the same unit, enabling folding.
    const UNIT: bool;
}

impl Weight for u64 {
    fn zero() -> Self {
        0
    }
    const UNIT: bool = true;
}

impl Weight for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    const UNIT: bool = false;
}

#[derive(Clone)]
struct Work<W> {
    adj: Vec<Vec<usize>>,
    w: Vec<W>,
}

struct Solution<W> {
    value: W,
    set: Vec<usize>,
}

impl<W: Weight> Work<W> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Drops the flagged vertices; returns the remainder and its new-to-old map.
    fn without(&self, removed: &[bool]) -> (Work<W>, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !removed[v]).collect();
        self.induced(&keep)
    }

    fn induced(&self, keep: &[usize]) -> (Work<W>, Vec<usize>) {
        let mut id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| id[u] != usize::MAX)
                    .map(|&u| id[u])
                    .collect()
            })
            .collect();
        let w = keep.iter().map(|&v| self.w[v].clone()).collect();
        (Work { adj, w }, keep.to_vec())
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut members = Vec::new();
            while let Some(u) = stack.pop() {
                members.push(u);
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Greedy-matching bound: each matched edge contributes its heavier end.
    fn upper_bound(&self) -> W {
        let n = self.n();
        let mut matched = vec![false; n];
        let mut total = W::zero();
        for u in 0..n {
            if matched[u] {
                continue;
            }
            matched[u] = true;
            match self.adj[u].iter().find(|&&v| !matched[v]) {
                Some(&v) => {
                    matched[v] = true;
                    total = total + self.w[u].clone().max(self.w[v].clone());
                }
                None => total = total + self.w[u].clone(),
            }
        }
        total
    }

    /// `u` may be deleted when some neighbour `v` has `N[v] ⊆ N[u]` and is at least as heavy.
    fn dominated(&self) -> Option<usize> {
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if self.w[v] >= self.w[u]
                    && self.adj[v].len() <= self.adj[u].len()
                    && self.adj[v].iter().all(|&x| x == u || self.has_edge(u, x))
                {
                    return Some(u);
                }
            }
        }
        None
    }
}

fn solve<W: Weight>(g: &Work<W>) -> Solution<W> {
    let n = g.n();
    if n == 0 {
        return Solution {
            value: W::zero(),
            set: Vec::new(),
        };
    }

    let comps = g.components();
    if comps.len() > 1 {
        let mut value = W::zero();
        let mut set = Vec::new();
        for comp in comps {
            let (sub, map) = g.induced(&comp);
            let s = solve(&sub);
            value = value + s.value;
            set.extend(s.set.into_iter().map(|v| map[v]));
        }
        set.sort_unstable();
        return Solution { value, set };
    }

    if n == 1 {
        return Solution {
            value: g.w[0].clone(),
            set: vec![0],
        };
    }

    if let Some(u) = g.dominated() {
        let mut removed = vec![false; n];
        removed[u] = true;
        let (sub, map) = g.without(&removed);
        let s = solve(&sub);
        return lift(s, &map, None);
    }

    if W::UNIT {
        // no domination left, so a degree-2 vertex has non-adjacent neighbours
        if let Some(v) = (0..n).find(|&v| g.adj[v].len() == 2) {
            return fold(g, v);
        }
    }

    let v = (0..n).max_by_key(|&v| (g.adj[v].len(), std::cmp::Reverse(v))).unwrap();

    let mut closed = vec![false; n];
    closed[v] = true;
    for &u in &g.adj[v] {
        closed[u] = true;
    }
    let (inc_graph, inc_map) = g.without(&closed);
    let inc = solve(&inc_graph);
    let inc = Solution {
        value: inc.value + g.w[v].clone(),
        set: inc.set,
    };
    let inc = lift(inc, &inc_map, Some(v));

    let mut just_v = vec![false; n];
    just_v[v] = true;
    let (exc_graph, exc_map) = g.without(&just_v);
    if exc_graph.upper_bound() <= inc.value {
        return inc;
    }
    let exc = solve(&exc_graph);
    if exc.value > inc.value {
        lift(exc, &exc_map, None)
    } else {
        inc
    }
}

fn lift<W>(s: Solution<W>, map: &[usize], extra: Option<usize>) -> Solution<W> {
    let mut set: Vec<usize> = s.set.into_iter().map(|v| map[v]).collect();
    set.extend(extra);
    set.sort_unstable();
    Solution {
        value: s.value,
        set,
    }
}

/// Folds degree-2 vertex `v` with non-adjacent neighbours `a`, `b` into one vertex.
fn fold<W: Weight>(g: &Work<W>, v: usize) -> Solution<W> {
    let n = g.n();
    let (a, b) = (g.adj[v][0], g.adj[v][1]);
    debug_assert!(!g.has_edge(a, b));
    let keep: Vec<usize> = (0..n).filter(|&x| x != v && x != a && x != b).collect();
    let (mut sub, map) = g.induced(&keep);
    let mut id = vec![usize::MAX; n];
    for (i, &x) in keep.iter().enumerate() {
        id[x] = i;
    }
    let x = sub.n();
    let mut nx: Vec<usize> = g.adj[a]
        .iter()
        .chain(&g.adj[b])
        .filter(|&&u| u != v)
        .map(|&u| id[u])
        .collect();
    nx.sort_unstable();
    nx.dedup();
    for &u in &nx {
        sub.adj[u].push(x);
    }
    sub.adj.push(nx);
    sub.w.push(g.w[v].clone());
    let s = solve(&sub);
    let mut set: Vec<usize> = Vec::with_capacity(s.set.len() + 1);
    let mut took_x = false;
    for &u in &s.set {
        if u == x {
            took_x = true;
        } else {
            set.push(map[u]);
        }
    }
    if took_x {
        set.extend([a, b]);
    } else {
        set.push(v);
    }
    set.sort_unstable();
    Solution {
        value: s.value + g.w[v].clone(),
        set,
    }
}

fn work_from<W: Clone>(g: &SimpleGraph, w: Vec<W>) -> Work<W> {
    Work {
        adj: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
        w,
    }
}

/// Independence number with a maximum independent set as witness.
pub fn alpha(g: &SimpleGraph) -> MisResult {
    let s = solve(&work_from(g, vec![1u64; g.n()]));
    debug_assert!(g.is_independent(&s.set));
    debug_assert_eq!(s.value as usize, s.set.len());
    MisResult {
        size: s.set.len(),
        witness: s.set,
    }
}

pub fn alpha_size(g: &SimpleGraph) -> usize {
    alpha(g).size
}

/// Maximum-weight independent set for nonnegative rational weights.
pub fn max_weight_independent_set(g: &SimpleGraph, weights: &[BigRational]) -> (BigRational, Vec<Vertex>) {
    assert_eq!(weights.len(), g.n());
    assert!(weights.iter().all(|w| *w >= <BigRational as Weight>::zero()), "weights must be nonnegative");
    let s = solve(&work_from(g, weights.to_vec()));
    (s.value, s.set)
}

/// A maximum independent set of `g` disjoint from `avoid`, if one exists
/// (equivalently `α(G - avoid) = α(G)`).
pub fn has_mis_avoiding(g: &SimpleGraph, avoid: &[Vertex]) -> Option<Vec<Vertex>> {
    let full = alpha_size(g);
    let (rest, map) = g.delete_vertices(avoid);
    let r = alpha(&rest);
    (r.size == full).then(|| r.witness.iter().map(|&v| map[v]).collect())
}

/// Whether `v` belongs to every maximum independent set, i.e. `α(G - v) < α(G)`.
pub fn forall_mis_contain(g: &SimpleGraph, v: Vertex) -> bool {
    let (rest, _) = g.delete_vertices(&[v]);
    alpha_size(&rest) < alpha_size(g)
}

/// Largest independent set of `g - avoid`, mapped back to `g`'s ids.
pub fn alpha_avoiding(g: &SimpleGraph, avoid: &[Vertex]) -> MisResult {
    let (rest, map) = g.delete_vertices(avoid);
    let r = alpha(&rest);
    MisResult {
        size: r.size,
        witness: r.witness.iter().map(|&v| map[v]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn brute_alpha(g: &SimpleGraph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                g.edges()
                    .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_values() {
        assert_eq!(alpha(&cycle(5)).size, 2);
        assert_eq!(alpha(&complete(4)).size, 1);
        assert_eq!(alpha(&path(4)).size, 2);
        assert_eq!(alpha(&SimpleGraph::empty(3)).size, 3);
        assert_eq!(alpha(&SimpleGraph::empty(0)).size, 0);
        let petersen = SimpleGraph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(alpha(&petersen).size, 4);
    }

    #[test]
    fn witnesses_are_maximal_independent() {
        for g in [cycle(9), path(7), complete(4), cycle(4).disjoint_union(&cycle(5))] {
            let r = alpha(&g);
            assert!(g.is_independent(&r.witness));
            assert_eq!(r.size, brute_alpha(&g));
        }
    }

    #[test]
    fn forall_contain_examples() {
        let k2 = complete(2);
        assert!(!forall_mis_contain(&k2, 0));
        let p3 = path(3);
        assert!(forall_mis_contain(&p3, 0));
        assert!(!forall_mis_contain(&p3, 1));
        assert!((0..5).all(|v| !forall_mis_contain(&cycle(5), v)));
    }

    #[test]
    fn weighted_matches_unweighted_on_units() {
        let g = cycle(7);
        let w = vec![BigRational::from_integer(1.into()); 7];
        let (val, set) = max_weight_independent_set(&g, &w);
        assert_eq!(val, BigRational::from_integer(3.into()));
        assert!(g.is_independent(&set));
    }

    #[test]
    fn weighted_prefers_heavy_vertex() {
        // star K_{1,3} with a heavy centre
        let g = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let w = vec![r(7, 2), r(1, 1), r(1, 1), r(1, 1)];
        let (val, set) = max_weight_independent_set(&g, &w);
        assert_eq!(val, r(7, 2));
        assert_eq!(set, vec![0]);
    }
}
