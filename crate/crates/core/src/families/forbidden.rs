//! The six forbidden graphs. Each is pinned as a graph6 string; the builders
//! below re-derive them from `B8`, `B16^(1)` and the explicit 14-vertex
//! completions, and the regeneration tests check the pins against them.

use std::sync::OnceLock;

use super::bad::{b16_1, b8};
use crate::error::Result;
use crate::graph::{parse_graph6, SimpleGraph, Vertex};
use crate::iso::{find_subgraph, is_isomorphic};

pub const FORBIDDEN_NAMES: [&str; 6] = ["F11", "F14_1", "F14_2", "F19_1", "F19_2", "F22"];

const PINNED: [&str; 6] = [
    "JqOpO_H@GE_",
    "MsP@Og_C?H@B?c?W_",
    "MsP@PGOC?P?b?g?S_",
    "RqHH__G@?C?H?K?O?CG?a?AG?CO?CW",
    "RqOpO_G@?C?I?I?O?CG?`?AO?CG?Cg",
    "UsP@Og_C?O?`?_?O?CO?a?G??O??SG?IO??c??EG",
];

/// The six fixtures in increasing order of size, paired with their names.
pub fn forbidden_six() -> &'static [(&'static str, SimpleGraph)] {
    static CELL: OnceLock<Vec<(&'static str, SimpleGraph)>> = OnceLock::new();
    CELL.get_or_init(|| {
        FORBIDDEN_NAMES
            .iter()
            .zip(PINNED)
            .map(|(&name, g6)| (name, parse_graph6(g6.as_bytes()).expect("pinned fixture parses")))
            .collect()
    })
}

pub fn forbidden(name: &str) -> Option<&'static SimpleGraph> {
    forbidden_six().iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

/// Name of the first forbidden graph contained (not necessarily induced) in `g`.
pub fn contains_any_forbidden(g: &SimpleGraph) -> Option<&'static str> {
    forbidden_six()
        .iter()
        .find(|(_, f)| find_subgraph(f, g, false).is_some())
        .map(|(name, _)| *name)
}

/// Name of the forbidden graph isomorphic to `g`, if any.
pub fn is_forbidden(g: &SimpleGraph) -> Option<&'static str> {
    forbidden_six()
        .iter()
        .find(|(_, f)| f.n() == g.n() && is_isomorphic(f, g))
        .map(|(name, _)| *name)
}

/// Attaches `w1, w3, u` to a bad graph with degree-2 matching `v1v3`, `v2v4`:
/// `w1 ~ {v1, v2, u}`, `w3 ~ {v3, v4, u}`, and the same with `v2`, `v4` swapped.
fn close_bad(base: &SimpleGraph) -> Vec<SimpleGraph> {
    let pairs: Vec<(Vertex, Vertex)> = base
        .edges()
        .filter(|&(x, y)| base.degree(x) == 2 && base.degree(y) == 2)
        .collect();
    assert_eq!(pairs.len(), 2, "base must have a degree-2 matching of size two");
    let ((v1, v3), (v2, v4)) = (pairs[0], pairs[1]);
    let n = base.n();
    let (w1, w3, u) = (n, n + 1, n + 2);
    [(v2, v4), (v4, v2)]
        .into_iter()
        .map(|(p, q)| {
            let edges = [(w1, v1), (w1, p), (w1, u), (w3, v3), (w3, q), (w3, u)];
            edges
                .iter()
                .try_fold(base.add_vertices(3), |g, &(x, y)| g.add_edge(x, y))
                .expect("fresh edges")
        })
        .collect()
}

pub fn build_f11_candidates() -> Vec<SimpleGraph> {
    close_bad(&b8())
}

pub fn build_f19_candidates() -> Vec<SimpleGraph> {
    close_bad(b16_1())
}

/// The two cubic 14-vertex completions: a 6-cycle `v1..v6` with pendant
/// `w_i ~ v_i`, edges `w1w3, w3w5, w2w4, w4w6`, `x1 ~ w1`, `x5 ~ w5`,
/// `x1x5`, and then `x1w6, x5w2` (first) or `x1w2, x5w6` (second).
pub fn build_f14() -> [SimpleGraph; 2] {
    let v = |i: usize| i - 1;
    let w = |i: usize| i + 5;
    let (x1, x5) = (12, 13);
    let mut common: Vec<(Vertex, Vertex)> = (1..=6).map(|i| (v(i), v(i % 6 + 1))).collect();
    common.extend((1..=6).map(|i| (v(i), w(i))));
    common.extend([(w(1), w(3)), (w(3), w(5)), (w(2), w(4)), (w(4), w(6))]);
    common.extend([(w(1), x1), (w(5), x5), (x1, x5)]);
    let with = |extra: [(Vertex, Vertex); 2]| {
        let mut edges = common.clone();
        edges.extend(extra);
        SimpleGraph::from_edges(14, &edges).expect("F14 edges are valid")
    };
    [with([(x1, w(6)), (x5, w(2))]), with([(x1, w(2)), (x5, w(6))])]
}

/// The eight completions of `C5 + w4` onto `B16^(1)` minus its edge common
/// to all 6-cycles. Labels: `B16^(1)` keeps `0..16`, `v1..v5` are `16..21`,
/// `w4` is `21`.
pub fn build_f22_wirings() -> Result<Vec<SimpleGraph>> {
    let b = b16_1();
    let common = b.edges_in_all_cycles(6).unwrap_or_default();
    assert_eq!(common.len(), 1, "B16^(1) has exactly one edge on all 6-cycles");
    let (w1, w2) = common[0];
    let x: Vec<(Vertex, Vertex)> = b
        .edges()
        .filter(|&(p, q)| b.degree(p) == 2 && b.degree(q) == 2)
        .collect();
    let v = |i: usize| 15 + i;
    let w4 = 21;
    let base = b.delete_edge(w1, w2)?.add_vertices(6);
    let mut fixed: Vec<(Vertex, Vertex)> = (1..=5).map(|i| (v(i), v(i % 5 + 1))).collect();
    fixed.extend([(v(4), w4), (v(1), w1), (v(2), w2)]);
    let mut out = Vec::new();
    for first in [x[0].0, x[0].1] {
        for second in [x[1].0, x[1].1] {
            let r1 = if first == x[0].0 { x[0].1 } else { x[0].0 };
            let r2 = if second == x[1].0 { x[1].1 } else { x[1].0 };
            for (to3, to5) in [(r1, r2), (r2, r1)] {
                let mut edges = fixed.clone();
                edges.extend([(w4, first), (w4, second), (v(3), to3), (v(5), to5)]);
                out.push(edges.iter().try_fold(base.clone(), |g, &(p, q)| g.add_edge(p, q))?);
            }
        }
    }
    Ok(out)
}
