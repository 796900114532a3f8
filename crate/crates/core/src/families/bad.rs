//! Bad graphs: `B8`, corners, the 8-augmentation, nice paths and almost bad graphs.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::trace::{Base, ConstructionTrace, Step};
use super::Catalog;
use crate::alpha::{alpha_size, has_mis_avoiding};
use crate::error::{GraphError, Result};
use crate::graph::{complete, SimpleGraph, Vertex};
use crate::iso::is_isomorphic;

pub const DEFAULT_BAD_CAP: usize = 32;

/// Gadget ids: leftmost `L1..L3` are `0..3`, middle `M1..M3` are `3..6`,
/// rightmost `R1..R5` are `6..11`.
pub const GADGET_LEFT: [Vertex; 3] = [0, 1, 2];
/// `R4`, `R5`: the adjacent rightmost vertices that keep degree 2.
pub const GADGET_DEGREE2: [Vertex; 2] = [9, 10];

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// The 11-vertex gadget: the 6-cycle `L1 M1 L2 M2 L3 M3`, the spokes `Mi Ri`
/// for `i ≤ 3`, and the 5-cycle on `R1..R5`.
pub fn gadget() -> SimpleGraph {
    SimpleGraph::from_edges(
        11,
        &[
            (0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0),
            (3, 6), (4, 7), (5, 8),
            (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        ],
    )
    .expect("gadget edges are valid")
}

/// `B8`: the 4-cycle `0 1 2 3` with the nice paths `0 4 5 2` and `1 6 7 3`.
pub fn b8() -> SimpleGraph {
    SimpleGraph::from_edges(
        8,
        &[
            (0, 1), (1, 2), (2, 3), (3, 0),
            (0, 4), (4, 5), (5, 2),
            (1, 6), (6, 7), (7, 3),
        ],
    )
    .expect("B8 edges are valid")
}

/// The 16-vertex bad graph with no maximum independent set avoiding all four
/// degree-2 vertices.
pub fn b16_1() -> &'static SimpleGraph {
    static CELL: OnceLock<SimpleGraph> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = b8();
        let mut found: Option<SimpleGraph> = None;
        for corner in find_corners(&g) {
            for perm in PERMUTATIONS {
                let h = augment8(&g, &corner, perm).expect("corner of B8");
                let deg2 = h.vertices_of_degree(2);
                if has_mis_avoiding(&h, &deg2).is_none() {
                    match &found {
                        Some(f) => assert!(is_isomorphic(f, &h), "two candidates for B16^(1)"),
                        None => found = Some(h),
                    }
                }
            }
        }
        found.expect("some 8-augmentation of B8 blocks all degree-2 vertices")
    })
}

/// A path `a b c` with `deg a = 3`, `deg b = deg c = 2`, `ac ∉ E`, together
/// with its interface: the two other neighbours of `a` (ascending) and the
/// other neighbour of `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub interface: [Vertex; 3],
}

impl Corner {
    pub fn new(g: &SimpleGraph, a: Vertex, b: Vertex, c: Vertex) -> Result<Corner> {
        let bad = |msg: &str| Err(GraphError::Precondition(format!("({a},{b},{c}) is not a corner: {msg}")));
        if [a, b, c].iter().any(|&v| v >= g.n()) {
            return bad("vertex out of range");
        }
        if g.degree(a) != 3 || g.degree(b) != 2 || g.degree(c) != 2 {
            return bad("wrong degrees");
        }
        if !g.has_edge(a, b) || !g.has_edge(b, c) || g.has_edge(a, c) || a == c {
            return bad("not an induced path");
        }
        let outside_a: Vec<Vertex> = g.neighbors(a).iter().copied().filter(|&x| x != b).collect();
        let outside_c = *g.neighbors(c).iter().find(|&&x| x != b).unwrap();
        let interface = [outside_a[0], outside_a[1], outside_c];
        if interface[2] == interface[0] || interface[2] == interface[1] {
            return bad("interface vertices are not distinct");
        }
        Ok(Corner { a, b, c, interface })
    }

    pub fn as_array(&self) -> [Vertex; 3] {
        [self.a, self.b, self.c]
    }
}

pub fn is_corner(g: &SimpleGraph, a: Vertex, b: Vertex, c: Vertex) -> bool {
    Corner::new(g, a, b, c).is_ok()
}

pub fn find_corners(g: &SimpleGraph) -> Vec<Corner> {
    let mut out = Vec::new();
    for a in g.vertices().filter(|&a| g.degree(a) == 3) {
        for &b in g.neighbors(a) {
            if g.degree(b) != 2 {
                continue;
            }
            let c = *g.neighbors(b).iter().find(|&&x| x != a).unwrap();
            if let Ok(corner) = Corner::new(g, a, b, c) {
                out.push(corner);
            }
        }
    }
    out
}

/// Replaces the corner by the gadget: vertices other than `a, b, c` keep
/// their relative order, the gadget follows, and `interface[i]` is joined
/// to leftmost vertex `matching[i]`.
pub fn augment8(g: &SimpleGraph, corner: &Corner, matching: [usize; 3]) -> Result<SimpleGraph> {
    let mut sorted = matching;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(GraphError::Precondition(format!("{matching:?} is not a bijection onto the leftmost vertices")));
    }
    let checked = Corner::new(g, corner.a, corner.b, corner.c)?;
    if checked != *corner {
        return Err(GraphError::Precondition("corner interface does not match the graph".into()));
    }
    if !g.is_subcubic() || !g.is_triangle_free() {
        return Err(GraphError::Precondition("8-augmentation needs a triangle-free subcubic graph".into()));
    }
    let (rest, map) = g.delete_vertices(&corner.as_array());
    let mut back = vec![usize::MAX; g.n()];
    for (new, &old) in map.iter().enumerate() {
        back[old] = new;
    }
    let offset = rest.n();
    let mut h = rest.disjoint_union(&gadget());
    for (i, &x) in corner.interface.iter().enumerate() {
        h = h.add_edge(back[x], offset + GADGET_LEFT[matching[i]])?;
    }
    assert_eq!(alpha_size(&h), alpha_size(g) + 3, "8-augmentation raises alpha by 3");
    assert_eq!(h.lb()?.num24(), g.lb()?.num24() + 72, "8-augmentation raises lb by 3");
    Ok(h)
}

/// Every 8-augmentation of `g` with its parameters.
pub(crate) fn all_augmentations(g: &SimpleGraph) -> Result<Vec<(Step, SimpleGraph)>> {
    let mut out = Vec::new();
    for corner in find_corners(g) {
        for perm in PERMUTATIONS {
            let h = augment8(g, &corner, perm)?;
            out.push((
                Step::Augment8 {
                    corner: corner.as_array(),
                    matching: perm,
                },
                h,
            ));
        }
    }
    Ok(out)
}

/// Closure of `{B8}` under 8-augmentation, up to `max_n` vertices.
pub fn enumerate_bad(max_n: usize) -> Result<Catalog> {
    let mut cat = Catalog::new(max_n);
    if max_n < 8 {
        return Ok(cat);
    }
    cat.insert(b8(), ConstructionTrace::base(Base::B8))?;
    let mut frontier = vec![0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in frontier {
            let entry = cat.entries()[i].clone();
            if entry.graph.n() + 8 > max_n {
                continue;
            }
            for (step, h) in all_augmentations(&entry.graph)? {
                if cat.insert(h, entry.trace.then(step))? {
                    next.push(cat.len() - 1);
                }
            }
        }
        frontier = next;
    }
    Ok(cat.finish())
}

fn degree2_matching(g: &SimpleGraph) -> Option<[(Vertex, Vertex); 2]> {
    let deg2 = g.vertices_of_degree(2);
    if deg2.len() != 4 {
        return None;
    }
    let pairs: Vec<(Vertex, Vertex)> = g.edges().filter(|&(u, v)| g.degree(u) == 2 && g.degree(v) == 2).collect();
    match pairs.as_slice() {
        [p, q] if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 => Some([*p, *q]),
        _ => None,
    }
}

/// The two 4-vertex paths `x p q y` whose interior vertices have degree 2.
pub fn nice_paths(g: &SimpleGraph) -> Result<Vec<[Vertex; 4]>> {
    let pairs = degree2_matching(g).ok_or_else(|| {
        GraphError::Precondition("degree-2 vertices do not form a size-two matching".into())
    })?;
    Ok(pairs
        .iter()
        .map(|&(p, q)| {
            let x = *g.neighbors(p).iter().find(|&&v| v != q).unwrap();
            let y = *g.neighbors(q).iter().find(|&&v| v != p).unwrap();
            [x, p, q, y]
        })
        .collect())
}

/// Removes the interior of `x p q y` and joins `x` to `y`.
pub fn contract_nice_path(g: &SimpleGraph, [x, p, q, y]: [Vertex; 4]) -> Result<SimpleGraph> {
    if !(g.has_edge(x, p) && g.has_edge(p, q) && g.has_edge(q, y)) || g.degree(p) != 2 || g.degree(q) != 2 {
        return Err(GraphError::Precondition(format!("{x} {p} {q} {y} is not a nice path")));
    }
    let (rest, map) = g.delete_vertices(&[p, q]);
    let pos = |v: Vertex| map.iter().position(|&w| w == v).unwrap();
    rest.add_edge(pos(x), pos(y))
}

/// Single and double nice-path contractions of bad graphs, `K4` excluded.
pub fn enumerate_almost_bad(max_n: usize) -> Result<Catalog> {
    let bad = enumerate_bad(max_n + 4)?;
    let k4 = complete(4);
    let mut cat = Catalog::new(max_n);
    for entry in bad.entries() {
        let b = &entry.graph;
        let paths = nice_paths(b)?;
        for (i, &path) in paths.iter().enumerate() {
            let once = contract_nice_path(b, path)?;
            let t1 = entry.trace.then(Step::ContractNicePath { path });
            if once.n() <= max_n {
                cat.insert(once.clone(), t1.clone())?;
            }
            if i == 0 {
                // the second path, relabelled after the first contraction
                let [x, p, q, y] = paths[1];
                let shift = |v: Vertex| v - [path[1], path[2]].iter().filter(|&&d| d < v).count();
                let second = [shift(x), shift(p), shift(q), shift(y)];
                let twice = contract_nice_path(&once, second)?;
                if twice.n() <= max_n && !is_isomorphic(&twice, &k4) {
                    cat.insert(twice, t1.then(Step::ContractNicePath { path: second }))?;
                }
            }
        }
    }
    Ok(cat.finish())
}

/// Failed items of the bad-graph property list (empty when all hold).
pub fn check_bad_properties(g: &SimpleGraph) -> Vec<String> {
    let mut fails = Vec::new();
    if !(g.is_triangle_free() && g.is_subcubic() && g.is_two_connected()) {
        fails.push("1: not triangle-free, subcubic and 2-connected".to_string());
    }
    let deg2 = g.vertices_of_degree(2);
    if g.min_degree() != 2 || deg2.len() != 4 {
        fails.push(format!("2: min degree {} with {} degree-2 vertices", g.min_degree(), deg2.len()));
    }
    if degree2_matching(g).is_none() {
        fails.push("3: degree-2 vertices do not induce a size-two matching".to_string());
    }
    let a = alpha_size(g) as i64;
    match g.lb() {
        Ok(lb) if 24 * a == lb.num24() - 2 => {}
        Ok(lb) => fails.push(format!("4: alpha {a} but lb {lb}")),
        Err(e) => fails.push(format!("4: {e}")),
    }
    let special = is_isomorphic(g, &b8()) || is_isomorphic(g, b16_1());
    if deg2.len() == 4 {
        for skip in 0..4 {
            let t: Vec<Vertex> = deg2.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            if has_mis_avoiding(g, &t).is_none() {
                fails.push(format!("5: no maximum independent set avoids {t:?}"));
            }
        }
        if has_mis_avoiding(g, &deg2).is_some() == special {
            fails.push(format!("5: avoiding all degree-2 vertices is {}possible", if special { "" } else { "im" }));
        }
    }
    if !special {
        match g.edges_in_all_cycles(6) {
            Some(common) if common.is_empty() => {}
            Some(common) => fails.push(format!("6: edges {common:?} lie on every 6-cycle")),
            None => fails.push("6: no 6-cycles, so every edge lies on all of them".to_string()),
        }
    }
    fails
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, Girth};

    #[test]
    fn b8_basics() {
        let g = b8();
        assert_eq!(alpha_size(&g), 3);
        assert_eq!(g.lb().unwrap().num24(), 74);
        assert_eq!(g.girth(), Girth::Finite(4));
        assert!(check_bad_properties(&g).is_empty());
    }

    #[test]
    fn gadget_properties() {
        let g = gadget();
        assert_eq!(alpha_size(&g), 5);
        // every size-5 independent set contains all leftmost vertices
        for mask in 0u32..1 << 11 {
            let set: Vec<Vertex> = (0..11).filter(|&v| mask >> v & 1 == 1).collect();
            if set.len() == 5 && g.is_independent(&set) {
                assert!(GADGET_LEFT.iter().all(|l| set.contains(l)));
            }
        }
        assert!(g.is_independent(&[3, 4, 5]));
        assert_eq!(GADGET_DEGREE2.map(|v| g.degree(v)), [2, 2]);
    }

    #[test]
    fn corners() {
        assert!(find_corners(&cycle(5)).is_empty());
        let c = find_corners(&b8());
        assert!(!c.is_empty());
        let first = Corner::new(&b8(), 0, 4, 5).unwrap();
        assert_eq!(first.interface, [1, 3, 2]);
        assert!(Corner::new(&b8(), 4, 5, 2).is_err());
    }

    #[test]
    fn augmentation_counts() {
        let cat = enumerate_bad(24).unwrap();
        assert_eq!(cat.count_of_order(8), 1);
        assert_eq!(cat.count_of_order(16), 2);
        assert_eq!(cat.count_of_order(24), 4);
    }

    #[test]
    fn matching_must_be_bijection() {
        let g = b8();
        let corner = find_corners(&g)[0];
        assert!(augment8(&g, &corner, [0, 0, 1]).is_err());
    }

    #[test]
    fn b8_nice_paths() {
        let g = b8();
        let paths = nice_paths(&g).unwrap();
        assert_eq!(paths, vec![[0, 4, 5, 2], [1, 6, 7, 3]]);
        let once = contract_nice_path(&g, paths[0]).unwrap();
        assert_eq!(once.n(), 6);
        assert_eq!(once.triangles().len(), 2);
        let ab = enumerate_almost_bad(8).unwrap();
        // the double contraction of B8 is K4
        assert_eq!(ab.len(), 1);
        assert_eq!(ab.entries()[0].graph.n(), 6);
    }
}
