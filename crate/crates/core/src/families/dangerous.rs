//! Dangerous graphs: closure of `C5` under sums and 8-augmentation, together
//! with joins of two bad graphs.

use serde::{Deserialize, Serialize};

use super::bad::{all_augmentations, enumerate_bad, find_corners, Corner};
use super::trace::{Base, ConstructionTrace, Step};
use super::Catalog;
use crate::alpha::alpha_size;
use crate::error::{GraphError, Result};
use crate::graph::{cycle, SimpleGraph, Vertex};

pub const DEFAULT_DANGEROUS_CAP: usize = 29;

/// The five degree-2 vertices of a summand. `d` and `e` are adjacent and stay
/// of degree 2; `a` and `b` go to the two new vertices `v1`, `v2`; `c` takes
/// the edge between the summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumLabels {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
    pub e: Vertex,
}

impl SumLabels {
    fn validate(&self, g: &SimpleGraph) -> Result<()> {
        let mut given = [self.a, self.b, self.c, self.d, self.e];
        given.sort_unstable();
        if given.to_vec() != g.vertices_of_degree(2) {
            return Err(GraphError::Precondition(
                "sum labels must be exactly the five degree-2 vertices".into(),
            ));
        }
        if !g.has_edge(self.d, self.e) {
            return Err(GraphError::Precondition("labels d and e must be adjacent".into()));
        }
        Ok(())
    }
}

/// Every admissible labelling, with `a < b`.
pub fn sum_labelings(g: &SimpleGraph) -> Vec<SumLabels> {
    let deg2 = g.vertices_of_degree(2);
    if deg2.len() != 5 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &d) in deg2.iter().enumerate() {
        for &e in &deg2[i + 1..] {
            if !g.has_edge(d, e) {
                continue;
            }
            let rest: Vec<Vertex> = deg2.iter().copied().filter(|&v| v != d && v != e).collect();
            for &c in &rest {
                let ab: Vec<Vertex> = rest.iter().copied().filter(|&v| v != c).collect();
                out.push(SumLabels { a: ab[0], b: ab[1], c, d, e });
            }
        }
    }
    out
}

/// How `v1` and `v2` meet the `a`, `b` labels of the two summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumWiring {
    /// `v1 ~ a1, a2` and `v2 ~ b1, b2`.
    Parallel,
    /// `v1 ~ a1, b2` and `v2 ~ b1, a2`.
    Crossed,
    /// `v1 ~ a1, b1` and `v2 ~ a2, b2`.
    Split,
}

impl SumWiring {
    pub const ALL: [SumWiring; 3] = [SumWiring::Parallel, SumWiring::Crossed, SumWiring::Split];
}

/// Disjoint union of `d1` and `d2` (in that order) plus `u, v1, v2`, with
/// edges `u v1`, `u v2`, `c1 c2`, and the `a`, `b` edges given by `wiring`.
pub fn sum_dangerous(
    d1: &SimpleGraph,
    l1: &SumLabels,
    d2: &SimpleGraph,
    l2: &SumLabels,
    wiring: SumWiring,
) -> Result<SimpleGraph> {
    l1.validate(d1)?;
    l2.validate(d2)?;
    let off = d1.n();
    let u = off + d2.n();
    let (v1, v2) = (u + 1, u + 2);
    let (a2, b2) = (off + l2.a, off + l2.b);
    let attach = match wiring {
        SumWiring::Parallel => [(v1, l1.a), (v2, l1.b), (v1, a2), (v2, b2)],
        SumWiring::Crossed => [(v1, l1.a), (v2, l1.b), (v1, b2), (v2, a2)],
        SumWiring::Split => [(v1, l1.a), (v1, l1.b), (v2, a2), (v2, b2)],
    };
    let mut g = d1.disjoint_union(d2).add_vertices(3);
    for (x, y) in [(u, v1), (u, v2), (l1.c, off + l2.c)].into_iter().chain(attach) {
        g = g.add_edge(x, y)?;
    }
    if !g.is_triangle_free() {
        return Err(GraphError::Precondition("sum wiring creates a triangle".into()));
    }
    Ok(g)
}

/// Join of two bad graphs at corners `(a1,b1,c1)`, `(a2,b2,c2)`: remove
/// `b1, b2, c2`, add `c1 a2` and `a1 y2` where `y2` is the other neighbour of `c2`.
pub fn join_bad(h1: &SimpleGraph, k1: &Corner, h2: &SimpleGraph, k2: &Corner) -> Result<SimpleGraph> {
    for (h, k) in [(h1, k1), (h2, k2)] {
        if Corner::new(h, k.a, k.b, k.c)? != *k {
            return Err(GraphError::Precondition("corner does not match the graph".into()));
        }
    }
    let off = h1.n();
    let y2 = *h2.neighbors(k2.c).iter().find(|&&v| v != k2.b).unwrap();
    let union = h1.disjoint_union(h2);
    let (rest, map) = union.delete_vertices(&[k1.b, off + k2.b, off + k2.c]);
    let pos = |v: Vertex| map.iter().position(|&w| w == v).unwrap();
    rest.add_edge(pos(k1.c), pos(off + k2.a))?
        .add_edge(pos(k1.a), pos(off + y2))
}

/// Closure of `{C5}` under sums and 8-augmentation, plus joins of bad graphs, up to `max_n`.
pub fn enumerate_dangerous(max_n: usize) -> Result<Catalog> {
    let mut cat = Catalog::new(max_n);
    if max_n < 5 {
        return Ok(cat.finish());
    }
    let bad = enumerate_bad(max_n)?;
    cat.insert(cycle(5), ConstructionTrace::base(Base::C5))?;
    for n in 6..=max_n {
        let start = cat.len();
        // sums
        let existing: Vec<_> = cat.entries().to_vec();
        for (i, e1) in existing.iter().enumerate() {
            for e2 in &existing[i..] {
                if e1.graph.n() + e2.graph.n() + 3 != n {
                    continue;
                }
                for l1 in sum_labelings(&e1.graph) {
                    for l2 in sum_labelings(&e2.graph) {
                        for wiring in SumWiring::ALL {
                            let Ok(g) = sum_dangerous(&e1.graph, &l1, &e2.graph, &l2, wiring) else {
                                continue;
                            };
                            let step = Step::Sum {
                                other: Box::new(e2.trace.clone()),
                                labels: l1,
                                other_labels: l2,
                                wiring,
                            };
                            cat.insert(g, e1.trace.then(step))?;
                        }
                    }
                }
            }
        }
        // 8-augmentations
        for e in existing.iter().filter(|e| e.graph.n() + 8 == n) {
            for (step, g) in all_augmentations(&e.graph)? {
                cat.insert(g, e.trace.then(step))?;
            }
        }
        // joins of bad graphs
        for h1 in bad.entries() {
            for h2 in bad.entries().iter().filter(|h2| h1.graph.n() + h2.graph.n() == n + 3) {
                for k1 in find_corners(&h1.graph) {
                    for k2 in find_corners(&h2.graph) {
                        let g = join_bad(&h1.graph, &k1, &h2.graph, &k2)?;
                        let step = Step::Join {
                            other: Box::new(h2.trace.clone()),
                            corner: k1.as_array(),
                            other_corner: k2.as_array(),
                        };
                        cat.insert(g, h1.trace.then(step))?;
                    }
                }
            }
        }
        for e in &cat.entries()[start..] {
            let fails = check_shape(&e.graph);
            assert!(fails.is_empty(), "dangerous graph {} fails {fails:?}", e.key);
        }
    }
    Ok(cat.finish())
}

/// Items 1, 2, 3 and 6 of the dangerous-graph property list.
fn check_shape(g: &SimpleGraph) -> Vec<String> {
    let mut fails = Vec::new();
    if !(g.is_triangle_free() && g.is_subcubic() && g.is_two_connected()) {
        fails.push("1: not triangle-free, subcubic and 2-connected".to_string());
    }
    let deg2 = g.vertices_of_degree(2);
    if deg2.len() != 5 {
        fails.push(format!("2: {} degree-2 vertices", deg2.len()));
    } else if g.n() != 5 || g.m() != 5 {
        let induced = g.induced_subgraph(&deg2);
        let shape = induced.degree_sequence();
        if induced.m() != 2 || shape.iter().filter(|&&d| d == 0).count() != 1 {
            fails.push(format!("2: degree-2 vertices induce degrees {shape:?}"));
        }
    }
    match g.lb() {
        Ok(lb) if 24 * alpha_size(g) as i64 >= lb.num24() => {}
        Ok(lb) => fails.push(format!("3: alpha {} below lb {lb}", alpha_size(g))),
        Err(e) => fails.push(format!("3: {e}")),
    }
    if g.cycles_of_length(5).is_empty() {
        fails.push("6: no 5-cycle".to_string());
    }
    fails
}

/// Failed items of the full dangerous-graph property list, including the
/// avoidance items over every qualifying set of degree-2 vertices.
pub fn check_dangerous_properties(g: &SimpleGraph) -> Vec<String> {
    let mut fails = check_shape(g);
    let deg2 = g.vertices_of_degree(2);
    let Ok(lb) = g.lb() else { return fails };
    // independent sets have integral size, so compare against the ceiling
    let need = lb.ceil() as usize;
    let avoid = |t: &[Vertex]| {
        let (rest, _) = g.delete_vertices(t);
        alpha_size(&rest) >= need
    };
    for (i, &x) in deg2.iter().enumerate() {
        for &y in &deg2[i + 1..] {
            if !avoid(&[x, y]) {
                fails.push(format!("4: no independent set of size lb avoids {{{x},{y}}}"));
            }
        }
    }
    for skip_a in 0..deg2.len() {
        for skip_b in skip_a + 1..deg2.len() {
            let (p, q) = (deg2[skip_a], deg2[skip_b]);
            if g.has_edge(p, q) {
                continue;
            }
            let t: Vec<Vertex> = deg2.iter().copied().filter(|&v| v != p && v != q).collect();
            if !avoid(&t) {
                fails.push(format!("5: no independent set of size lb avoids {t:?}"));
            }
        }
    }
    fails
}
