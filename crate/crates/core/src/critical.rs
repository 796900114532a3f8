//! Critical edges and graphs, independence packings, and the structural
//! operations that preserve criticality: double subdivision and gluing along
//! an edge (with its inverse, decomposition on a 2-cutset).

use serde::{Deserialize, Serialize};

use crate::alpha::{alpha_size, MisResult};
use crate::error::{GraphError, Result};
use crate::graph::{Edge, SimpleGraph, Vertex};

/// `α(G − uv) > α(G)`, given `α(G)`.
///
/// An independent set of `G − uv` larger than `α(G)` must contain both ends,
/// so it suffices to solve on `G − N[u] − N[v]`.
fn edge_critical_with(g: &SimpleGraph, alpha_g: usize, u: Vertex, v: Vertex) -> bool {
    let mut closed: Vec<Vertex> = g.neighbors(u).iter().chain(g.neighbors(v)).copied().collect();
    closed.extend([u, v]);
    closed.sort_unstable();
    closed.dedup();
    let (rest, _) = g.delete_vertices(&closed);
    alpha_size(&rest) + 2 > alpha_g
}

pub fn is_edge_critical(g: &SimpleGraph, u: Vertex, v: Vertex) -> Result<bool> {
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u, v));
    }
    Ok(edge_critical_with(g, alpha_size(g), u, v))
}

pub fn non_critical_edges(g: &SimpleGraph) -> Vec<Edge> {
    let a = alpha_size(g);
    g.edges().filter(|&(u, v)| !edge_critical_with(g, a, u, v)).collect()
}

pub fn is_critical(g: &SimpleGraph) -> bool {
    let a = alpha_size(g);
    g.edges().all(|(u, v)| edge_critical_with(g, a, u, v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingPart {
    /// Vertices of the part, as ids of the input graph.
    pub vertices: Vec<Vertex>,
    /// The part itself, on `0..vertices.len()`.
    pub graph6: String,
    pub alpha: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependencePacking {
    pub parts: Vec<PackingPart>,
}

impl IndependencePacking {
    pub fn alpha_sum(&self) -> usize {
        self.parts.iter().map(|p| p.alpha).sum()
    }
}

/// Deletes the lowest non-critical edge until the graph is critical and
/// returns the components of what remains.
pub fn independence_packing(g: &SimpleGraph) -> IndependencePacking {
    let target = alpha_size(g);
    let mut h = g.clone();
    loop {
        let a = alpha_size(&h);
        debug_assert_eq!(a, target);
        let Some((u, v)) = h.edges().find(|&(u, v)| !edge_critical_with(&h, a, u, v)) else {
            break;
        };
        h = h.delete_edge(u, v).expect("edge came from the graph");
    }
    let parts: Vec<PackingPart> = h
        .components()
        .into_iter()
        .map(|vertices| {
            let part = h.induced_subgraph(&vertices);
            PackingPart {
                alpha: alpha_size(&part),
                graph6: part.to_graph6(),
                vertices,
            }
        })
        .collect();
    let packing = IndependencePacking { parts };
    assert_eq!(packing.alpha_sum(), target, "packing certificate failed");
    packing
}

/// Replaces edge `ad` by the path `a b c d`; `b` and `c` get ids `n` and `n+1`.
pub fn double_subdivide(g: &SimpleGraph, a: Vertex, d: Vertex) -> Result<SimpleGraph> {
    if !g.has_edge(a, d) {
        return Err(GraphError::MissingEdge(a, d));
    }
    let n = g.n();
    let h = g
        .delete_edge(a, d)?
        .add_vertices(2)
        .add_edge(a, n)?
        .add_edge(n, n + 1)?
        .add_edge(n + 1, d)?;
    assert_eq!(alpha_size(&h), alpha_size(g) + 1, "double subdivision law");
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

/// Glues `g1 − v` onto `g0 − xy`: the `i`-th neighbour of `v` (ascending)
/// is joined to `x` or `y` according to `assignment[i]`. Vertices of `g0` keep
/// their ids; those of `g1 − v` follow in ascending order.
pub fn glue(
    g0: &SimpleGraph,
    (x, y): Edge,
    g1: &SimpleGraph,
    v: Vertex,
    assignment: &[Side],
) -> Result<SimpleGraph> {
    let pre = |msg: &str| Err(GraphError::Precondition(msg.to_string()));
    if !g0.has_edge(x, y) {
        return Err(GraphError::MissingEdge(x, y));
    }
    if v >= g1.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g1.n() });
    }
    if g0.n() <= 2 || g1.n() <= 2 {
        return pre("glue operands must not be K1 or K2");
    }
    if !g0.is_connected() || !g1.is_connected() {
        return pre("glue operands must be connected");
    }
    if assignment.len() != g1.degree(v) {
        return pre("assignment must cover every neighbour of v");
    }
    if !assignment.contains(&Side::X) || !assignment.contains(&Side::Y) {
        return pre("assignment must use both x and y");
    }
    if !is_critical(g0) || !is_critical(g1) {
        return pre("glue operands must be critical");
    }
    let (rest, map) = g1.delete_vertices(&[v]);
    let mut back = vec![usize::MAX; g1.n()];
    for (new, &old) in map.iter().enumerate() {
        back[old] = new;
    }
    let n0 = g0.n();
    let mut h = g0.delete_edge(x, y)?.disjoint_union(&rest);
    for (&w, side) in g1.neighbors(v).iter().zip(assignment) {
        let end = if *side == Side::X { x } else { y };
        h = h.add_edge(end, n0 + back[w])?;
    }
    assert_eq!(alpha_size(&h), alpha_size(g0) + alpha_size(g1), "gluing is alpha-additive");
    assert!(is_critical(&h), "gluing preserves criticality");
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `G[C0 ∪ {x,y}] + xy`.
    pub g0: SimpleGraph,
    /// Ids of `x` and `y` in `g0`.
    pub xy: Edge,
    /// Original ids of the vertices of `g0`, ascending.
    pub g0_vertices: Vec<Vertex>,
    /// `G[C1 ∪ {x,y}]` with `x` and `y` merged into the last vertex.
    pub g1: SimpleGraph,
    /// Original ids of the vertices of `g1` other than the merged one.
    pub g1_vertices: Vec<Vertex>,
    /// For each neighbour of the merged vertex (ascending), which of x, y it came from.
    pub assignment: Vec<Side>,
}

impl Decomposition {
    pub fn merged(&self) -> Vertex {
        self.g1.n() - 1
    }
}

/// Splits a connected critical graph along a non-adjacent 2-cutset.
pub fn decompose_on_2cutset(g: &SimpleGraph, x: Vertex, y: Vertex) -> Result<Decomposition> {
    let pre = |msg: String| Err(GraphError::Precondition(msg));
    if x == y || x >= g.n() || y >= g.n() {
        return pre(format!("invalid cutset {{{x},{y}}}"));
    }
    if g.has_edge(x, y) {
        return pre("cutset vertices are adjacent (clique cutset)".into());
    }
    if !g.is_connected() || !is_critical(g) {
        return pre("input must be connected and critical".into());
    }
    let comps = g.components_avoiding(&[x, y]);
    if comps.len() != 2 {
        return pre(format!("removing {{{x},{y}}} leaves {} components", comps.len()));
    }
    let sees_both = |c: &[Vertex]| c.iter().any(|&w| g.has_edge(w, x) && g.has_edge(w, y));
    let orders: Vec<(usize, usize)> = match (sees_both(&comps[0]), sees_both(&comps[1])) {
        (true, true) => return pre("both sides have a vertex adjacent to x and y".into()),
        (true, false) => vec![(0, 1)],
        (false, true) => vec![(1, 0)],
        (false, false) => vec![(0, 1), (1, 0)],
    };
    for (i0, i1) in orders {
        let d = split(g, x, y, &comps[i0], &comps[i1])?;
        if is_critical(&d.g0) && is_critical(&d.g1) {
            return Ok(d);
        }
    }
    pre("no labelling of the sides yields two critical graphs".into())
}

fn split(g: &SimpleGraph, x: Vertex, y: Vertex, c0: &[Vertex], c1: &[Vertex]) -> Result<Decomposition> {
    let mut v0: Vec<Vertex> = c0.iter().copied().chain([x, y]).collect();
    v0.sort_unstable();
    let pos = |v: Vertex| v0.binary_search(&v).unwrap();
    let g0 = g.induced_subgraph(&v0).add_edge(pos(x), pos(y))?;

    let mut v1 = c1.to_vec();
    v1.sort_unstable();
    let merged = v1.len();
    let mut g1 = g.induced_subgraph(&v1).add_vertices(1);
    let mut assignment = Vec::new();
    for (i, &w) in v1.iter().enumerate() {
        match (g.has_edge(w, x), g.has_edge(w, y)) {
            (true, true) => {
                return Err(GraphError::Precondition("merging x and y would create a parallel edge".into()))
            }
            (true, false) => assignment.push(Side::X),
            (false, true) => assignment.push(Side::Y),
            (false, false) => continue,
        }
        g1 = g1.add_edge(i, merged)?;
    }
    Ok(Decomposition {
        g0,
        xy: (pos(x), pos(y)),
        g0_vertices: v0,
        g1,
        g1_vertices: v1,
        assignment,
    })
}

/// Per-edge criticality report, useful when a graph fails [`is_critical`].
pub fn criticality_witness(g: &SimpleGraph, u: Vertex, v: Vertex) -> Result<Option<MisResult>> {
    let g2 = g.delete_edge(u, v)?;
    let r = crate::alpha::alpha(&g2);
    Ok((r.size > alpha_size(g)).then_some(r))
}
