//! The `11/30` picture: `κ`, `G41`, 30-augmentation, the `T` and `T⁻`
//! families, and the tree construction built from `B8` and `F11` copies.

use serde::{Deserialize, Serialize};

use super::bad::b8;
use super::forbidden::{forbidden, is_forbidden};
use super::trace::{Base, ConstructionTrace, Step};
use super::Catalog;
use crate::alpha::alpha_size;
use crate::error::{GraphError, Result};
use crate::graph::{SimpleGraph, Vertex};
use crate::iso::{is_isomorphic, subgraph_images, Embedding};

/// `30α(G) − 11n`.
pub fn kappa(g: &SimpleGraph) -> i64 {
    30 * alpha_size(g) as i64 - 11 * g.n() as i64
}

fn f11() -> &'static SimpleGraph {
    forbidden("F11").expect("F11 fixture")
}

fn unique_degree2(g: &SimpleGraph) -> Vertex {
    let d = g.vertices_of_degree(2);
    assert_eq!(d.len(), 1, "expected exactly one degree-2 vertex");
    d[0]
}

/// Two copies of `F11` joined by an edge between their degree-2 vertices.
pub(crate) fn f11_pair() -> SimpleGraph {
    let f = f11();
    let u = unique_degree2(f);
    f.disjoint_union(f).add_edge(u, f.n() + u).expect("fresh edge")
}

/// `B8` with three of its degree-2 vertices each joined to the degree-2
/// vertex of a fresh `F11`; the fourth stays of degree 2.
pub fn g41() -> SimpleGraph {
    let f = f11();
    let u = unique_degree2(f);
    let base = b8();
    let ports = base.vertices_of_degree(2);
    let mut g = base;
    for &p in &ports[..3] {
        let off = g.n();
        g = g.disjoint_union(f).add_edge(p, off + u).expect("fresh edge");
    }
    g
}

/// Vertex sets of induced `F11` copies whose only outside edge, if any,
/// leaves from the copy's degree-2 vertex.
pub fn thirty_sites(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    subgraph_images(f11(), g, true)
        .into_iter()
        .filter(|img| site_port(g, img).is_ok())
        .collect()
}

/// The copy's degree-2 vertex and its outside neighbour.
fn site_port(g: &SimpleGraph, image: &[Vertex]) -> Result<(Vertex, Option<Vertex>)> {
    let bad = |msg: &str| Err(GraphError::Precondition(format!("not a 30-augmentation site: {msg}")));
    if image.len() != 11 {
        return bad("wrong size");
    }
    let inside = |v: Vertex| image.contains(&v);
    let mut port = None;
    for &v in image {
        let outside: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| !inside(w)).collect();
        let internal = g.degree(v) - outside.len();
        match (internal, outside.len()) {
            (3, 0) => {}
            (2, k) if k <= 1 && port.is_none() => port = Some((v, outside.first().copied())),
            _ => return bad("an edge leaves the copy away from its degree-2 vertex"),
        }
    }
    let Some(port) = port else { return bad("no degree-2 vertex") };
    if !is_isomorphic(&g.induced_subgraph(image), f11()) {
        return bad("not an F11");
    }
    Ok(port)
}

/// Replaces an `F11` copy (given by an embedding of the `F11` fixture) with
/// `G41`, attached through `G41`'s degree-2 vertex.
pub fn thirty_augment(g: &SimpleGraph, f11_embedding: &Embedding) -> Result<SimpleGraph> {
    if !f11_embedding.verify(f11(), g) {
        return Err(GraphError::Precondition("embedding does not map F11 into the graph".into()));
    }
    thirty_augment_image(g, &f11_embedding.image())
}

pub(crate) fn thirty_augment_image(g: &SimpleGraph, image: &[Vertex]) -> Result<SimpleGraph> {
    let (_, outside) = site_port(g, image)?;
    let (rest, map) = g.delete_vertices(image);
    let off = rest.n();
    let big = g41();
    let port = unique_degree2(&big);
    let mut h = rest.disjoint_union(&big);
    if let Some(z) = outside {
        let z = map.iter().position(|&w| w == z).unwrap();
        h = h.add_edge(z, off + port)?;
    }
    debug_assert_eq!(kappa(&h), kappa(g));
    Ok(h)
}

fn closure(base: SimpleGraph, trace: ConstructionTrace, max_n: usize) -> Result<Catalog> {
    let mut cat = Catalog::new(max_n);
    if base.n() > max_n {
        return Ok(cat.finish());
    }
    cat.insert(base, trace)?;
    let mut frontier = vec![0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in frontier {
            let entry = cat.entries()[i].clone();
            if entry.graph.n() + 30 > max_n {
                continue;
            }
            for image in thirty_sites(&entry.graph) {
                let h = thirty_augment_image(&entry.graph, &image)?;
                if cat.insert(h, entry.trace.then(Step::ThirtyAugment { image }))? {
                    next.push(cat.len() - 1);
                }
            }
        }
        frontier = next;
    }
    Ok(cat.finish())
}

/// Graphs reducible to two `F11` copies joined by an edge (orders `30i + 22`).
pub fn family_t(max_n: usize) -> Result<Catalog> {
    closure(f11_pair(), ConstructionTrace::base(Base::F11Pair), max_n)
}

/// Graphs reducible to `F11` (orders `30i + 11`).
pub fn family_t_minus(max_n: usize) -> Result<Catalog> {
    closure(f11().clone(), ConstructionTrace::base(Base::F11), max_n)
}

/// Outcome of the exact `11/30` classification of a connected triangle-free subcubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case1130 {
    F14,
    F22,
    T,
    TMinus,
    Other,
}

impl Case1130 {
    /// The exact `κ` for the exceptional cases; `None` means `κ ≥ 0` is predicted.
    pub fn expected_kappa(self) -> Option<i64> {
        match self {
            Case1130::F14 => Some(-4),
            Case1130::F22 | Case1130::T => Some(-2),
            Case1130::TMinus => Some(-1),
            Case1130::Other => None,
        }
    }
}

pub fn classify_11_30(g: &SimpleGraph) -> Result<Case1130> {
    if !g.is_connected() || !g.is_subcubic() || !g.is_triangle_free() {
        return Err(GraphError::Precondition(
            "classification needs a connected triangle-free subcubic graph".into(),
        ));
    }
    let n = g.n();
    Ok(match is_forbidden(g) {
        Some("F14_1" | "F14_2") => Case1130::F14,
        Some("F22") => Case1130::F22,
        Some("F11") => Case1130::TMinus,
        _ if n % 30 == 22 && family_t(n)?.contains(g) => Case1130::T,
        _ if n % 30 == 11 && family_t_minus(n)?.contains(g) => Case1130::TMinus,
        _ => Case1130::Other,
    })
}

/// A tree whose internal nodes all have degree 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlTree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl FlTree {
    /// `K_{1,4}`.
    pub fn star() -> Self {
        FlTree {
            nodes: 5,
            edges: (1..5).map(|leaf| (0, leaf)).collect(),
        }
    }

    fn validate(&self) -> Result<SimpleGraph> {
        let bad = |msg: &str| Err(GraphError::Precondition(format!("malformed tree: {msg}")));
        if self.nodes < 2 || self.edges.len() + 1 != self.nodes {
            return bad("need at least two nodes and exactly nodes-1 edges");
        }
        let t = SimpleGraph::from_edges(self.nodes, &self.edges)?;
        if !t.is_connected() {
            return bad("not connected");
        }
        if t.vertices().any(|v| t.degree(v) != 1 && t.degree(v) != 4) {
            return bad("internal nodes must have degree 4");
        }
        Ok(t)
    }
}

/// Internal nodes become `B8`, leaves become `F11`, and each tree edge joins
/// a degree-2 vertex of one copy to one of the other.
pub fn fl_construction(tree: &FlTree) -> Result<SimpleGraph> {
    let t = tree.validate()?;
    let f = f11();
    let inner = b8();
    let mut g = SimpleGraph::empty(0);
    let mut ports: Vec<Vec<Vertex>> = Vec::new();
    for node in t.vertices() {
        let off = g.n();
        let (copy, local) = if t.degree(node) == 4 {
            (&inner, inner.vertices_of_degree(2))
        } else {
            (f, vec![unique_degree2(f)])
        };
        g = g.disjoint_union(copy);
        ports.push(local.into_iter().map(|p| off + p).rev().collect());
    }
    for &(s, e) in &tree.edges {
        let p = ports[s].pop().unwrap();
        let q = ports[e].pop().unwrap();
        g = g.add_edge(p, q)?;
    }
    let internal = t.vertices().filter(|&v| t.degree(v) == 4).count();
    let leaves = t.n() - internal;
    assert_eq!(alpha_size(&g), 3 * internal + 4 * leaves, "alpha of the tree construction");
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g41_values() {
        let g = g41();
        assert_eq!(g.n(), 41);
        assert_eq!(alpha_size(&g), 15);
        assert_eq!(kappa(&g), -1);
        assert_eq!(g.vertices_of_degree(2).len(), 1);
    }

    #[test]
    fn star_and_pair() {
        let star = fl_construction(&FlTree::star()).unwrap();
        assert_eq!((star.n(), alpha_size(&star)), (52, 19));
        let pair = fl_construction(&FlTree { nodes: 2, edges: vec![(0, 1)] }).unwrap();
        assert_eq!((pair.n(), alpha_size(&pair), kappa(&pair)), (22, 8, -2));
        assert!(is_isomorphic(&pair, &f11_pair()));
    }

    #[test]
    fn malformed_trees() {
        assert!(fl_construction(&FlTree { nodes: 1, edges: vec![] }).is_err());
        let path3 = FlTree { nodes: 3, edges: vec![(0, 1), (1, 2)] };
        assert!(fl_construction(&path3).is_err());
    }

    #[test]
    fn thirty_preserves_kappa() {
        let pair = f11_pair();
        let sites = thirty_sites(&pair);
        assert_eq!(sites.len(), 2);
        let h = thirty_augment_image(&pair, &sites[0]).unwrap();
        assert_eq!(h.n(), 52);
        assert_eq!(kappa(&h), kappa(&pair));
        assert!(is_isomorphic(&h, &fl_construction(&FlTree::star()).unwrap()));
    }
}
