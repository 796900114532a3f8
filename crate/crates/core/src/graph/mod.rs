//! Immutable simple graphs with the structural predicates used throughout the crate.
//!
//! Vertices are dense `0..n`. Every editor returns a fresh graph; editors that
//! drop vertices also return the new-to-old vertex map so witnesses can be
//! traced back to the original labelling.

mod graph6;
mod rational;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{GraphError, Result};

pub use graph6::{parse_graph6, to_graph6};
pub use rational::Rational24;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Vertex connectivity, resolved only up to three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connectivity {
    Disconnected,
    One,
    Two,
    AtLeastThree,
}

impl Connectivity {
    pub fn as_u8(self) -> u8 {
        match self {
            Connectivity::Disconnected => 0,
            Connectivity::One => 1,
            Connectivity::Two => 2,
            Connectivity::AtLeastThree => 3,
        }
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeats and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(SimpleGraph { adj, m: edges.len() })
    }

    /// Internal constructor for adjacency lists already known to be valid.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut deg_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            deg_sum += list.len();
        }
        debug_assert!(deg_sum % 2 == 0);
        SimpleGraph { adj, m: deg_sum / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|l| l.len() == 3)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    /// `counts[i]` is the number of vertices of degree `i`, for `i <= max_degree`.
    pub fn degree_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_degree() + 1];
        for list in &self.adj {
            counts[list.len()] += 1;
        }
        counts
    }

    pub fn vertices_of_degree(&self, d: usize) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == d).collect()
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u].push(v);
        adj[v].push(u);
        Ok(Self::from_adjacency_unchecked(adj))
    }

    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(SimpleGraph { adj, m: self.m - 1 })
    }

    /// Adds `k` isolated vertices numbered `n..n+k`.
    pub fn add_vertices(&self, k: usize) -> Self {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(k));
        SimpleGraph { adj, m: self.m }
    }

    /// Removes the given vertices; returns the remainder and its new-to-old map.
    pub fn delete_vertices(&self, removed: &[Vertex]) -> (Self, Vec<Vertex>) {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        let kept: Vec<Vertex> = self.vertices().filter(|&v| keep[v]).collect();
        (self.induced_by_mask(&kept, &keep), kept)
    }

    /// Subgraph induced by `vertices` (in the given order); new vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Self {
        let mut mask = vec![false; self.n()];
        for &v in vertices {
            mask[v] = true;
        }
        self.induced_by_mask(vertices, &mask)
    }

    fn induced_by_mask(&self, order: &[Vertex], mask: &[bool]) -> Self {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| mask[w])
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        Self::from_adjacency_unchecked(adj)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Self {
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        Self::from_adjacency_unchecked(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Self {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect::<Vec<_>>()),
        );
        SimpleGraph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&[])
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_count() == 1
    }

    /// Components of the graph with `blocked` removed (blocked vertices are not reported).
    pub fn components_avoiding(&self, blocked: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        for &b in blocked {
            seen[b] = true;
        }
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    fn is_connected_avoiding(&self, blocked: &[Vertex]) -> bool {
        self.components_avoiding(blocked).len() <= 1
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangles().is_empty()
    }

    /// All triangles `[a, b, c]` with `a < b < c`.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for &c in &self.adj[b] {
                if c > b && self.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Shortest cycle length via BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in self.vertices() {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Every cycle of length `k`, each reported once: it starts at its smallest
    /// vertex and its second vertex is smaller than its last.
    pub fn cycles_of_length(&self, k: usize) -> Vec<Vec<Vertex>> {
        assert!(k >= 3, "cycles have length at least 3");
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; self.n()];
        for s in self.vertices() {
            path.push(s);
            on_path[s] = true;
            self.extend_cycles(s, k, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
            path.pop();
        }
        out
    }

    fn extend_cycles(
        &self,
        start: Vertex,
        k: usize,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *path.last().unwrap();
        if path.len() == k {
            if self.has_edge(last, start) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &w in &self.adj[last] {
            if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                self.extend_cycles(start, k, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    /// Edges lying on every `k`-cycle; `None` when there is no `k`-cycle at all.
    pub fn edges_in_all_cycles(&self, k: usize) -> Option<Vec<Edge>> {
        let cycles = self.cycles_of_length(k);
        if cycles.is_empty() {
            return None;
        }
        let mut common: Vec<Edge> = self.edges().collect();
        for c in &cycles {
            let ce: Vec<Edge> = (0..k)
                .map(|i| {
                    let (a, b) = (c[i], c[(i + 1) % k]);
                    (a.min(b), a.max(b))
                })
                .collect();
            common.retain(|e| ce.contains(e));
        }
        Some(common)
    }

    pub fn cut_vertices(&self) -> Vec<Vertex> {
        let base = self.component_count();
        self.vertices()
            .filter(|&v| self.components_avoiding(&[v]).len() > base)
            .collect()
    }

    /// Pairs `{u, v}` whose removal disconnects a connected graph without a cutvertex.
    pub fn two_cutsets(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.n() {
                if !self.is_connected_avoiding(&[u, v]) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertex connectivity capped at three: cutvertex search, then exhaustive pair removal.
    pub fn connectivity_class(&self) -> Connectivity {
        let n = self.n();
        if !self.is_connected() {
            return Connectivity::Disconnected;
        }
        if n <= 2 || self.vertices().any(|v| !self.is_connected_avoiding(&[v])) {
            return Connectivity::One;
        }
        if n <= 3 {
            return Connectivity::Two;
        }
        for u in self.vertices() {
            for v in u + 1..n {
                if !self.is_connected_avoiding(&[u, v]) {
                    return Connectivity::Two;
                }
            }
        }
        Connectivity::AtLeastThree
    }

    pub fn is_two_connected(&self) -> bool {
        self.connectivity_class() >= Connectivity::Two
    }

    /// `(6|V| - |E| - λ)/12`, cross-checked against the degree-count form
    /// `(9n₃ + 10n₂ + 11n₁ + 12n₀ - 2λ)/24`.
    pub fn lb(&self) -> Result<Rational24> {
        if let Some(v) = self.vertices().find(|&v| self.degree(v) > 3) {
            return Err(GraphError::DegreeViolation {
                vertex: v,
                degree: self.degree(v),
            });
        }
        let lambda = self.component_count() as i64;
        let by_edges = 2 * (6 * self.n() as i64 - self.m() as i64 - lambda);
        let counts = self.degree_counts();
        let count = |d: usize| counts.get(d).copied().unwrap_or(0) as i64;
        let by_degrees = 9 * count(3) + 10 * count(2) + 11 * count(1) + 12 * count(0) - 2 * lambda;
        assert_eq!(by_edges, by_degrees, "lb formulas disagree");
        Ok(Rational24::from_num24(by_edges))
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

/// Serialized as its graph6 string.
impl serde::Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> serde::Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(text.as_bytes()).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({}: {})", self.n(), to_graph6(self))
    }
}

/// The cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> SimpleGraph {
    let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SimpleGraph::from_edges(n, &edges).expect("cycle")
}

/// The path `0-1-...-(n-1)`.
pub fn path(n: usize) -> SimpleGraph {
    let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edges(n, &edges).expect("path")
}

pub fn complete(n: usize) -> SimpleGraph {
    let edges: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    SimpleGraph::from_edges(n, &edges).expect("complete graph")
}
