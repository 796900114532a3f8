//! Isomorph-free generation of subcubic graphs by canonical augmentation,
//! and ingestion of external graph6 streams.
//!
//! A child adds one vertex `x` to its parent. It is accepted only when `x` is
//! equivalent, under the child's automorphism group, to the canonical deletion
//! vertex: among vertices of maximum degree and maximum neighbour-degree sum,
//! the one with the largest canonical label. Neighbour sets equivalent under
//! the parent's automorphisms are tried once. Together this emits each
//! isomorphism class exactly once.

use std::io::BufRead;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::critical::is_critical;
use crate::error::{GraphError, Result};
use crate::graph::{parse_graph6, SimpleGraph, Vertex};
use crate::iso::{canonical_form, Canonical};

pub const DEFAULT_GEN_CAP: usize = 18;

/// Depth at which subtrees are handed to worker threads.
const SPLIT_LEVEL: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConstraints {
    pub min_n: usize,
    pub max_n: usize,
    pub cubic_only: bool,
    /// Smallest allowed cycle length; values below 4 only matter together with `triangle_free`.
    pub min_girth: usize,
    /// 0 = any, 1 = connected, 2 = 2-connected, 3 = 3-connected.
    pub min_connectivity: u8,
    pub triangle_free: bool,
    pub critical_only: bool,
    pub cap: usize,
}

impl Default for GenConstraints {
    fn default() -> Self {
        GenConstraints {
            min_n: 1,
            max_n: 8,
            cubic_only: false,
            min_girth: 0,
            min_connectivity: 1,
            triangle_free: true,
            critical_only: false,
            cap: DEFAULT_GEN_CAP,
        }
    }
}

impl GenConstraints {
    /// Connected triangle-free subcubic graphs on `1..=max_n` vertices.
    pub fn up_to(max_n: usize) -> Self {
        GenConstraints {
            max_n,
            ..Default::default()
        }
    }

    pub fn exactly(n: usize) -> Self {
        GenConstraints {
            min_n: n,
            max_n: n,
            ..Default::default()
        }
    }

    pub fn cubic(mut self) -> Self {
        self.cubic_only = true;
        self
    }

    pub fn girth(mut self, g: usize) -> Self {
        self.min_girth = g;
        self
    }

    pub fn connectivity(mut self, k: u8) -> Self {
        self.min_connectivity = k;
        self
    }

    pub fn allow_triangles(mut self) -> Self {
        self.triangle_free = false;
        self
    }

    pub fn critical(mut self) -> Self {
        self.critical_only = true;
        self
    }

    /// Girth requirement including the one implied by `triangle_free`.
    pub fn effective_girth(&self) -> usize {
        if self.triangle_free {
            self.min_girth.max(4)
        } else {
            self.min_girth
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_n > self.cap {
            return Err(GraphError::CapExceeded {
                n: self.max_n,
                cap: self.cap,
            });
        }
        if self.min_girth >= 4 && !self.triangle_free {
            return Err(GraphError::Precondition(
                "a girth of at least 4 requires triangle_free".into(),
            ));
        }
        Ok(())
    }

    /// Properties preserved by vertex deletion; violating them prunes a subtree.
    fn hereditary_ok(&self, g: &SimpleGraph) -> bool {
        g.is_subcubic() && g.girth().at_least(self.effective_girth())
    }

    /// Full re-validation of an emitted or ingested graph.
    pub fn accepts(&self, g: &SimpleGraph) -> bool {
        let n = g.n();
        n >= self.min_n
            && n <= self.max_n
            && self.hereditary_ok(g)
            && (!self.cubic_only || g.is_cubic())
            && g.connectivity_class().as_u8() >= self.min_connectivity
            && (!self.critical_only || is_critical(g))
    }

    fn emit_ok(&self, g: &SimpleGraph) -> bool {
        let n = g.n();
        n >= self.min_n
            && (!self.cubic_only || g.is_cubic())
            && g.connectivity_class().as_u8() >= self.min_connectivity
            && (!self.critical_only || is_critical(g))
    }

    /// Can a descendant still reach an admissible cubic graph?
    fn cubic_feasible(&self, g: &SimpleGraph) -> bool {
        if !self.cubic_only {
            return true;
        }
        let k = g.n();
        let deficiency: usize = g.vertices().map(|v| 3 - g.degree(v)).sum();
        if g.max_degree() == 3 {
            // every later vertex has all three neighbours among the current ones
            deficiency % 3 == 0 && {
                let target = k + deficiency / 3;
                target >= self.min_n && target <= self.max_n
            }
        } else {
            deficiency <= 3 * self.max_n.saturating_sub(k)
        }
    }
}

struct Node {
    graph: SimpleGraph,
    canon: Option<Canonical>,
}

fn bitmask(set: &[Vertex]) -> u64 {
    set.iter().fold(0, |acc, &v| acc | 1 << v)
}

/// Smallest bitmask in the orbit of `set` under the group generated by `gens`.
fn orbit_min(mask: u64, gens: &[Vec<Vertex>]) -> u64 {
    let mut seen = vec![mask];
    let mut i = 0;
    while i < seen.len() {
        let cur = seen[i];
        i += 1;
        for gen in gens {
            let mut img = 0u64;
            let mut bits = cur;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                img |= 1 << gen[v];
            }
            if !seen.contains(&img) {
                seen.push(img);
            }
        }
    }
    seen.into_iter().min().unwrap()
}

fn bfs_distances(g: &SimpleGraph) -> Vec<Vec<usize>> {
    g.vertices()
        .map(|s| {
            let mut dist = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}

fn for_each_subset(items: &[Vertex], size: usize, f: &mut impl FnMut(&[Vertex])) {
    fn rec(items: &[Vertex], size: usize, start: usize, cur: &mut Vec<Vertex>, f: &mut impl FnMut(&[Vertex])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut Vec::with_capacity(size), f);
}

fn neighbour_degree_sum(g: &SimpleGraph, v: Vertex) -> usize {
    g.neighbors(v).iter().map(|&u| g.degree(u)).sum()
}

/// Decides whether the last vertex of `child` is its canonical deletion vertex.
fn accept(child: &SimpleGraph) -> Option<Option<Canonical>> {
    let x = child.n() - 1;
    let maxd = child.max_degree();
    if child.degree(x) < maxd {
        return None;
    }
    let score = |v| neighbour_degree_sum(child, v);
    let best = child
        .vertices()
        .filter(|&v| child.degree(v) == maxd)
        .map(score)
        .max()
        .unwrap();
    if score(x) < best {
        return None;
    }
    let ties: Vec<Vertex> = child
        .vertices()
        .filter(|&v| child.degree(v) == maxd && score(v) == best)
        .collect();
    if ties.len() == 1 {
        return Some(None);
    }
    let canon = canonical_form(child);
    let w = *ties.iter().max_by_key(|&&v| canon.labeling[v]).unwrap();
    let orbits = canon.orbits();
    (orbits[x] == orbits[w]).then_some(Some(canon))
}

fn children(node: &Node, c: &GenConstraints) -> Vec<Node> {
    let p = &node.graph;
    let k = p.n();
    if k >= c.max_n {
        return Vec::new();
    }
    let owned;
    let canon = match &node.canon {
        Some(canon) => canon,
        None => {
            owned = canonical_form(p);
            &owned
        }
    };
    let girth = c.effective_girth();
    let dist = if girth > 3 { bfs_distances(p) } else { Vec::new() };
    let open: Vec<Vertex> = p.vertices().filter(|&v| p.degree(v) < 3).collect();
    let mut out = Vec::new();
    for size in p.max_degree()..=3.min(open.len()) {
        for_each_subset(&open, size, &mut |set| {
            // a new cycle through x has length dist(u, v) + 2
            if girth > 3 {
                for (i, &u) in set.iter().enumerate() {
                    for &v in &set[i + 1..] {
                        if dist[u][v] != usize::MAX && dist[u][v] + 2 < girth {
                            return;
                        }
                    }
                }
            }
            let mask = bitmask(set);
            if !canon.generators.is_empty() && orbit_min(mask, &canon.generators) != mask {
                return;
            }
            let mut child = p.add_vertices(1);
            for &u in set {
                child = child.add_edge(u, k).expect("fresh edge");
            }
            if !c.cubic_feasible(&child) {
                return;
            }
            if let Some(canon) = accept(&child) {
                out.push(Node { graph: child, canon });
            }
        });
    }
    out
}

fn dfs<T>(node: Node, c: &GenConstraints, f: &(impl Fn(&SimpleGraph) -> Option<T> + Sync), out: &mut Vec<T>) {
    emit(&node, c, f, out);
    for child in children(&node, c) {
        dfs(child, c, f, out);
    }
}

fn emit<T>(node: &Node, c: &GenConstraints, f: &impl Fn(&SimpleGraph) -> Option<T>, out: &mut Vec<T>) {
    let g = &node.graph;
    if g.n() >= c.min_n && c.emit_ok(g) {
        let canonical = match &node.canon {
            Some(canon) => canon.graph.clone(),
            None => canonical_form(g).graph,
        };
        out.extend(f(&canonical));
    }
}

/// Runs `f` on every generated graph (in canonical labelling) and keeps the
/// `Some` results. Subtrees are processed in parallel; the output order is the
/// same as a serial depth-first run.
pub fn generate_map<T: Send>(
    c: &GenConstraints,
    f: impl Fn(&SimpleGraph) -> Option<T> + Sync,
) -> Result<Vec<T>> {
    c.validate()?;
    if c.max_n == 0 {
        return Ok(Vec::new());
    }
    let roots = vec![Node {
        graph: SimpleGraph::empty(1),
        canon: None,
    }];
    let mut out = Vec::new();
    shallow(roots, 1, SPLIT_LEVEL.min(c.max_n), c, &f, &mut out);
    Ok(out)
}

/// Depth-first over the top levels, handing each frontier subtree to rayon.
fn shallow<T: Send>(
    nodes: Vec<Node>,
    level: usize,
    split_level: usize,
    c: &GenConstraints,
    f: &(impl Fn(&SimpleGraph) -> Option<T> + Sync),
    out: &mut Vec<T>,
) {
    if level == split_level {
        let parts: Vec<Vec<T>> = nodes
            .into_par_iter()
            .map(|node| {
                let mut local = Vec::new();
                dfs(node, c, f, &mut local);
                local
            })
            .collect();
        out.extend(parts.into_iter().flatten());
        return;
    }
    for node in nodes {
        emit(&node, c, f, out);
        let kids = children(&node, c);
        shallow(kids, level + 1, split_level, c, f, out);
    }
}

/// All graphs meeting `c`, one per isomorphism class, canonically labelled.
pub fn generate(c: &GenConstraints) -> Result<Vec<SimpleGraph>> {
    generate_map(c, |g| Some(g.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestedGraph {
    pub line: usize,
    pub graph6: String,
    #[serde(skip)]
    pub graph: SimpleGraph,
}

#[derive(Debug, Default)]
pub struct Ingested {
    pub graphs: Vec<IngestedGraph>,
    /// Rejected lines (1-based) with the reason.
    pub errors: Vec<GraphError>,
}

/// Reads newline-delimited graph6. Blank lines are skipped. Malformed lines,
/// and with `validate` set lines failing the constraints, are collected in
/// `errors`; with `strict` the first one aborts instead.
pub fn ingest_graph6(reader: impl BufRead, validate: Option<&GenConstraints>, strict: bool) -> Result<Ingested> {
    let mut result = Ingested::default();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let text = line.map_err(|e| GraphError::Ingest {
            line: line_no,
            message: e.to_string(),
        })?;
        let text = text.trim_end();
        if text.is_empty() {
            continue;
        }
        let parsed = if text.starts_with(':') || text.starts_with(">>sparse6<<") {
            Err("sparse6 input is not supported".to_string())
        } else {
            parse_graph6(text.as_bytes()).map_err(|e| e.to_string())
        };
        let checked = parsed.and_then(|g| match validate {
            Some(c) if !c.accepts(&g) => Err(format!("graph {text} violates the requested constraints")),
            _ => Ok(g),
        });
        match checked {
            Ok(graph) => result.graphs.push(IngestedGraph {
                line: line_no,
                graph6: text.to_string(),
                graph,
            }),
            Err(message) => {
                let err = GraphError::Ingest { line: line_no, message };
                if strict {
                    return Err(err);
                }
                result.errors.push(err);
            }
        }
    }
    Ok(result)
}
