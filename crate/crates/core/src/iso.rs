//! Canonical labelling, automorphism orbits and subgraph search.
//!
//! Canonical forms use equitable partition refinement with individualisation
//! of the first non-singleton cell; the canonical graph is the lexicographically
//! largest adjacency bit string over the explored leaves. Subtrees are pruned by
//! orbits of the automorphisms discovered so far.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{to_graph6, SimpleGraph, Vertex};

/// Default vertex cap for [`canonical_key`].
pub const DEFAULT_CANON_CAP: usize = 64;

/// graph6 string of the canonically relabelled graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> SimpleGraph {
        crate::graph::parse_graph6(self.0.as_bytes()).expect("canonical keys are valid graph6")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Output of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<Vertex>,
    pub graph: SimpleGraph,
    /// Automorphisms found during the search; they generate the automorphism group.
    pub generators: Vec<Vec<Vertex>>,
}

impl Canonical {
    pub fn key(&self) -> CanonicalKey {
        CanonicalKey(to_graph6(&self.graph))
    }

    /// Orbit representative (smallest member) for every vertex.
    pub fn orbits(&self) -> Vec<Vertex> {
        orbits_of(self.labeling.len(), &self.generators)
    }
}

pub fn canonical_key(g: &SimpleGraph) -> Result<CanonicalKey> {
    canonical_key_capped(g, DEFAULT_CANON_CAP)
}

pub fn canonical_key_capped(g: &SimpleGraph, cap: usize) -> Result<CanonicalKey> {
    if g.n() > cap {
        return Err(GraphError::CapExceeded { n: g.n(), cap });
    }
    Ok(canonical_form(g).key())
}

pub fn canonical_form(g: &SimpleGraph) -> Canonical {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical form of a vertex-coloured graph. Colours are respected: a vertex of
/// smaller colour always receives a smaller canonical position.
pub fn canonical_form_colored(g: &SimpleGraph, colors: &[u32]) -> Canonical {
    assert_eq!(colors.len(), g.n());
    let mut search = Search::new(g);
    let mut order: Vec<u32> = colors.to_vec();
    order.sort_unstable();
    order.dedup();
    let cells: Vec<Vec<Vertex>> = order
        .iter()
        .map(|&c| g.vertices().filter(|&v| colors[v] == c).collect())
        .filter(|c: &Vec<Vertex>| !c.is_empty())
        .collect();
    let root = search.refine(cells);
    let mut prefix = Vec::new();
    search.explore(root, &mut prefix);
    let best = search.best.expect("at least one leaf");
    let mut labeling = vec![0; g.n()];
    for (pos, &v) in best.order.iter().enumerate() {
        labeling[v] = pos;
    }
    Canonical {
        graph: g.permute(&labeling),
        labeling,
        generators: search.generators,
    }
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a).graph == canonical_form(b).graph
}

pub fn orbits_of(n: usize, generators: &[Vec<Vertex>]) -> Vec<Vertex> {
    let mut uf = UnionFind::new(n);
    for gen in generators {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.min_rep(v)).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so find() yields the minimum
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn min_rep(&mut self, v: usize) -> usize {
        self.find(v)
    }
}

struct Leaf {
    order: Vec<Vertex>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        Search {
            g,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    /// Refines an ordered partition to the coarsest equitable refinement.
    /// Cells split by the sorted multiset of neighbour cell indices, and the
    /// pieces are ordered by that signature, so the result is labelling-invariant.
    fn refine(&self, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
        let n = self.g.n();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, Vertex)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<usize> =
                            self.g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        let mut piece: Vec<Vertex> = keyed[start..i].iter().map(|x| x.1).collect();
                        piece.sort_unstable();
                        next.push(piece);
                        changed |= i < keyed.len();
                        start = i;
                    }
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn certificate(&self, order: &[Vertex]) -> Vec<u64> {
        let n = self.g.n();
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let mut cert = vec![0u64; nbits.div_ceil(64).max(1)];
        for (u, v) in self.g.edges() {
            let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            // graph6 column order so that comparison matches the printed key
            let k = j * (j - 1) / 2 + i;
            cert[k / 64] |= 1u64 << (63 - k % 64);
        }
        cert
    }

    fn explore(&mut self, cells: Vec<Vec<Vertex>>, prefix: &mut Vec<Vertex>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<Vertex> = Vec::new();
        for &x in &candidates {
            if !explored.is_empty() {
                let orbit = self.stabilizer_orbits(prefix);
                if explored.iter().any(|&y| orbit[y] == orbit[x]) {
                    continue;
                }
            }
            explored.push(x);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![x]);
                    child.push(cell.iter().copied().filter(|&v| v != x).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            let refined = self.refine(child);
            prefix.push(x);
            self.explore(refined, prefix);
            prefix.pop();
        }
    }

    fn stabilizer_orbits(&self, prefix: &[Vertex]) -> Vec<Vertex> {
        let gens: Vec<Vec<Vertex>> = self
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .cloned()
            .collect();
        orbits_of(self.g.n(), &gens)
    }

    fn leaf(&mut self, order: Vec<Vertex>) {
        let cert = self.certificate(&order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                order: order.clone(),
                cert: cert.clone(),
            });
            self.best = Some(Leaf { order, cert });
            return;
        };
        if cert == first.cert {
            let aut = automorphism(&first.order, &order);
            self.record(aut);
            return;
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            Ordering::Equal => {
                let aut = automorphism(&best.order, &order);
                self.record(aut);
            }
            Ordering::Greater => self.best = Some(Leaf { order, cert }),
            Ordering::Less => {}
        }
    }

    fn record(&mut self, aut: Vec<Vertex>) {
        if aut.iter().enumerate().any(|(v, &w)| v != w) {
            self.generators.push(aut);
        }
    }
}

/// The permutation sending `a[i]` to `b[i]`.
fn automorphism(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut perm = vec![0; a.len()];
    for (&x, &y) in a.iter().zip(b) {
        perm[x] = y;
    }
    perm
}

/// Injective map from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<Vertex>,
    pub induced: bool,
}

impl Embedding {
    /// Replays the embedding against both graphs.
    pub fn verify(&self, pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
        let n = pattern.n();
        if self.map.len() != n || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] == self.map[j] {
                    return false;
                }
                let hp = pattern.has_edge(i, j);
                let hh = host.has_edge(self.map[i], self.map[j]);
                if (hp && !hh) || (self.induced && hh && !hp) {
                    return false;
                }
            }
        }
        true
    }

    pub fn image(&self) -> Vec<Vertex> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img
    }
}

struct Matcher<'a> {
    pattern: &'a SimpleGraph,
    host: &'a SimpleGraph,
    induced: bool,
    order: Vec<Vertex>,
    /// For each pattern vertex in `order`, an earlier-placed neighbour if any.
    anchor: Vec<Option<Vertex>>,
    map: Vec<Vertex>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a SimpleGraph, host: &'a SimpleGraph, induced: bool) -> Self {
        let n = pattern.n();
        // connected-first order, high degree first, ties by id
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (back, pattern.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let anchor = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pattern
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| pos[w] < i)
                    .min_by_key(|&w| pos[w])
            })
            .collect();
        Matcher {
            pattern,
            host,
            induced,
            order,
            anchor,
            map: vec![usize::MAX; n],
            used: vec![false; host.n()],
        }
    }

    fn feasible(&self, depth: usize, h: Vertex, c: Vertex) -> bool {
        if self.used[c] || self.host.degree(c) < self.pattern.degree(h) {
            return false;
        }
        self.order[..depth].iter().all(|&p| {
            let hp = self.pattern.has_edge(h, p);
            let hh = self.host.has_edge(c, self.map[p]);
            if hp {
                hh
            } else {
                !(self.induced && hh)
            }
        })
    }

    /// Depth-first search; `visit` returns `true` to stop.
    fn search(&mut self, depth: usize, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let h = self.order[depth];
        let candidates: Vec<Vertex> = match self.anchor[depth] {
            Some(a) => self.host.neighbors(self.map[a]).to_vec(),
            None => self.host.vertices().collect(),
        };
        for c in candidates {
            if self.feasible(depth, h, c) {
                self.map[h] = c;
                self.used[c] = true;
                let stop = self.search(depth + 1, visit);
                self.used[c] = false;
                self.map[h] = usize::MAX;
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// Finds one embedding of `pattern` into `host` (non-induced unless `induced`).
pub fn find_subgraph(pattern: &SimpleGraph, host: &SimpleGraph, induced: bool) -> Option<Embedding> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return None;
    }
    let mut matcher = Matcher::new(pattern, host, induced);
    let mut found = None;
    matcher.search(0, &mut |map| {
        found = Some(map.to_vec());
        true
    });
    found.map(|map| Embedding { map, induced })
}

/// Distinct vertex sets (sorted) hit by embeddings of `pattern` into `host`.
pub fn subgraph_images(pattern: &SimpleGraph, host: &SimpleGraph, induced: bool) -> Vec<Vec<Vertex>> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Vec::new();
    }
    let mut matcher = Matcher::new(pattern, host, induced);
    let mut images = std::collections::BTreeSet::new();
    matcher.search(0, &mut |map| {
        let mut img = map.to_vec();
        img.sort_unstable();
        images.insert(img);
        false
    });
    images.into_iter().collect()
}

/// All embeddings of `pattern` into `host`.
pub fn all_embeddings(pattern: &SimpleGraph, host: &SimpleGraph, induced: bool) -> Vec<Embedding> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Vec::new();
    }
    let mut matcher = Matcher::new(pattern, host, induced);
    let mut out = Vec::new();
    matcher.search(0, &mut |map| {
        out.push(Embedding {
            map: map.to_vec(),
            induced,
        });
        false
    });
    out
}
