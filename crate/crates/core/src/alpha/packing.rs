//! Vertex-disjoint packings: triangles for `T(G)` and bad or almost bad
//! subgraphs for `B(G)`, plus the triangle-adjusted measure `lb_T`.

use super::PackingResult;
use crate::error::{GraphError, Result};
use crate::graph::{Rational24, SimpleGraph, Vertex};
use crate::iso::subgraph_images;

/// Hosts larger than this are refused by [`bad_packing`]: occurrence
/// enumeration grows with the number of embeddings of every catalog member.
pub const BAD_PACKING_CAP: usize = 40;

/// Indices of a maximum family of pairwise disjoint sets. Ties resolve to
/// the lexicographically first choice in the search order.
pub fn max_disjoint_packing(sets: &[Vec<Vertex>]) -> Vec<usize> {
    let universe = sets.iter().flatten().copied().max().map_or(0, |v| v + 1);
    let mut used = vec![false; universe];
    let mut best = Vec::new();
    let mut current = Vec::new();
    let order: Vec<usize> = (0..sets.len()).collect();
    pack(sets, &order, &mut used, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn pack(
    sets: &[Vec<Vertex>],
    candidates: &[usize],
    used: &mut [bool],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let live: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| sets[i].iter().all(|&v| !used[v]))
        .collect();
    if current.len() > best.len() {
        *best = current.clone();
    }
    let Some(&first) = live.first() else { return };
    // every further set needs at least `smallest` fresh vertices
    let free = {
        let mut seen = vec![false; used.len()];
        live.iter()
            .flat_map(|&i| sets[i].iter())
            .filter(|&&v| !std::mem::replace(&mut seen[v], true))
            .count()
    };
    let smallest = live.iter().map(|&i| sets[i].len()).min().unwrap_or(1).max(1);
    if current.len() + (free / smallest).min(live.len()) <= best.len() {
        return;
    }
    // branch on the first live set: take it, or discard it
    for &v in &sets[first] {
        used[v] = true;
    }
    current.push(first);
    pack(sets, &live[1..], used, current, best);
    current.pop();
    for &v in &sets[first] {
        used[v] = false;
    }
    pack(sets, &live[1..], used, current, best);
}

pub fn triangle_packing(g: &SimpleGraph) -> PackingResult {
    let sets: Vec<Vec<Vertex>> = g.triangles().into_iter().map(|t| t.to_vec()).collect();
    let chosen = max_disjoint_packing(&sets);
    PackingResult {
        size: chosen.len(),
        witness: chosen.into_iter().map(|i| sets[i].clone()).collect(),
    }
}

pub fn triangle_packing_number(g: &SimpleGraph) -> usize {
    triangle_packing(g).size
}

/// `B(G)`: maximum number of vertex-disjoint (not necessarily induced)
/// subgraphs isomorphic to catalog members. `complete_to` is the largest
/// order for which `catalog` is known to be complete.
pub fn bad_packing(g: &SimpleGraph, catalog: &[SimpleGraph], complete_to: usize) -> Result<PackingResult> {
    if g.n() > BAD_PACKING_CAP {
        return Err(GraphError::CapExceeded {
            n: g.n(),
            cap: BAD_PACKING_CAP,
        });
    }
    if complete_to < g.n() {
        return Err(GraphError::Precondition(format!(
            "catalog complete only to n={complete_to}, graph has n={}",
            g.n()
        )));
    }
    let mut sets: Vec<Vec<Vertex>> = catalog
        .iter()
        .filter(|h| h.n() <= g.n() && h.m() <= g.m())
        .flat_map(|h| subgraph_images(h, g, false))
        .collect();
    sets.sort();
    sets.dedup();
    let chosen = max_disjoint_packing(&sets);
    Ok(PackingResult {
        size: chosen.len(),
        witness: chosen.into_iter().map(|i| sets[i].clone()).collect(),
    })
}

/// `(6n − m − 2T(G) − 1)/12` for connected `g`.
pub fn lb_t(g: &SimpleGraph) -> Result<Rational24> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let t = triangle_packing_number(g) as i64;
    Ok(Rational24::from_num24(2 * (6 * g.n() as i64 - g.m() as i64 - 2 * t - 1)))
}
