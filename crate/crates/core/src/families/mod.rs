//! Named graph families: bad, dangerous and almost bad graphs, the six
//! forbidden graphs, the `T`/`T⁻` families and the tree construction.
//!
//! Catalogs are closures of a base set under the family's operations,
//! deduplicated by canonical key. Each entry keeps the graph in the labelling
//! produced by replaying its [`ConstructionTrace`].

mod bad;
mod dangerous;
mod forbidden;
mod thirty;
mod trace;

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::iso::{canonical_key, CanonicalKey};

pub use bad::{
    augment8, b16_1, b8, check_bad_properties, contract_nice_path, enumerate_almost_bad, enumerate_bad,
    find_corners, gadget, is_corner, nice_paths, Corner, DEFAULT_BAD_CAP, GADGET_DEGREE2, GADGET_LEFT,
};
pub use dangerous::{
    check_dangerous_properties, enumerate_dangerous, join_bad, sum_dangerous, sum_labelings, SumLabels, SumWiring,
    DEFAULT_DANGEROUS_CAP,
};
pub use forbidden::{
    build_f11_candidates, build_f14, build_f19_candidates, build_f22_wirings, contains_any_forbidden, forbidden,
    forbidden_six, is_forbidden, FORBIDDEN_NAMES,
};
pub use thirty::{
    classify_11_30, family_t, family_t_minus, fl_construction, g41, kappa, thirty_augment, thirty_sites, Case1130,
    FlTree,
};
pub use trace::{replay, Base, ConstructionTrace, Step};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub graph: SimpleGraph,
    pub key: CanonicalKey,
    pub trace: ConstructionTrace,
}

/// Iso-free list of graphs, ordered by vertex count and then by order of discovery.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: BTreeMap<CanonicalKey, usize>,
    /// Largest order up to which the catalog is complete.
    pub max_n: usize,
}

impl Catalog {
    pub fn new(max_n: usize) -> Self {
        Catalog {
            max_n,
            ..Default::default()
        }
    }

    /// Adds the graph unless an isomorphic one is present; reports whether it was new.
    pub fn insert(&mut self, graph: SimpleGraph, trace: ConstructionTrace) -> Result<bool> {
        let key = canonical_key(&graph)?;
        if self.index.contains_key(&key) {
            return Ok(false);
        }
        self.index.insert(key.clone(), self.entries.len());
        self.entries.push(CatalogEntry { graph, key, trace });
        Ok(true)
    }

    /// Stable sort by vertex count; call after all insertions.
    pub(crate) fn finish(mut self) -> Self {
        self.entries.sort_by_key(|e| e.graph.n());
        self.index = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.key.clone(), i))
            .collect();
        self
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &SimpleGraph> {
        self.entries.iter().map(|e| &e.graph)
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.graph.n() == n)
    }

    pub fn count_of_order(&self, n: usize) -> usize {
        self.of_order(n).count()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&CatalogEntry> {
        self.index.get(key).map(|&i| &self.entries[i])
    }

    /// Membership by canonical key. Graphs above `max_n` are never members.
    pub fn contains(&self, g: &SimpleGraph) -> bool {
        g.n() <= self.max_n && canonical_key(g).is_ok_and(|k| self.index.contains_key(&k))
    }

    pub fn contains_key(&self, key: &CanonicalKey) -> bool {
        self.index.contains_key(key)
    }

    /// One canonical graph6 line per entry.
    pub fn write_graph6(&self, mut out: impl Write) -> std::io::Result<()> {
        for e in &self.entries {
            writeln!(out, "{}", e.key)?;
        }
        Ok(())
    }

    /// One JSON object per entry (graph, canonical key, trace), in [`Catalog::write_graph6`] order.
    pub fn write_traces(&self, mut out: impl Write) -> std::io::Result<()> {
        for e in &self.entries {
            serde_json::to_writer(&mut out, e)?;
            writeln!(out)?;
        }
        Ok(())
    }
}
