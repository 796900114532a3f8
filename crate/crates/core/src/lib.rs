//! Exact tools for independent sets in subcubic graphs.
//!
//! The crate bundles an exact maximum independent set solver, isomorph-free
//! generation of subcubic graphs, canonical forms, the constructive graph
//! families that are extremal for the `3n/8` and `11n/30` bounds (bad,
//! dangerous, almost bad, the six forbidden graphs, the `T` families), and a
//! registry of checkable claims that sweeps corpora and emits JSON-lines
//! reports.

pub mod alpha;
pub mod critical;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod verify;

pub use alpha::{alpha, MisResult, PackingResult};
pub use error::{Graph6Error, GraphError};
pub use graph::{parse_graph6, to_graph6, Connectivity, Girth, Rational24, SimpleGraph, Vertex};
pub use iso::{canonical_key, find_subgraph, CanonicalKey, Embedding};
