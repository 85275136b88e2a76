//! Connected partial symmetry index of small graphs.
//!
//! A connected partial symmetry of a graph `G` is an isomorphism between two
//! connected induced subgraphs of `G`; `copsi(G)` counts them. This crate
//! computes `copsi` two independent ways (pairwise isomorphism counting and
//! isomorphism-class aggregation), evaluates the closed forms for stars,
//! paths, cycles and complete graphs, and runs exhaustive searches over all
//! small graphs to confirm which graphs maximise the index.

pub mod canon;
pub mod copsi;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod formula;
pub mod graph;
pub mod graph6;
pub mod subiso;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use copsi::{
    copsi_breakdown, copsi_classes, copsi_naive, count_all_partial_symmetries, CopsiBreakdown,
    Engine,
};
pub use error::{Error, Result};
pub use extremal::{extremal_by_order, extremal_by_size, ExtremalReport};
pub use graph::{make_complete, make_cycle, make_path, make_star, Family, Graph, VertexSet};
pub use subiso::{count_isomorphisms, enumerate_isomorphisms, PartialSymmetry};
