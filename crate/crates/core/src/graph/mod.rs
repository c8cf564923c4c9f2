//! Base graphs, edge bundles, the lazy adjacency oracle for `G^k`, and
//! explicit materialization.

mod base;
mod bundle;
mod explicit;
mod system;

pub use base::BaseGraph;
pub use bundle::{Bundle, BundleView};
pub use explicit::{materialize, ExplicitGraph, DEFAULT_MAX_VERTICES, MAX_EDGES};
pub use system::{SelfSimilarSystem, Vertex};
