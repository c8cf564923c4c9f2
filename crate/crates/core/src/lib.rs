//! Self-similar graph sequences.
//!
//! Given a simple graph `G` on `n` vertices and a symmetric edge bundle `J`
//! inside `K_{n,n}`, `G^1 = G` and `G^k` replaces every vertex of `G^{k-1}`
//! by a copy of `G` and every edge by a copy of `J`. This crate builds these
//! graphs (lazily or explicitly), colors them, classifies when their
//! chromatic numbers stay bounded, and computes spectra and conductance.

pub mod chromatic;
pub mod error;
pub mod graph;
pub mod io;
pub mod spectral;

pub use chromatic::{
    chromatic_number_exact, classify_bundle, clique_witness, greedy_coloring, k2_catalog,
    verify_coloring, Classification, CliqueWitness, Coloring, Verdict,
};
pub use error::{Error, Result};
pub use graph::{
    materialize, BaseGraph, Bundle, BundleView, ExplicitGraph, SelfSimilarSystem, Vertex,
    DEFAULT_MAX_VERTICES,
};
pub use spectral::{
    adjacency_matrix, cheeger_bounds, conductance_exact, eigenvalues_numeric, spectrum_block_recursion,
    spectrum_matching_closed, vertex_expansion_exact, BlockRule, CutReport, SpectrumMultiset,
    SymmetricMatrix,
};
