//! Adjacency spectra (closed form, block recursion, Jacobi), exact
//! conductance and vertex expansion, and Cheeger bounds.

mod cut;
mod matrix;
mod spectrum;

pub use cut::{
    cheeger_bounds, conductance_exact, conductance_exact_limited, vertex_expansion_exact,
    vertex_expansion_exact_limited, CutReport, DEFAULT_MAX_ENUM,
};
pub use matrix::{
    adjacency_matrix, eigenvalues_numeric, jacobi_eigenvalues, SymmetricMatrix, CLUSTER_GAP,
    DEFAULT_JACOBI_TOL, MAX_EIGEN_ORDER,
};
pub use spectrum::{
    format_eigenvalue, jstar_alternating_conductance, jstar_alternating_sequence,
    spectrum_block_recursion, spectrum_matching_closed, BlockRule, SpectrumMultiset,
};
