//! Colorings of `G^k`: verification, greedy and exact solvers, the structured
//! constructions for special bundles, clique witnesses, and the finiteness
//! classifier for complete base graphs.

mod classify;
mod coloring;
mod exact;
mod structured;

pub use classify::{
    classify_bundle, clique_witness, k2_catalog, BoundReason, CatalogEntry, Classification,
    CliqueWitness, K2Outcome, TripleWitness, Verdict,
};
pub use coloring::{greedy_coloring, verify_coloring, Coloring};
pub use exact::{
    chromatic_number_exact, find_coloring, greedy_clique, lex_least_coloring, DEFAULT_MAX_EXACT,
};
pub use structured::{
    base_coloring, coloring_jr_scheme, coloring_k3_special, coloring_matching_mod,
    coloring_mirror_classes, jr_system, jr_table, k3_special_system, K3_SPECIAL_LEVEL_TWO,
};
