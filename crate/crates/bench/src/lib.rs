//! Criterion benchmarks for the selfsim kernels; see `benches/kernels.rs`.
