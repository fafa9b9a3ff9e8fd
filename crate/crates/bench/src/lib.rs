//! Criterion benchmarks for the `pseudostandard` crate; see `benches/`.
