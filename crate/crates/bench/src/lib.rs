//! Criterion benchmarks for the repfact kernels; see `benches/kernels.rs`.
//!
//! Run with `cargo bench -p repfact-bench`.
