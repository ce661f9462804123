//! Criterion benchmarks for the arithmetic kernels live under `benches/`.
