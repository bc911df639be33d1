//! Criterion benchmarks for the radical and enumeration kernels; see `benches/`.
