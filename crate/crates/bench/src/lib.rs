//! Criterion benchmarks for `fuchsian-core`; see `benches/`.
