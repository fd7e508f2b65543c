//! Criterion benchmarks for `vagueset`; see `benches/`.
