//! Criterion benchmarks for dseq-core live under `benches/`.
