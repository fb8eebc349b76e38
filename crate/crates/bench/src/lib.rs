//! Criterion benchmarks for the mmatrix library live under `benches/`.
