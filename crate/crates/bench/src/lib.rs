//! Criterion benchmarks for the enumeration and characterization code; see `benches/`.
