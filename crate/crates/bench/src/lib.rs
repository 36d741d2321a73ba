//! Criterion benchmarks for `valuta-core`; see `benches/invariants.rs`.
