//! Criterion benchmarks for quandle-quiver; see `benches/pipeline.rs`.
