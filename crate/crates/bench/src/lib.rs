//! Criterion benchmarks for `qchan-core`; see `benches/`.
