//! Benchmark-only crate; see `benches/triangle.rs`. Run with `cargo bench`.
