//! Benchmark helpers live in the bench targets; nothing is exported.
