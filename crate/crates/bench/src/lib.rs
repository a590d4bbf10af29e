//! Criterion microbenchmarks for the multiplicity algorithms; see
//! `benches/multiplicities.rs`. The `multcoef bench` subcommand covers the
//! scaling sweeps; these track per-algorithm constants.
