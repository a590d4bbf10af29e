//! Exact-arithmetic computation of representation-theoretic multiplicities.
//!
//! The crate computes Kostka numbers, Littlewood-Richardson coefficients
//! (including multi-LR), Kronecker coefficients and plethysm coefficients
//! `a^lambda_{d,m}`, all over arbitrary-precision integers. Each coefficient
//! family has at least two independent algorithms: a fast path (lattice-point
//! counting, Jacobi-Trudi expansions) and an exponential-time symmetric
//! function oracle used for cross-validation.
//!
//! Module map:
//! - [`partition`]: partitions, hook lengths, dimensions, enumeration
//! - [`tableaux`]: SYT/SSYT machinery and Gelfand-Tsetlin Kostka counting
//! - [`lr`]: Littlewood-Richardson coefficients, three algorithms + multi-LR
//! - [`kronecker`]: character tables and the Jacobi-Trudi Kronecker algorithm
//! - [`plethysm`]: `h_d[h_m]` coefficients via signed polytope counts
//! - [`symfunc`]: exact symmetric polynomials, the ground-truth oracle
//! - [`growth`]: dimension-growth classification and proven-bound checks
//! - [`families`]: parametrized query families for scaling benchmarks
//! - [`selftest`]: the exhaustive oracle-equivalence sweeps

pub mod error;
pub mod families;
pub mod growth;
pub mod kronecker;
pub mod lr;
pub mod partition;
pub(crate) mod perm;
pub mod plethysm;
pub mod selftest;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, ParseError};
pub use num_bigint::{BigInt, BigUint};
pub use partition::{Composition, FrobeniusCoords, Partition};
pub use tableaux::{SkewShape, Tableau};
