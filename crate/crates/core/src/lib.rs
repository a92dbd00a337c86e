//! Exact counting of graph homomorphisms ("H-colorings") and tooling built on it:
//! target-graph regime classification, edge-min-critical graph generation and
//! decomposition, and exhaustive extremal verification over small graph families.
//!
//! All counting is exact. Homomorphism counts are arbitrary-precision naturals
//! ([`ExactCount`]) and weighted partition functions are arbitrary-precision
//! rationals ([`ExactRational`]); fractional-power comparisons such as
//! `a^(1/p)` vs `b^(1/q)` are decided by cross-powering in integer arithmetic,
//! never in floating point. The only floating-point results in the crate are
//! the spectral estimates of [`classify::path_threshold`], which are labelled
//! approximate and accompanied by exact spot checks.
//!
//! The counting core is generic over the accumulation scalar (see
//! [`scalar::CountScalar`]); the two instantiations used throughout are the
//! exact types aliased below.

pub mod classify;
pub mod count;
pub mod critical;
pub mod error;
pub mod graph;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, SimpleGraph, TargetGraph};

/// Arbitrary-precision nonnegative integer; the type of every homomorphism count.
pub type ExactCount = num::BigUint;

/// Arbitrary-precision rational in reduced form; the type of weighted partition
/// function values and of vertex activities.
pub type ExactRational = num::BigRational;
