//! The scalar abstraction the counting core is generic over.
//!
//! Counting a homomorphism set means folding one value per admissible map:
//! `1` for plain counts, `prod_v lambda_{f(v)}` for weighted ones. Both are
//! sums of products in a commutative semiring, so the engine and the closed
//! forms are written once over [`CountScalar`] and instantiated at
//! [`crate::ExactCount`] and [`crate::ExactRational`]. Floating-point types
//! are deliberately not used for counting anywhere in this crate.

use num::traits::{One, Zero};
use std::ops::{AddAssign, MulAssign};

/// Commutative-semiring scalar used to accumulate homomorphism weights.
pub trait CountScalar:
    Clone + PartialEq + PartialOrd + Zero + One + AddAssign + MulAssign + std::fmt::Display
{
}

impl<T> CountScalar for T where
    T: Clone + PartialEq + PartialOrd + Zero + One + AddAssign + MulAssign + std::fmt::Display
{
}

/// `base^exp` by repeated squaring. `pow(x, 0) = 1` for every `x`.
pub fn pow<S: CountScalar>(base: &S, mut exp: u64) -> S {
    let mut result = S::one();
    let mut acc = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= acc.clone();
        }
        exp >>= 1;
        if exp > 0 {
            acc *= acc.clone();
        }
    }
    result
}

/// Sum of a slice of scalars.
pub fn sum<S: CountScalar>(values: &[S]) -> S {
    let mut total = S::zero();
    for v in values {
        total += v.clone();
    }
    total
}
