//! Exact linear algebra over the rationals.
//!
//! Everything above this layer reduces to row reduction: subspaces are kept
//! in reduced row-echelon form with leftmost pivots, which makes two spanning
//! sets of the same subspace produce bit-identical bases. Equality of
//! subspaces is therefore plain structural equality.

mod echelon;
mod matrix;
mod sparse;
mod subspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use echelon::EchelonBuilder;
pub use matrix::{solve_linear, LinearSolution, Matrix};
pub(crate) use sparse::to_sparse;
pub use sparse::{add_scaled_sparse, SparseVec};
pub use subspace::{annihilator, intersect, kernel, rref_canonicalize, Subspace};

/// The ground field: arbitrary-precision rationals, always normalized.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` as a normalized scalar. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-3"`, or `"a/b"`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    text.trim().parse::<BigRational>().ok()
}

/// Converts a slice of small integers into scalars.
pub fn ints(values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| int(v)).collect()
}

/// Dot product of two equal-length vectors.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    use num_traits::Zero;
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    use num_traits::Zero;
    v.iter().all(Zero::is_zero)
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    use num_traits::Zero;
    vec![Scalar::zero(); n]
}
