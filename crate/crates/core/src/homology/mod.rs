//! The Koszul complex `A ⊗ K_•`, finite-degree Koszulity certificates,
//! global dimension, the graded Frobenius test on `A!`, and the cochain
//! complex `L(A) = A! ⊗ A`.

mod frobenius;
mod koszul_complex;
mod l_complex;

use thiserror::Error;

use crate::quadratic::AlgebraError;

pub use frobenius::{
    frobenius_check, gorenstein_check, FrobeniusReport, GorensteinReport, PairingWitness,
};
pub use koszul_complex::{
    default_m_max, global_dimension, koszul_boundary, koszulity_certificate, BigradedComplexSlice,
    KoszulComplex, KoszulityCertificate, SliceHomology, CERTIFICATE_LABEL, DEFAULT_PROBE_DEGREE,
    FALLBACK_M_MAX,
};
pub use l_complex::{l_complex_cohomology, LComplexSlice, LComplexTable, LEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("boundary d_{n} in total degree {m} is out of range (need 1 <= n <= m <= {max})")]
    DegreeOutOfRange { n: usize, m: usize, max: usize },
    #[error("a Koszulity certificate needs m_max >= 2, got {0}")]
    TruncationTooSmall(usize),
    #[error("algebra is not finite within degree {bound}")]
    NotFinite { bound: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

/// `dim C_n − rank d_n − rank d_{n+1}` along a complex whose maps are given
/// by their ranks; `ranks[i]` is the rank of the map leaving `dims[i]`.
pub(crate) fn homology_from_ranks(
    dims: &[usize],
    outgoing: &[usize],
    incoming: &[usize],
) -> Vec<usize> {
    dims.iter()
        .zip(outgoing.iter().zip(incoming))
        .map(|(&dim, (&out, &inc))| dim - out - inc)
        .collect()
}
