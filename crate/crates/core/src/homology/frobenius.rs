use serde::{Deserialize, Serialize};

use super::koszul_complex::{global_dimension, koszulity_certificate, KoszulityCertificate};
use super::HomologyError;
use crate::exec::Execution;
use crate::linear::Matrix;
use crate::quadratic::{GradedAlgebra, QuadraticAlgebra};

/// The pairing `B_n × B_{D-n} → B_D` written as a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingWitness {
    pub n: usize,
    pub complementary: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub matrix: Vec<Vec<String>>,
}

impl PairingWitness {
    pub fn nondegenerate(&self) -> bool {
        self.rows == self.cols && self.rank == self.rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub top_degree: usize,
    pub dims: Vec<usize>,
    pub top_dim: usize,
    /// Empty when the top component is not one-dimensional.
    pub pairings: Vec<PairingWitness>,
    pub frobenius: bool,
}

/// Graded Frobenius test on a finite truncation: `dim B_D = 1` and every
/// complementary pairing into `B_D` nondegenerate.
pub fn frobenius_check(
    b: &GradedAlgebra,
    exec: Execution,
) -> Result<FrobeniusReport, HomologyError> {
    let top = b.top_degree().ok_or(HomologyError::NotFinite {
        bound: b.max_degree(),
    })?;
    let dims: Vec<usize> = b.dims()[..=top].to_vec();
    let top_dim = dims[top];
    if top_dim != 1 {
        return Ok(FrobeniusReport {
            top_degree: top,
            dims,
            top_dim,
            pairings: Vec::new(),
            frobenius: false,
        });
    }
    let pairings = exec.try_map((0..=top).collect(), |n| pairing(b, n, top))?;
    let frobenius = pairings.iter().all(PairingWitness::nondegenerate);
    Ok(FrobeniusReport {
        top_degree: top,
        dims,
        top_dim,
        pairings,
        frobenius,
    })
}

fn pairing(b: &GradedAlgebra, n: usize, top: usize) -> Result<PairingWitness, HomologyError> {
    let (rows, cols) = (b.dim(n).unwrap_or(0), b.dim(top - n).unwrap_or(0));
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let prod = b.multiply(n, &b.basis_class(n, i), top - n, &b.basis_class(top - n, j))?;
            m.set(i, j, prod[0].clone());
        }
    }
    Ok(PairingWitness {
        n,
        complementary: top - n,
        rows,
        cols,
        rank: m.rank(),
        matrix: m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub global_dimension: Option<usize>,
    /// `dim A!_n` for `n = 0..=n_max`.
    pub dual_dims: Vec<usize>,
    pub certificate: KoszulityCertificate,
    pub frobenius: Option<FrobeniusReport>,
    /// Why the Frobenius test could not run, when it did not.
    pub frobenius_error: Option<String>,
    /// `dim A!_n = dim A!_{D-n}` for all `n ≤ D`, when `D` is finite.
    pub poincare_duality: Option<bool>,
    pub gorenstein: bool,
}

/// Certificate ∧ finite global dimension ∧ `A!` Frobenius.
pub fn gorenstein_check(
    alg: &QuadraticAlgebra,
    m_max: usize,
    n_max: usize,
    exec: Execution,
) -> Result<GorensteinReport, HomologyError> {
    let certificate = koszulity_certificate(alg, m_max, exec)?;
    let dual = alg.koszul_dual().graded(n_max);
    let dual_dims = dual.dims();
    let global_dimension = global_dimension(alg, n_max);
    let (frobenius, frobenius_error) = match frobenius_check(&dual, exec) {
        Ok(r) => (Some(r), None),
        Err(HomologyError::NotFinite { bound }) => (
            None,
            Some(format!("A! does not vanish within degree {bound}")),
        ),
        Err(e) => return Err(e),
    };
    let poincare_duality =
        global_dimension.map(|d| (0..=d).all(|n| dual_dims[n] == dual_dims[d - n]));
    let gorenstein = certificate.certified
        && global_dimension.is_some()
        && frobenius.as_ref().is_some_and(|f| f.frobenius);
    Ok(GorensteinReport {
        global_dimension,
        dual_dims,
        certificate,
        frobenius,
        frobenius_error,
        poincare_duality,
        gorenstein,
    })
}
