//! Quadratic algebras `A(E, R) = T(E)/[R]`, their graded components,
//! normal forms, Koszul duals and Koszul subspaces.
//!
//! Generators are `x0..x{d-1}` in declaration order; `E^⊗n` is coordinatized
//! by words in lexicographic order. Standard words of `A_n` are the non-pivot
//! columns of the canonical basis of the degree-`n` part of the ideal.

mod graded;
mod koszul;
mod word;

use num_traits::Zero;
use thiserror::Error;

use crate::linear::{EchelonBuilder, LinearError, Scalar, Subspace};

pub use graded::{GradedAlgebra, GradedComponent};
pub use koszul::{koszul_subspace, koszul_subspaces};
pub use word::{tensor_dim, word_rank, word_unrank, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("{op} requires degree >= {min}, got {degree}")]
    DegreeTooLow {
        op: &'static str,
        degree: usize,
        min: usize,
    },
    #[error("degree {degree} is beyond the computed truncation (max {max})")]
    BeyondTruncation { degree: usize, max: usize },
    #[error("relation space ambient dimension {0} is not a square d*d")]
    NotSquareAmbient(usize),
    #[error("expected {expected} generator names, got {found}")]
    GeneratorCount { expected: usize, found: usize },
}

/// `A(E, R)`: `d` generators and a relation subspace `R ⊂ E⊗E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    generator_names: Vec<String>,
    relations: Subspace,
}

impl QuadraticAlgebra {
    pub fn new(generator_names: Vec<String>, relations: Subspace) -> Result<Self, AlgebraError> {
        let d = generator_names.len();
        if relations.ambient_dim() != d * d {
            return Err(AlgebraError::GeneratorCount {
                expected: isqrt(relations.ambient_dim()).unwrap_or(0),
                found: d,
            });
        }
        Ok(QuadraticAlgebra {
            generator_names,
            relations,
        })
    }

    /// Relations given as (possibly dependent) vectors in `E⊗E`.
    pub fn from_relations(
        generator_names: Vec<String>,
        rows: &[Vec<Scalar>],
    ) -> Result<Self, AlgebraError> {
        let d = generator_names.len();
        let relations = Subspace::span(rows, d * d)?;
        Self::new(generator_names, relations)
    }

    /// Generators named `x0..x{d-1}`.
    pub fn with_default_names(d: usize, rows: &[Vec<Scalar>]) -> Result<Self, AlgebraError> {
        Self::from_relations(default_names("x", d), rows)
    }

    pub fn d(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// `A! = A(E*, R^⊥)`, with `E*⊗E*` identified with `(E⊗E)*` through the
    /// same word coordinates.
    pub fn koszul_dual(&self) -> QuadraticAlgebra {
        QuadraticAlgebra {
            generator_names: self.generator_names.iter().map(|n| dual_name(n)).collect(),
            relations: self.relations.annihilator(),
        }
    }

    pub fn relation_span(&self, n: usize) -> Result<Subspace, AlgebraError> {
        relation_span(&self.relations, n)
    }

    pub fn koszul_subspace(&self, n: usize) -> Subspace {
        koszul_subspaces(&self.relations, self.d(), n)
            .pop()
            .expect("n+1 subspaces")
    }

    pub fn koszul_subspaces(&self, n_max: usize) -> Vec<Subspace> {
        koszul_subspaces(&self.relations, self.d(), n_max)
    }

    pub fn graded(&self, max_degree: usize) -> GradedAlgebra {
        GradedAlgebra::compute(self, max_degree)
    }

    pub fn graded_component(&self, n: usize) -> GradedComponent {
        self.graded(n).component(n).expect("computed through n")
    }

    /// Decomposition `f_α = M_{αλ} ⊗ x^λ` for the canonical basis of `R`.
    pub fn presentation_matrices(&self) -> PresentationMatrix {
        presentation_matrices_for(self.d(), &self.relations.basis().to_rows())
    }
}

/// Names `prefix0..prefix{d-1}`.
pub fn default_names(prefix: &str, d: usize) -> Vec<String> {
    (0..d).map(|i| format!("{prefix}{i}")).collect()
}

/// `x` ↔ `x*`, so that taking the dual twice restores the names.
pub fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

pub(crate) fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

pub fn koszul_dual(a: &QuadraticAlgebra) -> QuadraticAlgebra {
    a.koszul_dual()
}

/// `Σ_k E^⊗k ⊗ R ⊗ E^⊗(n-k-2) ⊂ E^⊗n`, built by shifting every relation by
/// every prefix/suffix word and reducing.
pub fn relation_span(relations: &Subspace, n: usize) -> Result<Subspace, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::DegreeTooLow {
            op: "relation_span",
            degree: n,
            min: 2,
        });
    }
    let d = isqrt(relations.ambient_dim())
        .ok_or(AlgebraError::NotSquareAmbient(relations.ambient_dim()))?;
    let ambient = tensor_dim(d, n);
    let mut builder = EchelonBuilder::new(ambient);
    let rows: Vec<Vec<(usize, Scalar)>> = (0..relations.dim())
        .map(|i| {
            relations
                .basis_vector(i)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect()
        })
        .collect();
    'outer: for k in 0..=n - 2 {
        let suffix_len = tensor_dim(d, n - k - 2);
        for prefix in 0..tensor_dim(d, k) {
            for suffix in 0..suffix_len {
                for row in &rows {
                    if builder.rank() == ambient {
                        break 'outer;
                    }
                    let mut v = vec![Scalar::zero(); ambient];
                    for (ab, c) in row {
                        v[(prefix * d * d + ab) * suffix_len + suffix] = c.clone();
                    }
                    builder.insert(v)?;
                }
            }
        }
    }
    Ok(builder.into_subspace())
}

/// `M_{αλ} ∈ E` with `f_α = Σ_λ M_{αλ} ⊗ x^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    d: usize,
    /// `entries[α][λ]` is the coefficient vector of `M_{αλ}` in `E`.
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl PresentationMatrix {
    /// `Σ_λ M_{αλ} ⊗ x^λ` for every `α`.
    pub fn reassemble(&self) -> Vec<Vec<Scalar>> {
        let d = self.d;
        self.entries
            .iter()
            .map(|row| {
                let mut f = vec![Scalar::zero(); d * d];
                for (lambda, m) in row.iter().enumerate() {
                    for (mu, c) in m.iter().enumerate() {
                        f[mu * d + lambda] = c.clone();
                    }
                }
                f
            })
            .collect()
    }
}

/// Reads off the last tensor factor of each relation.
pub fn presentation_matrices_for(d: usize, relations: &[Vec<Scalar>]) -> PresentationMatrix {
    let entries = relations
        .iter()
        .map(|f| {
            (0..d)
                .map(|lambda| (0..d).map(|mu| f[mu * d + lambda].clone()).collect())
                .collect()
        })
        .collect();
    PresentationMatrix { d, entries }
}
