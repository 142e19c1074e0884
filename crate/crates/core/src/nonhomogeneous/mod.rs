//! Nonhomogeneous quadratic presentations `P = {r − φ(r) − φ₀(r)·1 | r ∈ R}`,
//! the PBW condition battery and the curved differential dual `(A!, δ, F)`.

mod curved;
mod pbw;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::HomologyError;
use crate::linear::{is_zero_vec, zero_vec, Scalar, Subspace};
use crate::quadratic::{AlgebraError, QuadraticAlgebra};

pub use curved::{build_curved_dual, verify_curved_dual, CurvedConditions, CurvedDga};
pub use pbw::{check_pbw_conditions, overlap_space, pbw_verdict, PbwConditions, PbwVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NonhomogeneousError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("the relations imply a nonzero element of degree <= 1 (P ∩ F¹ ≠ 0): {0}")]
    ConditionI(String),
    #[error("relation {index} has the wrong shape: {detail}")]
    Shape { index: usize, detail: String },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

/// `quadratic = linear + constant·1` in the algebra, with `quadratic ∈ E⊗E`
/// and `linear ∈ E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InhomogeneousRelation {
    pub quadratic: Vec<Scalar>,
    pub linear: Vec<Scalar>,
    pub constant: Scalar,
}

impl InhomogeneousRelation {
    pub fn homogeneous(quadratic: Vec<Scalar>) -> Self {
        let d = crate::quadratic::isqrt(quadratic.len()).unwrap_or(0);
        InhomogeneousRelation {
            quadratic,
            linear: zero_vec(d),
            constant: Scalar::zero(),
        }
    }
}

/// `(R, φ, φ₀)` with `φ` and `φ₀` given on the canonical basis of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonhomogeneousPresentation {
    algebra: QuadraticAlgebra,
    /// `phi[α] = φ(r_α) ∈ E`.
    phi: Vec<Vec<Scalar>>,
    /// `phi0[α] = φ₀(r_α)`.
    phi0: Vec<Scalar>,
}

impl NonhomogeneousPresentation {
    /// Row-reduces `[quadratic | linear | constant]`; condition (i) holds iff
    /// no reduced row has a zero quadratic part.
    pub fn from_relations(
        generator_names: Vec<String>,
        relations: &[InhomogeneousRelation],
    ) -> Result<Self, NonhomogeneousError> {
        let d = generator_names.len();
        let width = d * d + d + 1;
        let mut rows = Vec::with_capacity(relations.len());
        for (index, r) in relations.iter().enumerate() {
            if r.quadratic.len() != d * d || r.linear.len() != d {
                return Err(NonhomogeneousError::Shape {
                    index,
                    detail: format!(
                        "expected {} quadratic and {d} linear coefficients, got {} and {}",
                        d * d,
                        r.quadratic.len(),
                        r.linear.len()
                    ),
                });
            }
            let mut row = r.quadratic.clone();
            row.extend(r.linear.iter().cloned());
            row.push(r.constant.clone());
            rows.push(row);
        }
        let full = Subspace::span(&rows, width).map_err(AlgebraError::from)?;
        if let Some(i) = full.pivots().iter().position(|&p| p >= d * d) {
            let row = full.basis_vector(i);
            return Err(NonhomogeneousError::ConditionI(format!(
                "linear part {:?}, constant {}",
                row[d * d..d * d + d]
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
                row[d * d + d]
            )));
        }
        let quad: Vec<Vec<Scalar>> = (0..full.dim())
            .map(|i| full.basis_vector(i)[..d * d].to_vec())
            .collect();
        let phi = (0..full.dim())
            .map(|i| full.basis_vector(i)[d * d..d * d + d].to_vec())
            .collect();
        let phi0 = (0..full.dim())
            .map(|i| full.basis_vector(i)[d * d + d].clone())
            .collect();
        let algebra = QuadraticAlgebra::from_relations(generator_names, &quad)?;
        debug_assert_eq!(algebra.relations().basis().to_rows(), quad);
        Ok(NonhomogeneousPresentation { algebra, phi, phi0 })
    }

    /// A homogeneous algebra viewed with `φ = 0`, `φ₀ = 0`.
    pub fn homogeneous(algebra: QuadraticAlgebra) -> Self {
        let n = algebra.relations().dim();
        let d = algebra.d();
        NonhomogeneousPresentation {
            algebra,
            phi: vec![zero_vec(d); n],
            phi0: zero_vec(n),
        }
    }

    pub fn algebra(&self) -> &QuadraticAlgebra {
        &self.algebra
    }

    pub fn d(&self) -> usize {
        self.algebra.d()
    }

    pub fn phi(&self) -> &[Vec<Scalar>] {
        &self.phi
    }

    pub fn phi0(&self) -> &[Scalar] {
        &self.phi0
    }

    /// `φ(v)` for `v ∈ R`, `None` if `v ∉ R`.
    pub fn phi_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords = self.algebra.relations().coordinates(v)?;
        let mut out = zero_vec(self.d());
        for (c, image) in coords.iter().zip(&self.phi) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(image) {
                *o += c * x;
            }
        }
        Some(out)
    }

    /// `φ₀(v)` for `v ∈ R`, `None` if `v ∉ R`.
    pub fn phi0_of(&self, v: &[Scalar]) -> Option<Scalar> {
        let coords = self.algebra.relations().coordinates(v)?;
        Some(crate::linear::dot(&coords, &self.phi0))
    }

    pub fn phi_is_zero(&self) -> bool {
        self.phi.iter().all(|v| is_zero_vec(v))
    }

    pub fn phi0_is_zero(&self) -> bool {
        is_zero_vec(&self.phi0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Homogeneous,
    QuadraticLinear,
    CentralCurvature,
    Mixed,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Homogeneous => "homogeneous",
            Classification::QuadraticLinear => "quadratic-linear",
            Classification::CentralCurvature => "central-curvature",
            Classification::Mixed => "mixed",
        }
    }
}

/// Quadratic-linear iff `φ₀ = 0`, central-curvature iff `φ = 0`; both zero
/// is homogeneous, neither is mixed.
pub fn classify(p: &NonhomogeneousPresentation) -> Classification {
    match (p.phi_is_zero(), p.phi0_is_zero()) {
        (true, true) => Classification::Homogeneous,
        (false, true) => Classification::QuadraticLinear,
        (true, false) => Classification::CentralCurvature,
        (false, false) => Classification::Mixed,
    }
}

/// Outcome of one linear condition, with the offending vector when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ConditionVerdict {
    Holds,
    Fails { witness: String },
    NotEvaluable { reason: String },
}

impl ConditionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionVerdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, ConditionVerdict::Fails { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ConditionVerdict::Holds => "holds",
            ConditionVerdict::Fails { .. } => "fails",
            ConditionVerdict::NotEvaluable { .. } => "not evaluable",
        }
    }

    /// Same outcome, ignoring witnesses.
    pub fn agrees_with(&self, other: &ConditionVerdict) -> bool {
        self.label() == other.label()
    }
}

pub(crate) fn render_vector(v: &[Scalar]) -> String {
    format!(
        "[{}]",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}
