//! Lie prealgebras `(E, R, φ)` and the generalized Chevalley–Eilenberg
//! complexes `V⊗A!` of their representations.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Execution;
use crate::homology::{
    default_m_max, gorenstein_check, GorensteinReport, HomologyError, DEFAULT_PROBE_DEGREE,
};
use crate::linear::{Matrix, Scalar};
use crate::nonhomogeneous::{
    build_curved_dual, check_pbw_conditions, classify, pbw_verdict, Classification, CurvedDga,
    NonhomogeneousError, NonhomogeneousPresentation, PbwConditions, PbwVerdict,
};
use crate::quadratic::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("the presentation has constant terms (φ₀ ≠ 0); a prealgebra needs φ₀ = 0")]
    NotQuadraticLinear,
    #[error("representation shape mismatch: {0}")]
    Shape(String),
    #[error("expected a {expected} representation")]
    WrongSide { expected: Side },
    #[error("invalid representation: relation {relation} does not act by zero")]
    InvalidRepresentation { relation: usize },
    #[error("A! does not vanish within degree {0}, so the complex is infinite")]
    NotFinite(usize),
    #[error(transparent)]
    Nonhomogeneous(#[from] NonhomogeneousError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl From<AlgebraError> for LieError {
    fn from(e: AlgebraError) -> Self {
        LieError::Nonhomogeneous(e.into())
    }
}

/// A presentation with `φ₀ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prealgebra {
    presentation: NonhomogeneousPresentation,
}

impl Prealgebra {
    pub fn new(presentation: NonhomogeneousPresentation) -> Result<Self, LieError> {
        if !presentation.phi0_is_zero() {
            return Err(LieError::NotQuadraticLinear);
        }
        Ok(Prealgebra { presentation })
    }

    pub fn presentation(&self) -> &NonhomogeneousPresentation {
        &self.presentation
    }

    pub fn d(&self) -> usize {
        self.presentation.d()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// `matrices[λ]` is the action of `x_λ` on column vectors of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub side: Side,
    pub dim: usize,
    pub matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        name: impl Into<String>,
        side: Side,
        dim: usize,
        matrices: Vec<Matrix>,
    ) -> Result<Self, LieError> {
        for (i, m) in matrices.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(LieError::Shape(format!(
                    "matrix {i} is {}x{}, expected {dim}x{dim}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        Ok(Representation {
            name: name.into(),
            side,
            dim,
            matrices,
        })
    }

    /// `K` with every generator acting by zero.
    pub fn trivial(side: Side, d: usize) -> Self {
        Representation {
            name: "trivial".into(),
            side,
            dim: 1,
            matrices: vec![Matrix::zeros(1, 1); d],
        }
    }

    /// `ad(x_λ)(x_j) = φ(x_λx_j − x_jx_λ)`, when every commutator lies in `R`.
    pub fn adjoint(p: &NonhomogeneousPresentation) -> Option<Self> {
        let d = p.d();
        let mut matrices = vec![Matrix::zeros(d, d); d];
        for (lambda, m) in matrices.iter_mut().enumerate() {
            for j in 0..d {
                let mut comm = vec![Scalar::zero(); d * d];
                comm[lambda * d + j] += Scalar::one();
                comm[j * d + lambda] -= Scalar::one();
                let image = p.phi_of(&comm)?;
                for (k, c) in image.into_iter().enumerate() {
                    m.set(k, j, c);
                }
            }
        }
        Some(Representation {
            name: "adjoint".into(),
            side: Side::Left,
            dim: d,
            matrices,
        })
    }

    /// The left module `W*` with `(a·f)(w) = f(w·a)`: `x_λ` acts by `Y_λᵀ`.
    pub fn dual_left(&self) -> Self {
        Representation {
            name: format!("{}*", self.name),
            side: Side::Left,
            dim: self.dim,
            matrices: self.matrices.iter().map(Matrix::transpose).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationViolation {
    pub relation: usize,
    /// Rows of `Σ c_μν X_μX_ν − Σ φ_λX_λ − φ₀·I`.
    pub residual: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationCheck {
    pub valid: bool,
    pub violations: Vec<RepresentationViolation>,
}

/// Each canonical relation `r − φ(r) − φ₀(r)` must act by zero; on a right
/// module the quadratic part composes in reverse.
pub fn verify_representation(
    p: &NonhomogeneousPresentation,
    rho: &Representation,
) -> Result<RepresentationCheck, LieError> {
    let d = p.d();
    if rho.matrices.len() != d {
        return Err(LieError::Shape(format!(
            "{} matrices for {d} generators",
            rho.matrices.len()
        )));
    }
    let n = rho.dim;
    let rel = p.algebra().relations();
    let mut violations = Vec::new();
    for alpha in 0..rel.dim() {
        let r = rel.basis_vector(alpha);
        let mut acc = Matrix::identity(n).scale(&-p.phi0()[alpha].clone());
        for (mu_nu, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mu, nu) = (mu_nu / d, mu_nu % d);
            let (first, second) = match rho.side {
                Side::Left => (&rho.matrices[mu], &rho.matrices[nu]),
                Side::Right => (&rho.matrices[nu], &rho.matrices[mu]),
            };
            acc = add(&acc, &first.mul(second).expect("square").scale(c));
        }
        for (lambda, c) in p.phi()[alpha].iter().enumerate() {
            if !c.is_zero() {
                acc = add(&acc, &rho.matrices[lambda].scale(&-c.clone()));
            }
        }
        if !acc.is_zero() {
            violations.push(RepresentationViolation {
                relation: alpha,
                residual: acc
                    .to_rows()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect(),
            });
        }
    }
    Ok(RepresentationCheck {
        valid: violations.is_empty(),
        violations,
    })
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.sub(&b.scale(&-Scalar::one())).expect("equal shapes")
}

/// `Σ X_μX_ν ⊗ ω_μω_ν + Σ X_λ ⊗ δω_λ` in `End(V)⊗A!_2`, flattened as
/// `(entry of End(V)) * dim A!_2 + s`; zero exactly when `δ_V² = 0`.
pub fn structure_identity(
    curved: &CurvedDga,
    rho: &Representation,
) -> Result<Vec<Scalar>, LieError> {
    let g = curved.graded();
    let d = curved.dual().d();
    let b2 = g.dim(2).unwrap_or(0);
    let n = rho.dim;
    let mut out = vec![Scalar::zero(); n * n * b2];
    let mut add_term = |m: &Matrix, class: &[Scalar]| {
        for (e, x) in m.entries().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (s, y) in class.iter().enumerate() {
                if !y.is_zero() {
                    out[e * b2 + s] += x * y;
                }
            }
        }
    };
    for mu in 0..d {
        for nu in 0..d {
            let class = g.word_class(&[mu, nu])?;
            add_term(
                &rho.matrices[mu].mul(&rho.matrices[nu]).expect("square"),
                &class,
            );
        }
    }
    for lambda in 0..d {
        add_term(&rho.matrices[lambda], &curved.delta_generators()[lambda]);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// `V⊗A!` with `δ_V`; cohomology computes `Ext_𝔄(K, V)`.
    Cochain,
    /// `W⊗A!*` with the transposed boundary; homology computes `Tor_𝔄(W, K)`.
    Chain,
}

/// `maps[n]` is `δ_V : V⊗A!_n → V⊗A!_{n+1}` (cochain) or
/// `∂ : W⊗A!*_{n+1} → W⊗A!*_n` (chain), with basis index `v·dim A!_n + s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeComplex {
    pub kind: ComplexKind,
    pub representation: String,
    pub dim_v: usize,
    pub dual_dims: Vec<usize>,
    pub maps: Vec<Matrix>,
    pub ranks: Vec<usize>,
    /// `H^n` (cochain) or `H_n` (chain) for `n = 0..=top degree of A!`.
    pub cohomology: Vec<usize>,
}

impl CeComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.dual_dims.iter().map(|b| b * self.dim_v).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.cohomology)
    }

    pub fn summary(&self) -> CeSummary {
        CeSummary {
            kind: self.kind,
            representation: self.representation.clone(),
            dims: self.dims(),
            ranks: self.ranks.clone(),
            cohomology: self.cohomology.clone(),
            label: match self.kind {
                ComplexKind::Cochain => "H^n(V⊗A!) ≅ Ext^n(K, V)".into(),
                ComplexKind::Chain => "H_n(W⊗A!*) ≅ Tor_n(W, K)".into(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CeSummary {
    pub kind: ComplexKind,
    pub representation: String,
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub cohomology: Vec<usize>,
    pub label: String,
}

pub(crate) fn alternating_sum(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(n, &x)| if n % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// `δ_V(Φ⊗α) = Σ_λ X_λΦ ⊗ ω_λα + Φ ⊗ δα`, for a valid left representation
/// of a quadratic-linear presentation whose dual `A!` is finite.
pub fn ce_cochain_complex(p: &Prealgebra, rho: &Representation) -> Result<CeComplex, LieError> {
    if rho.side != Side::Left {
        return Err(LieError::WrongSide {
            expected: Side::Left,
        });
    }
    let check = verify_representation(p.presentation(), rho)?;
    if let Some(v) = check.violations.first() {
        return Err(LieError::InvalidRepresentation {
            relation: v.relation,
        });
    }
    let curved = build_curved_dual(p.presentation())?;
    let g = curved.graded();
    let top = g.top_degree().ok_or(LieError::NotFinite(
        g.max_degree().max(DEFAULT_PROBE_DEGREE),
    ))?;
    let d = p.d();
    let nv = rho.dim;
    let dual_dims: Vec<usize> = (0..=top)
        .map(|n| g.dim(n).expect("within truncation"))
        .collect();
    let mut maps = Vec::with_capacity(top);
    for n in 0..top {
        let (bn, bn1) = (dual_dims[n], dual_dims[n + 1]);
        let left = g.left_mul_table(n)?;
        let words = g.standard_words(n).expect("within truncation");
        let mut m = Matrix::zeros(nv * bn1, nv * bn);
        for (s, w) in words.iter().enumerate() {
            for lambda in 0..d {
                let x = &rho.matrices[lambda];
                for (t, y) in &left[s * d + lambda] {
                    for v in 0..nv {
                        for v2 in 0..nv {
                            let a = x.get(v2, v);
                            if !a.is_zero() {
                                m.add_to(v2 * bn1 + t, v * bn + s, &(a * y));
                            }
                        }
                    }
                }
            }
            let da = curved.delta_word(w.letters())?;
            for (t, y) in da.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                for v in 0..nv {
                    m.add_to(v * bn1 + t, v * bn + s, y);
                }
            }
        }
        maps.push(m);
    }
    for (n, pair) in maps.windows(2).enumerate() {
        if !pair[1].mul(&pair[0]).expect("composable").is_zero() {
            return Err(LieError::Inconsistency(format!(
                "δ_V∘δ_V ≠ 0 at degree {n}"
            )));
        }
    }
    let ranks: Vec<usize> = maps.iter().map(Matrix::rank).collect();
    let cohomology = (0..=top)
        .map(|n| {
            let outgoing = ranks.get(n).copied().unwrap_or(0);
            let incoming = if n == 0 { 0 } else { ranks[n - 1] };
            dual_dims[n] * nv - outgoing - incoming
        })
        .collect();
    Ok(CeComplex {
        kind: ComplexKind::Cochain,
        representation: rho.name.clone(),
        dim_v: nv,
        dual_dims,
        maps,
        ranks,
        cohomology,
    })
}

/// Chain complex of a right representation `W`, as the transpose of the
/// cochain complex of the left module `W*`.
pub fn ce_chain_complex(p: &Prealgebra, rho: &Representation) -> Result<CeComplex, LieError> {
    if rho.side != Side::Right {
        return Err(LieError::WrongSide {
            expected: Side::Right,
        });
    }
    let check = verify_representation(p.presentation(), rho)?;
    if let Some(v) = check.violations.first() {
        return Err(LieError::InvalidRepresentation {
            relation: v.relation,
        });
    }
    let cochain = ce_cochain_complex(p, &rho.dual_left())?;
    Ok(CeComplex {
        kind: ComplexKind::Chain,
        representation: rho.name.clone(),
        maps: cochain.maps.iter().map(Matrix::transpose).collect(),
        ..cochain
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiePrealgebraReport {
    pub classification: Classification,
    pub gorenstein: GorensteinReport,
    pub pbw: PbwConditions,
    pub pbw_verdict: PbwVerdict,
    pub lie_prealgebra: bool,
}

/// The PBW verdict, and whether it combines with the Gorenstein report into a
/// Lie prealgebra.
pub fn lie_prealgebra_verdict(
    gorenstein: &GorensteinReport,
    pbw: &PbwConditions,
) -> (PbwVerdict, bool) {
    let verdict = pbw_verdict(pbw, &gorenstein.certificate);
    (
        verdict,
        gorenstein.gorenstein && verdict == PbwVerdict::Certified,
    )
}

/// Koszul of finite global dimension and Gorenstein (quadratic part), plus
/// the PBW property (conditions and a certificate); `m_max = None` picks
/// [`default_m_max`].
pub fn lie_prealgebra_check(
    p: &Prealgebra,
    m_max: Option<usize>,
    exec: Execution,
) -> Result<LiePrealgebraReport, LieError> {
    let alg = p.presentation().algebra();
    let m_max = m_max.unwrap_or_else(|| default_m_max(alg).0);
    let gorenstein = gorenstein_check(alg, m_max, DEFAULT_PROBE_DEGREE, exec)?;
    let pbw = check_pbw_conditions(p.presentation())?;
    let (verdict, lie_prealgebra) = lie_prealgebra_verdict(&gorenstein, &pbw);
    Ok(LiePrealgebraReport {
        classification: classify(p.presentation()),
        lie_prealgebra,
        gorenstein,
        pbw,
        pbw_verdict: verdict,
    })
}
