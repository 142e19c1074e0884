//! Twisted potentials of Koszul–Gorenstein quadratic algebras.
//!
//! Components are stored in `E`-coordinates, indexed by words in lex order.
//! The twist `Q` acts by `w_{μ λ1…λ(D-1)} = Σ_ν Q[ν][μ] · w_{λ1…λ(D-1) ν}`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::GorensteinReport;
use crate::linear::{int, solve_linear, zero_vec, Matrix, Scalar, Subspace};
use crate::quadratic::{tensor_dim, QuadraticAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PotentialError {
    #[error("algebra is not Gorenstein; no twisted potential is extracted")]
    NotGorenstein,
    #[error("Gorenstein report is inconsistent with K_D: dim K_{degree} = {dim}, expected 1")]
    InconsistentCertificate { degree: usize, dim: usize },
    #[error("preregularity fails for an algebra that passed the Gorenstein check: {0}")]
    PreregularityViolated(String),
    #[error("no matrix Q satisfies the twisted cyclicity equations")]
    NotTwistedCyclic,
    #[error("degenerate potential: {0}")]
    Degenerate(String),
    #[error("components have length {found}, expected d^D = {expected}")]
    Shape { expected: usize, found: usize },
}

/// An element `w ∈ E^⊗D`, not yet known to be a twisted potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    d: usize,
    degree: usize,
    components: Vec<Scalar>,
}

impl Potential {
    pub fn new(d: usize, degree: usize, components: Vec<Scalar>) -> Result<Self, PotentialError> {
        let expected = tensor_dim(d, degree);
        if components.len() != expected {
            return Err(PotentialError::Shape {
                expected,
                found: components.len(),
            });
        }
        Ok(Potential {
            d,
            degree,
            components,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    pub fn component(&self, letters: &[usize]) -> &Scalar {
        &self.components[crate::quadratic::word_rank(letters, self.d)]
    }

    /// Scaled so the first nonzero component in lex order is 1.
    pub fn normalized(&self) -> Potential {
        let Some(lead) = self.components.iter().find(|c| !c.is_zero()) else {
            return self.clone();
        };
        let inv = lead.recip();
        Potential {
            d: self.d,
            degree: self.degree,
            components: self.components.iter().map(|c| c * &inv).collect(),
        }
    }

    /// The `d × d^(D-1)` matrix splitting off the first index.
    pub fn first_index_matrix(&self) -> Matrix {
        let rest = tensor_dim(self.d, self.degree.saturating_sub(1));
        let rows = self
            .components
            .chunks(rest.max(1))
            .map(<[Scalar]>::to_vec)
            .collect();
        Matrix::from_rows(rows, rest).expect("chunks have the tail width")
    }

    /// Rank of the first-index matrix equals `d`.
    pub fn is_one_site_nondegenerate(&self) -> bool {
        self.degree >= 1 && self.first_index_matrix().rank() == self.d
    }
}

/// `Q_w`, stored with `get(ν, μ) = Q[ν][μ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistMatrix {
    q: Matrix,
}

impl TwistMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.q
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPotential {
    pub potential: Potential,
    pub twist: TwistMatrix,
}

impl TwistedPotential {
    pub fn calabi_yau(&self) -> bool {
        calabi_yau_check(&self.potential, &self.twist)
    }
}

/// Solves the `d^D` cyclicity equations for the `d²` entries of `Q`.
pub fn solve_qw(w: &Potential) -> Result<TwistMatrix, PotentialError> {
    let (d, deg) = (w.d, w.degree);
    if deg == 0 || d == 0 {
        return Err(PotentialError::Degenerate("potential of degree 0".into()));
    }
    let rest = tensor_dim(d, deg - 1);
    let mut m = Matrix::zeros(d * rest, d * d);
    let mut rhs = Vec::with_capacity(d * rest);
    for mu in 0..d {
        for lam in 0..rest {
            let row = mu * rest + lam;
            for nu in 0..d {
                let c = &w.components[lam * d + nu];
                if !c.is_zero() {
                    m.set(row, nu * d + mu, c.clone());
                }
            }
            rhs.push(w.components[mu * rest + lam].clone());
        }
    }
    let sol = solve_linear(&m, &rhs).expect("rhs has one entry per row");
    if !sol.consistent {
        return Err(PotentialError::NotTwistedCyclic);
    }
    if !sol.unique {
        return Err(PotentialError::Degenerate(
            "twisted cyclicity does not determine Q (first-index rank below d)".into(),
        ));
    }
    let x = sol.solution.expect("consistent");
    let q = Matrix::from_rows(x.chunks(d).map(<[Scalar]>::to_vec).collect(), d).expect("d×d");
    if q.rank() != d {
        return Err(PotentialError::Degenerate("Q is not invertible".into()));
    }
    Ok(TwistMatrix { q })
}

/// `Q^{⊗D}` applied to `w`: `w'_{μ1…μD} = Σ_ν Π_i Q[ν_i][μ_i] w_{ν1…νD}`.
pub fn apply_twist_power(w: &Potential, q: &TwistMatrix) -> Vec<Scalar> {
    let d = w.d;
    let mut cur = w.components.clone();
    for slot in 0..w.degree {
        let stride = tensor_dim(d, w.degree - 1 - slot);
        let mut next = zero_vec(cur.len());
        for (idx, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let nu = (idx / stride) % d;
            let base = idx - nu * stride;
            for mu in 0..d {
                let qv = q.q.get(nu, mu);
                if !qv.is_zero() {
                    next[base + mu * stride] += c * qv;
                }
            }
        }
        cur = next;
    }
    cur
}

/// `R_w`: span of the degree-2 slices `w_{λ1…λ(D-2) μν}` over all prefixes.
pub fn relations_from_potential(w: &Potential) -> Subspace {
    let dd = w.d * w.d;
    if w.degree < 2 {
        return Subspace::zero(dd);
    }
    let rows: Vec<Vec<Scalar>> = w
        .components
        .chunks(dd.max(1))
        .map(<[Scalar]>::to_vec)
        .collect();
    Subspace::span(&rows, dd).expect("chunks have width d²")
}

/// `Q = (−1)^{D+1} · I`.
pub fn calabi_yau_check(w: &Potential, q: &TwistMatrix) -> bool {
    let sign = if w.degree % 2 == 1 {
        Scalar::one()
    } else {
        -Scalar::one()
    };
    q.q == Matrix::identity(w.d).scale(&sign)
}

/// `w` = the normalized basis vector of `K_D`, validated as a twisted potential
/// whose relations reproduce `R`.
pub fn extract_potential(
    alg: &QuadraticAlgebra,
    report: &GorensteinReport,
) -> Result<TwistedPotential, PotentialError> {
    if !report.gorenstein {
        return Err(PotentialError::NotGorenstein);
    }
    let degree = report
        .global_dimension
        .ok_or(PotentialError::NotGorenstein)?;
    let k = alg.koszul_subspace(degree);
    if k.dim() != 1 {
        return Err(PotentialError::InconsistentCertificate {
            degree,
            dim: k.dim(),
        });
    }
    let potential = Potential::new(alg.d(), degree, k.basis_vector(0).to_vec())?.normalized();
    if !potential.is_one_site_nondegenerate() {
        return Err(PotentialError::PreregularityViolated(format!(
            "first-index rank is {} < d = {}",
            potential.first_index_matrix().rank(),
            alg.d()
        )));
    }
    let twist =
        solve_qw(&potential).map_err(|e| PotentialError::PreregularityViolated(e.to_string()))?;
    if degree >= 2 && &relations_from_potential(&potential) != alg.relations() {
        return Err(PotentialError::PreregularityViolated(
            "relations generated by w differ from R".into(),
        ));
    }
    Ok(TwistedPotential { potential, twist })
}

/// Serializable summary used by reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialSummary {
    pub degree: usize,
    /// `(word, coefficient)` for each nonzero component, in lex order.
    pub components: Vec<(String, String)>,
    pub twist: Vec<Vec<String>>,
    pub calabi_yau: bool,
    pub twist_power_fixes_w: bool,
    pub relations_round_trip: bool,
}

impl PotentialSummary {
    pub fn new(alg: &QuadraticAlgebra, tp: &TwistedPotential) -> Self {
        let w = &tp.potential;
        let components = w
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(rank, c)| {
                let word = crate::quadratic::Word::unrank(rank, w.d, w.degree);
                (word.render(alg.generator_names()), c.to_string())
            })
            .collect();
        PotentialSummary {
            degree: w.degree,
            components,
            twist: tp
                .twist
                .q
                .to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            calabi_yau: tp.calabi_yau(),
            twist_power_fixes_w: apply_twist_power(w, &tp.twist) == w.components,
            relations_round_trip: &relations_from_potential(w) == alg.relations(),
        }
    }
}

/// `ε_{λ1…λd}` in dimension `d`.
pub fn levi_civita(d: usize) -> Potential {
    let mut comps = zero_vec(tensor_dim(d, d));
    for (rank, slot) in comps.iter_mut().enumerate() {
        let letters = crate::quadratic::word_unrank(rank, d, d);
        let mut seen = vec![false; d];
        if letters
            .iter()
            .any(|&l| std::mem::replace(&mut seen[l], true))
        {
            continue;
        }
        let inversions = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| letters[i] > letters[j])
            .count();
        *slot = if inversions % 2 == 0 { int(1) } else { int(-1) };
    }
    Potential::new(d, d, comps).expect("d^d components")
}
