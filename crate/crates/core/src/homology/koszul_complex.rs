use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{homology_from_ranks, HomologyError};
use crate::exec::Execution;
use crate::linear::{to_sparse, Matrix, Scalar, SparseVec, Subspace};
use crate::quadratic::{tensor_dim, GradedAlgebra, QuadraticAlgebra};

/// Attached to every certificate and every report that quotes one.
pub const CERTIFICATE_LABEL: &str =
    "finite-degree certificate: acyclicity of the Koszul complex is \
verified in total degrees 0..=m_max only; Koszulity and global dimension are statements about all \
degrees and are not decided by this computation";

/// Degree up to which `A!` is probed for vanishing when choosing `m_max`.
pub const DEFAULT_PROBE_DEGREE: usize = 8;

/// Truncation used when `A!` does not vanish within the probe degree.
pub const FALLBACK_M_MAX: usize = 6;

/// The spaces `A_{m-n} ⊗ K_n` of one total degree and the boundaries between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedComplexSlice {
    pub m: usize,
    /// `dims[n] = dim A_{m-n} · dim K_n`.
    pub dims: Vec<usize>,
    /// `boundaries[n-1]` is `d_n : A_{m-n}⊗K_n → A_{m-n+1}⊗K_{n-1}`.
    pub boundaries: Vec<Matrix>,
}

/// Ranks and homology of one slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceHomology {
    pub m: usize,
    pub dims: Vec<usize>,
    /// `ranks[n]` is the rank of `d_n`; `ranks[0] = 0`.
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
}

impl SliceHomology {
    pub fn acyclic_in_positive_degrees(&self) -> bool {
        self.homology.iter().skip(1).all(|&h| h == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulityCertificate {
    pub generators: Vec<String>,
    pub m_max: usize,
    pub slices: Vec<SliceHomology>,
    /// True iff `H_n = 0` for all `n ≥ 1` in every total degree `≤ m_max`.
    pub certified: bool,
    pub label: String,
}

impl KoszulityCertificate {
    /// `(m, n, dim H_n)` for every nonzero positive-degree homology group.
    pub fn failures(&self) -> Vec<(usize, usize, usize)> {
        self.slices
            .iter()
            .flat_map(|s| {
                s.homology
                    .iter()
                    .enumerate()
                    .skip(1)
                    .filter(|(_, &h)| h > 0)
                    .map(move |(n, &h)| (s.m, n, h))
            })
            .collect()
    }
}

/// `A ⊗ K_•` truncated at total degree `m_max`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    m_max: usize,
    graded: GradedAlgebra,
    koszul: Vec<Subspace>,
    sparse_koszul: Vec<Vec<SparseVec>>,
}

impl KoszulComplex {
    pub fn new(alg: &QuadraticAlgebra, m_max: usize) -> Self {
        let graded = alg.graded(m_max);
        let koszul = alg.koszul_subspaces(m_max);
        let sparse_koszul = koszul
            .iter()
            .map(|k| (0..k.dim()).map(|i| to_sparse(k.basis_vector(i))).collect())
            .collect();
        KoszulComplex {
            m_max,
            graded,
            koszul,
            sparse_koszul,
        }
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn graded(&self) -> &GradedAlgebra {
        &self.graded
    }

    pub fn koszul_subspaces(&self) -> &[Subspace] {
        &self.koszul
    }

    fn a_dim(&self, n: usize) -> usize {
        self.graded.dim(n).expect("within truncation")
    }

    /// Coordinates of `tail` on the canonical basis of `K_level`.
    fn tail_coordinates(&self, level: usize, tail: &[Scalar]) -> Result<SparseVec, HomologyError> {
        let k = &self.koszul[level];
        let coords: SparseVec = k
            .pivots()
            .iter()
            .enumerate()
            .filter(|(_, &p)| !tail[p].is_zero())
            .map(|(i, &p)| (i, tail[p].clone()))
            .collect();
        let mut residual = tail.to_vec();
        for (i, c) in &coords {
            for (col, x) in &self.sparse_koszul[level][*i] {
                residual[*col] -= c * x;
            }
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return Err(HomologyError::Inconsistency(format!(
                "a first-factor tail of a K_{} basis vector is not in K_{level}",
                level + 1
            )));
        }
        Ok(coords)
    }

    /// `d_n : A_{m-n} ⊗ K_n → A_{m-n+1} ⊗ K_{n-1}` as a target × source matrix.
    /// Rows are indexed `t·dim K_{n-1} + i`, columns `s·dim K_n + j`.
    pub fn boundary(&self, n: usize, m: usize) -> Result<Matrix, HomologyError> {
        if n == 0 || n > m || m > self.m_max {
            return Err(HomologyError::DegreeOutOfRange {
                n,
                m,
                max: self.m_max,
            });
        }
        let d = self.graded.d();
        let (src_a, tgt_a) = (self.a_dim(m - n), self.a_dim(m - n + 1));
        let (dk, dk_prev) = (self.koszul[n].dim(), self.koszul[n - 1].dim());
        let mut mat = Matrix::zeros(tgt_a * dk_prev, src_a * dk);
        let tail_len = tensor_dim(d, n - 1);
        for j in 0..dk {
            let k = self.koszul[n].basis_vector(j);
            for lambda in 0..d {
                let tail = &k[lambda * tail_len..(lambda + 1) * tail_len];
                let coords = self.tail_coordinates(n - 1, tail)?;
                if coords.is_empty() {
                    continue;
                }
                for s in 0..src_a {
                    for (t, y) in self.graded.right_mul_row(m - n, s, lambda) {
                        for (i, c) in &coords {
                            mat.add_to(t * dk_prev + i, s * dk + j, &(c * y));
                        }
                    }
                }
            }
        }
        Ok(mat)
    }

    pub fn slice(&self, m: usize) -> Result<BigradedComplexSlice, HomologyError> {
        if m > self.m_max {
            return Err(HomologyError::DegreeOutOfRange {
                n: 0,
                m,
                max: self.m_max,
            });
        }
        let dims = (0..=m)
            .map(|n| self.a_dim(m - n) * self.koszul[n].dim())
            .collect();
        let boundaries = (1..=m)
            .map(|n| self.boundary(n, m))
            .collect::<Result<_, _>>()?;
        Ok(BigradedComplexSlice {
            m,
            dims,
            boundaries,
        })
    }

    /// Homology of one slice by rank–nullity, after checking `d² = 0` exactly.
    pub fn homology(&self, m: usize) -> Result<SliceHomology, HomologyError> {
        let slice = self.slice(m)?;
        for n in 1..m {
            let composite = slice.boundaries[n - 1]
                .mul(&slice.boundaries[n])
                .map_err(|e| HomologyError::Inconsistency(e.to_string()))?;
            if !composite.is_zero() {
                return Err(HomologyError::Inconsistency(format!(
                    "d_{n} ∘ d_{} ≠ 0 in total degree {m}",
                    n + 1
                )));
            }
        }
        let mut ranks = vec![0];
        ranks.extend(slice.boundaries.iter().map(Matrix::rank));
        let outgoing = ranks.clone();
        let incoming: Vec<usize> = (0..=m)
            .map(|n| ranks.get(n + 1).copied().unwrap_or(0))
            .collect();
        let homology = homology_from_ranks(&slice.dims, &outgoing, &incoming);
        Ok(SliceHomology {
            m,
            dims: slice.dims,
            ranks,
            homology,
        })
    }
}

/// Matrix of `d_n` in total degree `m`.
pub fn koszul_boundary(
    alg: &QuadraticAlgebra,
    n: usize,
    m: usize,
) -> Result<Matrix, HomologyError> {
    KoszulComplex::new(alg, m).boundary(n, m)
}

/// Homology of every slice `m = 0..=m_max`; slices are independent work items.
pub fn koszulity_certificate(
    alg: &QuadraticAlgebra,
    m_max: usize,
    exec: Execution,
) -> Result<KoszulityCertificate, HomologyError> {
    if m_max < 2 {
        return Err(HomologyError::TruncationTooSmall(m_max));
    }
    let complex = KoszulComplex::new(alg, m_max);
    let slices = exec.try_map((0..=m_max).collect(), |m| complex.homology(m))?;
    let certified = slices
        .iter()
        .all(SliceHomology::acyclic_in_positive_degrees);
    Ok(KoszulityCertificate {
        generators: alg.generator_names().to_vec(),
        m_max,
        slices,
        certified,
        label: CERTIFICATE_LABEL.to_string(),
    })
}

/// Largest `D` with `K_D ≠ 0`, if `K_n` vanishes for some `n ≤ n_max`.
///
/// `K_n` is the annihilator of the degree-`n` part of the ideal generated by
/// `R^⊥`, so `dim K_n = dim A!_n`; the dual's graded dimensions are far
/// cheaper than the subspaces themselves.
pub fn global_dimension(alg: &QuadraticAlgebra, n_max: usize) -> Option<usize> {
    alg.koszul_dual().graded(n_max).top_degree()
}

/// `2·(first vanishing degree of A!) + 2`, or the fallback when `A!` does not
/// vanish by [`DEFAULT_PROBE_DEGREE`]. The flag reports the fallback.
pub fn default_m_max(alg: &QuadraticAlgebra) -> (usize, bool) {
    match alg
        .koszul_dual()
        .graded(DEFAULT_PROBE_DEGREE)
        .vanishing_degree()
    {
        Some(v) => (2 * v + 2, false),
        None => (FALLBACK_M_MAX, true),
    }
}
