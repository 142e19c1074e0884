use serde::{Deserialize, Serialize};

use super::HomologyError;
use crate::exec::Execution;
use crate::linear::{Matrix, SparseVec};
use crate::quadratic::QuadraticAlgebra;

/// One slice of `L(A)`: the spaces `A!_n ⊗ A_{n+c}` for fixed `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LComplexSlice {
    /// Internal degree shift `c = j − n`; `δ` preserves it.
    pub c: i64,
    pub n_start: usize,
    /// `dims[k]` is the dimension at `n = n_start + k`.
    pub dims: Vec<usize>,
    /// `None` where the next space lies beyond the truncation of `A`.
    pub cohomology: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LEntry {
    pub c: i64,
    pub n: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LComplexTable {
    pub m_max: usize,
    pub slices: Vec<LComplexSlice>,
}

impl LComplexTable {
    /// Every computed nonzero `H^n` with its slice.
    pub fn nonzero_entries(&self) -> Vec<LEntry> {
        self.slices
            .iter()
            .flat_map(|s| {
                s.cohomology
                    .iter()
                    .enumerate()
                    .filter_map(move |(k, h)| match h {
                        Some(dim) if *dim > 0 => Some(LEntry {
                            c: s.c,
                            n: s.n_start + k,
                            dim: *dim,
                        }),
                        _ => None,
                    })
            })
            .collect()
    }

    /// Whether the computed cohomology is a single `K` at `n = D`, in the
    /// slice `c = −D` (so the `A` factor is `A_0`).
    pub fn has_delta_shape(&self, global_dimension: usize) -> bool {
        let d = global_dimension as i64;
        self.nonzero_entries()
            == vec![LEntry {
                c: -d,
                n: global_dimension,
                dim: 1,
            }]
    }
}

/// Cohomology of `δ(α⊗a) = Σ_λ ω_λα ⊗ x_λa` on `A!_n ⊗ A_j`, for
/// `j, n ≤ m_max`, sliced by `c = j − n`.
pub fn l_complex_cohomology(
    alg: &QuadraticAlgebra,
    m_max: usize,
    exec: Execution,
) -> Result<LComplexTable, HomologyError> {
    let d = alg.d();
    let a = alg.graded(m_max);
    let b = alg.koszul_dual().graded(m_max + 1);
    let a_left: Vec<Vec<SparseVec>> = (0..m_max)
        .map(|j| a.left_mul_table(j))
        .collect::<Result<_, _>>()?;
    let b_left: Vec<Vec<SparseVec>> = (0..=m_max)
        .map(|n| b.left_mul_table(n))
        .collect::<Result<_, _>>()?;
    let a_dim = |j: usize| a.dim(j).expect("within truncation");
    let b_dim = |n: usize| b.dim(n).expect("within truncation");

    let delta = |n: usize, j: usize| -> Matrix {
        let (bs, aj) = (b_dim(n), a_dim(j));
        let (bt, at) = (b_dim(n + 1), a_dim(j + 1));
        let mut m = Matrix::zeros(bt * at, bs * aj);
        for s in 0..bs {
            for t in 0..aj {
                for lambda in 0..d {
                    for (s2, y) in &b_left[n][s * d + lambda] {
                        for (t2, z) in &a_left[j][t * d + lambda] {
                            m.add_to(s2 * at + t2, s * aj + t, &(y * z));
                        }
                    }
                }
            }
        }
        m
    };

    let m = m_max as i64;
    let shifts: Vec<i64> = (-m..=m).collect();
    let slices = exec.try_map(
        shifts,
        |c| -> Result<Option<LComplexSlice>, HomologyError> {
            let n_lo = (-c).max(0) as usize;
            let n_hi = (m_max as i64).min(m - c) as usize;
            if n_lo > n_hi {
                return Ok(None);
            }
            let j_of = |n: usize| (n as i64 + c) as usize;
            let dims: Vec<usize> = (n_lo..=n_hi).map(|n| b_dim(n) * a_dim(j_of(n))).collect();
            if dims.iter().all(|&x| x == 0) {
                return Ok(None);
            }
            let maps: Vec<Matrix> = (n_lo..n_hi).map(|n| delta(n, j_of(n))).collect();
            for (k, pair) in maps.windows(2).enumerate() {
                let comp = pair[1]
                    .mul(&pair[0])
                    .map_err(|e| HomologyError::Inconsistency(e.to_string()))?;
                if !comp.is_zero() {
                    return Err(HomologyError::Inconsistency(format!(
                        "δ∘δ ≠ 0 on the L complex at c = {c}, n = {}",
                        n_lo + k
                    )));
                }
            }
            let ranks: Vec<usize> = maps.iter().map(Matrix::rank).collect();
            // The last space is exact only if nothing follows it: A!_{n_hi+1} = 0.
            let last_closed = b_dim(n_hi + 1) == 0;
            let cohomology = (0..dims.len())
                .map(|k| {
                    let incoming = if k == 0 { 0 } else { ranks[k - 1] };
                    if k + 1 == dims.len() {
                        last_closed.then(|| dims[k] - incoming)
                    } else {
                        Some(dims[k] - ranks[k] - incoming)
                    }
                })
                .collect();
            Ok(Some(LComplexSlice {
                c,
                n_start: n_lo,
                dims,
                cohomology,
            }))
        },
    )?;
    Ok(LComplexTable {
        m_max,
        slices: slices.into_iter().flatten().collect(),
    })
}
