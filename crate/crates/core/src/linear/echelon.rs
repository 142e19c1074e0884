use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{LinearError, Matrix, Scalar, Subspace};

/// Incremental row reduction for streams of spanning vectors.
///
/// Rows are kept in echelon form keyed by pivot column; `into_subspace`
/// back-substitutes to the canonical reduced form.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ambient_dim: usize,
    rows: BTreeMap<usize, (Vec<Scalar>, Vec<usize>)>,
}

impl EchelonBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBuilder {
            ambient_dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Reduces `v` against the current rows; keeps it if anything survives.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> Result<bool, LinearError> {
        if v.len() != self.ambient_dim {
            return Err(LinearError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        for (&p, (row, support)) in &self.rows {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for &j in support {
                v[j] -= &f * &row[j];
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[pivot].recip();
        if !inv.is_one() {
            for x in v[pivot..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support = (pivot..self.ambient_dim)
            .filter(|&j| !v[j].is_zero())
            .collect();
        self.rows.insert(pivot, (v, support));
        Ok(true)
    }

    /// Canonical reduced row-echelon subspace of everything inserted so far.
    pub fn into_subspace(self) -> Subspace {
        let n = self.ambient_dim;
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut reduced: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for (p, (mut row, _)) in self.rows.into_iter().rev() {
            for (&q, other) in &reduced {
                if row[q].is_zero() {
                    continue;
                }
                let f = row[q].clone();
                for j in q..n {
                    if !other[j].is_zero() {
                        row[j] -= &f * &other[j];
                    }
                }
            }
            reduced.insert(p, row);
        }
        let rows: Vec<Vec<Scalar>> = reduced.into_values().collect();
        let basis = Matrix::from_rows(rows, n).expect("rows keep their width");
        Subspace::from_rref_parts(n, basis, pivots)
    }
}
