use num_traits::Zero;

use super::Scalar;

/// Sorted `(index, value)` pairs with no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `acc += coef * v` for a dense accumulator and a sparse vector.
pub fn add_scaled_sparse(acc: &mut [Scalar], coef: &Scalar, v: &[(usize, Scalar)]) {
    if coef.is_zero() {
        return;
    }
    for (i, x) in v {
        acc[*i] += coef * x;
    }
}

pub(crate) fn to_sparse(dense: &[Scalar]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}
