use num_traits::{One, Zero};

use super::matrix::gauss_jordan;
use super::{LinearError, Matrix, Scalar};

/// A linear subspace of `Q^ambient_dim`, stored as its canonical basis:
/// reduced row-echelon form with leftmost pivots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub(crate) fn from_rref_parts(ambient_dim: usize, basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.nrows(), pivots.len());
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    /// Canonical subspace spanned by `rows`.
    pub fn span(rows: &[Vec<Scalar>], ambient_dim: usize) -> Result<Self, LinearError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient_dim) {
            return Err(LinearError::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        let mut work = rows.to_vec();
        let pivots = gauss_jordan(&mut work, ambient_dim);
        let basis = Matrix::from_rows(work, ambient_dim)?;
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Columns that are not pivots, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient_dim - self.dim());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.ambient_dim {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Coordinates of `v` on the canonical basis, or `None` if `v` is not in
    /// the subspace. On an RREF basis the coordinates are the pivot entries.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(i).iter().enumerate() {
                if !x.is_zero() {
                    residual[j] -= c * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinearError> {
        self.check_ambient(other)?;
        let mut rows = self.basis.to_rows();
        rows.extend(other.basis.to_rows());
        Subspace::span(&rows, self.ambient_dim)
    }

    /// `self ∩ other`, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinearError> {
        self.check_ambient(other)?;
        self.annihilator()
            .sum(&other.annihilator())
            .map(|s| s.annihilator())
    }

    /// The annihilator in the dual space, written in the same coordinates
    /// (the pairing is the coordinate dot product).
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// Image of the map `x ↦ m·x` restricted to this subspace, written in the
    /// codomain of `m`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, LinearError> {
        let rows = (0..self.dim())
            .map(|i| m.mul_vec(self.basis.row(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::span(&rows, m.nrows())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinearError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinearError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

/// Canonical subspace spanned by `rows` (Gauss-Jordan, leftmost pivots).
pub fn rref_canonicalize(
    rows: &[Vec<Scalar>],
    ambient_dim: usize,
) -> Result<Subspace, LinearError> {
    Subspace::span(rows, ambient_dim)
}

/// `{ v : m·v = 0 }`.
pub fn kernel(m: &Matrix) -> Subspace {
    let cols = m.ncols();
    let (rref, pivots) = m.rref();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            let x = rref.get(i, f);
            if !x.is_zero() {
                v[p] = -x.clone();
            }
        }
        vectors.push(v);
    }
    Subspace::span(&vectors, cols).expect("kernel vectors have the column count")
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, LinearError> {
    a.intersect(b)
}

pub fn annihilator(s: &Subspace) -> Subspace {
    s.annihilator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{dot, ints};

    fn e(i: usize, n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    }

    #[test]
    fn canonicalize_examples() {
        let s = rref_canonicalize(&[ints(&[2, 4]), ints(&[1, 2])], 2).unwrap();
        assert_eq!(s.basis(), &Matrix::from_i64(&[&[1, 2]]));
        assert_eq!(s.pivots(), &[0]);

        let z = rref_canonicalize(&[], 3).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(z.ambient_dim(), 3);

        let s = rref_canonicalize(&[ints(&[0, 1]), ints(&[1, 0])], 2).unwrap();
        assert_eq!(s.basis(), &Matrix::identity(2));
    }

    #[test]
    fn canonicalize_rejects_length_mismatch() {
        let err = rref_canonicalize(&[ints(&[1, 2, 3])], 2).unwrap_err();
        assert_eq!(
            err,
            LinearError::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(2)).is_zero());
        assert_eq!(kernel(&Matrix::zeros(2, 3)), Subspace::full(3));
        let k = kernel(&Matrix::from_i64(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        // Back-substitution: x0 = -x1, x2 free.
        assert!(k.contains(&ints(&[1, -1, 0])));
        assert!(k.contains(&ints(&[0, 0, 1])));
        assert!(!k.contains(&ints(&[1, 1, 0])));
    }

    #[test]
    fn intersection_examples() {
        let a = Subspace::span(&[e(0, 3), e(1, 3)], 3).unwrap();
        let b = Subspace::span(&[e(1, 3), e(2, 3)], 3).unwrap();
        assert_eq!(
            a.intersect(&b).unwrap(),
            Subspace::span(&[e(1, 3)], 3).unwrap()
        );
        assert_eq!(a.intersect(&a).unwrap(), a);
        let x = Subspace::span(&[e(0, 3)], 3).unwrap();
        let y = Subspace::span(&[e(1, 3)], 3).unwrap();
        assert!(x.intersect(&y).unwrap().is_zero());
        assert!(a.intersect(&Subspace::full(2)).is_err());
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(Subspace::zero(4).annihilator(), Subspace::full(4));
        assert!(Subspace::full(4).annihilator().is_zero());
        let s = Subspace::span(&[ints(&[1, 1])], 2).unwrap();
        let ann = s.annihilator();
        assert_eq!(ann, Subspace::span(&[ints(&[1, -1])], 2).unwrap());
        assert_eq!(dot(ann.basis_vector(0), &ints(&[1, 1])), Scalar::zero());
    }

    #[test]
    fn coordinates_reassemble() {
        let s = Subspace::span(&[ints(&[1, 2, 0, 1]), ints(&[0, 1, 1, 1])], 4).unwrap();
        let v = ints(&[2, 1, -3, -1]);
        let c = s.coordinates(&v).expect("in span");
        let mut back = vec![Scalar::zero(); 4];
        for (i, ci) in c.iter().enumerate() {
            for (j, x) in s.basis_vector(i).iter().enumerate() {
                back[j] += ci * x;
            }
        }
        assert_eq!(back, v);
        assert!(s.coordinates(&ints(&[0, 0, 0, 1])).is_none());
    }

    #[test]
    fn non_pivots_complement_pivots() {
        let s = Subspace::span(&[ints(&[0, 1, 0, 2]), ints(&[0, 0, 1, 1])], 4).unwrap();
        assert_eq!(s.pivots(), &[1, 2]);
        assert_eq!(s.non_pivots(), vec![0, 3]);
    }
}
