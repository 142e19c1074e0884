use num_traits::{One, Zero};

use super::{tensor_dim, AlgebraError, QuadraticAlgebra, Word};
use crate::linear::{add_scaled_sparse, zero_vec, EchelonBuilder, Scalar, SparseVec, Subspace};

/// `A_n` with its standard-word basis and the class of every word of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponent {
    degree: usize,
    d: usize,
    standard_words: Vec<Word>,
    /// `reduction[rank(w)]` is the class of the word `w` on the standard words.
    reduction: Vec<SparseVec>,
}

impl GradedComponent {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.standard_words.len()
    }

    pub fn standard_words(&self) -> &[Word] {
        &self.standard_words
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.standard_words.binary_search(w).ok()
    }

    pub fn word_class(&self, rank: usize) -> &SparseVec {
        &self.reduction[rank]
    }

    /// Image of a vector of `E^⊗n` in `A_n`.
    pub fn normal_form(&self, v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        let expected = tensor_dim(self.d, self.degree);
        if v.len() != expected {
            return Err(crate::linear::LinearError::DimensionMismatch {
                expected,
                found: v.len(),
            }
            .into());
        }
        let mut out = zero_vec(self.dim());
        for (rank, c) in v.iter().enumerate() {
            add_scaled_sparse(&mut out, c, &self.reduction[rank]);
        }
        Ok(out)
    }

    /// Standard-word coordinates lifted back to `E^⊗n`.
    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(tensor_dim(self.d, self.degree));
        for (c, w) in v.iter().zip(&self.standard_words) {
            out[w.rank(self.d)] = c.clone();
        }
        out
    }
}

/// Truncation `A_0 ⊕ … ⊕ A_max` of a quadratic algebra.
///
/// Degree `n` is computed as `(A_{n-1} ⊗ E) / (A_{n-2} ⊗ R)`: ambient
/// coordinates are pairs (standard word of `A_{n-1}`, letter) in lex order,
/// so the non-pivot columns are exactly the standard words of `A_n`. The only
/// stored data is right multiplication by a generator, `A_k × E → A_{k+1}`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    d: usize,
    words: Vec<Vec<Word>>,
    /// `right_mul[k][s*d + x]` is the class of `word_s · x_x` in `A_{k+1}`.
    right_mul: Vec<Vec<SparseVec>>,
}

impl GradedAlgebra {
    pub fn compute(alg: &QuadraticAlgebra, max_degree: usize) -> Self {
        let d = alg.d();
        let relations: Vec<SparseVec> = (0..alg.relations().dim())
            .map(|i| crate::linear::to_sparse(alg.relations().basis_vector(i)))
            .collect();
        let mut words = vec![vec![Word::empty()]];
        let mut right_mul: Vec<Vec<SparseVec>> = Vec::new();
        if max_degree >= 1 {
            words.push((0..d).map(|x| Word(vec![x])).collect());
            right_mul.push((0..d).map(|x| vec![(x, Scalar::one())]).collect());
        }
        for n in 2..=max_degree {
            let ambient = words[n - 1].len() * d;
            let mut builder = EchelonBuilder::new(ambient);
            'fill: for iu in 0..words[n - 2].len() {
                for r in &relations {
                    if builder.rank() == ambient {
                        break 'fill;
                    }
                    let mut v = zero_vec(ambient);
                    for (ab, c) in r {
                        let (a, b) = (ab / d, ab % d);
                        for (i, y) in &right_mul[n - 2][iu * d + a] {
                            v[i * d + b] += c * y;
                        }
                    }
                    builder.insert(v).expect("ambient width is fixed");
                }
            }
            let (std_words, table) = reduction_table(&builder.into_subspace(), &words[n - 1], d);
            words.push(std_words);
            right_mul.push(table);
        }
        GradedAlgebra {
            d,
            words,
            right_mul,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn max_degree(&self) -> usize {
        self.words.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    pub fn dim(&self, n: usize) -> Option<usize> {
        self.words.get(n).map(Vec::len)
    }

    pub fn standard_words(&self, n: usize) -> Option<&[Word]> {
        self.words.get(n).map(Vec::as_slice)
    }

    /// First degree with `A_n = 0`, if one occurs within the truncation.
    pub fn vanishing_degree(&self) -> Option<usize> {
        self.words.iter().position(Vec::is_empty)
    }

    /// Last nonzero degree when the algebra is finite within the truncation.
    pub fn top_degree(&self) -> Option<usize> {
        self.vanishing_degree().map(|n| n - 1)
    }

    fn check(&self, n: usize) -> Result<(), AlgebraError> {
        if n > self.max_degree() {
            return Err(AlgebraError::BeyondTruncation {
                degree: n,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    fn check_len(&self, n: usize, v: &[Scalar]) -> Result<(), AlgebraError> {
        self.check(n)?;
        if v.len() != self.words[n].len() {
            return Err(crate::linear::LinearError::DimensionMismatch {
                expected: self.words[n].len(),
                found: v.len(),
            }
            .into());
        }
        Ok(())
    }

    /// Class of `word_s · x` in `A_{k+1}` for the `s`-th standard word of `A_k`.
    pub fn right_mul_row(&self, k: usize, s: usize, x: usize) -> &SparseVec {
        &self.right_mul[k][s * self.d + x]
    }

    /// `v · x` for `v ∈ A_k`.
    pub fn right_mul_generator(
        &self,
        k: usize,
        v: &[Scalar],
        x: usize,
    ) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(k, v)?;
        self.check(k + 1)?;
        let mut out = zero_vec(self.words[k + 1].len());
        for (s, c) in v.iter().enumerate() {
            add_scaled_sparse(&mut out, c, &self.right_mul[k][s * self.d + x]);
        }
        Ok(out)
    }

    fn right_mul_sparse(&self, k: usize, v: &SparseVec, x: usize) -> SparseVec {
        let mut out = zero_vec(self.words[k + 1].len());
        for (s, c) in v {
            add_scaled_sparse(&mut out, c, &self.right_mul[k][s * self.d + x]);
        }
        crate::linear::to_sparse(&out)
    }

    fn fold_letters(&self, start_degree: usize, start: SparseVec, letters: &[usize]) -> SparseVec {
        letters.iter().enumerate().fold(start, |acc, (i, &x)| {
            self.right_mul_sparse(start_degree + i, &acc, x)
        })
    }

    /// Class of a word in `A_{len}`.
    pub fn word_class(&self, letters: &[usize]) -> Result<Vec<Scalar>, AlgebraError> {
        let n = letters.len();
        self.check(n)?;
        let class = self.fold_letters(0, vec![(0, Scalar::one())], letters);
        let mut out = zero_vec(self.words[n].len());
        add_scaled_sparse(&mut out, &Scalar::one(), &class);
        Ok(out)
    }

    /// The component of degree `n` with the class of every word of length `n`.
    pub fn component(&self, n: usize) -> Result<GradedComponent, AlgebraError> {
        self.check(n)?;
        let mut level: Vec<SparseVec> = vec![vec![(0, Scalar::one())]];
        for k in 0..n {
            level = level
                .iter()
                .flat_map(|class| (0..self.d).map(move |x| (class, x)))
                .map(|(class, x)| self.right_mul_sparse(k, class, x))
                .collect();
        }
        Ok(GradedComponent {
            degree: n,
            d: self.d,
            standard_words: self.words[n].clone(),
            reduction: level,
        })
    }

    /// Image of `v ∈ E^⊗n` in `A_n`.
    pub fn normal_form(&self, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check(n)?;
        let expected = tensor_dim(self.d, n);
        if v.len() != expected {
            return Err(crate::linear::LinearError::DimensionMismatch {
                expected,
                found: v.len(),
            }
            .into());
        }
        let mut out = zero_vec(self.words[n].len());
        for (rank, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let letters = super::word_unrank(rank, self.d, n);
            let class = self.fold_letters(0, vec![(0, Scalar::one())], &letters);
            add_scaled_sparse(&mut out, c, &class);
        }
        Ok(out)
    }

    /// Product of `a ∈ A_m` and `b ∈ A_n`.
    pub fn multiply(
        &self,
        m: usize,
        a: &[Scalar],
        n: usize,
        b: &[Scalar],
    ) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(m, a)?;
        self.check_len(n, b)?;
        self.check(m + n)?;
        let start = crate::linear::to_sparse(a);
        let mut out = zero_vec(self.words[m + n].len());
        for (t, coef) in b.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let class = self.fold_letters(m, start.clone(), self.words[n][t].letters());
            add_scaled_sparse(&mut out, coef, &class);
        }
        Ok(out)
    }

    /// `left_mul[s*d + x]` is the class of `x_x · word_s` in `A_{k+1}`.
    pub fn left_mul_table(&self, k: usize) -> Result<Vec<SparseVec>, AlgebraError> {
        self.check(k + 1)?;
        let mut table = Vec::with_capacity(self.words[k].len() * self.d);
        for w in &self.words[k] {
            for x in 0..self.d {
                let start = vec![(x, Scalar::one())];
                table.push(self.fold_letters(1, start, w.letters()));
            }
        }
        Ok(table)
    }

    /// `x · v` for `v ∈ A_k`.
    pub fn left_mul_generator(
        &self,
        k: usize,
        v: &[Scalar],
        x: usize,
    ) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(k, v)?;
        self.check(k + 1)?;
        let mut out = zero_vec(self.words[k + 1].len());
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let class = self.fold_letters(1, vec![(x, Scalar::one())], self.words[k][s].letters());
            add_scaled_sparse(&mut out, c, &class);
        }
        Ok(out)
    }

    /// Unit vector of the `i`-th standard word of `A_n`.
    pub fn basis_class(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero_vec(self.words[n].len());
        v[i] = Scalar::one();
        v
    }
}

/// Standard words (non-pivots) and the class of every ambient coordinate.
fn reduction_table(rel: &Subspace, prev: &[Word], d: usize) -> (Vec<Word>, Vec<SparseVec>) {
    let ambient = rel.ambient_dim();
    let non_pivots = rel.non_pivots();
    let mut position = vec![None; ambient];
    for (pos, &c) in non_pivots.iter().enumerate() {
        position[c] = Some(pos);
    }
    let std_words = non_pivots
        .iter()
        .map(|&c| prev[c / d].pushed(c % d))
        .collect();
    let mut table: Vec<SparseVec> = position
        .iter()
        .map(|p| p.map(|pos| vec![(pos, Scalar::one())]).unwrap_or_default())
        .collect();
    for (i, &p) in rel.pivots().iter().enumerate() {
        table[p] = rel
            .basis_vector(i)
            .iter()
            .enumerate()
            .filter(|(c, x)| !x.is_zero() && position[*c].is_some())
            .map(|(c, x)| (position[c].expect("filtered"), -x.clone()))
            .collect();
    }
    (std_words, table)
}
