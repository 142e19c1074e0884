use num_traits::Zero;

use super::{isqrt, tensor_dim};
use crate::linear::{zero_vec, EchelonBuilder, Matrix, Scalar, Subspace};

/// `K_n = ∩_k E^⊗k ⊗ R ⊗ E^⊗(n-k-2)`, with `K_0 = K` and `K_1 = E`.
pub fn koszul_subspace(relations: &Subspace, n: usize) -> Subspace {
    let d = isqrt(relations.ambient_dim()).expect("relation space lives in E⊗E");
    koszul_subspaces(relations, d, n)
        .pop()
        .expect("n+1 subspaces")
}

/// `K_0, …, K_{n_max}`.
///
/// Uses `K_n = (K_{n-1} ⊗ E) ∩ (E^⊗(n-2) ⊗ R)`: an element of `K_{n-1} ⊗ E` is
/// `Σ c_{iλ} k_i ⊗ x_λ`, and membership in `E^⊗(n-2) ⊗ R` is the vanishing of
/// every `R^⊥` functional on the last two factors, for every prefix. This keeps
/// the unknown count at `dim K_{n-1} · d` instead of `d^n`.
pub fn koszul_subspaces(relations: &Subspace, d: usize, n_max: usize) -> Vec<Subspace> {
    let mut out = vec![Subspace::full(1)];
    if n_max >= 1 {
        out.push(Subspace::full(d));
    }
    let perp: Vec<Vec<Scalar>> = relations.annihilator().basis().to_rows();
    for n in 2..=n_max {
        let prev = &out[n - 1];
        let next = if prev.is_zero() {
            Subspace::zero(tensor_dim(d, n))
        } else {
            extend(prev, &perp, d, n)
        };
        out.push(next);
    }
    out
}

fn extend(prev: &Subspace, perp: &[Vec<Scalar>], d: usize, n: usize) -> Subspace {
    let k = prev.dim();
    let unknowns = k * d;
    let mut constraints = EchelonBuilder::new(unknowns);
    'fill: for u in 0..tensor_dim(d, n - 2) {
        let block_zero = (0..k).all(|i| (0..d).all(|a| prev.basis_vector(i)[u * d + a].is_zero()));
        if block_zero {
            continue;
        }
        for rho in perp {
            if constraints.rank() == unknowns {
                break 'fill;
            }
            let mut row = zero_vec(unknowns);
            let mut nonzero = false;
            for i in 0..k {
                let ki = prev.basis_vector(i);
                for a in 0..d {
                    let kv = &ki[u * d + a];
                    if kv.is_zero() {
                        continue;
                    }
                    for b in 0..d {
                        let r = &rho[a * d + b];
                        if !r.is_zero() {
                            row[i * d + b] += r * kv;
                            nonzero = true;
                        }
                    }
                }
            }
            if nonzero {
                constraints.insert(row).expect("fixed width");
            }
        }
    }
    let solutions = constraints.into_subspace().annihilator();
    let ambient = tensor_dim(d, n);
    let vectors: Vec<Vec<Scalar>> = (0..solutions.dim())
        .map(|s| {
            let c = solutions.basis_vector(s);
            let mut v = zero_vec(ambient);
            for i in 0..k {
                let ki = prev.basis_vector(i);
                for (w, kw) in ki.iter().enumerate() {
                    if kw.is_zero() {
                        continue;
                    }
                    for b in 0..d {
                        let cb = &c[i * d + b];
                        if !cb.is_zero() {
                            v[w * d + b] += cb * kw;
                        }
                    }
                }
            }
            v
        })
        .collect();
    // `e_(i,b) ↦ k_i ⊗ x_b` sends pivot `(i,b)` to column `pivot(k_i)·d + b`,
    // increasing in `(i,b)` and zero on the other images' pivots, so an RREF
    // basis of the solutions maps to an RREF basis of `K_n`.
    let pivots = solutions
        .pivots()
        .iter()
        .map(|&q| prev.pivots()[q / d] * d + q % d)
        .collect();
    let basis = Matrix::from_rows(vectors, ambient).expect("vectors have the ambient width");
    Subspace::from_rref_parts(ambient, basis, pivots)
}
