//! Oracles built directly from structure constants, independent of the
//! quadratic-algebra machinery under test.
#![allow(dead_code)]

use koszul_core::homology::{koszulity_certificate, KoszulComplex};
use koszul_core::linear::{int, zero_vec, Scalar};
use koszul_core::quadratic::Word;
use koszul_core::{Execution, Matrix, QuadraticAlgebra, Subspace};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `bracket[i][j][k]`: coefficient of `x_k` in `[x_i, x_j]`.
pub type Bracket = Vec<Vec<Vec<Scalar>>>;

pub fn bracket_from(d: usize, entries: &[(usize, usize, &[i64])]) -> Bracket {
    let mut b = vec![vec![zero_vec(d); d]; d];
    for (i, j, v) in entries {
        b[*i][*j] = v.iter().map(|&x| int(x)).collect();
        b[*j][*i] = v.iter().map(|&x| int(-x)).collect();
    }
    b
}

pub fn heisenberg_bracket() -> Bracket {
    bracket_from(3, &[(0, 1, &[0, 0, 1])])
}

/// Basis order `e, f, h`.
pub fn sl2_bracket() -> Bracket {
    bracket_from(
        3,
        &[(0, 1, &[0, 0, 1]), (2, 0, &[2, 0, 0]), (2, 1, &[0, -2, 0])],
    )
}

fn bracket_vec(b: &Bracket, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let d = u.len();
    let mut out = zero_vec(d);
    for i in 0..d {
        for j in 0..d {
            let c = &u[i] * &v[j];
            if c.is_zero() {
                continue;
            }
            for k in 0..d {
                out[k] += &c * &b[i][j][k];
            }
        }
    }
    out
}

fn unit(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(d);
    v[i] = Scalar::one();
    v
}

/// `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0` for all triples.
pub fn satisfies_jacobi(b: &Bracket) -> bool {
    let d = b.len();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (xi, xj, xk) = (unit(d, i), unit(d, j), unit(d, k));
                let t1 = bracket_vec(b, &bracket_vec(b, &xi, &xj), &xk);
                let t2 = bracket_vec(b, &bracket_vec(b, &xj, &xk), &xi);
                let t3 = bracket_vec(b, &bracket_vec(b, &xk, &xi), &xj);
                if t1
                    .iter()
                    .zip(&t2)
                    .zip(&t3)
                    .any(|((a, b), c)| !(a + b + c).is_zero())
                {
                    return false;
                }
            }
        }
    }
    true
}

/// First antisymmetric bracket on `K^3` with entries in `{-1, 0, 1}` (in a
/// fixed enumeration order) that violates the Jacobi identity.
pub fn first_non_jacobi_bracket() -> Bracket {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for code in 0..3usize.pow(9) {
        let mut c = code;
        let mut entries: Vec<(usize, usize, Vec<i64>)> = Vec::new();
        for &(i, j) in &pairs {
            let v: Vec<i64> = (0..3)
                .map(|_| {
                    let x = (c % 3) as i64 - 1;
                    c /= 3;
                    x
                })
                .collect();
            entries.push((i, j, v));
        }
        let refs: Vec<(usize, usize, &[i64])> = entries
            .iter()
            .map(|(i, j, v)| (*i, *j, v.as_slice()))
            .collect();
        let b = bracket_from(3, &refs);
        if !satisfies_jacobi(&b) {
            return b;
        }
    }
    unreachable!("some bracket with small entries violates Jacobi")
}

/// `table[i][j][k]`: coefficient of `x_k` in `x_i x_j`.
pub fn is_associative(table: &[Vec<Vec<Scalar>>]) -> bool {
    let d = table.len();
    let mul = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_vec(d);
        for i in 0..d {
            for j in 0..d {
                let c = &u[i] * &v[j];
                for k in 0..d {
                    out[k] += &c * &table[i][j][k];
                }
            }
        }
        out
    };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (xi, xj, xk) = (unit(d, i), unit(d, j), unit(d, k));
                if mul(&mul(&xi, &xj), &xk) != mul(&xi, &mul(&xj, &xk)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Product table of a 2-dimensional algebra decoded from `code` with
/// entries in `{0, 1}`.
pub fn binary_table(code: u32) -> Vec<Vec<Vec<Scalar>>> {
    let mut t = vec![vec![zero_vec(2); 2]; 2];
    for bit in 0..8 {
        if code >> bit & 1 == 1 {
            t[bit / 4][(bit / 2) % 2][bit % 2] = Scalar::one();
        }
    }
    t
}

/// Sign of the permutation sorting `letters`, or 0 on a repeated letter.
pub fn sort_sign(letters: &[usize]) -> i64 {
    let mut sign = 1;
    for a in 0..letters.len() {
        for b in a + 1..letters.len() {
            if letters[a] == letters[b] {
                return 0;
            }
            if letters[a] > letters[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Increasing `n`-subsets of `0..d` in lex order.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(i + 1, d, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, n, &mut Vec::new(), &mut out);
    out
}

/// `e^I(x_{a1}, …, x_{an})` for the determinant convention.
fn eval_form(form: &[usize], args: &[usize]) -> i64 {
    let mut sorted = args.to_vec();
    sorted.sort_unstable();
    if sorted != form {
        return 0;
    }
    sort_sign(args)
}

/// Classical cochain differential of `Λ^n g* → Λ^{n+1} g*` (trivial
/// coefficients), `(dω)(x_0,…,x_n) = Σ_{a<b} (−1)^{a+b} ω([x_a,x_b], x_0, …)`,
/// with rows and columns indexed by [`subsets`].
pub fn classical_ce(b: &Bracket, n: usize) -> Vec<Vec<Scalar>> {
    let d = b.len();
    let cols = subsets(d, n);
    let rows = subsets(d, n + 1);
    let mut m = vec![zero_vec(cols.len()); rows.len()];
    for (r, j) in rows.iter().enumerate() {
        for (c, form) in cols.iter().enumerate() {
            let mut acc = Scalar::zero();
            for a in 0..j.len() {
                for bb in a + 1..j.len() {
                    let rest: Vec<usize> = j
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != a && *k != bb)
                        .map(|(_, &x)| x)
                        .collect();
                    for (k, coef) in b[j[a]][j[bb]].iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let mut args = vec![k];
                        args.extend(&rest);
                        let v = eval_form(form, &args);
                        if v != 0 {
                            let sign = if (a + bb) % 2 == 0 { 1 } else { -1 };
                            acc += coef * int(sign * v);
                        }
                    }
                }
            }
            m[r][c] = acc;
        }
    }
    m
}

/// The classical matrix rewritten on the standard words of `A!`, where a word
/// `w` stands for `sign(w) · e^{sorted(w)}` (so `e^i ↔ ω_i` multiplicatively).
pub fn classical_ce_on_words(b: &Bracket, n: usize, from: &[Word], to: &[Word]) -> Matrix {
    let d = b.len();
    let classical = classical_ce(b, n);
    let index = |w: &Word, size: usize| -> (usize, i64) {
        let mut sorted = w.letters().to_vec();
        sorted.sort_unstable();
        let pos = subsets(d, size)
            .iter()
            .position(|s| *s == sorted)
            .expect("standard words of ∧ are distinct letters");
        (pos, sort_sign(w.letters()))
    };
    let mut m = Matrix::zeros(to.len(), from.len());
    for (t, wt) in to.iter().enumerate() {
        let (rt, st) = index(wt, n + 1);
        for (s, ws) in from.iter().enumerate() {
            let (cs, ss) = index(ws, n);
            m.set(t, s, &classical[rt][cs] * int(st * ss));
        }
    }
    m
}

/// Seeded random quadratic algebras with `d ≤ 3`, `dim R ≤ 4`, entries in `[-2, 2]`.
pub fn random_algebras(count: usize, seed: u64) -> Vec<QuadraticAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let r = rng.gen_range(0..=4.min(d * d));
            let rows: Vec<Vec<Scalar>> = (0..r)
                .map(|_| (0..d * d).map(|_| int(rng.gen_range(-2..=2))).collect())
                .collect();
            QuadraticAlgebra::with_default_names(d, &rows).expect("rows have width d*d")
        })
        .collect()
}

/// `E^⊗k ⊗ R ⊗ E^⊗(n−k−2)` as an explicit span.
fn shifted_relations(alg: &QuadraticAlgebra, k: usize, n: usize) -> Subspace {
    let d = alg.d();
    let r = alg.relations();
    let suffix_len = d.pow((n - k - 2) as u32);
    let ambient = d.pow(n as u32);
    let mut rows = Vec::new();
    for prefix in 0..d.pow(k as u32) {
        for suffix in 0..suffix_len {
            for i in 0..r.dim() {
                let mut v = zero_vec(ambient);
                for (ab, c) in r.basis_vector(i).iter().enumerate() {
                    v[(prefix * d * d + ab) * suffix_len + suffix] = c.clone();
                }
                rows.push(v);
            }
        }
    }
    Subspace::span(&rows, ambient).expect("rows have the ambient width")
}

/// `K_n` as the literal intersection of all shifted copies of `R`.
pub fn koszul_by_intersection(alg: &QuadraticAlgebra, n: usize) -> Subspace {
    let mut acc = Subspace::full(alg.d().pow(n as u32));
    for k in 0..=n - 2 {
        acc = acc
            .intersect(&shifted_relations(alg, k, n))
            .expect("same ambient");
    }
    acc
}

/// `Σ (−1)^n v[n]`.
pub fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(n, &x)| if n % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Random invertible recombination of the rows of `basis`.
pub fn respan(basis: &Matrix, seed: u64) -> Vec<Vec<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = basis.to_rows();
    let k = rows.len();
    // Unit lower-triangular times unit upper-triangular: invertible by construction.
    let mut lower = vec![zero_vec(k); k];
    let mut upper = vec![zero_vec(k); k];
    for (i, (lo, up)) in lower.iter_mut().zip(upper.iter_mut()).enumerate() {
        lo[i] = Scalar::one();
        up[i] = Scalar::one();
        for x in &mut lo[..i] {
            *x = int(rng.gen_range(-3..=3));
        }
        for x in &mut up[i + 1..] {
            *x = int(rng.gen_range(-3..=3));
        }
    }
    let width = basis.ncols();
    (0..k)
        .map(|i| {
            let mut out = zero_vec(width);
            for a in 0..k {
                for b in 0..k {
                    let c = &lower[i][a] * &upper[a][b];
                    if c.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(&rows[b]) {
                        *o += &c * x;
                    }
                }
            }
            out
        })
        .collect()
}

/// Every structural invariant of a quadratic algebra up to total degree `m_max`.
pub fn check_invariants(alg: &QuadraticAlgebra, m_max: usize) -> Result<(), String> {
    let d = alg.d();
    let complex = KoszulComplex::new(alg, m_max);
    for m in 0..=m_max {
        let slice = complex.slice(m).map_err(|e| e.to_string())?;
        for n in 1..m {
            let dd = slice.boundaries[n - 1]
                .mul(&slice.boundaries[n])
                .map_err(|e| e.to_string())?;
            if !dd.is_zero() {
                return Err(format!("d_{n} d_{} ≠ 0 in degree {m}", n + 1));
            }
        }
    }

    let dual = alg.koszul_dual();
    for n in 2..=m_max {
        let k = alg.koszul_subspace(n);
        let span = dual.relation_span(n).map_err(|e| e.to_string())?;
        if k.dim() != d.pow(n as u32) - span.dim() {
            return Err(format!(
                "dim K_{n} = {} but d^n − dim span = {}",
                k.dim(),
                d.pow(n as u32) - span.dim()
            ));
        }
        if n <= 4 && k != koszul_by_intersection(alg, n) {
            return Err(format!("K_{n} differs from the explicit intersection"));
        }
    }

    if dual.koszul_dual().relations() != alg.relations() {
        return Err("(A!)! has different relations".into());
    }

    let cert =
        koszulity_certificate(alg, m_max, Execution::Sequential).map_err(|e| e.to_string())?;
    for s in &cert.slices {
        if alternating(&s.dims) != alternating(&s.homology) {
            return Err(format!("Euler characteristic mismatch in degree {}", s.m));
        }
        if s.m >= 1 && s.homology.iter().all(|&h| h == 0) && alternating(&s.dims) != 0 {
            return Err(format!("nonzero Euler sum in certified degree {}", s.m));
        }
    }
    let dual_cert =
        koszulity_certificate(&dual, m_max, Execution::Sequential).map_err(|e| e.to_string())?;
    if cert.certified != dual_cert.certified {
        return Err(format!(
            "certificate {} for A but {} for A!",
            cert.certified, dual_cert.certified
        ));
    }

    for seed in 0..3 {
        let rows = respan(alg.relations().basis(), seed);
        let again = Subspace::span(&rows, d * d).map_err(|e| e.to_string())?;
        if &again != alg.relations() {
            return Err(format!("RREF differs after respanning (seed {seed})"));
        }
    }
    Ok(())
}
