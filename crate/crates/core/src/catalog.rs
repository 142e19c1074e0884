//! Ready-made algebras used by the tests, the benches and the CLI samples.

use num_traits::{One, Zero};

use crate::linear::{int, zero_vec, Scalar};
use crate::nonhomogeneous::{
    InhomogeneousRelation, NonhomogeneousError, NonhomogeneousPresentation,
};
use crate::quadratic::{default_names, QuadraticAlgebra};

/// `Σ c · x_a ⊗ x_b` as a coordinate vector of `E⊗E`.
pub fn quadratic_tensor(d: usize, terms: &[(Scalar, usize, usize)]) -> Vec<Scalar> {
    let mut v = zero_vec(d * d);
    for (c, a, b) in terms {
        v[a * d + b] += c;
    }
    v
}

fn algebra(d: usize, rows: Vec<Vec<Scalar>>) -> QuadraticAlgebra {
    QuadraticAlgebra::with_default_names(d, &rows).expect("rows have width d*d")
}

/// `SE`: `x_i x_j - x_j x_i` for `i < j`.
pub fn symmetric(d: usize) -> QuadraticAlgebra {
    let one = Scalar::one();
    let rows = pairs(d)
        .map(|(i, j)| quadratic_tensor(d, &[(one.clone(), i, j), (-one.clone(), j, i)]))
        .collect();
    algebra(d, rows)
}

/// `T(E)`: no relations.
pub fn tensor(d: usize) -> QuadraticAlgebra {
    algebra(d, Vec::new())
}

/// `∧E`: `x_i x_j + x_j x_i` for `i ≤ j`.
pub fn exterior(d: usize) -> QuadraticAlgebra {
    let one = Scalar::one();
    let mut rows: Vec<Vec<Scalar>> = pairs(d)
        .map(|(i, j)| quadratic_tensor(d, &[(one.clone(), i, j), (one.clone(), j, i)]))
        .collect();
    rows.extend((0..d).map(|i| quadratic_tensor(d, &[(one.clone(), i, i)])));
    algebra(d, rows)
}

/// The three relations `μ²∇2∇0 - ∇0∇2`, `μ⁴∇1∇0 - ∇0∇1`, `μ⁴∇2∇1 - ∇1∇2`
/// of the μ-deformed symmetric algebra, in that order.
pub fn mu_deformed_relations(mu: &Scalar) -> Vec<Vec<Scalar>> {
    assert!(!mu.is_zero(), "the deformation parameter must be nonzero");
    let one = Scalar::one();
    let mu2 = mu * mu;
    let mu4 = &mu2 * &mu2;
    vec![
        quadratic_tensor(3, &[(mu2, 2, 0), (-one.clone(), 0, 2)]),
        quadratic_tensor(3, &[(mu4.clone(), 1, 0), (-one.clone(), 0, 1)]),
        quadratic_tensor(3, &[(mu4, 2, 1), (-one, 1, 2)]),
    ]
}

pub fn mu_deformed(mu: &Scalar) -> QuadraticAlgebra {
    QuadraticAlgebra::from_relations(default_names("n", 3), &mu_deformed_relations(mu))
        .expect("three generators")
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn unit(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(d);
    v[i] = Scalar::one();
    v
}

fn commutator(d: usize, i: usize, j: usize) -> Vec<Scalar> {
    quadratic_tensor(d, &[(Scalar::one(), i, j), (-Scalar::one(), j, i)])
}

/// `U(g)`: `x_i x_j − x_j x_i = [x_i, x_j]` for `i < j`, with
/// `bracket[i][j]` the coordinates of `[x_i, x_j]`.
pub fn lie_algebra(
    generator_names: Vec<String>,
    bracket: &[Vec<Vec<Scalar>>],
) -> Result<NonhomogeneousPresentation, NonhomogeneousError> {
    let d = generator_names.len();
    let rels: Vec<InhomogeneousRelation> = pairs(d)
        .map(|(i, j)| InhomogeneousRelation {
            quadratic: commutator(d, i, j),
            linear: bracket[i][j].clone(),
            constant: Scalar::zero(),
        })
        .collect();
    NonhomogeneousPresentation::from_relations(generator_names, &rels)
}

fn bracket_table(d: usize, entries: &[(usize, usize, Vec<Scalar>)]) -> Vec<Vec<Vec<Scalar>>> {
    let mut table = vec![vec![zero_vec(d); d]; d];
    for (i, j, v) in entries {
        table[*i][*j] = v.clone();
        table[*j][*i] = v.iter().map(|x| -x).collect();
    }
    table
}

/// `[x, y] = z`, `z` central.
pub fn heisenberg() -> NonhomogeneousPresentation {
    let table = bracket_table(3, &[(0, 1, unit(3, 2))]);
    lie_algebra(names(&["x", "y", "z"]), &table).expect("valid Lie algebra")
}

/// `[e, f] = h`, `[h, e] = 2e`, `[h, f] = −2f`, generators in the order `e, f, h`.
pub fn sl2() -> NonhomogeneousPresentation {
    let two = int(2);
    let table = bracket_table(
        3,
        &[
            (0, 1, unit(3, 2)),
            (2, 0, vec![two.clone(), Scalar::zero(), Scalar::zero()]),
            (2, 1, vec![Scalar::zero(), -two, Scalar::zero()]),
        ],
    );
    lie_algebra(names(&["e", "f", "h"]), &table).expect("valid Lie algebra")
}

pub fn abelian(d: usize) -> NonhomogeneousPresentation {
    lie_algebra(default_names("x", d), &vec![vec![zero_vec(d); d]; d]).expect("valid Lie algebra")
}

/// `q_i p_i − p_i q_i = t`, every other pair commuting; generators `q1…qn, p1…pn`.
pub fn ccr(n: usize, t: &Scalar) -> NonhomogeneousPresentation {
    let d = 2 * n;
    let rels: Vec<InhomogeneousRelation> = pairs(d)
        .map(|(i, j)| InhomogeneousRelation {
            quadratic: commutator(d, i, j),
            linear: zero_vec(d),
            constant: if j == i + n {
                t.clone()
            } else {
                Scalar::zero()
            },
        })
        .collect();
    let mut generator_names = default_names("q", n + 1)[1..].to_vec();
    generator_names.extend(default_names("p", n + 1)[1..].iter().cloned());
    NonhomogeneousPresentation::from_relations(generator_names, &rels).expect("valid presentation")
}

/// `γ_μ γ_ν + γ_ν γ_μ = 2δ_μν`.
pub fn clifford(n: usize) -> NonhomogeneousPresentation {
    let one = Scalar::one();
    let mut rels: Vec<InhomogeneousRelation> = pairs(n)
        .map(|(i, j)| {
            InhomogeneousRelation::homogeneous(quadratic_tensor(
                n,
                &[(one.clone(), i, j), (one.clone(), j, i)],
            ))
        })
        .collect();
    rels.extend((0..n).map(|i| InhomogeneousRelation {
        quadratic: quadratic_tensor(n, &[(one.clone(), i, i)]),
        linear: zero_vec(n),
        constant: one.clone(),
    }));
    NonhomogeneousPresentation::from_relations(default_names("g", n), &rels)
        .expect("valid presentation")
}

/// The μ-deformed relations with linear parts `μ∇1`, `μ²(1+μ²)∇0`, `μ²(1+μ²)∇2`.
pub fn deformed_enveloping(mu: &Scalar) -> NonhomogeneousPresentation {
    let mu2 = mu * mu;
    let c = &mu2 * (Scalar::one() + &mu2);
    let linear = [
        unit(3, 1).iter().map(|x| x * mu).collect::<Vec<_>>(),
        unit(3, 0).iter().map(|x| x * &c).collect(),
        unit(3, 2).iter().map(|x| x * &c).collect(),
    ];
    let rels: Vec<InhomogeneousRelation> = mu_deformed_relations(mu)
        .into_iter()
        .zip(linear)
        .map(|(quadratic, linear)| InhomogeneousRelation {
            quadratic,
            linear,
            constant: Scalar::zero(),
        })
        .collect();
    NonhomogeneousPresentation::from_relations(default_names("n", 3), &rels)
        .expect("valid presentation")
}

/// `K ⊕ V` with `R = E⊗E` and `x_i x_j = Σ_k table[i][j][k] x_k`.
pub fn adjoined_unit(
    generator_names: Vec<String>,
    table: &[Vec<Vec<Scalar>>],
) -> Result<NonhomogeneousPresentation, NonhomogeneousError> {
    let d = generator_names.len();
    let rels: Vec<InhomogeneousRelation> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| InhomogeneousRelation {
            quadratic: quadratic_tensor(d, &[(Scalar::one(), i, j)]),
            linear: table[i][j].clone(),
            constant: Scalar::zero(),
        })
        .collect();
    NonhomogeneousPresentation::from_relations(generator_names, &rels)
}

fn pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |i| (i + 1..d).map(move |j| (i, j)))
}
