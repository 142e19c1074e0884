use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{render_vector, ConditionVerdict, NonhomogeneousError, NonhomogeneousPresentation};
use crate::homology::KoszulityCertificate;
use crate::linear::{is_zero_vec, zero_vec, Scalar, Subspace};

/// `(R⊗E) ∩ (E⊗R) = K_3`.
pub fn overlap_space(relations: &Subspace) -> Subspace {
    crate::quadratic::koszul_subspace(relations, 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwConditions {
    pub overlap_dim: usize,
    pub a: ConditionVerdict,
    pub b: ConditionVerdict,
    pub c: ConditionVerdict,
}

impl PbwConditions {
    pub fn all_hold(&self) -> bool {
        self.a.holds() && self.b.holds() && self.c.holds()
    }

    pub fn any_fails(&self) -> bool {
        !self.all_hold()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PbwVerdict {
    /// Conditions hold and the quadratic part carries a Koszulity certificate.
    Certified,
    /// A necessary condition fails, so the PBW property fails.
    ConditionsFailed,
    /// Conditions hold but Koszulity of the quadratic part is not certified.
    Undetermined,
}

impl PbwVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            PbwVerdict::Certified => "PBW (certified)",
            PbwVerdict::ConditionsFailed => "conditions-necessary-failed",
            PbwVerdict::Undetermined => "undetermined",
        }
    }
}

pub fn pbw_verdict(conditions: &PbwConditions, certificate: &KoszulityCertificate) -> PbwVerdict {
    if conditions.any_fails() {
        PbwVerdict::ConditionsFailed
    } else if certificate.certified {
        PbwVerdict::Certified
    } else {
        PbwVerdict::Undetermined
    }
}

/// Evaluates (a), (b), (c) on each basis vector of the overlap space.
pub fn check_pbw_conditions(
    p: &NonhomogeneousPresentation,
) -> Result<PbwConditions, NonhomogeneousError> {
    let d = p.d();
    let dd = d * d;
    let overlap = overlap_space(p.algebra().relations());
    let mut a_witness = None;
    let mut b_witness = None;
    let mut c_witness = None;
    for i in 0..overlap.dim() {
        let k = overlap.basis_vector(i);
        // (φ⊗I)k − (I⊗φ)k and (φ₀⊗I)k − (I⊗φ₀)k.
        let mut v = zero_vec(dd);
        let mut u = zero_vec(d);
        for last in 0..d {
            let slice: Vec<Scalar> = (0..dd).map(|ab| k[ab * d + last].clone()).collect();
            let (phi, phi0) = apply(p, &slice, "last")?;
            for (e, x) in phi.iter().enumerate() {
                v[e * d + last] += x;
            }
            u[last] += phi0;
        }
        for first in 0..d {
            let slice = &k[first * dd..(first + 1) * dd];
            let (phi, phi0) = apply(p, slice, "first")?;
            for (e, x) in phi.iter().enumerate() {
                v[first * d + e] -= x;
            }
            u[first] -= phi0;
        }
        let (Some(phi_v), Some(phi0_v)) = (p.phi_of(&v), p.phi0_of(&v)) else {
            a_witness.get_or_insert_with(|| render_vector(&v));
            continue;
        };
        let b_value: Vec<Scalar> = phi_v.iter().zip(&u).map(|(x, y)| x + y).collect();
        if !is_zero_vec(&b_value) {
            b_witness.get_or_insert_with(|| render_vector(&b_value));
        }
        if !phi0_v.is_zero() {
            c_witness.get_or_insert_with(|| phi0_v.to_string());
        }
    }
    let verdict = |w: Option<String>| match w {
        Some(witness) => ConditionVerdict::Fails { witness },
        None => ConditionVerdict::Holds,
    };
    let (b, c) = if a_witness.is_some() {
        let reason =
            "condition (a) fails, so φ cannot be applied to (φ⊗I − I⊗φ)(overlap)".to_string();
        (
            ConditionVerdict::NotEvaluable {
                reason: reason.clone(),
            },
            ConditionVerdict::NotEvaluable { reason },
        )
    } else {
        (verdict(b_witness), verdict(c_witness))
    };
    Ok(PbwConditions {
        overlap_dim: overlap.dim(),
        a: verdict(a_witness),
        b,
        c,
    })
}

fn apply(
    p: &NonhomogeneousPresentation,
    slice: &[Scalar],
    side: &str,
) -> Result<(Vec<Scalar>, Scalar), NonhomogeneousError> {
    match (p.phi_of(slice), p.phi0_of(slice)) {
        (Some(phi), Some(phi0)) => Ok((phi, phi0)),
        _ => Err(NonhomogeneousError::Inconsistency(format!(
            "an overlap vector has a {side}-letter slice outside R"
        ))),
    }
}
