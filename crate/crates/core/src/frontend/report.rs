use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{print_spec, render_relation, AlgebraSpec, Check};
use crate::exec::Execution;
use crate::homology::{
    default_m_max, gorenstein_check, l_complex_cohomology, FrobeniusReport, GorensteinReport,
    HomologyError, KoszulityCertificate, LComplexTable, CERTIFICATE_LABEL, DEFAULT_PROBE_DEGREE,
};
use crate::lie::{
    ce_chain_complex, ce_cochain_complex, lie_prealgebra_verdict, CeSummary, LieError, Prealgebra,
    Representation, Side,
};
use crate::nonhomogeneous::{
    build_curved_dual, check_pbw_conditions, classify, pbw_verdict, Classification,
    CurvedConditions, NonhomogeneousError, PbwConditions, PbwVerdict,
};
use crate::potential::{extract_potential, PotentialError, PotentialSummary};

/// A section that either completed or stopped with a (non-fatal) error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome<T> {
    Ok(T),
    Error(String),
}

impl<T> Outcome<T> {
    pub fn ok(&self) -> Option<&T> {
        match self {
            Outcome::Ok(t) => Some(t),
            Outcome::Error(_) => None,
        }
    }

    pub fn error(&self) -> Option<&str> {
        match self {
            Outcome::Ok(_) => None,
            Outcome::Error(e) => Some(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub name: String,
    pub generators: Vec<String>,
    pub params: BTreeMap<String, String>,
    /// Relations with parameters substituted, as `quadratic = linear + constant`.
    pub relations: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    /// Total degree of the Koszulity certificate.
    pub m_max: usize,
    pub m_max_defaulted: bool,
    /// Degree up to which `A!` is computed.
    pub dual_degree: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsSection {
    pub algebra: Vec<usize>,
    pub dual: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinSection {
    pub certified: bool,
    pub global_dimension: Option<usize>,
    pub dual_dims: Vec<usize>,
    pub poincare_duality: Option<bool>,
    pub frobenius: Option<FrobeniusReport>,
    pub frobenius_error: Option<String>,
    pub gorenstein: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwSection {
    pub conditions: PbwConditions,
    pub verdict: PbwVerdict,
    pub verdict_label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEntry {
    pub generator: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvedSection {
    pub delta: Vec<DeltaEntry>,
    pub curvature: String,
    pub conditions: CurvedConditions,
    /// Whether (a′, b′, c′) have the same outcomes as (a, b, c).
    pub agrees_with_pbw: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieSection {
    pub gorenstein: bool,
    pub pbw_verdict: PbwVerdict,
    pub lie_prealgebra: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LComplexSection {
    pub table: LComplexTable,
    pub global_dimension: Option<usize>,
    /// Cohomology concentrated in a single `K` at `n = D`.
    pub delta_shape: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: SpecEcho,
    pub checks: Vec<Check>,
    pub truncation: Truncation,
    pub classification: Classification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Outcome<DimsSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub koszul: Option<Outcome<KoszulityCertificate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<Outcome<GorensteinSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<Outcome<PotentialSummary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pbw: Option<Outcome<PbwSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curved: Option<Outcome<CurvedSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie: Option<Outcome<LieSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<Outcome<CeSummary>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_complex: Option<Outcome<LComplexSection>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("invalid presentation: {0}")]
    Presentation(NonhomogeneousError),
    #[error("internal inconsistency in {section}: {detail}")]
    Inconsistency {
        section: &'static str,
        detail: String,
    },
}

/// Overrides for the input file's own `options` block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub max_degree: Option<usize>,
    pub checks: Option<Vec<Check>>,
    pub exec: Execution,
}

/// Errors that contradict a result the engine already established.
trait Severity: Display {
    fn inconsistent(&self) -> bool;
}

impl Severity for HomologyError {
    fn inconsistent(&self) -> bool {
        matches!(self, HomologyError::Inconsistency(_))
    }
}

impl Severity for PotentialError {
    fn inconsistent(&self) -> bool {
        matches!(
            self,
            PotentialError::InconsistentCertificate { .. }
                | PotentialError::PreregularityViolated(_)
        )
    }
}

impl Severity for NonhomogeneousError {
    fn inconsistent(&self) -> bool {
        match self {
            NonhomogeneousError::Inconsistency(_) => true,
            NonhomogeneousError::Homology(h) => h.inconsistent(),
            _ => false,
        }
    }
}

impl Severity for LieError {
    fn inconsistent(&self) -> bool {
        match self {
            LieError::Inconsistency(_) => true,
            LieError::Nonhomogeneous(e) => e.inconsistent(),
            LieError::Homology(h) => h.inconsistent(),
            _ => false,
        }
    }
}

fn outcome<T, E: Severity>(
    section: &'static str,
    r: Result<T, E>,
) -> Result<Outcome<T>, AnalysisError> {
    match r {
        Ok(t) => Ok(Outcome::Ok(t)),
        Err(e) if e.inconsistent() => Err(AnalysisError::Inconsistency {
            section,
            detail: e.to_string(),
        }),
        Err(e) => Ok(Outcome::Error(e.to_string())),
    }
}

/// Runs the requested checks in a fixed order; the Koszulity certificate and
/// the PBW conditions are computed once and shared between sections.
pub fn run_analysis(
    spec: &AlgebraSpec,
    options: &AnalysisOptions,
) -> Result<AnalysisReport, AnalysisError> {
    let p = spec.presentation().map_err(AnalysisError::Presentation)?;
    let alg = p.algebra();
    let exec = options.exec;
    let mut checks = options
        .checks
        .clone()
        .or_else(|| spec.options.checks.clone())
        .unwrap_or_else(|| Check::ALL.to_vec());
    checks.sort();
    checks.dedup();
    let wants = |c: Check| checks.contains(&c);

    let (m_max, m_max_defaulted) = match options.max_degree.or(spec.options.max_degree) {
        Some(m) => (m, false),
        None => (default_m_max(alg).0, true),
    };
    let truncation = Truncation {
        m_max,
        m_max_defaulted,
        dual_degree: DEFAULT_PROBE_DEGREE,
        label: CERTIFICATE_LABEL.to_string(),
    };

    let dims = wants(Check::Dims).then(|| {
        Outcome::Ok(DimsSection {
            algebra: alg.graded(m_max).dims(),
            dual: alg.koszul_dual().graded(DEFAULT_PROBE_DEGREE).dims(),
        })
    });

    let needs_certificate = [
        Check::Koszul,
        Check::Gorenstein,
        Check::Potential,
        Check::Pbw,
        Check::Lie,
    ]
    .into_iter()
    .any(wants);
    let gor: Option<Result<GorensteinReport, HomologyError>> =
        needs_certificate.then(|| gorenstein_check(alg, m_max, DEFAULT_PROBE_DEGREE, exec));
    if let Some(Err(e)) = &gor {
        if e.inconsistent() {
            return Err(AnalysisError::Inconsistency {
                section: "koszul",
                detail: e.to_string(),
            });
        }
    }
    let gor_ref = gor.as_ref().map(|r| r.as_ref().map_err(|e| e.to_string()));

    let koszul = match (wants(Check::Koszul), &gor_ref) {
        (true, Some(r)) => Some(match r {
            Ok(g) => Outcome::Ok(g.certificate.clone()),
            Err(e) => Outcome::Error(e.clone()),
        }),
        _ => None,
    };
    let gorenstein = match (wants(Check::Gorenstein), &gor_ref) {
        (true, Some(Ok(g))) => Some(Outcome::Ok(GorensteinSection {
            certified: g.certificate.certified,
            global_dimension: g.global_dimension,
            dual_dims: g.dual_dims.clone(),
            poincare_duality: g.poincare_duality,
            frobenius: g.frobenius.clone(),
            frobenius_error: g.frobenius_error.clone(),
            gorenstein: g.gorenstein,
        })),
        (true, Some(Err(e))) => Some(Outcome::Error(e.clone())),
        _ => None,
    };
    let potential = match (wants(Check::Potential), &gor_ref) {
        (true, Some(Ok(g))) => Some(outcome(
            "potential",
            extract_potential(alg, g).map(|tp| PotentialSummary::new(alg, &tp)),
        )?),
        (true, Some(Err(e))) => Some(Outcome::Error(e.clone())),
        _ => None,
    };

    let pbw_conditions = if wants(Check::Pbw) || wants(Check::Curved) || wants(Check::Lie) {
        Some(check_pbw_conditions(&p))
    } else {
        None
    };
    let pbw = match (wants(Check::Pbw), &pbw_conditions, &gor_ref) {
        (true, Some(Ok(c)), Some(Ok(g))) => {
            let verdict = pbw_verdict(c, &g.certificate);
            Some(Outcome::Ok(PbwSection {
                conditions: c.clone(),
                verdict,
                verdict_label: verdict.as_str().to_string(),
            }))
        }
        (true, Some(Err(e)), _) => Some(outcome::<PbwSection, _>("pbw", Err(e.clone()))?),
        (true, _, Some(Err(e))) => Some(Outcome::Error(e.clone())),
        _ => None,
    };

    let curved = if wants(Check::Curved) {
        let r = build_curved_dual(&p).and_then(|c| {
            let conditions = crate::nonhomogeneous::verify_curved_dual(&c)?;
            let names = c.dual().generator_names();
            let delta = c
                .delta_generators()
                .iter()
                .enumerate()
                .map(|(i, v)| DeltaEntry {
                    generator: names[i].clone(),
                    value: c.render_class(2, v),
                })
                .collect();
            let agrees_with_pbw = match &pbw_conditions {
                Some(Ok(pc)) => Some(
                    pc.a.agrees_with(&conditions.a_prime)
                        && pc.b.agrees_with(&conditions.b_prime)
                        && pc.c.agrees_with(&conditions.c_prime),
                ),
                _ => None,
            };
            Ok(CurvedSection {
                delta,
                curvature: c.render_class(2, c.curvature()),
                conditions,
                agrees_with_pbw,
            })
        });
        Some(outcome("curved", r)?)
    } else {
        None
    };

    let prealgebra = Prealgebra::new(p.clone());
    let lie = match (wants(Check::Lie), &pbw_conditions, &gor_ref) {
        (true, Some(conds), Some(g)) => Some(match (&prealgebra, conds, g) {
            (Err(e), _, _) => Outcome::Error(e.to_string()),
            (_, Err(e), _) => outcome::<LieSection, _>("lie", Err(e.clone()))?,
            (_, _, Err(e)) => Outcome::Error(e.clone()),
            (Ok(_), Ok(c), Ok(g)) => {
                let (pbw_verdict, lie_prealgebra) = lie_prealgebra_verdict(g, c);
                Outcome::Ok(LieSection {
                    gorenstein: g.gorenstein,
                    pbw_verdict,
                    lie_prealgebra,
                })
            }
        }),
        _ => None,
    };

    let cohomology = if wants(Check::Ce) {
        let mut out = Vec::new();
        match &prealgebra {
            Err(e) => out.push(Outcome::Error(e.to_string())),
            Ok(pre) => {
                let d = pre.d();
                let mut reps = vec![
                    Representation::trivial(Side::Left, d),
                    Representation::trivial(Side::Right, d),
                ];
                reps.extend(spec.representations.iter().cloned());
                for rho in &reps {
                    let r = match rho.side {
                        Side::Left => ce_cochain_complex(pre, rho),
                        Side::Right => ce_chain_complex(pre, rho),
                    };
                    out.push(outcome("ce", r.map(|c| c.summary()))?);
                }
            }
        }
        Some(out)
    } else {
        None
    };

    let l_complex = if wants(Check::LComplex) {
        let r = l_complex_cohomology(alg, m_max, exec).map(|table| {
            let global_dimension = alg.koszul_dual().graded(DEFAULT_PROBE_DEGREE).top_degree();
            LComplexSection {
                delta_shape: global_dimension.map(|d| table.has_delta_shape(d)),
                table,
                global_dimension,
            }
        });
        Some(outcome("l-complex", r)?)
    } else {
        None
    };

    Ok(AnalysisReport {
        spec: SpecEcho {
            name: spec.name.clone(),
            generators: spec.generators.clone(),
            params: spec
                .params
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
            relations: spec
                .relations
                .iter()
                .map(|r| render_relation(r, &spec.generators))
                .collect(),
            text: print_spec(spec),
        },
        checks,
        truncation,
        classification: classify(&p),
        dims,
        koszul,
        gorenstein,
        potential,
        pbw,
        curved,
        lie,
        cohomology,
        l_complex,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Machine output is pretty-printed JSON with sorted keys.
pub fn emit_report(r: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Machine => {
            let value = serde_json::to_value(r).expect("report is serializable");
            let mut s = serde_json::to_string_pretty(&value).expect("value is serializable");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

pub fn parse_report(text: &str) -> Result<AnalysisReport, serde_json::Error> {
    serde_json::from_str(text)
}

fn list<T: Display>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn opt<T: Display>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "unknown".to_string(), ToString::to_string)
}

fn heading(out: &mut String, title: &str) {
    let _ = writeln!(out, "\n== {title} ==");
}

fn section<T>(
    out: &mut String,
    title: &str,
    s: &Option<Outcome<T>>,
    body: impl FnOnce(&mut String, &T),
) {
    let Some(s) = s else { return };
    heading(out, title);
    match s {
        Outcome::Ok(t) => body(out, t),
        Outcome::Error(e) => {
            let _ = writeln!(out, "error: {e}");
        }
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "analysis of {}", r.spec.name);
    let _ = writeln!(out, "generators: {}", list(&r.spec.generators));
    for (k, v) in &r.spec.params {
        let _ = writeln!(out, "param {k} = {v}");
    }
    for rel in &r.spec.relations {
        let _ = writeln!(out, "relation: {rel}");
    }
    let _ = writeln!(out, "classification: {}", r.classification.as_str());
    let _ = writeln!(
        out,
        "truncation: m_max = {}{}, A! computed to degree {}",
        r.truncation.m_max,
        if r.truncation.m_max_defaulted {
            " (default)"
        } else {
            ""
        },
        r.truncation.dual_degree
    );
    let _ = writeln!(out, "note: {}", r.truncation.label);

    section(&mut out, "dimensions", &r.dims, |out, d| {
        let _ = writeln!(out, "dim A_n  (n = 0..): {}", list(&d.algebra));
        let _ = writeln!(out, "dim A!_n (n = 0..): {}", list(&d.dual));
    });
    section(&mut out, "Koszulity certificate", &r.koszul, |out, c| {
        let _ = writeln!(
            out,
            "certified to total degree {}: {}",
            c.m_max, c.certified
        );
        for s in &c.slices {
            let _ = writeln!(
                out,
                "m = {:>2}: dims [{}]  H_n [{}]",
                s.m,
                list(&s.dims),
                list(&s.homology)
            );
        }
    });
    section(&mut out, "Gorenstein", &r.gorenstein, |out, g| {
        let _ = writeln!(out, "global dimension: {}", opt(&g.global_dimension));
        let _ = writeln!(out, "dim A!_n: {}", list(&g.dual_dims));
        let _ = writeln!(
            out,
            "Poincaré duality of dims: {}",
            opt(&g.poincare_duality)
        );
        if let Some(f) = &g.frobenius {
            let _ = writeln!(
                out,
                "A! Frobenius: {} (top degree {}, dim {})",
                f.frobenius, f.top_degree, f.top_dim
            );
            for w in &f.pairings {
                let _ = writeln!(
                    out,
                    "  pairing A!_{} x A!_{}: rank {} of {}x{}",
                    w.n, w.complementary, w.rank, w.rows, w.cols
                );
            }
        }
        if let Some(e) = &g.frobenius_error {
            let _ = writeln!(out, "A! Frobenius: not evaluated ({e})");
        }
        let _ = writeln!(out, "Gorenstein: {}", g.gorenstein);
    });
    section(&mut out, "twisted potential", &r.potential, |out, p| {
        let mut w = String::new();
        for (i, (word, c)) in p.components.iter().enumerate() {
            match (i, c.strip_prefix('-')) {
                (0, _) => w.push_str(&format!("{c}·{word}")),
                (_, Some(abs)) => w.push_str(&format!(" - {abs}·{word}")),
                (_, None) => w.push_str(&format!(" + {c}·{word}")),
            }
        }
        let _ = writeln!(out, "w = {w}");
        let rows: Vec<String> = p
            .twist
            .iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        let _ = writeln!(out, "Q_w = [{}]", rows.join(", "));
        let _ = writeln!(out, "Calabi-Yau: {}", p.calabi_yau);
        let _ = writeln!(out, "Q_w^(D) fixes w: {}", p.twist_power_fixes_w);
        let _ = writeln!(
            out,
            "relations from w reproduce R: {}",
            p.relations_round_trip
        );
    });
    section(&mut out, "PBW", &r.pbw, |out, p| {
        let _ = writeln!(out, "dim of (R⊗E) ∩ (E⊗R): {}", p.conditions.overlap_dim);
        for (label, v) in [
            ("a", &p.conditions.a),
            ("b", &p.conditions.b),
            ("c", &p.conditions.c),
        ] {
            let _ = writeln!(out, "({label}) {}", verdict_text(v));
        }
        let _ = writeln!(out, "verdict: {}", p.verdict_label);
    });
    section(&mut out, "curved dual (A!, δ, F)", &r.curved, |out, c| {
        for e in &c.delta {
            let _ = writeln!(out, "δ{} = {}", e.generator, e.value);
        }
        let _ = writeln!(out, "F = {}", c.curvature);
        for (label, v) in [
            ("a′", &c.conditions.a_prime),
            ("b′", &c.conditions.b_prime),
            ("c′", &c.conditions.c_prime),
        ] {
            let _ = writeln!(out, "({label}) {}", verdict_text(v));
        }
        if let Some(a) = c.agrees_with_pbw {
            let _ = writeln!(out, "agrees with (a, b, c): {a}");
        }
    });
    section(&mut out, "Lie prealgebra", &r.lie, |out, l| {
        let _ = writeln!(
            out,
            "quadratic part Koszul–Gorenstein (certified): {}",
            l.gorenstein
        );
        let _ = writeln!(out, "PBW: {}", l.pbw_verdict.as_str());
        let _ = writeln!(out, "Lie prealgebra: {}", l.lie_prealgebra);
    });
    if let Some(cs) = &r.cohomology {
        heading(&mut out, "Chevalley–Eilenberg complexes");
        for c in cs {
            match c {
                Outcome::Ok(s) => {
                    let _ = writeln!(
                        out,
                        "{} ({:?}): dims [{}]  {} [{}]",
                        s.representation,
                        s.kind,
                        list(&s.dims),
                        s.label,
                        list(&s.cohomology)
                    );
                }
                Outcome::Error(e) => {
                    let _ = writeln!(out, "error: {e}");
                }
            }
        }
    }
    section(&mut out, "L complex", &r.l_complex, |out, l| {
        for s in &l.table.slices {
            let h: Vec<String> = s
                .cohomology
                .iter()
                .map(|h| h.map_or("?".to_string(), |x| x.to_string()))
                .collect();
            let _ = writeln!(
                out,
                "c = {:>3}, n from {}: dims [{}]  H^n [{}]",
                s.c,
                s.n_start,
                list(&s.dims),
                h.join(", ")
            );
        }
        let _ = writeln!(out, "delta-shaped at D: {}", opt(&l.delta_shape));
    });
    out
}

fn verdict_text(v: &crate::nonhomogeneous::ConditionVerdict) -> String {
    use crate::nonhomogeneous::ConditionVerdict::*;
    match v {
        Holds => "holds".into(),
        Fails { witness } => format!("fails, witness {witness}"),
        NotEvaluable { reason } => format!("not evaluable: {reason}"),
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_text(self))
    }
}
