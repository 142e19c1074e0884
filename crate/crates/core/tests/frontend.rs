use std::path::PathBuf;

use koszul_core::frontend::{
    emit_report, parse_report, parse_spec, print_spec, run_analysis, AnalysisError,
    AnalysisOptions, AnalysisReport, Check, Format,
};
use koszul_core::homology::CERTIFICATE_LABEL;
use koszul_core::nonhomogeneous::{Classification, PbwVerdict};
use koszul_core::Execution;

fn spec_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn analyze(file: &str, options: &AnalysisOptions) -> AnalysisReport {
    let text = std::fs::read_to_string(spec_dir().join(file)).unwrap();
    let spec = parse_spec(&text).unwrap();
    run_analysis(&spec, options).unwrap()
}

fn default_report(file: &str) -> AnalysisReport {
    analyze(file, &AnalysisOptions::default())
}

#[test]
fn symmetric_algebra_report() {
    let r = default_report("symmetric3.spec");
    assert_eq!(r.classification, Classification::Homogeneous);
    assert_eq!(r.truncation.m_max, 10);
    assert!(r.truncation.m_max_defaulted);
    let g = r.gorenstein.as_ref().and_then(|o| o.ok()).unwrap();
    assert!(g.certified && g.gorenstein);
    assert_eq!(g.global_dimension, Some(3));
    let p = r.potential.as_ref().and_then(|o| o.ok()).unwrap();
    assert!(p.calabi_yau && p.relations_round_trip && p.twist_power_fixes_w);
    assert_eq!(p.components.len(), 6);
}

#[test]
fn tensor_algebra_has_no_potential() {
    let r = default_report("tensor2.spec");
    let g = r.gorenstein.as_ref().and_then(|o| o.ok()).unwrap();
    assert_eq!(g.global_dimension, Some(1));
    assert!(!g.gorenstein);
    let err = r.potential.as_ref().and_then(|o| o.error()).unwrap();
    assert!(err.contains("not Gorenstein"), "{err}");
}

#[test]
fn mu_deformed_twist_is_rendered_exactly() {
    let r = default_report("mu_deformed.spec");
    let p = r.potential.as_ref().and_then(|o| o.ok()).unwrap();
    assert_eq!(
        p.twist,
        vec![
            vec!["1/64", "0", "0"],
            vec!["0", "1", "0"],
            vec!["0", "0", "64"]
        ]
    );
    let machine = emit_report(&r, Format::Machine);
    assert!(machine.contains("\"1/64\""));
}

#[test]
fn deformed_enveloping_report() {
    let r = default_report("deformed_enveloping.spec");
    assert_eq!(r.classification, Classification::QuadraticLinear);
    let pbw = r.pbw.as_ref().and_then(|o| o.ok()).unwrap();
    assert_eq!(pbw.verdict, PbwVerdict::Certified);
    let curved = r.curved.as_ref().and_then(|o| o.ok()).unwrap();
    assert_eq!(curved.agrees_with_pbw, Some(true));
    assert_eq!(curved.curvature, "0");
    assert_eq!(curved.delta.len(), 3);
    assert!(r.lie.as_ref().and_then(|o| o.ok()).unwrap().lie_prealgebra);
}

#[test]
fn central_curvature_reports() {
    for file in ["ccr.spec", "clifford2.spec"] {
        let r = default_report(file);
        assert_eq!(r.classification, Classification::CentralCurvature, "{file}");
        let curved = r.curved.as_ref().and_then(|o| o.ok()).unwrap();
        assert_ne!(curved.curvature, "0", "{file}");
        assert!(curved.conditions.all_hold(), "{file}");
    }
}

#[test]
fn lie_representations() {
    let r = default_report("heisenberg.spec");
    let cohomology: Vec<Vec<usize>> = r
        .cohomology
        .as_ref()
        .unwrap()
        .iter()
        .map(|o| o.ok().unwrap().cohomology.clone())
        .collect();
    // Trivial left, trivial right, adjoint, coadjoint.
    assert_eq!(
        cohomology,
        vec![
            vec![1, 2, 2, 1],
            vec![1, 2, 2, 1],
            vec![1, 4, 5, 2],
            vec![2, 5, 4, 1]
        ]
    );

    let r = default_report("sl2.spec");
    for o in r.cohomology.as_ref().unwrap().iter().skip(2) {
        assert!(o.ok().unwrap().cohomology.iter().all(|&h| h == 0));
    }
}

#[test]
fn every_report_is_labelled_and_round_trips() {
    for entry in std::fs::read_dir(spec_dir()).unwrap() {
        let path = entry.unwrap().path();
        let file = path.file_name().unwrap().to_str().unwrap().to_string();
        let r = default_report(&file);
        assert_eq!(r.truncation.label, CERTIFICATE_LABEL, "{file}");
        let machine = emit_report(&r, Format::Machine);
        assert_eq!(parse_report(&machine).unwrap(), r, "{file}");
        assert!(
            emit_report(&r, Format::Text).contains(CERTIFICATE_LABEL),
            "{file}"
        );
    }
}

#[test]
fn output_is_deterministic_across_execution_modes() {
    for file in [
        "symmetric3.spec",
        "deformed_enveloping.spec",
        "heisenberg.spec",
    ] {
        let seq = analyze(
            file,
            &AnalysisOptions {
                exec: Execution::Sequential,
                ..Default::default()
            },
        );
        let par = analyze(
            file,
            &AnalysisOptions {
                exec: Execution::default(),
                ..Default::default()
            },
        );
        assert_eq!(
            emit_report(&seq, Format::Machine),
            emit_report(&par, Format::Machine),
            "{file}"
        );
        assert_eq!(
            emit_report(&seq, Format::Text),
            emit_report(&par, Format::Text),
            "{file}"
        );
    }
}

#[test]
fn command_line_options_override_the_spec() {
    let options = AnalysisOptions {
        max_degree: Some(4),
        checks: Some(vec![Check::Koszul]),
        ..Default::default()
    };
    let r = analyze("symmetric3.spec", &options);
    assert_eq!(r.checks, vec![Check::Koszul]);
    assert_eq!(r.truncation.m_max, 4);
    assert!(!r.truncation.m_max_defaulted);
    assert!(r.potential.is_none() && r.curved.is_none());
    assert_eq!(r.koszul.as_ref().and_then(|o| o.ok()).unwrap().m_max, 4);
}

#[test]
fn printed_specs_reparse() {
    for entry in std::fs::read_dir(spec_dir()).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let spec = parse_spec(&text).unwrap();
        assert_eq!(parse_spec(&print_spec(&spec)).unwrap(), spec);
    }
}

#[test]
fn invalid_representation_is_not_an_inconsistency() {
    let text =
        "name bad rep\ngenerators x, y, z\nrelations\n  x*y - y*x = z\n  x*z = z*x\n  y*z = z*y\n\
                representation r left 1\n  x = [1]\n  y = [1]\n  z = [1]\noptions\n  checks = ce\n";
    let spec = parse_spec(text).unwrap();
    match run_analysis(&spec, &AnalysisOptions::default()) {
        Ok(r) => {
            let last = r.cohomology.unwrap().pop().unwrap();
            assert!(last.error().is_some());
        }
        Err(e) => assert!(!matches!(e, AnalysisError::Inconsistency { .. }), "{e}"),
    }
}
