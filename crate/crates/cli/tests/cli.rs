use std::path::{Path, PathBuf};
use std::process::Command;

use pompeiu::exactfield::{ComplexElem, Scalar};
use pompeiu::linsys::{verify_certificate, SparseRow};
use pompeiu::search::{witness_search, SearchOutcome};
use pompeiu_cli::config::ProblemConfig;
use pompeiu_cli::document::{certificate_document, emit, parse_certificate, parse_value};
use pompeiu_cli::verify::verify_document;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn pompeiu(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pompeiu")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn witness_exit_codes() {
    let (code, out, _) = pompeiu(&["witness", "--config", path(&fixture("unit-pair-sqrt3.conf"))]);
    assert_eq!(code, 0);
    assert_eq!(parse_value(&out).unwrap()["kind"], "certificate");

    let (code, out, _) = pompeiu(&["witness", "--config", path(&fixture("unit-pair-rational.conf"))]);
    assert_eq!(code, 1);
    assert_eq!(parse_value(&out).unwrap()["kind"], "exhausted");

    let (code, _, err) = pompeiu(&["witness", "--config", "/nonexistent.conf"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent.conf"));
}

#[test]
fn bad_config_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.conf");
    std::fs::write(&cfg, "dimension = 2\nfield = q\npoints = 0,0; 1,0\nweights = 1, -1\ntarget = 0,0\n").unwrap();
    let (code, _, err) = pompeiu(&["witness", "--config", path(&cfg)]);
    assert_eq!(code, 2);
    assert!(err.contains("sum to zero"), "{err}");

    std::fs::write(&cfg, "dimension = 2\ncolour = red\n").unwrap();
    let (code, _, err) = pompeiu(&["witness", "--config", path(&cfg)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn out_flag_writes_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cert.json");
    let (code, stdout, _) = pompeiu(&["--out", path(&out), "witness", "--config", path(&fixture("singleton.conf"))]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let doc = parse_certificate(&text).unwrap();
    assert_eq!(emit(&doc), text);
    let (code, _, _) = pompeiu(&["verify", "--input", path(&out)]);
    assert_eq!(code, 0);
}

#[test]
fn verify_rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text, _) = pompeiu(&["witness", "--config", path(&fixture("triangle-weights.conf"))]);
    let doc = parse_certificate(&text).unwrap();

    let mut bad = doc.clone();
    bad.multipliers[0].value = "1".into();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, emit(&bad)).unwrap();
    let (code, out, _) = pompeiu(&["verify", "--input", path(&file)]);
    assert_eq!(code, 1);
    assert_eq!(parse_value(&out).unwrap()["status"], "fail");

    let mut bad = doc.clone();
    bad.witness_points[1].coords[0] = "7".into();
    assert!(!verify_document(&bad).passed());

    let mut bad = doc;
    bad.placements[0].translation[1] = "1/3".into();
    assert!(!verify_document(&bad).passed());

    std::fs::write(&file, "{\"format\": \"pompeiu/1\"}").unwrap();
    assert_eq!(pompeiu(&["verify", "--input", path(&file)]).0, 2);
}

/// The document verdict depends only on the document: corrupting the
/// library's rows after the search changes nothing, because the verifier
/// rebuilds every equation from the recorded motions.
#[test]
fn verifier_is_independent_of_library_rows() {
    let cfg = ProblemConfig::parse(&std::fs::read_to_string(fixture("unit-pair-sqrt3.conf")).unwrap()).unwrap();
    let SearchOutcome::Certificate(mut w) = witness_search(&cfg.problem().unwrap(), &cfg.budget) else {
        panic!("no certificate");
    };
    let cert = w.certificate.clone();
    let honest = certificate_document(&cfg, &w, &cert);
    assert!(verify_document(&honest).passed());

    for row in w.rows.iter_mut() {
        let ids: Vec<_> = row.ids().collect();
        *row = SparseRow::new(row.provenance, ids.into_iter().map(|id| (id, ComplexElem::from_i64(5))));
    }
    assert!(!verify_certificate(&w.rows, &cert));
    let doc = certificate_document(&cfg, &w, &cert);
    assert_eq!(emit(&doc), emit(&honest));
    assert!(verify_document(&doc).passed());
}

#[test]
fn combinatorial_subcommands() {
    let (code, out, _) = pompeiu(&["color", "--instance", path(&fixture("odd-cycle.copies")), "--colors", "2"]);
    assert_eq!(code, 0);
    assert_eq!(parse_value(&out).unwrap()["coloring"], serde_json::Value::Null);
    let (code, _, _) = pompeiu(&["transversal", "--instance", path(&fixture("even-cycle.copies")), "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!(pompeiu(&["core", "--instance", path(&fixture("contradiction.eqs"))]).0, 0);
    assert_eq!(pompeiu(&["core", "--instance", path(&fixture("consistent.eqs"))]).0, 1);
    assert_eq!(pompeiu(&["lemma2", "--c", "1", "--exponents", "0,1,2"]).0, 2);
    assert_eq!(pompeiu(&["color", "--instance", path(&fixture("odd-cycle.copies")), "--colors", "3"]).0, 2);
}
