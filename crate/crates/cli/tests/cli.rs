use std::io::Write as _;

use normbasis_cli::run_to;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["normbasis"];
    argv.extend_from_slice(args);
    let code = run_to(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn pnb_reports_witness() {
    let (code, out, _) = run(&["pnb", "--p", "2", "--k", "1", "--m", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let r = json(&out);
    let rec = &r["records"][0];
    assert_eq!(rec["check"], "primitive-normal");
    assert_eq!(rec["status"], "consistent");
    assert_eq!(rec["facts"]["multiplicative_order"], 15);
    assert!(rec["timing_ms"].is_number());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["tower", "--p", "4", "--k", "1", "--m", "2"],
        vec!["tower", "--p", "2"],
        vec!["tower", "--p", "2", "--m", "0"],
        vec!["frobnicate"],
        vec!["probe", "--format", "xml"],
        vec!["probe", "--workers", "0"],
        vec!["suite", "--max-card", "0"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("suite"));
}

#[test]
fn tower_cap_is_a_config_error() {
    let (code, _, err) = run(&["normal", "--p", "2", "--m", "8", "--max-card", "100"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn csv_has_one_row_per_record() {
    let (code, out, _) = run(&["gamma", "--p", "3", "--m", "2", "--format", "csv", "--no-timing"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["check", "subject", "status", "witnesses", "facts", "timing_ms"]);
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| &r[2] == "consistent" && r[5].is_empty()));
}

#[test]
fn catalog_file_with_wrong_flags_is_falsified() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# F_2^2 claimed to have no exceptional quotient").unwrap();
    writeln!(file, "sq power field=2 j=2 expect=none").unwrap();
    let path = file.path().to_str().unwrap();
    let (code, out, _) = run(&["probe", "--catalog", path, "--no-timing"]);
    assert_eq!(code, 1);
    let r = json(&out);
    let bad: Vec<&Value> = r["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x["status"] == "FALSIFIED")
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["check"], "declared-structure");
    assert!(!bad[0]["witnesses"].as_array().unwrap().is_empty());
    assert_eq!(r["summary"]["falsified"], 1);
}

#[test]
fn malformed_catalog_exits_two() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "x matrix field=2").unwrap();
    let (code, _, err) = run(&["probe", "--catalog", file.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn oversized_algebras_are_skipped() {
    let (code, out, _) = run(&["probe", "--max-card", "64", "--no-timing"]);
    assert_eq!(code, 0);
    let r = json(&out);
    let skipped: Vec<&str> = r["skipped"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    assert!(skipped.iter().any(|s| s.starts_with("M2(F3)")));
    assert!(!skipped.iter().any(|s| s.starts_with("F2S3")));
}

#[test]
fn summary_matches_records_and_workers_do_not_change_records() {
    let (c1, one, _) = run(&["probe", "--no-timing", "--workers", "1"]);
    let (c4, four, _) = run(&["probe", "--no-timing", "--workers", "4"]);
    assert_eq!((c1, c4), (0, 0));
    let (a, b) = (json(&one), json(&four));
    assert_eq!(a["records"], b["records"]);
    let recs = a["records"].as_array().unwrap();
    let count = |s: &str| recs.iter().filter(|r| r["status"] == s).count();
    assert_eq!(a["summary"]["records"], recs.len());
    assert_eq!(a["summary"]["consistent"], count("consistent"));
    assert_eq!(a["summary"]["exception_witnessed"], count("exception-witnessed"));
    assert_eq!(a["summary"]["falsified"], 0);
}
