use std::process::{Command, Output};

use jack_sov::json::{from_json, to_json, CoeffTableJson, SuiteReport, SymPolyJson, UniPolyJson};

fn jacksov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacksov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let out = jacksov(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn compute_examples() {
    let args = "compute --vars 3 --lambda 1,0,0 --g 1/3 --form repr1 --basis elementary";
    assert_eq!(ok(&args.split(' ').collect::<Vec<_>>()), "e1");
    assert_eq!(
        ok(&["compute", "--vars", "3", "--lambda", "2,1,0", "--g", "1", "--form", "repr2", "--basis", "monomial"]),
        "m_(2,1) + 2*m_(1,1,1)"
    );
    assert_eq!(
        ok(&["compute", "--vars", "2", "--lambda", "2,0", "--g", "2", "--form", "gegenbauer"]),
        "m_(2) + 4/3*m_(1,1)"
    );
}

#[test]
fn compute_forms_agree() {
    let oracle = ok(&["compute", "--vars", "3", "--lambda", "3,1", "--g", "2/5", "--form", "oracle"]);
    for form in ["repr1", "repr2"] {
        let got = ok(&["compute", "--vars", "3", "--lambda", "3,1", "--g", "2/5", "--form", form]);
        assert_eq!(got, oracle, "{form}");
    }
    let two = ok(&["compute", "--vars", "3", "--lambda", "2,2,0", "--g", "7/3", "--form", "two-row"]);
    let oracle = ok(&["compute", "--vars", "3", "--lambda", "2,2,0", "--g", "7/3", "--form", "oracle"]);
    assert_eq!(two, oracle);
}

#[test]
fn compute_json_round_trips() {
    for basis in ["monomial", "elementary"] {
        let text = ok(&[
            "compute", "--vars", "3", "--lambda", "3,1,0", "--g", "3/2", "--form", "repr2", "--basis", basis, "--json",
        ]);
        let parsed: SymPolyJson = from_json(&text).unwrap();
        assert_eq!(to_json(&parsed), text);
        parsed.to_sympoly().unwrap();
    }
}

#[test]
fn usage_errors_exit_2() {
    let out = jacksov(&["compute", "--vars", "3", "--lambda", "1,2,0", "--form", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jacksov(&["compute", "--vars", "3", "--lambda", "2,0", "--form", "standard"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jacksov(&["compute", "--vars", "2", "--lambda", "1,0", "--g", "-1", "--form", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jacksov(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strict_degenerate_exits_3_with_hint() {
    let out = jacksov(&["compute", "--vars", "3", "--lambda", "2,2,0", "--g", "1", "--form", "repr1", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("use repr2"));
    let out = jacksov(&["coeffs", "--r1", "2", "--r2", "1", "--g", "1", "--formula", "f1", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("f1"));
}

#[test]
fn separated_examples() {
    let run = |l: &str, g: &str, form: &str| ok(&["separated", "--vars", "3", "--lambda", l, "--g", g, "--form", form]);
    assert_eq!(run("1,0,0", "1/3", "sum"), "1, 1/2");
    assert_eq!(run("2,2,2", "1", "sum"), "0, 0, 1");
    assert_eq!(ok(&["separated", "--vars", "2", "--lambda", "1,0", "--g", "5/2", "--form", "product"]), "1, 1");
    let text = ok(&["separated", "--vars", "3", "--lambda", "3,1,0", "--g", "1", "--form", "product", "--json"]);
    let parsed: UniPolyJson = from_json(&text).unwrap();
    assert_eq!(to_json(&parsed), text);
    assert_eq!(run("3,1,0", "1", "sum"), parsed.to_unipoly().unwrap().to_string());
}

#[test]
fn coeffs_examples() {
    let text = ok(&["coeffs", "--r1", "1", "--r2", "0", "--g", "1/3", "--formula", "expansion"]);
    assert_eq!(
        text,
        r#"{"r1":1,"r2":0,"g":"1/3","kind":"c","entries":[{"m":0,"n":0,"value":"3/2"},{"m":0,"n":1,"value":"-1/2"},{"m":1,"n":0,"value":"3/4"}]}"#
    );
    let parsed: CoeffTableJson = from_json(&text).unwrap();
    assert_eq!(to_json(&parsed), text);
    assert_eq!(
        ok(&["coeffs", "--r1", "0", "--r2", "0"]),
        r#"{"r1":0,"r2":0,"g":"1","kind":"c","entries":[{"m":0,"n":0,"value":"1"}]}"#
    );
    let f1 = ok(&["coeffs", "--r1", "2", "--r2", "1", "--g", "2/5", "--formula", "f1"]);
    let f2 = ok(&["coeffs", "--r1", "2", "--r2", "1", "--g", "2/5", "--formula", "f2"]);
    assert_eq!(f1, f2);
    let a = ok(&["coeffs", "--r1", "1", "--r2", "0", "--g", "2/5", "--formula", "a-table"]);
    assert!(a.contains(r#""kind":"a""#) && a.contains(r#""value":"3/2""#));
}

#[test]
fn verify_reports() {
    for (suite, w) in [("all", "0"), ("cmn", "6"), ("orthogonality", "4")] {
        let text = ok(&["verify", "--suite", suite, "--max-weight", w]);
        let report: SuiteReport = from_json(&text).unwrap();
        assert_eq!(to_json(&report), text);
        assert!(report.failures.is_empty());
        assert_eq!(report.cases_passed, report.cases_run);
        if suite != "all" {
            assert!(report.cases_run > 0);
        }
    }
    let text = ok(&["verify", "--suite", "separated", "--max-weight", "2", "--g-panel", "1/2,5"]);
    let report: SuiteReport = from_json(&text).unwrap();
    assert!(report.failures.is_empty() && report.cases_run > 0);
}
