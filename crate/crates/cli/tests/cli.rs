use std::process::{Command, Output};

fn qbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbound")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn quadric_bundle_bound() {
    let o = qbound(&["bound", "quadric-bundle", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("d <= 2963; alternative: contained in degree-8 fivefold"), "{s}");
    assert!(s.contains("A = 11/196, B = 7/108, fold_degree = 8"), "{s}");
    assert!(s.contains("3*d^3 - 8881*d^2 - 29706*d + 893872 <= 0"), "{s}");
}

#[test]
fn quadric_bundle_other_n() {
    let o = qbound(&["bound", "quadric-bundle", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fold_degree = 3"));
}

#[test]
fn general_type_bound() {
    let o = qbound(&["bound", "general-type"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("minimal k = 47; case-1 d <= 12"), "{s}");
    assert!(s.contains("coeff_i = -1/84, coeff_ii = -5/564, passes"), "{s}");
    let o = qbound(&["bound", "general-type", "--k", "40"]);
    assert!(stdout(&o).contains("coeff_i = undefined"));
}

#[test]
fn hypersurface_bound() {
    let o = qbound(&["bound", "hypersurface", "--sigma", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("leading coefficient 1/1920"), "{s}");
    assert!(s.contains("crossover d = 8 (estimate: true)"), "{s}");
}

#[test]
fn eval_examples() {
    let o = qbound(&["eval", "--context", "bundle", "--expr", "H^3 * p*(D)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree: 3*y - 1/2*z"));
    let o = qbound(&["eval", "--context", "bundle", "--expr", "H^3 p*(D)", "--bind", "y=2,z=4"]);
    assert!(stdout(&o).contains("degree: 4"), "{}", stdout(&o));
    let o = qbound(&["eval", "--context", "q6", "--expr", "H^4", "--bind", "d=6"]);
    assert!(stdout(&o).contains("degree: 6"));
}

#[test]
fn hilbert_q4() {
    let o = qbound(&["hilbert", "--d", "2", "--g", "0", "--chi-s", "1", "--chi-x3", "1", "--chi-x", "1", "--at", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("chi(O_X(1)) = 6"), "{s}");
    assert!(s.contains("K^4 = 512"), "{s}");
}

#[test]
fn verify_exit_zero_and_json() {
    let o = qbound(&["verify", "--suite", "bundle", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.ends_with('\n'));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["suite"], "bundle");
    assert_eq!(v["summary"]["failed"], 0);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"prop5.10.backsub"));
}

#[test]
fn verify_text_is_ascii() {
    let o = qbound(&["verify", "--suite", "sec4", "--fail-fast"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.is_ascii());
    assert!(s.contains("LEDGER sec4.hodge.a"), "{s}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--suite", "sec5"],
        vec!["bound", "hypersurface"],
        vec!["bound", "hypersurface", "--sigma", "0"],
        vec!["eval", "--context", "q6", "--expr", "H^^2"],
        vec!["eval", "--context", "q6", "--expr", "R"],
        vec!["eval", "--context", "q6", "--expr", "H", "--bind", "d"],
        vec!["hilbert", "--d", "0", "--g", "0", "--chi-s", "0", "--chi-x3", "0", "--chi-x", "0"],
        vec!["frobnicate"],
    ] {
        let o = qbound(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn parse_error_reports_position() {
    let o = qbound(&["eval", "--context", "bundle", "--expr", "H^^2"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, column 3"), "{err}");
}
