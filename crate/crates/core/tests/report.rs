use std::collections::HashSet;

use serde_json::Value;

use qbound_core::report::{Status, VerificationReport, REPORT_SCHEMA};
use qbound_core::suite::{run_suite, SuiteName, SuiteOptions, TOTAL_CHECKS};

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn all() -> VerificationReport {
    run_suite(SuiteName::All, &SuiteOptions::default())
}

#[test]
fn all_suite_runs_every_check_once() {
    let r = all();
    assert_eq!(r.checks.len(), TOTAL_CHECKS);
    assert_eq!(r.summary.total, TOTAL_CHECKS);
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.iter().collect::<HashSet<_>>().len(), ids.len());
    assert_eq!(r.summary.failed, 0, "{}", r.to_text());
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn suites_partition_all() {
    let total: usize = [SuiteName::Q6, SuiteName::Sec3, SuiteName::Sec4, SuiteName::Bundle]
        .into_iter()
        .map(|s| run_suite(s, &SuiteOptions::default()).checks.len())
        .sum();
    assert_eq!(total, TOTAL_CHECKS);
}

#[test]
fn bundle_backsubstitution_passes() {
    let r = run_suite(SuiteName::Bundle, &SuiteOptions::default());
    assert_eq!(r.check("prop5.10.backsub").unwrap().status, Status::Pass);
}

#[test]
fn json_validates_against_schema() {
    let v = validator();
    for s in SuiteName::ALL {
        let r = run_suite(s, &SuiteOptions::default());
        let json: Value = serde_json::from_str(&r.to_json()).unwrap();
        let errors: Vec<String> = v.iter_errors(&json).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{s}: {errors:?}");
    }
}

#[test]
fn schema_rejects_fail_without_residual() {
    let v = validator();
    let mut json: Value = serde_json::from_str(&all().to_json()).unwrap();
    let check = &mut json["checks"][0];
    check["status"] = Value::from("fail");
    check.as_object_mut().unwrap().remove("residual");
    check.as_object_mut().unwrap().remove("witness");
    assert!(!v.is_valid(&json));
    json["checks"][0]["residual"] = Value::from("d - 1");
    assert!(v.is_valid(&json));
}

#[test]
fn ledger_checks_carry_residuals() {
    for c in &all().checks {
        if c.status != Status::Pass {
            assert!(c.residual.is_some() || c.witness.is_some(), "{}", c.id);
        }
    }
}

#[test]
fn deterministic_modulo_timing() {
    let (a, b) = (all().without_timing(), all().without_timing());
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
    let ff = run_suite(SuiteName::All, &SuiteOptions { fail_fast: true }).without_timing();
    assert_eq!(ff, a);
}

#[test]
fn text_report_is_seven_bit() {
    let t = all().to_text();
    assert!(t.is_ascii());
    assert!(t.lines().last().unwrap().starts_with("total 77"));
}

#[test]
fn context_hashes_present() {
    let r = all();
    for name in ["q6", "q6-primitive", "bundle", "bundle-w"] {
        assert_eq!(r.context_hashes[name].len(), 64, "{name}");
    }
}
