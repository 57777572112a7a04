use ssym_harmonic::verify::{check_config, run_all, run_suite, suite_names, VerifyConfig};
use ssym_harmonic::Error;

#[test]
fn default_suites_pass_and_are_deterministic() {
    let cfg = VerifyConfig::default();
    let first = run_all(&cfg).unwrap();
    assert_eq!(first.len(), suite_names().len());
    for report in &first {
        assert!(report.passed(), "{report}");
    }
    let second: Vec<String> = run_all(&cfg).unwrap().iter().map(ToString::to_string).collect();
    let first: Vec<String> = first.iter().map(ToString::to_string).collect();
    assert_eq!(first, second);
}

#[test]
fn goldens_cover_both_tables() {
    let report = run_suite("goldens", &VerifyConfig::default()).unwrap().unwrap();
    assert!(report.passed());
    assert!(report.cases >= 20, "{report}");
}

#[test]
fn low_order_is_rejected() {
    let cfg = VerifyConfig {
        order: 5,
        ..VerifyConfig::default()
    };
    assert!(matches!(check_config(&cfg), Err(Error::InsufficientOrder { .. })));
    assert!(run_all(&cfg).is_err());
}

#[test]
fn unknown_suite() {
    assert!(run_suite("no-such-suite", &VerifyConfig::default()).unwrap().is_none());
}
