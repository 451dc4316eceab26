use cubic_brauer::suite::{full_report, SuiteInput, CHECK_NAMES};

#[test]
fn every_check_passes_on_the_reference_tables() {
    let report = full_report(&SuiteInput::default());
    for c in &report.checks {
        assert!(c.passed(), "{}: {:?}", c.name, c.failure);
    }
    assert_eq!(report.checks.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(), CHECK_NAMES);
    assert!(report.implication.certified);
}
