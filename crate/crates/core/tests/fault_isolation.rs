//! Negative controls: corrupting a single entry must make exactly the check that
//! owns it fail.

use std::collections::BTreeMap;

use cubic_brauer::geometry::{LineFamily, LineLabel};
use cubic_brauer::suite::{full_report, run_check, Fault, ReferenceTables, SuiteInput, CHECK_NAMES};
use serde_json::Value;

fn slices(t: &ReferenceTables) -> BTreeMap<&'static str, Value> {
    BTreeMap::from([
        ("geometry", serde_json::to_value(&t.geometry).unwrap()),
        ("generators", serde_json::to_value(&t.generators).unwrap()),
        ("theorem1", serde_json::to_value(&t.theorem1).unwrap()),
        ("step1", serde_json::to_value(&t.step1).unwrap()),
        ("steps2to4", serde_json::to_value(&t.steps2to4).unwrap()),
    ])
}

#[test]
fn every_table_entry_is_caught_by_its_owner_only() {
    let reference = ReferenceTables::default();
    let base = slices(&reference);
    let entries = reference.entries();
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = entries.len().div_ceil(threads);
    let failures: Vec<String> = std::thread::scope(|scope| {
        let handles: Vec<_> = entries
            .chunks(chunk)
            .map(|part| {
                let base = &base;
                scope.spawn(move || {
                    let mut bad = Vec::new();
                    for (name, owner) in part {
                        let mut input = SuiteInput::default();
                        assert!(input.inject(&Fault::Table(name.clone())), "{name} not perturbable");
                        // a check reads only its own slice, so the other checks see
                        // exactly the reference data
                        for (check, value) in slices(&input.tables) {
                            if (check == *owner) == (value == base[check]) {
                                bad.push(format!("{name}: slice {check} changed unexpectedly"));
                            }
                        }
                        let report = run_check(owner, &input).unwrap();
                        if report.passed() {
                            bad.push(format!("{name}: {owner} still passes"));
                        }
                    }
                    bad
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    assert!(failures.is_empty(), "{failures:#?}");
}

fn failing(input: &SuiteInput) -> Vec<String> {
    full_report(input).checks.into_iter().filter(|c| !c.passed()).map(|c| c.name).collect()
}

#[test]
fn one_fault_per_check_flips_exactly_that_check() {
    let reference = ReferenceTables::default();
    for owner in CHECK_NAMES {
        let (name, _) = reference.entries().into_iter().find(|(_, o)| *o == owner).unwrap();
        let mut input = SuiteInput::default();
        input.inject(&Fault::Table(name.clone()));
        assert_eq!(failing(&input), vec![owner.to_string()], "fault {name}");
    }
}

#[test]
fn a_flipped_incidence_fails_only_geometry_and_names_the_edge() {
    let a = LineLabel::new(LineFamily::Ldp, 0);
    let b = LineLabel::new(LineFamily::L, 1);
    let mut input = SuiteInput::default();
    assert!(input.inject(&Fault::Edge(a, b)));
    let report = full_report(&input);
    let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed()).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].name, "geometry");
    let message = failed[0].failure.as_deref().unwrap();
    assert!(message.contains(&a.key()) && message.contains(&b.key()), "{message}");
}

#[test]
fn faults_parse_from_their_names() {
    assert_eq!(Fault::parse("geometry.degree"), Some(Fault::Table("geometry.degree".into())));
    assert!(matches!(Fault::parse("edge:L0,Ldp1"), Some(Fault::Edge(..))));
    assert_eq!(Fault::parse("nonsense"), None);
}
