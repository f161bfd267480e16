use std::collections::BTreeSet;

use finring::verify::{self, OPERATIONS, SCENARIOS};

#[test]
fn scenarios_pass_and_cover_the_api() {
    let reports = verify::run_all().unwrap();
    let names: BTreeSet<&str> = reports.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, SCENARIOS.into_iter().collect());
    for r in &reports {
        assert!(r.passed, "{r}");
        assert!(r.to_string().starts_with(&format!("RESULT {} PASS", r.name)));
    }
    let touched: BTreeSet<&str> = reports.iter().flat_map(|r| r.touched.iter().copied()).collect();
    let missing: Vec<&str> = OPERATIONS.iter().copied().filter(|op| !touched.contains(op)).collect();
    assert!(missing.is_empty(), "not exercised by any scenario: {missing:?}");
}

#[test]
fn recorded_operations_are_really_called() {
    // every listed operation must appear as a call in the scenario code
    let source = include_str!("../src/verify.rs");
    let body = &source[source.find("impl ScenarioReport").unwrap()..];
    for name in OPERATIONS {
        // two operations go by shorter function names
        let op = match name {
            "has_identity" => "identity",
            "is_nilpotent_ring" => "nilpotency_index",
            other => other,
        };
        let called = [format!("{op}("), format!("{op}::"), format!(".{op}(")]
            .iter()
            .any(|pat| body.contains(pat.as_str()));
        assert!(called, "{name} is recorded but never called");
    }
}

#[test]
fn unknown_scenarios_are_rejected() {
    assert!(verify::run("nope", 2).is_err());
    assert!(verify::run("prop5", 4).is_err());
}
