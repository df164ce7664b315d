use std::collections::HashSet;

use mu_lab::identities::{
    coverage_rows, evaluate_identity, family, find, registry, run_suite, sample_point, suite_members, DomainSpec,
    Suite,
};
use mu_lab::Error;

#[test]
fn coverage_rows_name_registered_checks() {
    let rows = coverage_rows();
    assert!(rows.len() > 100);
    for (tag, id, suite) in &rows {
        let members = family(id);
        assert!(!members.is_empty(), "coverage row {tag} -> {id} has no check");
        assert!(Suite::parse(suite).is_some(), "unknown suite {suite}");
        assert!(members.iter().all(|m| m.suite.name().eq_ignore_ascii_case(suite)), "{id} not in {suite}");
    }
}

#[test]
fn every_registered_tag_is_covered() {
    let covered: HashSet<String> = coverage_rows().into_iter().map(|(t, _, _)| t).collect();
    for i in registry() {
        assert!(covered.contains(&i.tag), "{} ({}) missing from the coverage table", i.id, i.tag);
    }
}

#[test]
fn ids_are_unique_and_plentiful() {
    let ids: HashSet<&str> = registry().iter().map(|i| i.id.as_str()).collect();
    assert_eq!(ids.len(), registry().len());
    assert!(ids.len() >= 60);
}

#[test]
fn families_resolve_to_variants() {
    assert_eq!(family("MNCOMP-4").len(), 2);
    assert_eq!(family("RES-MONO").len(), 4);
    assert_eq!(find("MU-1").unwrap().id, "MU-1");
    assert!(matches!(find("NO-SUCH-ID"), Err(Error::Unknown(_))));
}

#[test]
fn evaluate_picks_member_matching_the_point() {
    // MULMUA-1.N1 takes two u's, .N3 takes four
    let spec = find("MULMUA-1.N3").unwrap().domain.clone();
    let p = sample_point(&spec, 3, 0).unwrap();
    assert!(evaluate_identity("MULMUA-1", &p).unwrap() < 1e-9);
}

#[test]
fn all_excludes_adjudication() {
    let all = suite_members("all").unwrap();
    assert!(all.iter().all(|i| i.suite != Suite::Adjudication));
    assert!(!suite_members("adjudication").unwrap().is_empty());
    assert!(matches!(suite_members("nope"), Err(Error::Unknown(_))));
}

#[test]
fn zero_samples_pass_with_note() {
    let reps = run_suite("all", 1, 0, None).unwrap();
    assert!(!reps.is_empty());
    for r in reps {
        assert!(r.pass);
        assert_eq!(r.note.as_deref(), Some("no samples"));
    }
}

#[test]
fn degenerate_box_exhausts_sampling() {
    // u = 0 is a zero of vartheta, so every draw is rejected
    let spec = DomainSpec::standard(1).u_box((0.0, 0.0), (0.0, 0.0));
    assert!(matches!(sample_point(&spec, 1, 0), Err(Error::SamplingExhausted(_))));
}

#[test]
fn suite_runs_are_deterministic() {
    let a: Vec<_> = run_suite("theta", 5, 3, None).unwrap().iter().map(|r| r.without_timing()).collect();
    let b: Vec<_> = run_suite("theta", 5, 3, None).unwrap().iter().map(|r| r.without_timing()).collect();
    assert_eq!(a, b);
}
