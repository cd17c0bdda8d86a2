//! Acceptance suite: recompute everything for A₃, B₃ and C₃ once and gate
//! each verification area on its checks. Run with `--nocapture` to see the
//! per-area summary lines.

use std::sync::OnceLock;

use triangle_cone::verify::{verify, Report, Topic};
use triangle_cone_core::rootsys::Family;

static REPORT: OnceLock<Report> = OnceLock::new();

fn report() -> &'static Report {
    REPORT.get_or_init(|| {
        verify(&[Family::A, Family::B, Family::C]).expect("verification suite runs to completion")
    })
}

fn gate(topic: Topic) {
    let checks: Vec<_> = report().checks.iter().filter(|c| c.topic == topic).collect();
    assert!(!checks.is_empty(), "no checks ran for {topic:?}");
    let passed = checks.iter().filter(|c| c.passed).count();
    let ok = passed == checks.len();
    println!(
        "[{}] {}: {passed}/{} checks",
        if ok { "PASS" } else { "FAIL" },
        topic.title(),
        checks.len()
    );
    for c in checks.iter().filter(|c| !c.passed) {
        println!("    failed: {}: {}", c.name, c.details);
    }
    assert!(ok, "{} failed ({passed}/{} checks)", topic.title(), checks.len());
}

#[test]
fn weyl_and_coset_structure() {
    gate(Topic::Weyl);
}

#[test]
fn schubert_polynomials_mod_i() {
    gate(Topic::Polynomials);
}

#[test]
fn multiplication_tables() {
    gate(Topic::Products);
}

#[test]
fn spin_sp_proportionality() {
    gate(Topic::Proportionality);
}

#[test]
fn inequality_generation() {
    gate(Topic::Inequalities);
}

#[test]
fn cone_facet_analysis() {
    gate(Topic::Facets);
}

#[test]
fn extreme_ray_generators() {
    gate(Topic::Rays);
}

#[test]
fn property_suites() {
    gate(Topic::Properties);
}
