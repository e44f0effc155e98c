//! Report-level behaviour of the theorem registry and the open-question hunts.

use trd_core::verify::{
    hunt_counterexamples, hunt_counterexamples_with, verify_theorem, verify_theorem_with,
    InstanceUniverse, Question, VerifyError,
};
use trd_core::{Exec, Solver, TheoremId};

#[test]
fn reports_are_byte_identical_across_runs_and_executors() {
    let solver = Solver::default();
    for id in [TheoremId::FourCrit, TheoremId::Bounds, TheoremId::Dn, TheoremId::Stems] {
        let u = id.default_universe();
        let a = verify_theorem_with(&solver, Exec::Sequential, id, &u).unwrap().to_json();
        let b = verify_theorem_with(&solver, Exec::Sequential, id, &u).unwrap().to_json();
        let c = verify_theorem_with(&solver, Exec::Parallel, id, &u).unwrap().to_json();
        assert_eq!(a, b, "{id}");
        assert_eq!(a, c, "{id}");
    }
}

#[test]
fn dead_example_passes_on_default_universe() {
    let r = verify_theorem(TheoremId::Dn, &TheoremId::Dn.default_universe()).unwrap();
    assert!(r.passed(), "{:?}", r.counterexamples);
    assert_eq!(r.instances_checked, 3);
}

#[test]
fn diameter_two_passes() {
    let r = verify_theorem(TheoremId::Diam2, &TheoremId::Diam2.default_universe()).unwrap();
    assert!(r.passed(), "{:?}", r.counterexamples);
}

#[test]
fn cartesian_products_check_six_instances() {
    let r = verify_theorem(TheoremId::KnKm, &TheoremId::KnKm.default_universe()).unwrap();
    assert!(r.passed());
    assert_eq!(r.instances_checked, 6);
}

#[test]
fn four_critical_on_all_labeled_six() {
    let u = InstanceUniverse::all_labeled(6, false, true);
    let r = verify_theorem(TheoremId::FourCrit, &u).unwrap();
    assert!(r.passed(), "{:?}", r.counterexamples);
    assert!(r.counterexamples.is_empty());
}

#[test]
fn family_bound_theorems_reject_enumerated_universes() {
    let u = InstanceUniverse::all_labeled(5, true, true);
    for id in [TheoremId::KnKm, TheoremId::Diam2, TheoremId::Dn, TheoremId::DnEdges] {
        assert!(matches!(verify_theorem(id, &u), Err(VerifyError::IncompatibleUniverse { .. })), "{id}");
    }
}

#[test]
fn hunts_find_nothing_in_small_universes() {
    let u = InstanceUniverse::all_labeled(6, false, true);
    for q in Question::ALL {
        let r = hunt_counterexamples(q, &u).unwrap();
        assert!(r.passed(), "{q}: {:?}", r.counterexamples);
        assert_eq!(r.theorem_id, q.as_str());
    }
}

#[test]
fn hunt_reports_are_deterministic() {
    let solver = Solver::default();
    let u = InstanceUniverse::RandomGnp { count: 50, n: 8, p: 0.5, seed: 3, no_isolated: true };
    let a = hunt_counterexamples_with(&solver, Exec::Sequential, Question::Q1Supercritical, &u).unwrap();
    let b = hunt_counterexamples_with(&solver, Exec::Parallel, Question::Q1Supercritical, &u).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.instances_checked, 50);
}

#[test]
fn report_json_shape() {
    let r = verify_theorem(TheoremId::KnKm, &TheoremId::KnKm.default_universe()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["theorem_id"], "T_KNKM");
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["instances_checked"], 6);
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
}
