use graphbt::corpus::random_spec;
use graphbt::{run, verify_report, Goal, Mode, ProblemSpec, ResultReport, Solutions};
use proptest::prelude::*;

#[test]
fn defaults_fill_in() {
    let sp = ProblemSpec::from_json(r#"{"degree": 3, "constraints": [{"type": "set_stab", "set": [1]}]}"#).unwrap();
    assert_eq!(sp.goal, Goal::All);
    assert_eq!(sp.mode, Mode::Strong);
    assert_eq!(sp.seed, 0);
}

#[test]
fn rejects_bad_points() {
    assert!(ProblemSpec::from_json(r#"{"degree": 3, "constraints": [{"type": "set_stab", "set": [4]}]}"#).is_err());
    assert!(ProblemSpec::from_json(r#"{"degree": 3, "constraints": [{"type": "set_stab", "set": [0]}]}"#).is_err());
    assert!(ProblemSpec::from_json(r#"{"degree": 3, "constraints": [{"type": "centralise", "perm": "(1,5)"}]}"#).is_err());
    assert!(ProblemSpec::from_json(r#"{"degree": 3, "constraints": [{"type": "nope"}]}"#).is_err());
}

#[test]
fn labelled_arcs_and_mixed_labels() {
    let sp = ProblemSpec::from_json(
        r#"{"degree": 3, "constraints": [{"type": "digraph_auto",
            "digraph": {"vertex_labels": [1, "a", [1, "b"]], "arcs": [[1, 2], [2, 3, "x"], [3, 1, 7]]}}]}"#,
    )
    .unwrap();
    let r = run(&sp, true).unwrap();
    assert_eq!(r.oracle_agrees, Some(true));
    assert_eq!(r.solution_set().unwrap().len(), 1);
}

#[test]
fn group_report_shape() {
    let sp = ProblemSpec::from_json(
        r#"{"degree": 4, "goal": "group", "constraints": [{"type": "set_stab", "set": [1, 2]}]}"#,
    )
    .unwrap();
    let r = run(&sp, false).unwrap();
    let Solutions::Group { group: Some(g), representative } = &r.result else { panic!("expected a group") };
    assert_eq!(g.order, "4");
    assert!(representative.is_some());
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["result"]["kind"], "group");
    assert!(verify_report(&sp, &r).unwrap());
}

#[test]
fn empty_group_goal() {
    let sp = ProblemSpec::from_json(
        r#"{"degree": 4, "goal": "group", "constraints": [{"type": "set_transport", "from": [1], "to": [1, 2]}]}"#,
    )
    .unwrap();
    let r = run(&sp, true).unwrap();
    assert!(matches!(r.result, Solutions::Group { group: None, .. }));
    assert_eq!(r.oracle_agrees, Some(true));
}

#[test]
fn tampered_report_fails_verification() {
    let sp = ProblemSpec::from_json(r#"{"degree": 3, "constraints": [{"type": "set_stab", "set": [1]}]}"#).unwrap();
    let r = run(&sp, false).unwrap();
    let json = r.to_json().replace("(2,3)", "(1,2)");
    let bad = ResultReport::from_json(&json).unwrap();
    assert!(!verify_report(&sp, &bad).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spec_json_round_trips(seed in any::<u64>(), n in 2usize..7, g in 0usize..3, id in any::<bool>()) {
        let goal = [Goal::All, Goal::Single, Goal::Group][g];
        let sp = random_spec(n, goal, Mode::Orbital, id, seed);
        prop_assert_eq!(ProblemSpec::from_json(&sp.to_json()).unwrap(), sp);
    }

    #[test]
    fn report_json_round_trips(seed in any::<u64>(), n in 2usize..6, g in 0usize..3) {
        let goal = [Goal::All, Goal::Single, Goal::Group][g];
        let sp = random_spec(n, goal, Mode::Strong, false, seed);
        let r = run(&sp, false).unwrap();
        let back = ResultReport::from_json(&r.to_json()).unwrap();
        prop_assert_eq!(&back.result, &r.result);
        prop_assert_eq!(&back.stats, &r.stats);
        prop_assert!(verify_report(&sp, &back).unwrap());
    }
}
