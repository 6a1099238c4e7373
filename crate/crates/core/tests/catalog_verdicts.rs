use normbasis::probe::{default_catalog, jacobson_radical, run_all, Claim, Status};
use normbasis::Limits;

#[test]
fn default_catalog_has_no_counterexamples() {
    let catalog = default_catalog().unwrap();
    let limits = Limits::default();
    for entry in &catalog.entries {
        let a = &entry.algebra;
        let (survey, verdicts) = run_all(a, entry.expected.as_ref(), &limits).unwrap();
        for v in &verdicts {
            assert_ne!(v.status, Status::Falsified, "{}: {v:?}", a.name());
        }
        let status = |c: Claim| verdicts.iter().find(|v| v.claim == c).map(|v| v.status);
        // Exceptions happen exactly where the flags say they may.
        assert_eq!(
            status(Claim::UnitAvoidance) == Some(Status::ExceptionWitnessed),
            a.has_f2_cube_factor(),
            "{}",
            a.name()
        );
        assert_eq!(
            status(Claim::UnitContainment) == Some(Status::ExceptionWitnessed),
            a.has_f2_square_factor(),
            "{}",
            a.name()
        );
        let t = survey.tally();
        assert_eq!(
            t.ideal + t.mixed + t.avoids_units + t.contains_units,
            survey.records.len()
        );
        let j = jacobson_radical(a).unwrap();
        // Every radical element is nilpotent, so the radical never meets U.
        assert!(j.len() < a.dim());
    }
}

#[test]
fn catalog_tallies_are_reproducible() {
    let limits = Limits::default();
    let run = || {
        default_catalog()
            .unwrap()
            .entries
            .iter()
            .map(|e| run_all(&e.algebra, None, &limits).unwrap().0.tally())
            .collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}
