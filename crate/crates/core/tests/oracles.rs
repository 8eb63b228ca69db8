//! Cross-checks between independent routes: relations on matrices versus
//! extracted structure constants, cutoff independence, conjugate symmetry.

use paralg::algebra::{check_axioms, CheckOptions};
use paralg::fock::{build_green_rep, GreenRep, ModeLayout};
use paralg::ops::{OpId, SYSTEM_FAMILIES};
use paralg::verify::extract_structure_constants;
use paralg::verify::{eval_relations, sets, suite_closure, suite_eq12, EvalOptions, EXTRACTION_TOL};

fn rep(m: usize, n: usize, p: usize, c: usize) -> GreenRep {
    build_green_rep(&ModeLayout::new(m, n, p, c).unwrap()).unwrap()
}

#[test]
fn trilinear_relations_imply_a_graded_algebra() {
    for (m, n, p) in [(1, 1, 1), (1, 1, 2), (2, 1, 2)] {
        let r = rep(m, n, p, 6);
        let eq12 = suite_eq12(&r, &EvalOptions::default()).unwrap();
        assert!(eq12.passed, "({m},{n},{p}): {}", eq12.max_relative_residual);
        let basis = OpId::enumerate(m, n, &SYSTEM_FAMILIES);
        let (spec, report) = extract_structure_constants(&r, &basis, EXTRACTION_TOL).unwrap();
        assert!(report.passed, "({m},{n},{p}) extraction: {:?}", report.worst_pair);
        let suite = check_axioms(&spec, &CheckOptions::default());
        assert!(suite.passed, "({m},{n},{p}) axioms");
        assert!(spec.is_exact());
    }
}

#[test]
fn doubling_the_cutoff_does_not_grow_residuals() {
    let opts = EvalOptions::default();
    let small = suite_eq12(&rep(1, 1, 2, 3), &opts).unwrap().max_relative_residual;
    let large = suite_eq12(&rep(1, 1, 2, 6), &opts).unwrap().max_relative_residual;
    assert!(large <= 10.0 * small.max(f64::EPSILON), "{small:e} -> {large:e}");

    let small = suite_closure(&rep(1, 1, 2, 4), &opts).unwrap().max_relative_residual;
    let large = suite_closure(&rep(1, 1, 2, 8), &opts).unwrap().max_relative_residual;
    assert!(large <= 10.0 * small.max(f64::EPSILON), "{small:e} -> {large:e}");
}

#[test]
fn conjugate_relations_match_their_originals() {
    let r = rep(1, 2, 2, 4);
    let report = suite_closure(&r, &EvalOptions::default()).unwrap();
    for rel in report.relations.iter().filter(|s| !s.name.ends_with('†')) {
        let conj = report.relation(&format!("{}†", rel.name)).expect("conjugate evaluated");
        assert_eq!(conj.instances, rel.instances);
        assert!(
            (conj.max_relative_residual - rel.max_relative_residual).abs() < 1e-13,
            "{}: {:e} vs {:e}",
            rel.name,
            rel.max_relative_residual,
            conj.max_relative_residual
        );
    }
}

#[test]
fn degenerate_index_instances_are_counted() {
    // [a_k, {a_l†, a_m}] over k, l, m ∈ {1, 2}: all 8 assignments, the
    // three-equal ones included.
    let r = rep(2, 0, 2, 4);
    let rels = sets::eq12();
    let report = eval_relations(
        &r,
        &rels[..1],
        &EvalOptions {
            conjugates: false,
            ..EvalOptions::default()
        },
    )
    .unwrap();
    assert_eq!(report.relations[0].instances, 8);
    assert!(report.passed);
}

#[test]
fn worker_count_does_not_change_reports() {
    let r = rep(2, 1, 2, 4);
    let run = |w| {
        let opts = EvalOptions {
            workers: Some(w),
            ..EvalOptions::default()
        };
        serde_json::to_string(&paralg::verify::with_workers(Some(w), || {
            suite_closure(&r, &opts).unwrap()
        }))
        .unwrap()
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}
