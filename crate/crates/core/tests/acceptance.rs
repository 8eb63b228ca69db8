//! Acceptance criteria A1–A10. Runs without the libtest harness so that each
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use clap::Parser;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use paralg::algebra::{check_axioms, verify_homomorphism, AlgebraFile, AlgebraSpec, CheckOptions};
use paralg::catalog::{
    build_para_lie_super, build_paraboson_algebra, build_su11_extension, build_su11_to_paraboson_map,
    SU11ExtensionParams,
};
use paralg::cli::{run, Cli};
use paralg::fock::{build_green_rep, graded_bracket, op_algebra, GreenRep, Manifest, ModeLayout, SparseOperator};
use paralg::grading::{BracketKind, Degree};
use paralg::ops::{OpId, SYSTEM_FAMILIES};
use paralg::scalar::Scalar;
use paralg::verify::{
    classify_subalgebras, eval_relations, extract_structure_constants, instance_sides, parse_relation_set,
    reduction_check_p1, sets, suite_closure, suite_eq12, supercharge_spectra, EvalOptions, EXTRACTION_TOL,
};

type Outcome = Result<String, String>;

const RELATION_TOL: f64 = 1e-9;
const MATRIX_TOL: f64 = 1e-10;
const PSD_FACTOR: f64 = 1e-10;

fn rep(m: usize, n: usize, p: usize, c: usize) -> Result<GreenRep, String> {
    let layout = ModeLayout::new(m, n, p, c).map_err(|e| e.to_string())?;
    build_green_rep(&layout).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn a1_axiom_suite() -> Outcome {
    let start = Instant::now();
    let opts = CheckOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
    let mut params = vec![SU11ExtensionParams::paraboson_point()];
    for _ in 0..5 {
        params.push(SU11ExtensionParams::new(
            common::pythagorean(&mut rng),
            common::pythagorean(&mut rng),
            common::pythagorean(&mut rng),
        ));
    }
    for p in &params {
        let spec = build_su11_extension(p);
        ensure(spec.is_exact(), "inexact structure constants")?;
        let s = check_axioms(&spec, &opts);
        ensure(s.grading.passed, format!("grading fails at {p:?}"))?;
        ensure(
            s.supersymmetrization.passed,
            format!("supersymmetrization fails at {p:?}"),
        )?;
        ensure(s.involution.passed, format!("involution fails at {p:?}"))?;
        ensure(
            s.jacobi.as_ref().is_some_and(|j| j.report.passed),
            format!("Jacobi fails at {p:?}"),
        )?;
    }
    within(start, Duration::from_secs(1))?;

    let spec = build_su11_extension(&params[0]);
    let eps = Scalar::ratio(1, 1000);
    let d = spec.dim();
    let mut undetected = 0;
    let mut perturbed = 0;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let c = spec.structure(i, j).coeff(k);
                let bumped = spec.with_constant(i, j, k, &c + &eps);
                perturbed += 1;
                let s = check_axioms(&bumped, &opts);
                let found = s.grading.total_violations
                    + s.supersymmetrization.total_violations
                    + s.jacobi.as_ref().map_or(0, |j| j.report.total_violations);
                if found == 0 && s.jacobi_refused.is_none() {
                    undetected += 1;
                }
            }
        }
    }
    ensure(
        undetected == 0,
        format!("{undetected} of {perturbed} perturbations went unreported"),
    )?;
    Ok(format!(
        "{} parameter points exact; {perturbed} single-constant perturbations all reported",
        params.len()
    ))
}

fn a2_homomorphism() -> Outcome {
    let start = Instant::now();
    let map = build_su11_to_paraboson_map();
    let r = verify_homomorphism(&map, &CheckOptions::default());
    ensure(r.passed, format!("{} homomorphism violations", r.total_violations))?;

    let pb = build_paraboson_algebra();
    let e = |n: &str| pb.elem(n).map_err(|e| e.to_string());
    let (a, adag) = (e("a")?, e("adag")?);
    let m2 = pb.bracket(&adag, &a);
    let b2 = pb.bracket(&a, &a);
    let checks = [
        ("[{a†,a},a] = −2a", pb.bracket(&m2, &a), a.scaled(&Scalar::int(-2))),
        ("[{a,a},a] = 0", pb.bracket(&b2, &a), paralg::algebra::Element::zero()),
        ("[{a,a},a†] = 4a", pb.bracket(&b2, &adag), a.scaled(&Scalar::int(4))),
    ];
    for (name, lhs, rhs) in checks {
        ensure(lhs == rhs, format!("{name} fails: got {}", pb.format_element(&lhs)))?;
    }
    // the same relations on order-2 Green matrices
    let numeric =
        eval_relations(&rep(1, 0, 2, 6)?, &sets::eq11(), &EvalOptions::default()).map_err(|e| e.to_string())?;
    ensure(
        numeric.passed,
        format!("matrix check residual {:e}", numeric.max_relative_residual),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("map exact; three single-mode relations hold as structure constants and on matrices".into())
}

fn a3_trilinear() -> Outcome {
    let start = Instant::now();
    let opts = EvalOptions::default();
    let mut worst: f64 = 0.0;
    for (m, n, p, c) in [(1, 1, 1, 6), (1, 1, 2, 6), (2, 1, 2, 4)] {
        let r = suite_eq12(&rep(m, n, p, c)?, &opts).map_err(|e| e.to_string())?;
        ensure(
            r.passed && r.max_relative_residual < RELATION_TOL,
            format!("({m},{n},{p},{c}): residual {:e}", r.max_relative_residual),
        )?;
        worst = worst.max(r.max_relative_residual);
    }

    let ccr = parse_relation_set(
        r#"[{"name": "ccr", "lhs": {"kind": "comm", "args": [{"gen": "a", "indices": ["k"]}, {"gen": "adag", "indices": ["k"]}]},
             "rhs": [{"coeff": "1", "gen": "1"}], "ranges": {"k": 1}}]"#,
    )
    .map_err(|e| e.to_string())?;
    let r2 = rep(1, 1, 2, 6)?;
    let report = eval_relations(
        &r2,
        &ccr,
        &EvalOptions {
            conjugates: false,
            ..opts
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(!report.passed, "[a,a†] = 1 unexpectedly holds at p = 2")?;
    let asg: BTreeMap<String, usize> = [("k".to_string(), 1)].into();
    let (lhs, rhs) = instance_sides(&r2, &ccr[0], &asg).map_err(|e| e.to_string())?;
    let v = r2.vacuum();
    let at_vacuum = lhs.get(v, v) - rhs.get(v, v);
    ensure(
        (at_vacuum - Complex64::new(1.0, 0.0)).norm() < 1e-12,
        format!("vacuum residual {at_vacuum}"),
    )?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "max residual {worst:.1e}; counter-check fails with residual {:.3} at the vacuum",
        at_vacuum.re
    ))
}

fn a4_closure() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut instances = 0;
    for (m, n) in [(1, 2), (2, 1)] {
        let r = suite_closure(&rep(m, n, 2, 5)?, &EvalOptions::default()).map_err(|e| e.to_string())?;
        ensure(
            r.passed && r.max_relative_residual < RELATION_TOL,
            format!("({m},{n},2,5): residual {:e}", r.max_relative_residual),
        )?;
        worst = worst.max(r.max_relative_residual);
        instances += r.instances;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{instances} instances, max residual {worst:.1e}"))
}

fn a5_theorem_oracle() -> Outcome {
    let start = Instant::now();
    let r = rep(1, 1, 2, 6)?;
    let basis = OpId::enumerate(1, 1, &SYSTEM_FAMILIES);
    let (spec, report) = extract_structure_constants(&r, &basis, EXTRACTION_TOL).map_err(|e| e.to_string())?;
    ensure(
        report.passed,
        format!("extraction residual {:e}", report.max_relative_residual),
    )?;
    ensure(
        report.max_lattice_distance < EXTRACTION_TOL,
        format!("lattice distance {:e}", report.max_lattice_distance),
    )?;
    let want = build_para_lie_super(1, 1).map_err(|e| e.to_string())?;
    ensure(
        AlgebraFile::from_spec(&spec) == AlgebraFile::from_spec(&want),
        "differs from the catalog system",
    )?;
    ensure(spec.is_exact(), "recovered constants are not exact")?;
    let s = check_axioms(&spec, &CheckOptions::default());
    ensure(s.passed, "axioms fail on the recovered algebra")?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} brackets recovered, lattice distance {:.1e}",
        report.pairs, report.max_lattice_distance
    ))
}

fn a6_classification() -> Outcome {
    let mut dims = Vec::new();
    for m in 1..=2usize {
        for n in 1..=2usize {
            let c = classify_subalgebras(&rep(m, n, 2, 6)?, EXTRACTION_TOL).map_err(|e| e.to_string())?;
            let want = [
                ("parabose bilinears", m * (2 * m + 1), format!("sp({},R)", 2 * m)),
                ("parafermi bilinears", n * (2 * n - 1), format!("so({},R)", 2 * n)),
                (
                    "parabose statistics",
                    m * (2 * m + 1) + 2 * m,
                    format!("osp(1|{})", 2 * m),
                ),
                ("parafermi statistics", n * (2 * n + 1), format!("so({},R)", 2 * n + 1)),
            ];
            for (name, dim, ident) in want {
                let e = c
                    .subalgebras
                    .iter()
                    .find(|s| s.name == name)
                    .ok_or_else(|| format!("({m},{n}): {name} missing"))?;
                ensure(
                    e.closed && e.dimension == dim && e.identification == ident,
                    format!(
                        "({m},{n}) {name}: dim {} closed {} as {}",
                        e.dimension, e.closed, e.identification
                    ),
                )?;
                dims.push(dim);
            }
        }
    }
    Ok(format!("dimensions {dims:?}, all closed"))
}

fn a7_positivity() -> Outcome {
    let fixture: serde_json::Value =
        serde_json::from_str(include_str!("fixtures/h_f_spectrum.json")).map_err(|e| e.to_string())?;
    let mut mins = Vec::new();
    for p in [1, 2] {
        let s = supercharge_spectra(&rep(1, 1, p, 6)?).map_err(|e| e.to_string())?;
        let bound = -PSD_FACTOR * s.h_q.norm;
        ensure(
            s.h_q.min >= bound,
            format!("p={p}: min eig(H_Q) = {:e} below {bound:e}", s.h_q.min),
        )?;
        if p == 1 {
            ensure(
                s.h_q.min.abs() <= PSD_FACTOR,
                format!("p=1: min eig(H_Q) = {:e}, expected 0", s.h_q.min),
            )?;
        }
        let archived: Vec<f64> = fixture[format!("p{p}")]["eigenvalues"]
            .as_array()
            .ok_or("fixture missing")?
            .iter()
            .filter_map(|v| v.as_f64())
            .collect();
        let mut got = s.h_f.eigenvalues.clone();
        got.sort_by(f64::total_cmp);
        ensure(
            got.len() == archived.len() && got.iter().zip(&archived).all(|(a, b)| (a - b).abs() < 1e-9),
            format!("p={p}: H_F spectrum differs from the archived fixture"),
        )?;
        mins.push(s.h_q.min);
    }
    Ok(format!(
        "min eig(H_Q) = {:.1e} (p=1), {:.1e} (p=2); H_F matches fixture",
        mins[0], mins[1]
    ))
}

fn a8_reduction() -> Outcome {
    for (m, n) in [(1, 1), (2, 0), (0, 2)] {
        let r = reduction_check_p1(&rep(m, n, 1, 6)?, &EvalOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.passed, format!("({m},{n}): residual {:e}", r.max_relative_residual))?;
    }
    Ok("canonical relations hold at order one for (1,1), (2,0), (0,2)".into())
}

fn a9_matrix_identities() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA9);
    let mut worst: f64 = 0.0;
    let comm = BracketKind::Commutator;
    let anti = BracketKind::Anticommutator;
    for trial in 0..100 {
        let dim = rng.gen_range(4..12);
        let gs: [Degree; 3] = std::array::from_fn(|_| common::random_degree(&mut rng));
        let [a, b, c] = gs.map(|g| common::random_op(&mut rng, dim, 0.25, g));
        let ob = |x: &SparseOperator, y: &SparseOperator, k| op_algebra(x, y, k).expect("same dim");
        let scale = 1f64.max(a.max_abs() * b.max_abs() * c.max_abs() * (dim * dim) as f64);
        let combine = |terms: [(f64, SparseOperator); 3]| {
            let t: Vec<(Complex64, &SparseOperator)> =
                terms.iter().map(|(s, o)| (Complex64::new(*s, 0.0), o)).collect();
            SparseOperator::lincomb(dim, &t).expect("same dim").max_abs() / scale
        };
        let eq8 = [
            combine([
                (1.0, ob(&a, &ob(&b, &c, comm), comm)),
                (1.0, ob(&b, &ob(&c, &a, comm), comm)),
                (1.0, ob(&c, &ob(&a, &b, comm), comm)),
            ]),
            combine([
                (1.0, ob(&a, &ob(&b, &c, anti), comm)),
                (1.0, ob(&b, &ob(&c, &a, anti), comm)),
                (1.0, ob(&c, &ob(&a, &b, anti), comm)),
            ]),
            combine([
                (1.0, ob(&a, &ob(&b, &c, anti), comm)),
                (1.0, ob(&b, &ob(&c, &a, comm), anti)),
                (-1.0, ob(&c, &ob(&a, &b, comm), anti)),
            ]),
            combine([
                (1.0, ob(&a, &ob(&b, &c, comm), comm)),
                (1.0, ob(&b, &ob(&c, &a, anti), anti)),
                (-1.0, ob(&c, &ob(&a, &b, anti), anti)),
            ]),
        ];
        let gb = |x: &SparseOperator, y: &SparseOperator| graded_bracket(x, y).expect("same dim");
        let sg = |x: &SparseOperator, y: &SparseOperator| x.degree().sign(y.degree()) as f64;
        let jacobi = combine([
            (sg(&a, &c), gb(&a, &gb(&b, &c))),
            (sg(&b, &a), gb(&b, &gb(&c, &a))),
            (sg(&c, &b), gb(&c, &gb(&a, &b))),
        ]);
        for (i, r) in eq8.iter().chain([&jacobi]).enumerate() {
            ensure(
                *r < MATRIX_TOL,
                format!("triple {trial}, identity {i}: relative residual {r:e}"),
            )?;
            worst = worst.max(*r);
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("100 triples, max relative residual {worst:.1e}"))
}

fn a10_round_trips() -> Outcome {
    let specs: Vec<(&str, AlgebraSpec)> = vec![
        (
            "su11_ext",
            build_su11_extension(&SU11ExtensionParams::paraboson_point()),
        ),
        ("paraboson", build_paraboson_algebra()),
        (
            "para_lie_super_2_1",
            build_para_lie_super(2, 1).map_err(|e| e.to_string())?,
        ),
    ];
    for (name, spec) in &specs {
        let text = AlgebraFile::from_spec(spec).to_json();
        let back = AlgebraFile::from_json(&text)
            .and_then(|f| f.to_spec())
            .map_err(|e| e.to_string())?
            .0;
        ensure(
            AlgebraFile::from_spec(&back).to_json() == text,
            format!("{name}: algebra JSON changed"),
        )?;
    }

    let r = rep(1, 1, 2, 4)?;
    let text = Manifest::from_rep(&r).to_json();
    let back = Manifest::from_json(&text)
        .and_then(|m| m.to_rep())
        .map_err(|e| e.to_string())?;
    ensure(Manifest::from_rep(&back).to_json() == text, "manifest changed")?;
    for (id, x) in r.operators() {
        let y = back.op(id).map_err(|e| e.to_string())?;
        ensure(*x == *y, format!("operator {id} changed"))?;
    }

    let argv = [
        "paralg", "verify", "--set", "closure", "--order", "2", "--cutoff", "4", "--format", "json",
    ];
    let reports: Vec<String> = (0..2)
        .map(|_| {
            let cli = Cli::try_parse_from(argv).expect("valid arguments");
            run(&cli).0.stable_json()
        })
        .collect();
    ensure(reports[0] == reports[1], "JSON report differs between identical runs")?;
    Ok("algebra JSON, manifests and reports byte-stable".into())
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("A1", "axiom suite", a1_axiom_suite),
        ("A2", "homomorphism", a2_homomorphism),
        ("A3", "trilinear verification", a3_trilinear),
        ("A4", "closure", a4_closure),
        ("A5", "theorem oracle", a5_theorem_oracle),
        ("A6", "classification", a6_classification),
        ("A7", "positivity", a7_positivity),
        ("A8", "reduction", a8_reduction),
        ("A9", "matrix identities", a9_matrix_identities),
        ("A10", "round-trips", a10_round_trips),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("{id:<4} PASS  {name:<24} {detail} ({t:.2?})"),
            Err(why) => {
                failed += 1;
                println!("{id:<4} FAIL  {name:<24} {why} ({t:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
