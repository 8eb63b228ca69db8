mod common;

use common::{pythagorean, random_op, rel_diff};
use num_complex::Complex64;
use paralg::algebra::{check_axioms, AlgebraFile, CheckOptions};
use paralg::catalog::{build_su11_extension, SU11ExtensionParams};
use paralg::fock::{graded_bracket, op_algebra, SparseOperator};
use paralg::grading::BracketKind::{Anticommutator as Anti, Commutator as Comm};
use paralg::grading::{bracket_kind, Degree};
use paralg::ops::{OpId, SYSTEM_FAMILIES};
use paralg::scalar::Scalar;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn degree() -> impl Strategy<Value = Degree> {
    (0usize..4).prop_map(|i| Degree::ALL[i])
}

fn triple(seed: u64, dim: usize, gs: [Degree; 3]) -> [SparseOperator; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gs.map(|g| random_op(&mut rng, dim, 0.3, g))
}

fn br(x: &SparseOperator, y: &SparseOperator) -> SparseOperator {
    graded_bracket(x, y).unwrap()
}

fn sum(terms: &[(f64, &SparseOperator)]) -> SparseOperator {
    let t: Vec<(Complex64, &SparseOperator)> = terms.iter().map(|&(c, o)| (Complex64::new(c, 0.0), o)).collect();
    SparseOperator::lincomb(terms[0].1.dim(), &t).unwrap()
}

proptest! {
    #[test]
    fn degrees_form_klein_group(a in degree(), b in degree(), c in degree()) {
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a + a, Degree::ZERO);
        prop_assert_eq!(a.dot(b), b.dot(a));
        // the sign factor is a bicharacter
        prop_assert_eq!(a.sign(b + c), a.sign(b) * a.sign(c));
        prop_assert_eq!(bracket_kind(a, b), bracket_kind(b, a));
    }

    #[test]
    fn half_lattice_rounding_is_nearest(re in -40i64..40, im in -40i64..40, dx in -0.2f64..0.2, dy in -0.2f64..0.2) {
        let z = Complex64::new(re as f64 / 2.0 + dx, im as f64 / 2.0 + dy);
        let (s, dist) = Scalar::round_to_half_lattice(z);
        prop_assert_eq!(s, Scalar::Exact(paralg::scalar::GaussianRational::from_fracs((re, 2), (im, 2))));
        prop_assert!((dist - Complex64::new(dx, dy).norm()).abs() < 1e-12);
    }

    #[test]
    fn scalar_text_round_trip(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
        let s = &Scalar::ratio(a, b) + &(&Scalar::i() * &Scalar::ratio(c, d));
        let (re, im) = s.to_parts();
        prop_assert_eq!(Scalar::from_parts(&re, &im).unwrap(), s);
    }

    #[test]
    fn graded_bracket_sign_rule(seed in any::<u64>(), gs in [degree(), degree(), degree()]) {
        let [x, y, _] = triple(seed, 6, gs);
        // u∘v = −(−1)^{g(u)·g(v)} v∘u
        let flipped = br(&y, &x).scale(Complex64::new(-(x.degree().sign(y.degree()) as f64), 0.0));
        prop_assert!(rel_diff(&br(&x, &y), &flipped) < 1e-12);
        prop_assert_eq!(br(&x, &y).degree(), x.degree() + y.degree());
    }

    #[test]
    fn double_bracket_identities(seed in any::<u64>()) {
        let [a, b, c] = triple(seed, 7, [Degree::ZERO; 3]);
        let ob = |x: &SparseOperator, y: &SparseOperator, k| op_algebra(x, y, k).unwrap();
        let ids = [
            sum(&[(1.0, &ob(&a, &ob(&b, &c, Comm), Comm)), (1.0, &ob(&b, &ob(&c, &a, Comm), Comm)), (1.0, &ob(&c, &ob(&a, &b, Comm), Comm))]),
            sum(&[(1.0, &ob(&a, &ob(&b, &c, Anti), Comm)), (1.0, &ob(&b, &ob(&c, &a, Anti), Comm)), (1.0, &ob(&c, &ob(&a, &b, Anti), Comm))]),
            sum(&[(1.0, &ob(&a, &ob(&b, &c, Anti), Comm)), (1.0, &ob(&b, &ob(&c, &a, Comm), Anti)), (-1.0, &ob(&c, &ob(&a, &b, Comm), Anti))]),
            sum(&[(1.0, &ob(&a, &ob(&b, &c, Comm), Comm)), (1.0, &ob(&b, &ob(&c, &a, Anti), Anti)), (-1.0, &ob(&c, &ob(&a, &b, Anti), Anti))]),
        ];
        for id in &ids {
            prop_assert!(id.max_abs() < 1e-12, "residual {}", id.max_abs());
        }
    }

    #[test]
    fn graded_jacobi_for_tagged_operators(seed in any::<u64>(), gs in [degree(), degree(), degree()]) {
        let [u, v, w] = triple(seed, 6, gs);
        let s = |x: &SparseOperator, y: &SparseOperator| x.degree().sign(y.degree()) as f64;
        let j = sum(&[
            (s(&u, &w), &br(&u, &br(&v, &w))),
            (s(&v, &u), &br(&v, &br(&w, &u))),
            (s(&w, &v), &br(&w, &br(&u, &v))),
        ]);
        prop_assert!(j.max_abs() < 1e-12, "residual {}", j.max_abs());
    }

    #[test]
    fn adjoint_reverses_products(seed in any::<u64>()) {
        let [x, y, _] = triple(seed, 6, [Degree::ZERO; 3]);
        let lhs = x.mul(&y).unwrap().adjoint();
        let rhs = y.adjoint().mul(&x.adjoint()).unwrap();
        prop_assert!(rel_diff(&lhs, &rhs) < 1e-14);
        prop_assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn su11_axioms_hold_for_rational_modulus_parameters(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = SU11ExtensionParams::new(pythagorean(&mut rng), pythagorean(&mut rng), pythagorean(&mut rng));
        let spec = build_su11_extension(&p);
        let suite = check_axioms(&spec, &CheckOptions::default());
        prop_assert!(suite.passed, "{:?}", p);
        let text = AlgebraFile::from_spec(&spec).to_json();
        let back = AlgebraFile::from_json(&text).unwrap().to_spec().unwrap().0;
        prop_assert_eq!(AlgebraFile::from_spec(&back).to_json(), text);
    }

    #[test]
    fn operator_names_parse_back(m in 1usize..4, n in 1usize..4) {
        for id in OpId::enumerate(m, n, &SYSTEM_FAMILIES) {
            let back: OpId = id.to_string().parse().unwrap();
            prop_assert_eq!(back, id);
        }
    }
}
