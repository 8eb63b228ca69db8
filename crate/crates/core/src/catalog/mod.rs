//! Built-in algebras: the Z₂,₂ extension of su(1,1), the single-mode
//! paraboson algebra with the map between them, and the para-Lie
//! superalgebraic system of `M` parabosons and `N` parafermions.
//!
//! Catalog ids: `su11_ext`, `su11_ext_anticomm`, `paraboson`,
//! `para_lie_super_M_N` (e.g. `para_lie_super_2_1`).

mod para;
mod paraboson;
mod su11;

use crate::algebra::{AlgebraFile, AlgebraSpec, Meta};

pub use para::{
    build_para_lie_super, consistent_degree_assignments, para_bracket_table, table_relations, GeneratorDegrees,
};
pub use paraboson::{build_paraboson_algebra, build_su11_to_paraboson_map};
pub use su11::{
    build_su11_extension, build_su11_extension_with, involution_scalars, mat_mul, mat_scale, Mat2, PauliConstants,
    QaKind, SU11ExtensionParams, SU11_NAMES,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("a system needs at least one mode")]
    Empty,
    #[error("inconsistent relation data: {0}")]
    Inconsistent(String),
    #[error("no relation determines {} bracket(s), first {:?}", .0.len(), .0.first())]
    Incomplete(Vec<String>),
}

pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
}

pub const ENTRIES: [CatalogEntry; 4] = [
    CatalogEntry {
        id: "su11_ext",
        description: "Z2,2 extension of su(1,1), dim (3,2,2,1); Q∘a by the degree rule; parameters lambda1..3",
    },
    CatalogEntry {
        id: "su11_ext_anticomm",
        description: "the same constants with Q∘a forced to an anticommutator",
    },
    CatalogEntry {
        id: "paraboson",
        description: "single-mode paraboson algebra M, B, B†, a, a†",
    },
    CatalogEntry {
        id: "para_lie_super_M_N",
        description: "para-Lie superalgebraic system of M parabosons and N parafermions",
    },
];

/// Resolves a catalog id. The su(1,1) entries take `params`, defaulting to
/// `λ = (−i, 0, 2)`.
pub fn lookup(id: &str, params: Option<&SU11ExtensionParams>) -> Result<AlgebraFile, CatalogError> {
    let default = SU11ExtensionParams::paraboson_point();
    let p = params.unwrap_or(&default);
    let su11_meta = |id: &str| Meta {
        id: Some(id.to_string()),
        params: [
            ("lambda1".to_string(), p.lambda1.clone()),
            ("lambda2".to_string(), p.lambda2.clone()),
            ("lambda3".to_string(), p.lambda3.clone()),
        ]
        .into_iter()
        .collect(),
    };
    let plain = |id: &str| Meta {
        id: Some(id.to_string()),
        params: Default::default(),
    };
    let (spec, meta): (AlgebraSpec, Meta) = match id {
        "su11_ext" => (build_su11_extension(p), su11_meta(id)),
        "su11_ext_anticomm" => (build_su11_extension_with(p, QaKind::AsWritten), su11_meta(id)),
        "paraboson" => (build_paraboson_algebra(), plain(id)),
        _ => {
            let (m, n) = parse_para_id(id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
            (build_para_lie_super(m, n)?, plain(id))
        }
    };
    Ok(AlgebraFile::from_spec(&spec).with_meta(meta))
}

fn parse_para_id(id: &str) -> Option<(usize, usize)> {
    let rest = id.strip_prefix("para_lie_super_")?;
    let (m, n) = rest.split_once('_')?;
    Some((m.parse().ok()?, n.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        check_grading, check_involution, check_jacobi, check_supersymmetrization, count_jacobi_classes,
        subalgebra_closure, verify_homomorphism, CheckOptions,
    };
    use crate::grading::Degree;
    use crate::scalar::Scalar;

    fn all_pass(spec: &AlgebraSpec) {
        let o = CheckOptions::default();
        let g = check_grading(spec);
        assert!(g.passed, "{:?}", g.violations.first());
        let s = check_supersymmetrization(spec, &o);
        assert!(s.passed, "{:?}", s.violations.first());
        let i = check_involution(spec, &o);
        assert!(i.passed, "{:?}", i.violations.first());
        let j = check_jacobi(spec, &o).unwrap();
        assert!(j.report.passed, "{:?}", j.report.violations.first());
    }

    #[test]
    fn su11_at_paraboson_point() {
        let s = build_su11_extension(&SU11ExtensionParams::paraboson_point());
        assert!(s.is_exact());
        all_pass(&s);
        assert_eq!(count_jacobi_classes(&s), 20);
    }

    #[test]
    fn su11_as_written_fails_jacobi() {
        let s = build_su11_extension_with(&SU11ExtensionParams::paraboson_point(), QaKind::AsWritten);
        let o = CheckOptions::default();
        assert!(check_grading(&s).passed);
        assert!(check_supersymmetrization(&s, &o).passed);
        assert!(!check_jacobi(&s, &o).unwrap().report.passed);
    }

    #[test]
    fn su11_special_parameters() {
        let g = Scalar::gauss;
        for (l1, l2, l3) in [
            (g(0, 0), g(1, 2), g(3, -1)),
            (g(0, 0), g(1, 2), g(0, 0)),
            (g(0, 0), g(0, 0), g(3, -1)),
            (g(0, 0), g(0, 0), g(0, 0)),
            (g(2, 1), g(0, 0), g(0, 0)),
            (g(3, 4), g(0, 5), g(-4, 3)),
            (g(1, 1), g(1, -1), g(2, 3)),
        ] {
            all_pass(&build_su11_extension(&SU11ExtensionParams::new(l1, l2, l3)));
        }
    }

    #[test]
    fn su11_closure_examples() {
        let s = build_su11_extension(&SU11ExtensionParams::new(Scalar::one(), Scalar::one(), Scalar::one()));
        let o = CheckOptions::default();
        assert_eq!(
            subalgebra_closure(&s, &["tau1", "tau2", "tau3"], &o).unwrap(),
            (true, 3)
        );
        assert_eq!(subalgebra_closure(&s, &["Q1"], &o).unwrap(), (false, 1));
    }

    #[test]
    fn paraboson_and_map() {
        let p = build_paraboson_algebra();
        all_pass(&p);
        let (b, adag, a) = (
            p.index_of("B").unwrap(),
            p.index_of("adag").unwrap(),
            p.index_of("a").unwrap(),
        );
        assert_eq!(p.structure(b, adag), &p.combo(&[("a", Scalar::int(2))]).unwrap());
        assert_eq!(p.structure(a, a), &p.combo(&[("B", Scalar::int(2))]).unwrap());
        let map = build_su11_to_paraboson_map();
        let r = verify_homomorphism(&map, &CheckOptions::default());
        assert!(r.passed, "{:?}", r.violations.first());
        let swapped = map.with_swapped("a1", "a2").unwrap();
        assert!(!verify_homomorphism(&swapped, &CheckOptions::default()).passed);
        assert_eq!(
            map.image_of("tau3").unwrap(),
            &p.combo(&[(
                "M",
                Scalar::Exact(crate::scalar::GaussianRational::from_fracs((0, 1), (1, 2)))
            )])
            .unwrap()
        );
    }

    #[test]
    fn para_lie_super_small_systems() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (1, 0), (0, 1)] {
            let s = build_para_lie_super(m, n).unwrap();
            assert_eq!(
                s.dim(),
                crate::ops::OpId::enumerate(m, n, &crate::ops::SYSTEM_FAMILIES).len()
            );
            all_pass(&s);
        }
        assert_eq!(build_para_lie_super(0, 0).unwrap_err(), CatalogError::Empty);
    }

    #[test]
    fn para_lie_super_examples() {
        let s = build_para_lie_super(2, 2).unwrap();
        assert_eq!(s.dim(), 40);
        let br = |x: &str, y: &str| s.structure(s.index_of(x).unwrap(), s.index_of(y).unwrap()).clone();
        assert_eq!(br("a_1", "Q_1_2"), s.combo(&[("f_2", Scalar::one())]).unwrap());
        assert!(br("a_1", "Q_2_2").is_zero());
        assert_eq!(br("F_1_2", "Fdag_2_2"), s.combo(&[("Ma_2_1", Scalar::one())]).unwrap());
        assert_eq!(
            br("F_1_2", "Fdag_1_2"),
            s.combo(&[("Ma_1_1", Scalar::one()), ("Mf_2_2", Scalar::int(-1))])
                .unwrap()
        );
        let o = CheckOptions::default();
        let bose = [
            "Ma_1_1",
            "Ma_1_2",
            "Ma_2_1",
            "Ma_2_2",
            "Ba_1_1",
            "Ba_1_2",
            "Ba_2_2",
            "Badag_1_1",
            "Badag_1_2",
            "Badag_2_2",
        ];
        assert_eq!(subalgebra_closure(&s, &bose, &o).unwrap(), (true, 10));
    }

    #[test]
    fn degree_assignment_unique_up_to_coordinate_swap() {
        let found = consistent_degree_assignments();
        let chosen = GeneratorDegrees {
            a: Degree::PARABOSE,
            adag: Degree::PARABOSE,
            f: Degree::PARAFERMI,
            fdag: Degree::PARAFERMI,
        };
        let swapped = GeneratorDegrees {
            a: Degree::ODD,
            adag: Degree::ODD,
            f: Degree::PARAFERMI,
            fdag: Degree::PARAFERMI,
        };
        assert_eq!(found, {
            let mut v = vec![chosen, swapped];
            v.sort();
            v
        });
    }

    #[test]
    fn lookup_ids() {
        let f = lookup("su11_ext", None).unwrap();
        assert!(f.to_json().contains(r#""lambda1": {"#));
        assert!(lookup("para_lie_super_1_1", None).is_ok());
        assert!(matches!(lookup("nope", None), Err(CatalogError::UnknownId(_))));
        assert!(matches!(lookup("para_lie_super_0_0", None), Err(CatalogError::Empty)));
    }
}
