//! Built-in relation sets.
//!
//! | id              | content                                                    |
//! |-----------------|------------------------------------------------------------|
//! | `eq11`          | single-mode paraboson trilinear relations                  |
//! | `eq12`          | the 12 trilinear relations of a mixed para system          |
//! | `eq13`          | definitions of the bilinears as generator brackets         |
//! | `eq14`          | generator–bilinear brackets                                |
//! | `derived`       | further generator–bilinear brackets needed for closure     |
//! | `closure15_19`  | bilinear–bilinear brackets                                 |
//! | `canonical_p1`  | ordinary Bose/Fermi relations, valid at order 1 only       |
//! | `jacobi8`       | the four double-bracket identities on generator triples    |

use super::relation::{anti, comm, leaf, term, Coeff, Expr, IndexRange, RelationExpr, SumTerm};

pub const BUILTIN_SETS: [&str; 8] = [
    "eq11",
    "eq12",
    "eq13",
    "eq14",
    "derived",
    "closure15_19",
    "canonical_p1",
    "jacobi8",
];

// Latin symbols range over boson modes, Greek-like ones over fermion modes.
const BOSE_SYMS: [&str; 4] = ["k", "l", "m", "n"];
const FERMI_SYMS: [&str; 5] = ["al", "be", "ga", "si", "rho"];

fn rel(name: &str, lhs: Expr, rhs: Vec<super::relation::RhsTerm>) -> RelationExpr {
    let mut r = RelationExpr {
        name: name.into(),
        lhs,
        rhs,
        ranges: Default::default(),
    };
    for s in r.symbols() {
        let range = if BOSE_SYMS.contains(&s.as_str()) {
            IndexRange::Modes("M".into())
        } else if FERMI_SYMS.contains(&s.as_str()) {
            IndexRange::Modes("N".into())
        } else {
            panic!("built-in relation {name} uses unranged symbol {s}")
        };
        r.ranges.insert(s, range);
    }
    debug_assert!(r.validate().is_ok(), "{name}: {:?}", r.validate());
    r
}

pub fn builtin(name: &str) -> Option<Vec<RelationExpr>> {
    Some(match name {
        "eq11" => eq11(),
        "eq12" => eq12(),
        "eq13" => eq13(),
        "eq14" => eq14(),
        "derived" => derived(),
        "closure15_19" => closure15_19(),
        "canonical_p1" => canonical_p1(),
        "jacobi8" => jacobi8(),
        _ => return None,
    })
}

pub fn eq11() -> Vec<RelationExpr> {
    let mut v = vec![
        rel(
            "eq11.1",
            comm(anti(leaf("adag", &["k"]), leaf("a", &["k"])), leaf("a", &["k"])),
            vec![term("-2", "a", &["k"])],
        ),
        rel(
            "eq11.2",
            comm(anti(leaf("a", &["k"]), leaf("a", &["k"])), leaf("a", &["k"])),
            vec![],
        ),
        rel(
            "eq11.3",
            comm(anti(leaf("a", &["k"]), leaf("a", &["k"])), leaf("adag", &["k"])),
            vec![term("4", "a", &["k"])],
        ),
    ];
    // Single mode: k is pinned to 1.
    for r in &mut v {
        r.ranges.insert("k".into(), IndexRange::Count(1));
    }
    v
}

pub fn eq12() -> Vec<RelationExpr> {
    vec![
        rel(
            "eq12.1",
            comm(leaf("a", &["k"]), anti(leaf("adag", &["l"]), leaf("a", &["m"]))),
            vec![term("2*delta(k,l)", "a", &["m"])],
        ),
        rel(
            "eq12.2",
            comm(leaf("f", &["al"]), comm(leaf("fdag", &["be"]), leaf("f", &["ga"]))),
            vec![term("2*delta(al,be)", "f", &["ga"])],
        ),
        rel(
            "eq12.3",
            comm(leaf("a", &["k"]), anti(leaf("a", &["l"]), leaf("a", &["m"]))),
            vec![],
        ),
        rel(
            "eq12.4",
            comm(leaf("f", &["al"]), comm(leaf("f", &["be"]), leaf("f", &["ga"]))),
            vec![],
        ),
        rel(
            "eq12.5",
            comm(leaf("a", &["k"]), comm(leaf("fdag", &["al"]), leaf("f", &["be"]))),
            vec![],
        ),
        rel(
            "eq12.6",
            comm(leaf("f", &["al"]), anti(leaf("adag", &["k"]), leaf("a", &["l"]))),
            vec![],
        ),
        rel(
            "eq12.7",
            comm(leaf("a", &["k"]), anti(leaf("a", &["l"]), leaf("f", &["al"]))),
            vec![],
        ),
        rel(
            "eq12.8",
            anti(leaf("f", &["al"]), anti(leaf("a", &["k"]), leaf("f", &["be"]))),
            vec![],
        ),
        rel(
            "eq12.9",
            comm(leaf("a", &["k"]), anti(leaf("adag", &["l"]), leaf("f", &["al"]))),
            vec![term("2*delta(k,l)", "f", &["al"])],
        ),
        rel(
            "eq12.10",
            anti(leaf("f", &["al"]), anti(leaf("adag", &["k"]), leaf("f", &["be"]))),
            vec![],
        ),
        rel(
            "eq12.11",
            comm(leaf("a", &["k"]), anti(leaf("a", &["l"]), leaf("fdag", &["al"]))),
            vec![],
        ),
        rel(
            "eq12.12",
            anti(leaf("f", &["al"]), anti(leaf("a", &["k"]), leaf("fdag", &["be"]))),
            vec![term("2*delta(al,be)", "a", &["k"])],
        ),
    ]
}

pub fn eq13() -> Vec<RelationExpr> {
    vec![
        rel(
            "eq13.Ma",
            anti(leaf("adag", &["k"]), leaf("a", &["l"])),
            vec![term("2", "Ma", &["k", "l"])],
        ),
        rel(
            "eq13.Ba",
            anti(leaf("a", &["k"]), leaf("a", &["l"])),
            vec![term("2", "Ba", &["k", "l"])],
        ),
        rel(
            "eq13.F",
            anti(leaf("a", &["k"]), leaf("f", &["al"])),
            vec![term("2", "F", &["k", "al"])],
        ),
        rel(
            "eq13.Mf",
            comm(leaf("fdag", &["al"]), leaf("f", &["be"])),
            vec![term("2", "Mf", &["al", "be"])],
        ),
        rel(
            "eq13.Bf",
            comm(leaf("f", &["al"]), leaf("f", &["be"])),
            vec![term("2", "Bf", &["al", "be"])],
        ),
        rel(
            "eq13.Q",
            anti(leaf("adag", &["k"]), leaf("f", &["al"])),
            vec![term("2", "Q", &["k", "al"])],
        ),
    ]
}

pub fn eq14() -> Vec<RelationExpr> {
    vec![
        rel(
            "eq14.1",
            comm(leaf("a", &["k"]), leaf("Ma", &["l", "m"])),
            vec![term("delta(k,l)", "a", &["m"])],
        ),
        rel("eq14.2", comm(leaf("a", &["k"]), leaf("Mf", &["al", "be"])), vec![]),
        rel("eq14.3", comm(leaf("a", &["k"]), leaf("Ba", &["l", "m"])), vec![]),
        rel("eq14.4", comm(leaf("f", &["al"]), leaf("Ma", &["k", "l"])), vec![]),
        rel(
            "eq14.5",
            comm(leaf("f", &["al"]), leaf("Mf", &["be", "ga"])),
            vec![term("delta(al,be)", "f", &["ga"])],
        ),
        rel("eq14.6", comm(leaf("f", &["al"]), leaf("Bf", &["be", "ga"])), vec![]),
        rel("eq14.7", comm(leaf("a", &["k"]), leaf("F", &["l", "al"])), vec![]),
        rel(
            "eq14.8",
            comm(leaf("a", &["k"]), leaf("Q", &["l", "al"])),
            vec![term("delta(k,l)", "f", &["al"])],
        ),
        rel("eq14.9", comm(leaf("a", &["k"]), leaf("Qdag", &["l", "al"])), vec![]),
        rel("eq14.10", anti(leaf("f", &["al"]), leaf("F", &["k", "be"])), vec![]),
        rel("eq14.11", anti(leaf("f", &["al"]), leaf("Q", &["k", "be"])), vec![]),
        rel(
            "eq14.12",
            anti(leaf("f", &["al"]), leaf("Qdag", &["k", "be"])),
            vec![term("delta(al,be)", "a", &["k"])],
        ),
    ]
}

/// Consequences of the trilinear relations that the generator–bilinear
/// table needs beyond `eq14` and its conjugates.
pub fn derived() -> Vec<RelationExpr> {
    vec![
        rel(
            "derived.1",
            comm(leaf("a", &["k"]), leaf("Badag", &["l", "m"])),
            vec![term("delta(k,l)", "adag", &["m"]), term("delta(k,m)", "adag", &["l"])],
        ),
        rel("derived.2", comm(leaf("a", &["k"]), leaf("Bf", &["al", "be"])), vec![]),
        rel(
            "derived.3",
            comm(leaf("a", &["k"]), leaf("Bfdag", &["al", "be"])),
            vec![],
        ),
        rel(
            "derived.4",
            comm(leaf("a", &["k"]), leaf("Fdag", &["l", "al"])),
            vec![term("delta(k,l)", "fdag", &["al"])],
        ),
        rel("derived.5", comm(leaf("f", &["al"]), leaf("Ba", &["k", "l"])), vec![]),
        rel(
            "derived.6",
            comm(leaf("f", &["al"]), leaf("Badag", &["k", "l"])),
            vec![],
        ),
        rel(
            "derived.7",
            comm(leaf("f", &["al"]), leaf("Bfdag", &["be", "ga"])),
            vec![
                term("delta(al,ga)", "fdag", &["be"]),
                term("-delta(al,be)", "fdag", &["ga"]),
            ],
        ),
        rel(
            "derived.8",
            anti(leaf("f", &["al"]), leaf("Fdag", &["k", "be"])),
            vec![term("delta(al,be)", "adag", &["k"])],
        ),
    ]
}

pub fn closure15_19() -> Vec<RelationExpr> {
    vec![
        rel(
            "eq15.1",
            comm(leaf("Ma", &["k", "l"]), leaf("Ma", &["m", "n"])),
            vec![
                term("delta(m,l)", "Ma", &["k", "n"]),
                term("-delta(k,n)", "Ma", &["m", "l"]),
            ],
        ),
        rel(
            "eq15.2",
            comm(leaf("Ma", &["k", "l"]), leaf("Ba", &["m", "n"])),
            vec![
                term("-delta(k,m)", "Ba", &["l", "n"]),
                term("-delta(k,n)", "Ba", &["m", "l"]),
            ],
        ),
        rel(
            "eq15.3",
            comm(leaf("Ba", &["k", "l"]), leaf("Badag", &["m", "n"])),
            vec![
                term("delta(m,k)", "Ma", &["n", "l"]),
                term("delta(n,l)", "Ma", &["m", "k"]),
                term("delta(m,l)", "Ma", &["n", "k"]),
                term("delta(n,k)", "Ma", &["m", "l"]),
            ],
        ),
        rel("eq15.4", comm(leaf("Ba", &["k", "l"]), leaf("Ba", &["m", "n"])), vec![]),
        rel(
            "eq16.1",
            comm(leaf("Mf", &["al", "be"]), leaf("Mf", &["si", "rho"])),
            vec![
                term("delta(si,be)", "Mf", &["al", "rho"]),
                term("-delta(al,rho)", "Mf", &["si", "be"]),
            ],
        ),
        rel(
            "eq16.2",
            comm(leaf("Mf", &["al", "be"]), leaf("Bf", &["si", "rho"])),
            vec![
                term("-delta(al,si)", "Bf", &["be", "rho"]),
                term("-delta(al,rho)", "Bf", &["si", "be"]),
            ],
        ),
        rel(
            "eq16.3",
            comm(leaf("Bf", &["al", "be"]), leaf("Bfdag", &["si", "rho"])),
            vec![
                term("-delta(si,al)", "Mf", &["rho", "be"]),
                term("-delta(rho,be)", "Mf", &["si", "al"]),
                term("delta(si,be)", "Mf", &["rho", "al"]),
                term("delta(rho,al)", "Mf", &["si", "be"]),
            ],
        ),
        rel(
            "eq16.4",
            comm(leaf("Bf", &["al", "be"]), leaf("Bf", &["si", "rho"])),
            vec![],
        ),
        rel(
            "eq17.1",
            comm(leaf("Ma", &["k", "l"]), leaf("Mf", &["al", "be"])),
            vec![],
        ),
        rel(
            "eq17.2",
            comm(leaf("Ma", &["k", "l"]), leaf("Bf", &["al", "be"])),
            vec![],
        ),
        rel(
            "eq17.3",
            comm(leaf("Mf", &["al", "be"]), leaf("Ba", &["k", "l"])),
            vec![],
        ),
        rel(
            "eq17.4",
            comm(leaf("Ba", &["k", "l"]), leaf("Bf", &["al", "be"])),
            vec![],
        ),
        rel(
            "eq17.5",
            comm(leaf("Ba", &["k", "l"]), leaf("Bfdag", &["al", "be"])),
            vec![],
        ),
        rel(
            "eq18.1",
            comm(leaf("Ma", &["k", "l"]), leaf("F", &["m", "al"])),
            vec![term("-delta(k,m)", "F", &["l", "al"])],
        ),
        rel(
            "eq18.2",
            comm(leaf("Mf", &["al", "be"]), leaf("F", &["k", "ga"])),
            vec![term("-delta(al,ga)", "F", &["k", "be"])],
        ),
        rel("eq18.3", comm(leaf("Ba", &["k", "l"]), leaf("F", &["m", "al"])), vec![]),
        rel(
            "eq18.4",
            comm(leaf("Badag", &["k", "l"]), leaf("F", &["m", "al"])),
            vec![
                term("-delta(k,m)", "Q", &["l", "al"]),
                term("-delta(l,m)", "Q", &["k", "al"]),
            ],
        ),
        rel(
            "eq18.5",
            comm(leaf("Bf", &["al", "be"]), leaf("F", &["k", "ga"])),
            vec![],
        ),
        rel(
            "eq18.6",
            comm(leaf("Bfdag", &["al", "be"]), leaf("F", &["k", "ga"])),
            vec![
                term("-delta(be,ga)", "Qdag", &["k", "al"]),
                term("delta(al,ga)", "Qdag", &["k", "be"]),
            ],
        ),
        rel(
            "eq18.7",
            comm(leaf("Ma", &["k", "l"]), leaf("Q", &["m", "al"])),
            vec![term("delta(l,m)", "Q", &["k", "al"])],
        ),
        rel(
            "eq18.8",
            comm(leaf("Mf", &["al", "be"]), leaf("Q", &["k", "ga"])),
            vec![term("-delta(al,ga)", "Q", &["k", "be"])],
        ),
        rel(
            "eq18.9",
            comm(leaf("Ba", &["k", "l"]), leaf("Q", &["m", "al"])),
            vec![
                term("delta(k,m)", "F", &["l", "al"]),
                term("delta(l,m)", "F", &["k", "al"]),
            ],
        ),
        rel(
            "eq18.10",
            comm(leaf("Badag", &["k", "l"]), leaf("Q", &["m", "al"])),
            vec![],
        ),
        rel(
            "eq18.11",
            comm(leaf("Bfdag", &["al", "be"]), leaf("Q", &["k", "ga"])),
            vec![
                term("delta(al,ga)", "Fdag", &["k", "be"]),
                term("-delta(be,ga)", "Fdag", &["k", "al"]),
            ],
        ),
        rel(
            "eq18.12",
            comm(leaf("Bf", &["al", "be"]), leaf("Q", &["k", "ga"])),
            vec![],
        ),
        rel("eq19.1", anti(leaf("F", &["k", "al"]), leaf("F", &["l", "be"])), vec![]),
        rel("eq19.2", anti(leaf("Q", &["k", "al"]), leaf("Q", &["l", "be"])), vec![]),
        rel(
            "eq19.3",
            anti(leaf("F", &["k", "al"]), leaf("Fdag", &["l", "be"])),
            vec![
                term("delta(be,al)", "Ma", &["l", "k"]),
                term("-delta(l,k)", "Mf", &["be", "al"]),
            ],
        ),
        rel(
            "eq19.4",
            anti(leaf("Q", &["k", "al"]), leaf("Qdag", &["l", "be"])),
            vec![
                term("delta(be,al)", "Ma", &["k", "l"]),
                term("delta(k,l)", "Mf", &["be", "al"]),
            ],
        ),
        rel(
            "eq19.5",
            anti(leaf("F", &["k", "al"]), leaf("Q", &["l", "be"])),
            vec![term("delta(k,l)", "Bf", &["al", "be"])],
        ),
        rel(
            "eq19.6",
            anti(leaf("F", &["k", "al"]), leaf("Qdag", &["l", "be"])),
            vec![term("delta(al,be)", "Ba", &["k", "l"])],
        ),
    ]
}

pub fn canonical_p1() -> Vec<RelationExpr> {
    vec![
        rel(
            "ccr",
            comm(leaf("a", &["k"]), leaf("adag", &["l"])),
            vec![term("delta(k,l)", "1", &[])],
        ),
        rel("ccr0", comm(leaf("a", &["k"]), leaf("a", &["l"])), vec![]),
        rel(
            "car",
            anti(leaf("f", &["al"]), leaf("fdag", &["be"])),
            vec![term("delta(al,be)", "1", &[])],
        ),
        rel("car0", anti(leaf("f", &["al"]), leaf("f", &["be"])), vec![]),
        // Under the Green construction used here, distinct species commute
        // at order 1.
        rel("mixed", comm(leaf("a", &["k"]), leaf("f", &["al"])), vec![]),
    ]
}

fn sum3(terms: [(&str, Expr); 3]) -> Expr {
    Expr::Sum {
        sum: terms
            .into_iter()
            .map(|(c, e)| SumTerm {
                coeff: c.parse::<Coeff>().expect("built-in coefficient"),
                expr: e,
            })
            .collect(),
    }
}

/// The four double-bracket identities, instantiated on two generator
/// triples.
pub fn jacobi8() -> Vec<RelationExpr> {
    let triples: [(&str, [(&str, &str); 3]); 2] = [
        ("afadag", [("a", "k"), ("f", "al"), ("adag", "l")]),
        ("fdagaf", [("fdag", "al"), ("a", "k"), ("f", "be")]),
    ];
    let mut out = Vec::new();
    for (tag, [(ga, ia), (gb, ib), (gc, ic)]) in triples {
        let a = || leaf(ga, &[ia]);
        let b = || leaf(gb, &[ib]);
        let c = || leaf(gc, &[ic]);
        out.push(rel(
            &format!("jacobi8.1.{tag}"),
            sum3([
                ("1", comm(a(), comm(b(), c()))),
                ("1", comm(b(), comm(c(), a()))),
                ("1", comm(c(), comm(a(), b()))),
            ]),
            vec![],
        ));
        out.push(rel(
            &format!("jacobi8.2.{tag}"),
            sum3([
                ("1", comm(a(), anti(b(), c()))),
                ("1", comm(b(), anti(c(), a()))),
                ("1", comm(c(), anti(a(), b()))),
            ]),
            vec![],
        ));
        out.push(rel(
            &format!("jacobi8.3.{tag}"),
            sum3([
                ("1", comm(a(), anti(b(), c()))),
                ("1", anti(b(), comm(c(), a()))),
                ("-1", anti(c(), comm(a(), b()))),
            ]),
            vec![],
        ));
        out.push(rel(
            &format!("jacobi8.4.{tag}"),
            sum3([
                ("1", comm(a(), comm(b(), c()))),
                ("1", anti(b(), anti(c(), a()))),
                ("-1", anti(c(), anti(a(), b()))),
            ]),
            vec![],
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_sets_validate() {
        for name in BUILTIN_SETS {
            let set = builtin(name).unwrap();
            assert!(!set.is_empty(), "{name}");
            for r in &set {
                r.validate().unwrap();
                r.dagger().validate().unwrap();
            }
        }
        assert!(builtin("eq99").is_none());
    }

    #[test]
    fn counts_and_word_lengths() {
        assert_eq!(eq12().len(), 12);
        assert_eq!(eq14().len(), 12);
        assert_eq!(closure15_19().len(), 4 + 4 + 5 + 12 + 6);
        assert!(eq12().iter().all(|r| r.word_len() == 3));
        assert!(eq14().iter().all(|r| r.word_len() == 3));
        assert!(closure15_19().iter().all(|r| r.word_len() == 4));
        assert!(jacobi8().iter().all(|r| r.word_len() == 3));
    }

    #[test]
    fn brackets_respect_sign_rule() {
        // Every displayed bracket kind agrees with the degree dot-product rule
        // under a:(1,0), f:(1,1).
        for name in ["eq11", "eq12", "eq13", "eq14", "derived", "closure15_19"] {
            for r in builtin(name).unwrap() {
                for (kind, x, y) in r.lhs.brackets() {
                    let want = crate::grading::bracket_kind(x.degree().unwrap(), y.degree().unwrap());
                    assert_eq!(kind, want, "{}", r.name);
                }
            }
        }
    }
}
