//! Axiom checkers over structure constants.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, AlgebraSpec, Element, LinearMap};
use crate::grading::Degree;
use crate::scalar::{Scalar, DEFAULT_TOL};

/// Reports keep at most this many violations per axiom; the total is still
/// counted.
pub const VIOLATION_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Grading,
    Supersymmetrization,
    Jacobi,
    Involution,
    Homomorphism,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Residual bound for inexact scalars. Exact scalars are compared exactly.
    pub tol: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { tol: DEFAULT_TOL }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub elements: Vec<String>,
    pub residual: Scalar,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub axiom: Axiom,
    pub passed: bool,
    pub total_violations: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn from_violations(axiom: Axiom, mut all: Vec<Violation>) -> Self {
        let total = all.len();
        all.truncate(VIOLATION_CAP);
        CheckReport {
            axiom,
            passed: total == 0,
            total_violations: total,
            violations: all,
            notes: Vec::new(),
        }
    }
}

/// Per-class tally of Jacobi triples, keyed by the sorted degree multiset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiClass {
    pub degrees: [Degree; 3],
    pub triples: usize,
    pub violating_triples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiReport {
    #[serde(flatten)]
    pub report: CheckReport,
    pub classes: Vec<JacobiClass>,
}

fn names(spec: &AlgebraSpec, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| spec.name(i).to_string()).collect()
}

/// Every nonzero `C_ij^k` must land in degree `g_i + g_j`.
pub fn check_grading(spec: &AlgebraSpec) -> CheckReport {
    let n = spec.dim();
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let want = spec.degree(i) + spec.degree(j);
            for (k, c) in spec.structure(i, j).iter() {
                if spec.degree(k) != want {
                    v.push(Violation {
                        axiom: Axiom::Grading,
                        indices: vec![i, j, k],
                        elements: names(spec, &[i, j, k]),
                        residual: c.clone(),
                        detail: format!(
                            "{}∘{} has a component along {} of degree {}, expected degree {}",
                            spec.name(i),
                            spec.name(j),
                            spec.name(k),
                            spec.degree(k),
                            want
                        ),
                    });
                }
            }
        }
    }
    CheckReport::from_violations(Axiom::Grading, v)
}

/// `C_ij^k + (−1)^{g_i·g_j} C_ji^k = 0` for all `i, j, k`.
pub fn check_supersymmetrization(spec: &AlgebraSpec, opts: &CheckOptions) -> CheckReport {
    let n = spec.dim();
    let mut v = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s = Scalar::int(spec.sign(spec.degree(i), spec.degree(j)) as i64);
            let mut resid = spec.structure(i, j).clone();
            resid.add_scaled(spec.structure(j, i), &s);
            for (k, r) in resid.iter() {
                if !r.is_zero_tol(opts.tol) {
                    v.push(Violation {
                        axiom: Axiom::Supersymmetrization,
                        indices: vec![i, j, k],
                        elements: names(spec, &[i, j, k]),
                        residual: r.clone(),
                        detail: format!(
                            "{}∘{} and {}∘{} disagree along {} under the {} rule",
                            spec.name(i),
                            spec.name(j),
                            spec.name(j),
                            spec.name(i),
                            spec.name(k),
                            spec.kind(spec.degree(i), spec.degree(j))
                        ),
                    });
                }
            }
        }
    }
    CheckReport::from_violations(Axiom::Supersymmetrization, v)
}

fn sorted3(mut d: [Degree; 3]) -> [Degree; 3] {
    d.sort();
    d
}

/// Generalized Jacobi identity on every ordered basis triple:
/// `(−1)^{g_u·g_w} u∘(v∘w) + (−1)^{g_v·g_u} v∘(w∘u) + (−1)^{g_w·g_v} w∘(u∘v) = 0`.
///
/// Refuses to run unless grading and supersymmetrization already hold.
pub fn check_jacobi(spec: &AlgebraSpec, opts: &CheckOptions) -> Result<JacobiReport, AlgebraError> {
    let g = check_grading(spec);
    let s = check_supersymmetrization(spec, opts);
    if !g.passed || !s.passed {
        return Err(AlgebraError::Precondition(format!(
            "Jacobi residuals need grading and supersymmetrization to hold first \
             ({} grading, {} supersymmetrization violations)",
            g.total_violations, s.total_violations
        )));
    }
    let n = spec.dim();
    let tol = opts.tol;
    type ClassTally = BTreeMap<[Degree; 3], (usize, usize)>;
    let per_u: Vec<(Vec<Violation>, ClassTally)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut viol = Vec::new();
            let mut bins: BTreeMap<[Degree; 3], (usize, usize)> = BTreeMap::new();
            let gu = spec.degree(u);
            for v in 0..n {
                let gv = spec.degree(v);
                for w in 0..n {
                    let gw = spec.degree(w);
                    let mut total = Element::zero();
                    let t1 = spec.bracket_left(u, spec.structure(v, w));
                    total.add_scaled(&t1, &Scalar::int(spec.sign(gu, gw) as i64));
                    let t2 = spec.bracket_left(v, spec.structure(w, u));
                    total.add_scaled(&t2, &Scalar::int(spec.sign(gv, gu) as i64));
                    let t3 = spec.bracket_left(w, spec.structure(u, v));
                    total.add_scaled(&t3, &Scalar::int(spec.sign(gw, gv) as i64));
                    let bin = bins.entry(sorted3([gu, gv, gw])).or_default();
                    bin.0 += 1;
                    let mut bad = false;
                    for (k, r) in total.iter() {
                        if !r.is_zero_tol(tol) {
                            bad = true;
                            viol.push(Violation {
                                axiom: Axiom::Jacobi,
                                indices: vec![u, v, w, k],
                                elements: names(spec, &[u, v, w, k]),
                                residual: r.clone(),
                                detail: format!(
                                    "Jacobi({}, {}, {}) has residual along {}",
                                    spec.name(u),
                                    spec.name(v),
                                    spec.name(w),
                                    spec.name(k)
                                ),
                            });
                        }
                    }
                    if bad {
                        bin.1 += 1;
                    }
                }
            }
            (viol, bins)
        })
        .collect();
    let mut all = Vec::new();
    let mut bins: BTreeMap<[Degree; 3], (usize, usize)> = BTreeMap::new();
    for (v, b) in per_u {
        all.extend(v);
        for (k, (t, bad)) in b {
            let e = bins.entry(k).or_default();
            e.0 += t;
            e.1 += bad;
        }
    }
    let classes = bins
        .into_iter()
        .map(|(degrees, (triples, violating_triples))| JacobiClass {
            degrees,
            triples,
            violating_triples,
        })
        .collect();
    Ok(JacobiReport {
        report: CheckReport::from_violations(Axiom::Jacobi, all),
        classes,
    })
}

/// Number of size-3 multisets over the occupied subspaces.
pub fn count_jacobi_classes(spec: &AlgebraSpec) -> usize {
    let occupied = spec.subspace_dims().iter().filter(|&&d| d > 0).count();
    // multichoose(s, 3) = C(s + 2, 3)
    (occupied + 2) * (occupied + 1) * occupied / 6
}

/// The involution must preserve degree, square to the identity, and act as a
/// conjugate-linear anti-automorphism: `θ(x∘y) = θ(y)∘θ(x)`.
pub fn check_involution(spec: &AlgebraSpec, opts: &CheckOptions) -> CheckReport {
    let Some(inv) = spec.involution() else {
        let mut r = CheckReport::from_violations(Axiom::Involution, Vec::new());
        r.notes.push("no involution present; nothing to check".into());
        return r;
    };
    let n = spec.dim();
    let mut v = Vec::new();
    for (i, (pi, s)) in inv.iter().enumerate() {
        if spec.degree(*pi) != spec.degree(i) {
            v.push(Violation {
                axiom: Axiom::Involution,
                indices: vec![i, *pi],
                elements: names(spec, &[i, *pi]),
                residual: s.clone(),
                detail: format!(
                    "maps {} of degree {} to {} of degree {}",
                    spec.name(i),
                    spec.degree(i),
                    spec.name(*pi),
                    spec.degree(*pi)
                ),
            });
        }
        let (back, s2) = &inv[*pi];
        let sq = &s.conj() * s2;
        let resid = &sq - &Scalar::one();
        if *back != i || !resid.is_zero_tol(opts.tol) {
            v.push(Violation {
                axiom: Axiom::Involution,
                indices: vec![i, *back],
                elements: names(spec, &[i, *back]),
                residual: if *back != i { Scalar::one() } else { resid },
                detail: format!("θ² does not fix {}", spec.name(i)),
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = spec.apply_involution(spec.structure(i, j)).expect("involution present");
            let ti = spec.apply_involution(&Element::basis(i)).expect("involution present");
            let tj = spec.apply_involution(&Element::basis(j)).expect("involution present");
            let rhs = spec.bracket(&tj, &ti);
            for (k, r) in lhs.sub(&rhs).iter() {
                if !r.is_zero_tol(opts.tol) {
                    v.push(Violation {
                        axiom: Axiom::Involution,
                        indices: vec![i, j, k],
                        elements: names(spec, &[i, j, k]),
                        residual: r.clone(),
                        detail: format!(
                            "θ({0}∘{1}) ≠ θ({1})∘θ({0}) along {2}",
                            spec.name(i),
                            spec.name(j),
                            spec.name(k)
                        ),
                    });
                }
            }
        }
    }
    CheckReport::from_violations(Axiom::Involution, v)
}

/// `φ(u∘v) = φ(u)∘φ(v)` on all source basis pairs, and `φ` preserves degree.
pub fn verify_homomorphism(map: &LinearMap, opts: &CheckOptions) -> CheckReport {
    let (src, tgt) = (map.source(), map.target());
    let mut v = Vec::new();
    for i in 0..src.dim() {
        for (k, c) in map.image(i).iter() {
            if tgt.degree(k) != src.degree(i) {
                v.push(Violation {
                    axiom: Axiom::Homomorphism,
                    indices: vec![i, k],
                    elements: vec![src.name(i).to_string(), tgt.name(k).to_string()],
                    residual: c.clone(),
                    detail: format!(
                        "image of {} (degree {}) has a component along {} (degree {})",
                        src.name(i),
                        src.degree(i),
                        tgt.name(k),
                        tgt.degree(k)
                    ),
                });
            }
        }
    }
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = map.apply(src.structure(i, j));
            let rhs = tgt.bracket(map.image(i), map.image(j));
            let diff = lhs.sub(&rhs);
            if diff.is_zero_tol(opts.tol) {
                continue;
            }
            let norm = diff.iter().map(|(_, c)| c.abs().powi(2)).sum::<f64>().sqrt();
            for (k, r) in diff.iter() {
                if !r.is_zero_tol(opts.tol) {
                    v.push(Violation {
                        axiom: Axiom::Homomorphism,
                        indices: vec![i, j, k],
                        elements: vec![
                            src.name(i).to_string(),
                            src.name(j).to_string(),
                            tgt.name(k).to_string(),
                        ],
                        residual: r.clone(),
                        detail: format!(
                            "φ({0}∘{1}) − φ({0})∘φ({1}) has component along {2}; residual norm {3:e}",
                            src.name(i),
                            src.name(j),
                            tgt.name(k),
                            norm
                        ),
                    });
                }
            }
        }
    }
    CheckReport::from_violations(Axiom::Homomorphism, v)
}

/// Whether all brackets among `subset` stay in its span; returns the subset
/// size as the dimension.
pub fn subalgebra_closure(
    spec: &AlgebraSpec,
    subset: &[&str],
    opts: &CheckOptions,
) -> Result<(bool, usize), AlgebraError> {
    let mut idx = subset.iter().map(|n| spec.index_of(n)).collect::<Result<Vec<_>, _>>()?;
    idx.sort_unstable();
    idx.dedup();
    let inside = |k: usize| idx.binary_search(&k).is_ok();
    for &i in &idx {
        for &j in &idx {
            let leaks = spec
                .structure(i, j)
                .iter()
                .any(|(k, c)| !inside(k) && !c.is_zero_tol(opts.tol));
            if leaks {
                return Ok((false, idx.len()));
            }
        }
    }
    Ok((true, idx.len()))
}

/// The four axiom checks together. Jacobi is skipped, with the reason
/// recorded, when grading or supersymmetrization fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomSuite {
    pub grading: CheckReport,
    pub supersymmetrization: CheckReport,
    pub involution: CheckReport,
    pub jacobi: Option<JacobiReport>,
    pub jacobi_refused: Option<String>,
    pub jacobi_classes: usize,
    pub passed: bool,
}

pub fn check_axioms(spec: &AlgebraSpec, opts: &CheckOptions) -> AxiomSuite {
    let grading = check_grading(spec);
    let supersymmetrization = check_supersymmetrization(spec, opts);
    let involution = check_involution(spec, opts);
    let (jacobi, jacobi_refused) = match check_jacobi(spec, opts) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let passed = grading.passed
        && supersymmetrization.passed
        && involution.passed
        && jacobi.as_ref().is_some_and(|j| j.report.passed);
    AxiomSuite {
        grading,
        supersymmetrization,
        involution,
        jacobi,
        jacobi_refused,
        jacobi_classes: count_jacobi_classes(spec),
        passed,
    }
}
