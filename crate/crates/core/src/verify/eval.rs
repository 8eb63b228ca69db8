//! Evaluating relation sets on a representation.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::relation::{RelationExpr, Resolved};
use super::sets;
use super::VerifyError;
use crate::fock::{op_algebra, GreenRep, SparseOperator};
use crate::scalar::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Relative tolerance.
    pub tol: f64,
    /// Threads for instance evaluation; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Also evaluate the Hermitian conjugate of every relation.
    pub conjugates: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: DEFAULT_TOL,
            workers: None,
            conjugates: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceResidual {
    pub assignment: BTreeMap<String, usize>,
    /// Max `|LHS − RHS|` over safe matrix elements.
    pub residual: f64,
    /// `max(1, ‖LHS‖, ‖RHS‖)`, max-abs over the same elements.
    pub scale: f64,
    /// Where the residual is attained, as `(row, col)` basis indices.
    pub location: Option<(usize, usize)>,
}

impl InstanceResidual {
    pub fn relative(&self) -> f64 {
        self.residual / self.scale
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationSummary {
    pub name: String,
    pub relation: String,
    pub word_len: usize,
    pub safe_states: usize,
    pub instances: usize,
    pub failed_instances: usize,
    pub max_relative_residual: f64,
    pub worst: Option<InstanceResidual>,
    pub passed: bool,
    #[serde(skip)]
    pub all: Vec<InstanceResidual>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub tol: f64,
    pub instances: usize,
    pub max_relative_residual: f64,
    pub passed: bool,
    pub relations: Vec<RelationSummary>,
}

impl ResidualReport {
    pub fn from_summaries(tol: f64, relations: Vec<RelationSummary>) -> Self {
        ResidualReport {
            tol,
            instances: relations.iter().map(|r| r.instances).sum(),
            max_relative_residual: relations.iter().map(|r| r.max_relative_residual).fold(0.0, f64::max),
            passed: relations.iter().all(|r| r.passed),
            relations,
        }
    }

    pub fn relation(&self, name: &str) -> Option<&RelationSummary> {
        self.relations.iter().find(|r| r.name == name)
    }
}

/// Runs `f` on a pool of `workers` threads, or on the global pool.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn evaluate(rep: &GreenRep, e: &Resolved) -> Result<SparseOperator, VerifyError> {
    Ok(match e {
        Resolved::Leaf(id) => rep.op(id)?.into_owned(),
        Resolved::Bracket(kind, x, y) => op_algebra(&evaluate(rep, x)?, &evaluate(rep, y)?, *kind)?,
        Resolved::Sum(terms) => {
            let ops = terms
                .iter()
                .map(|(c, x)| Ok((c.to_complex(), evaluate(rep, x)?)))
                .collect::<Result<Vec<_>, VerifyError>>()?;
            let refs: Vec<(Complex64, &SparseOperator)> = ops.iter().map(|(c, x)| (*c, x)).collect();
            SparseOperator::lincomb(rep.dim(), &refs)?
        }
    })
}

/// Both sides of one instance as matrices, `(LHS, RHS)`.
pub fn instance_sides(
    rep: &GreenRep,
    rel: &RelationExpr,
    asg: &BTreeMap<String, usize>,
) -> Result<(SparseOperator, SparseOperator), VerifyError> {
    let lhs = evaluate(rep, &rel.resolve_lhs(asg))?;
    let rhs_ops = rel
        .resolve_rhs(asg)
        .into_iter()
        .map(|(c, id)| Ok((c.to_complex(), rep.op(&id)?.into_owned())))
        .collect::<Result<Vec<_>, VerifyError>>()?;
    let refs: Vec<(Complex64, &SparseOperator)> = rhs_ops.iter().map(|(c, x)| (*c, x)).collect();
    let rhs = SparseOperator::lincomb(rep.dim(), &refs)?;
    Ok((lhs, rhs))
}

fn instance(
    rep: &GreenRep,
    rel: &RelationExpr,
    asg: &BTreeMap<String, usize>,
    mask: &[bool],
) -> Result<InstanceResidual, VerifyError> {
    let (lhs, rhs) = instance_sides(rep, rel, asg)?;
    let diff = lhs.sub(&rhs)?;
    let (residual, location) = diff.max_abs_on(mask);
    let scale = 1f64.max(lhs.max_abs_on(mask).0).max(rhs.max_abs_on(mask).0);
    Ok(InstanceResidual {
        assignment: asg.clone(),
        residual,
        scale,
        location,
    })
}

fn require_cutoff(rep: &GreenRep, rel: &RelationExpr) -> Result<(), VerifyError> {
    let l = rep.layout();
    let w = rel.word_len();
    if l.parabosons > 0 && l.cutoff < w {
        return Err(VerifyError::CutoffTooSmall {
            relation: rel.name.clone(),
            word_len: w,
            cutoff: l.cutoff,
        });
    }
    Ok(())
}

/// Evaluates every index assignment of every relation, restricted to the
/// safe subspace for each relation's word length.
pub fn eval_relations(
    rep: &GreenRep,
    rels: &[RelationExpr],
    opts: &EvalOptions,
) -> Result<ResidualReport, VerifyError> {
    let l = rep.layout();
    let mut all: Vec<RelationExpr> = Vec::new();
    for r in rels {
        r.validate()?;
        require_cutoff(rep, r)?;
        all.push(r.clone());
        if opts.conjugates {
            all.push(r.dagger());
        }
    }
    let mut masks: BTreeMap<usize, Vec<bool>> = BTreeMap::new();
    for r in &all {
        masks.entry(r.word_len()).or_insert_with(|| rep.safe_mask(r.word_len()));
    }
    let mut jobs = Vec::new();
    for (ri, r) in all.iter().enumerate() {
        for asg in r.assignments(l.parabosons, l.parafermions)? {
            jobs.push((ri, asg));
        }
    }
    let results: Vec<Result<InstanceResidual, VerifyError>> = with_workers(opts.workers, || {
        jobs.par_iter()
            .map(|(ri, asg)| instance(rep, &all[*ri], asg, &masks[&all[*ri].word_len()]))
            .collect()
    });
    let mut per_rel: Vec<Vec<InstanceResidual>> = vec![Vec::new(); all.len()];
    for ((ri, _), res) in jobs.iter().zip(results) {
        per_rel[*ri].push(res?);
    }
    let summaries = all
        .iter()
        .zip(per_rel)
        .map(|(r, inst)| summarize(r, inst, masks[&r.word_len()].iter().filter(|b| **b).count(), opts.tol))
        .collect();
    Ok(ResidualReport::from_summaries(opts.tol, summaries))
}

fn summarize(rel: &RelationExpr, inst: Vec<InstanceResidual>, safe_states: usize, tol: f64) -> RelationSummary {
    let failed = inst.iter().filter(|i| i.residual > tol * i.scale).count();
    let worst = inst
        .iter()
        .fold(None::<&InstanceResidual>, |best, i| match best {
            Some(b) if b.relative() >= i.relative() => Some(b),
            _ => Some(i),
        })
        .cloned();
    RelationSummary {
        name: rel.name.clone(),
        relation: rel.to_string(),
        word_len: rel.word_len(),
        safe_states,
        instances: inst.len(),
        failed_instances: failed,
        max_relative_residual: worst.as_ref().map_or(0.0, |w| w.relative()),
        worst,
        passed: failed == 0,
        all: inst,
    }
}

/// A single relation, without its conjugate.
pub fn eval_relation(rep: &GreenRep, rel: &RelationExpr, tol: f64) -> Result<ResidualReport, VerifyError> {
    eval_relations(
        rep,
        std::slice::from_ref(rel),
        &EvalOptions {
            tol,
            conjugates: false,
            ..Default::default()
        },
    )
}

/// The twelve trilinear relations and their conjugates.
pub fn suite_eq12(rep: &GreenRep, opts: &EvalOptions) -> Result<ResidualReport, VerifyError> {
    eval_relations(rep, &sets::eq12(), opts)
}

/// Generator–bilinear and bilinear–bilinear brackets, with conjugates.
pub fn suite_closure(rep: &GreenRep, opts: &EvalOptions) -> Result<ResidualReport, VerifyError> {
    eval_relations(rep, &[sets::eq14(), sets::closure15_19()].concat(), opts)
}

/// Ordinary commutation and anticommutation relations; order 1 only.
pub fn reduction_check_p1(rep: &GreenRep, opts: &EvalOptions) -> Result<ResidualReport, VerifyError> {
    if rep.layout().order != 1 {
        return Err(VerifyError::Precondition(format!(
            "the reduction check needs order 1, got p = {}",
            rep.layout().order
        )));
    }
    eval_relations(rep, &sets::canonical_p1(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{build_green_rep, ModeLayout};
    use crate::verify::relation::{comm, leaf, term};

    fn rep(m: usize, n: usize, p: usize, c: usize) -> GreenRep {
        build_green_rep(&ModeLayout::new(m, n, p, c).unwrap()).unwrap()
    }

    fn ccr() -> RelationExpr {
        let mut r = RelationExpr {
            name: "ccr".into(),
            lhs: comm(leaf("a", &["k"]), leaf("adag", &["k"])),
            rhs: vec![term("1", "1", &[])],
            ranges: Default::default(),
        };
        r.ranges
            .insert("k".into(), super::super::relation::IndexRange::Count(1));
        r
    }

    #[test]
    fn eq12_holds() {
        for (m, n, p, c) in [(1, 1, 1, 4), (1, 1, 2, 4), (2, 1, 2, 3)] {
            let r = suite_eq12(&rep(m, n, p, c), &EvalOptions::default()).unwrap();
            assert!(r.passed, "{:?}", r.relations.iter().find(|s| !s.passed));
            assert_eq!(r.relations.len(), 24);
        }
    }

    #[test]
    fn canonical_relation_only_at_order_one() {
        assert!(eval_relation(&rep(1, 0, 1, 4), &ccr(), 1e-9).unwrap().passed);
        let r = eval_relation(&rep(1, 0, 2, 4), &ccr(), 1e-9).unwrap();
        assert!(!r.passed);
        let rep2 = rep(1, 0, 2, 4);
        let asg = ccr().assignments(1, 0).unwrap().remove(0);
        let (lhs, rhs) = instance_sides(&rep2, &ccr(), &asg).unwrap();
        let at_vacuum = lhs.get(0, 0) - rhs.get(0, 0);
        assert!((at_vacuum.re - 1.0).abs() < 1e-12 && at_vacuum.im == 0.0);
    }

    #[test]
    fn cutoff_guard_and_order_guard() {
        let err = suite_eq12(&rep(1, 1, 1, 2), &EvalOptions::default()).unwrap_err();
        assert!(err.to_string().starts_with("cutoff too small"), "{err}");
        assert!(matches!(
            reduction_check_p1(&rep(1, 0, 2, 3), &EvalOptions::default()),
            Err(VerifyError::Precondition(_))
        ));
        assert!(
            reduction_check_p1(&rep(1, 1, 1, 3), &EvalOptions::default())
                .unwrap()
                .passed
        );
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let r = rep(1, 1, 2, 3);
        let one = suite_eq12(
            &r,
            &EvalOptions {
                workers: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let four = suite_eq12(
            &r,
            &EvalOptions {
                workers: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one, four);
    }
}
