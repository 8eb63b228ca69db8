//! Recovering structure constants from matrices, and the subalgebra
//! classification built on top of it.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::VerifyError;
use crate::algebra::{subalgebra_closure, AlgebraBuilder, AlgebraSpec, CheckOptions};
use crate::fock::{GreenRep, ModeLayout, SparseOperator};
use crate::grading::{bracket_kind, BracketKind};
use crate::ops::{Family, OpId, SYSTEM_FAMILIES};
use crate::scalar::Scalar;

/// Default for both the out-of-span residual (relative) and the distance to
/// the coefficient lattice.
pub const EXTRACTION_TOL: f64 = 1e-8;

/// Safe-block entries `(row·dim + col, value)`, sorted by key.
type Block = Vec<(u64, Complex64)>;

fn block_of(x: &SparseOperator, safe: &[usize], mask: &[bool]) -> Block {
    let dim = x.dim() as u64;
    let mut out = Vec::new();
    for &r in safe {
        out.extend(
            x.row(r)
                .filter(|(c, _)| mask[*c])
                .map(|(c, v)| (r as u64 * dim + c as u64, v)),
        );
    }
    out
}

/// `x ∘ y` on the safe block, with the intermediate sum running over all
/// states.
fn bracket_block(x: &SparseOperator, y: &SparseOperator, kind: BracketKind, safe: &[usize], mask: &[bool]) -> Block {
    let dim = x.dim() as u64;
    let s = match kind {
        BracketKind::Commutator => -1.0,
        BracketKind::Anticommutator => 1.0,
    };
    let mut out = Vec::new();
    for &r in safe {
        let mut acc: Vec<(usize, Complex64)> = Vec::new();
        for (k, a) in x.row(r) {
            acc.extend(y.row(k).filter(|(c, _)| mask[*c]).map(|(c, b)| (c, a * b)));
        }
        for (k, a) in y.row(r) {
            acc.extend(x.row(k).filter(|(c, _)| mask[*c]).map(|(c, b)| (c, a * b * s)));
        }
        acc.sort_unstable_by_key(|e| e.0);
        let mut row: Vec<(usize, Complex64)> = Vec::new();
        for (c, v) in acc {
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => row.push((c, v)),
            }
        }
        out.extend(row.into_iter().map(|(c, v)| (r as u64 * dim + c as u64, v)));
    }
    out
}

/// `⟨x, y⟩ = Σ conj(x)·y`.
fn inner(x: &Block, y: &Block) -> Complex64 {
    let (mut i, mut j) = (0, 0);
    let mut acc = Complex64::new(0.0, 0.0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += x[i].1.conj() * y[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// `max |r − Σ cₖ bₖ|` over the union of supports.
fn out_of_span(r: &Block, basis: &[Block], coeffs: &[Complex64]) -> f64 {
    let mut acc: std::collections::HashMap<u64, Complex64> = r.iter().copied().collect();
    for (b, c) in basis.iter().zip(coeffs) {
        if c.norm() == 0.0 {
            continue;
        }
        for (k, v) in b {
            *acc.entry(*k).or_default() -= c * v;
        }
    }
    acc.values().map(|v| v.norm()).fold(0.0, f64::max)
}

fn max_abs(b: &Block) -> f64 {
    b.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairResidual {
    pub left: String,
    pub right: String,
    pub residual: f64,
    pub scale: f64,
    pub lattice_distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtractionReport {
    pub tol: f64,
    pub basis: Vec<String>,
    pub word_len: usize,
    pub safe_states: usize,
    pub pairs: usize,
    pub max_relative_residual: f64,
    pub max_lattice_distance: f64,
    pub worst_pair: Option<PairResidual>,
    pub passed: bool,
}

/// Expands every graded bracket of `basis` in `basis` by least squares over
/// the safe block, rounds coefficients to `(1/2)·ℤ[i]` when within
/// tolerance, and returns the resulting spec. Daggers present in the basis
/// define its involution.
pub fn extract_structure_constants(
    rep: &GreenRep,
    basis: &[OpId],
    tol: f64,
) -> Result<(AlgebraSpec, ExtractionReport), VerifyError> {
    let ops: Vec<SparseOperator> = basis
        .iter()
        .map(|id| rep.op(id).map(|x| x.into_owned()))
        .collect::<Result<_, _>>()?;
    let word_len = 2 * basis.iter().map(OpId::word_len).max().unwrap_or(0);
    if rep.layout().parabosons > 0 && rep.layout().cutoff < word_len {
        return Err(VerifyError::CutoffTooSmall {
            relation: "structure-constant extraction".into(),
            word_len,
            cutoff: rep.layout().cutoff,
        });
    }
    let mask = rep.safe_mask(word_len);
    let safe: Vec<usize> = (0..rep.dim()).filter(|&i| mask[i]).collect();
    let blocks: Vec<Block> = ops.iter().map(|x| block_of(x, &safe, &mask)).collect();
    let names: Vec<String> = basis.iter().map(|id| id.to_string()).collect();

    let n = basis.len();
    let gram = DMatrix::from_fn(n, n, |i, j| inner(&blocks[i], &blocks[j]));
    independence(&gram, &names)?;
    let chol = gram
        .clone()
        .cholesky()
        .ok_or_else(|| VerifyError::RankDeficient(names.clone()))?;

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let solved: Vec<(Vec<Complex64>, f64, f64)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let kind = bracket_kind(basis[i].degree(), basis[j].degree());
            let r = bracket_block(&ops[i], &ops[j], kind, &safe, &mask);
            let rhs = DMatrix::from_fn(n, 1, |k, _| inner(&blocks[k], &r));
            let c: Vec<Complex64> = chol.solve(&rhs).iter().copied().collect();
            let res = out_of_span(&r, &blocks, &c);
            (c, res, max_abs(&r).max(1.0))
        })
        .collect();

    let mut b = AlgebraBuilder::default();
    for (id, name) in basis.iter().zip(&names) {
        b.push_element(name.clone(), id.degree());
    }
    let mut worst: Option<PairResidual> = None;
    let mut max_rel = 0.0f64;
    let mut max_lat = 0.0f64;
    for (&(i, j), (c, res, scale)) in pairs.iter().zip(&solved) {
        let mut terms = Vec::new();
        let mut lat = 0.0f64;
        for (k, z) in c.iter().enumerate() {
            let (q, d) = Scalar::round_to_half_lattice(*z);
            lat = lat.max(d);
            let value = if d <= tol { q } else { Scalar::Inexact(*z) };
            if !value.is_zero() {
                terms.push((names[k].clone(), value));
            }
        }
        b.push_bracket(&names[i], &names[j], terms);
        max_lat = max_lat.max(lat);
        let rel = res / scale;
        if worst
            .as_ref()
            .is_none_or(|w| rel.max(lat) > (w.residual / w.scale).max(w.lattice_distance))
        {
            worst = Some(PairResidual {
                left: names[i].clone(),
                right: names[j].clone(),
                residual: *res,
                scale: *scale,
                lattice_distance: lat,
            });
        }
        max_rel = max_rel.max(rel);
    }
    for (id, name) in basis.iter().zip(&names) {
        if let Some(k) = basis.iter().position(|x| *x == id.dagger()) {
            b.push_involution(name, &names[k], Scalar::one());
        }
    }
    let spec = b.build()?;
    let report = ExtractionReport {
        tol,
        basis: names,
        word_len,
        safe_states: safe.len(),
        pairs: pairs.len(),
        max_relative_residual: max_rel,
        max_lattice_distance: max_lat,
        worst_pair: worst,
        passed: max_rel <= tol && max_lat <= tol,
    };
    Ok((spec, report))
}

/// Fails with the operators involved in any near-null direction of the
/// normalized Gram matrix.
fn independence(gram: &DMatrix<Complex64>, names: &[String]) -> Result<(), VerifyError> {
    let n = gram.nrows();
    let diag: Vec<f64> = (0..n).map(|i| gram[(i, i)].re).collect();
    let vanishing: Vec<String> = (0..n).filter(|&i| diag[i] <= 1e-24).map(|i| names[i].clone()).collect();
    if !vanishing.is_empty() {
        return Err(VerifyError::RankDeficient(vanishing));
    }
    let norm = DMatrix::from_fn(n, n, |i, j| gram[(i, j)] / (diag[i] * diag[j]).sqrt());
    let eig = norm.symmetric_eigen();
    let mut dependent = std::collections::BTreeSet::new();
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda < 1e-10 {
            for i in 0..n {
                if eig.eigenvectors[(i, k)].norm() > 1e-3 {
                    dependent.insert(i);
                }
            }
        }
    }
    if dependent.is_empty() {
        Ok(())
    } else {
        Err(VerifyError::RankDeficient(
            dependent.into_iter().map(|i| names[i].clone()).collect(),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubalgebraEntry {
    pub name: String,
    pub identification: String,
    pub members: Vec<String>,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub closed: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub layout: ModeLayout,
    pub extraction: ExtractionReport,
    pub subalgebras: Vec<SubalgebraEntry>,
    pub passed: bool,
}

/// The subsets of the system singled out as symmetry and statistical
/// algebras, with their expected dimensions.
pub fn classification_subsets(m: usize, n: usize) -> Vec<(String, String, Vec<Family>, usize)> {
    use Family::*;
    let bose = m * (2 * m + 1);
    let fermi = n * (2 * n).saturating_sub(1);
    let mut out = vec![
        (
            "parabose bilinears".to_string(),
            format!("sp({},R)", 2 * m),
            vec![Ma, Ba, Badag],
            bose,
        ),
        (
            "parafermi bilinears".to_string(),
            format!("so({},R)", 2 * n),
            vec![Mf, Bf, Bfdag],
            fermi,
        ),
        (
            "L_Bose".to_string(),
            format!("sp({},R) + so({},R)", 2 * m, 2 * n),
            vec![Ma, Ba, Badag, Mf, Bf, Bfdag],
            bose + fermi,
        ),
        (
            "parabose statistics".to_string(),
            format!("osp(1|{})", 2 * m),
            vec![A, Adag, Ma, Ba, Badag],
            bose + 2 * m,
        ),
        (
            "parafermi statistics".to_string(),
            format!("so({},R)", 2 * n + 1),
            vec![F, Fdag, Mf, Bf, Bfdag],
            n * (2 * n + 1),
        ),
    ];
    if m > 0 && n > 0 {
        out.push((
            "F-type supersymmetry".to_string(),
            "Z2-graded".to_string(),
            vec![Ma, Mf, Fk, Fkdag],
            m * m + n * n + 2 * m * n,
        ));
        out.push((
            "Q-type supersymmetry".to_string(),
            "Z2-graded".to_string(),
            vec![Ma, Mf, Q, Qdag],
            m * m + n * n + 2 * m * n,
        ));
        out.push((
            "L_Bose + L_Fermi".to_string(),
            "Z2-graded".to_string(),
            vec![Ma, Ba, Badag, Mf, Bf, Bfdag, Fk, Fkdag, Q, Qdag],
            bose + fermi + 4 * m * n,
        ));
    }
    out.retain(|(_, _, _, d)| *d > 0);
    out
}

/// Extracts the full algebra from the representation and checks closure
/// and dimension of each distinguished subset.
pub fn classify_subalgebras(rep: &GreenRep, tol: f64) -> Result<Classification, VerifyError> {
    let l = rep.layout();
    let (m, n) = (l.parabosons, l.parafermions);
    let basis = OpId::enumerate(m, n, &SYSTEM_FAMILIES);
    let (spec, extraction) = extract_structure_constants(rep, &basis, tol)?;
    let opts = CheckOptions { tol };
    let mut subalgebras = Vec::new();
    for (name, identification, families, expected) in classification_subsets(m, n) {
        let members: Vec<String> = OpId::enumerate(m, n, &families).iter().map(|x| x.to_string()).collect();
        let refs: Vec<&str> = members.iter().map(String::as_str).collect();
        let (closed, dimension) = subalgebra_closure(&spec, &refs, &opts)?;
        subalgebras.push(SubalgebraEntry {
            name,
            identification,
            members,
            dimension,
            expected_dimension: expected,
            closed,
            passed: closed && dimension == expected,
        });
    }
    let passed = extraction.passed && subalgebras.iter().all(|s| s.passed);
    Ok(Classification {
        layout: *l,
        extraction,
        subalgebras,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::build_green_rep;

    #[test]
    fn recovers_the_system_algebra() {
        let rep = build_green_rep(&ModeLayout::new(1, 1, 2, 6).unwrap()).unwrap();
        let basis = OpId::enumerate(1, 1, &SYSTEM_FAMILIES);
        let (spec, report) = extract_structure_constants(&rep, &basis, EXTRACTION_TOL).unwrap();
        assert!(report.passed, "{report:?}");
        let want = crate::catalog::build_para_lie_super(1, 1).unwrap();
        assert_eq!(spec.basis(), want.basis());
        for i in 0..spec.dim() {
            for j in 0..spec.dim() {
                assert_eq!(
                    spec.structure(i, j),
                    want.structure(i, j),
                    "{} ∘ {}",
                    spec.name(i),
                    spec.name(j)
                );
            }
        }
    }

    #[test]
    fn duplicate_is_rank_deficient() {
        let rep = build_green_rep(&ModeLayout::new(1, 0, 2, 4).unwrap()).unwrap();
        let a = OpId::gen(Family::A, 1);
        let err = extract_structure_constants(&rep, &[a, OpId::gen(Family::Adag, 1), a], EXTRACTION_TOL).unwrap_err();
        assert_eq!(err, VerifyError::RankDeficient(vec!["a_1".into(), "a_1".into()]));
    }
}
