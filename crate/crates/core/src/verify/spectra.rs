use num_complex::Complex64;
use serde::Serialize;

use super::VerifyError;
use crate::fock::{op_algebra, GreenRep, SparseOperator};
use crate::grading::BracketKind;
use crate::ops::{Family, OpId};

/// Largest Hilbert dimension accepted for dense diagonalization.
pub const DENSE_MAX_DIM: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub min: f64,
    pub max: f64,
    /// Spectral norm, `max |λ|`.
    pub norm: f64,
    /// `max |H − H†|` over all entries.
    pub hermiticity_residual: f64,
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    pub safe_states: usize,
    pub h_q: Spectrum,
    pub h_f: Spectrum,
    /// `−10⁻¹⁰·‖H_Q‖`.
    pub psd_threshold: f64,
    pub h_q_positive_semidefinite: bool,
    pub passed: bool,
}

/// `Σ {X, X†}` over the given operators.
fn sum_of_squares(rep: &GreenRep, xs: &[OpId]) -> Result<SparseOperator, VerifyError> {
    let mut terms = Vec::with_capacity(xs.len());
    for x in xs {
        let op = rep.op(x)?;
        let dag = rep.op(&x.dagger())?;
        terms.push(op_algebra(&op, &dag, BracketKind::Anticommutator)?);
    }
    let one = Complex64::new(1.0, 0.0);
    let refs: Vec<(Complex64, &SparseOperator)> = terms.iter().map(|t| (one, t)).collect();
    Ok(SparseOperator::lincomb(rep.dim(), &refs)?)
}

fn spectrum(h: &SparseOperator, safe: &[usize]) -> Spectrum {
    let herm = h.sub(&h.adjoint()).map(|d| d.max_abs()).unwrap_or(f64::INFINITY);
    let dense = h.restrict_dense(safe);
    let mut eigenvalues: Vec<f64> = if safe.is_empty() {
        Vec::new()
    } else {
        dense.symmetric_eigen().eigenvalues.iter().copied().collect()
    };
    eigenvalues.sort_by(f64::total_cmp);
    let min = eigenvalues.first().copied().unwrap_or(0.0);
    let max = eigenvalues.last().copied().unwrap_or(0.0);
    Spectrum {
        min,
        max,
        norm: min.abs().max(max.abs()),
        hermiticity_residual: herm,
        eigenvalues,
    }
}

/// Spectra of `H_Q = Σ {Q, Q†}` and `H_F = Σ {F, F†}` on the safe subspace
/// for words of length 4. `H_Q` must be positive semidefinite; `H_F` is
/// only reported.
pub fn supercharge_spectra(rep: &GreenRep) -> Result<SpectralReport, VerifyError> {
    if rep.dim() > DENSE_MAX_DIM {
        return Err(VerifyError::Resource(format!(
            "dense eigensolve needs Hilbert dimension <= {DENSE_MAX_DIM}, got {}",
            rep.dim()
        )));
    }
    let l = rep.layout();
    if l.parabosons > 0 && l.cutoff < 4 {
        return Err(VerifyError::CutoffTooSmall {
            relation: "supercharge Hamiltonians".into(),
            word_len: 4,
            cutoff: l.cutoff,
        });
    }
    let q = OpId::enumerate(l.parabosons, l.parafermions, &[Family::Q]);
    let f = OpId::enumerate(l.parabosons, l.parafermions, &[Family::Fk]);
    let safe = rep.safe_projector(4);
    let h_q = spectrum(&sum_of_squares(rep, &q)?, &safe);
    let h_f = spectrum(&sum_of_squares(rep, &f)?, &safe);
    let psd_threshold = -1e-10 * h_q.norm;
    let psd = h_q.min >= psd_threshold;
    Ok(SpectralReport {
        safe_states: safe.len(),
        passed: psd && h_q.hermiticity_residual < 1e-12,
        h_q_positive_semidefinite: psd,
        psd_threshold,
        h_q,
        h_f,
    })
}
