//! Immutable complex CSR matrices tagged with a degree and a word length.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::grading::{bracket_kind, BracketKind, Degree};

/// Entries below this magnitude are dropped.
pub const DROP_TOL: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("dimension mismatch: {0} vs {1}")]
pub struct DimMismatch(pub usize, pub usize);

#[derive(Clone, Debug, PartialEq)]
pub struct SparseOperator {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<Complex64>,
    degree: Degree,
    word_len: usize,
}

impl SparseOperator {
    /// Sums duplicate entries and drops near-zeros.
    pub fn from_triplets(
        dim: usize,
        mut triplets: Vec<(usize, usize, Complex64)>,
        degree: Degree,
        word_len: usize,
    ) -> Self {
        triplets.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; dim + 1];
        let mut cols = Vec::with_capacity(triplets.len());
        let mut vals: Vec<Complex64> = Vec::with_capacity(triplets.len());
        let mut rows = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "entry ({r}, {c}) outside dimension {dim}");
            if rows.last() == Some(&r) && cols.last() == Some(&c) {
                *vals.last_mut().unwrap() += v;
            } else {
                rows.push(r);
                cols.push(c);
                vals.push(v);
            }
        }
        let mut out_cols = Vec::with_capacity(cols.len());
        let mut out_vals = Vec::with_capacity(cols.len());
        for ((r, c), v) in rows.into_iter().zip(cols).zip(vals) {
            if v.norm() >= DROP_TOL {
                row_ptr[r + 1] += 1;
                out_cols.push(c);
                out_vals.push(v);
            }
        }
        for r in 0..dim {
            row_ptr[r + 1] += row_ptr[r];
        }
        SparseOperator {
            dim,
            row_ptr,
            cols: out_cols,
            vals: out_vals,
            degree,
            word_len,
        }
    }

    fn from_rows(dim: usize, rows: Vec<Vec<(usize, Complex64)>>, degree: Degree, word_len: usize) -> Self {
        let mut row_ptr = Vec::with_capacity(dim + 1);
        row_ptr.push(0);
        let nnz = rows.iter().map(Vec::len).sum();
        let mut cols = Vec::with_capacity(nnz);
        let mut vals = Vec::with_capacity(nnz);
        for row in rows {
            for (c, v) in row {
                cols.push(c);
                vals.push(v);
            }
            row_ptr.push(cols.len());
        }
        SparseOperator {
            dim,
            row_ptr,
            cols,
            vals,
            degree,
            word_len,
        }
    }

    pub fn zero(dim: usize, degree: Degree) -> Self {
        SparseOperator {
            dim,
            row_ptr: vec![0; dim + 1],
            cols: Vec::new(),
            vals: Vec::new(),
            degree,
            word_len: 0,
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOperator {
            dim,
            row_ptr: (0..=dim).collect(),
            cols: (0..dim).collect(),
            vals: vec![Complex64::new(1.0, 0.0); dim],
            degree: Degree::ZERO,
            word_len: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn with_tags(mut self, degree: Degree, word_len: usize) -> Self {
        self.degree = degree;
        self.word_len = word_len;
        self
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.dim)
            .flat_map(move |r| (self.row_ptr[r]..self.row_ptr[r + 1]).map(move |k| (r, self.cols[k], self.vals[k])))
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        (self.row_ptr[r]..self.row_ptr[r + 1]).map(move |k| (self.cols[k], self.vals[k]))
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        let span = &self.cols[self.row_ptr[r]..self.row_ptr[r + 1]];
        match span.binary_search(&c) {
            Ok(k) => self.vals[self.row_ptr[r] + k],
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }

    /// Conjugate transpose; degree and word length unchanged.
    pub fn adjoint(&self) -> Self {
        let mut counts = vec![0usize; self.dim + 1];
        for &c in &self.cols {
            counts[c + 1] += 1;
        }
        for i in 0..self.dim {
            counts[i + 1] += counts[i];
        }
        let row_ptr = counts.clone();
        let mut next = counts;
        let mut cols = vec![0usize; self.nnz()];
        let mut vals = vec![Complex64::new(0.0, 0.0); self.nnz()];
        for (r, c, v) in self.triplets() {
            let k = next[c];
            cols[k] = r;
            vals[k] = v.conj();
            next[c] += 1;
        }
        SparseOperator {
            dim: self.dim,
            row_ptr,
            cols,
            vals,
            degree: self.degree,
            word_len: self.word_len,
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        if s.norm() < DROP_TOL {
            return SparseOperator::zero(self.dim, self.degree).with_tags(self.degree, self.word_len);
        }
        let mut out = self.clone();
        for v in &mut out.vals {
            *v *= s;
        }
        out
    }

    /// `Σ cᵢ Xᵢ`. The degree is taken from the first term; the word length
    /// is the maximum.
    pub fn lincomb(dim: usize, terms: &[(Complex64, &SparseOperator)]) -> Result<Self, DimMismatch> {
        for (_, x) in terms {
            if x.dim != dim {
                return Err(DimMismatch(dim, x.dim));
            }
        }
        let degree = terms.first().map_or(Degree::ZERO, |(_, x)| x.degree);
        let word_len = terms.iter().map(|(_, x)| x.word_len).max().unwrap_or(0);
        let rows: Vec<Vec<(usize, Complex64)>> = (0..dim)
            .into_par_iter()
            .map(|r| {
                let mut acc: Vec<(usize, Complex64)> = Vec::new();
                for (c, x) in terms {
                    acc.extend(x.row(r).map(|(j, v)| (j, v * c)));
                }
                merge_row(acc)
            })
            .collect();
        Ok(SparseOperator::from_rows(dim, rows, degree, word_len))
    }

    pub fn add(&self, other: &SparseOperator) -> Result<Self, DimMismatch> {
        let one = Complex64::new(1.0, 0.0);
        SparseOperator::lincomb(self.dim, &[(one, self), (one, other)])
    }

    pub fn sub(&self, other: &SparseOperator) -> Result<Self, DimMismatch> {
        SparseOperator::lincomb(
            self.dim,
            &[(Complex64::new(1.0, 0.0), self), (Complex64::new(-1.0, 0.0), other)],
        )
    }

    /// Matrix product. Degrees add; word lengths add.
    pub fn mul(&self, other: &SparseOperator) -> Result<Self, DimMismatch> {
        if self.dim != other.dim {
            return Err(DimMismatch(self.dim, other.dim));
        }
        let rows: Vec<Vec<(usize, Complex64)>> = (0..self.dim)
            .into_par_iter()
            .map(|r| {
                let mut acc = Vec::new();
                for (k, a) in self.row(r) {
                    acc.extend(other.row(k).map(|(c, b)| (c, a * b)));
                }
                merge_row(acc)
            })
            .collect();
        Ok(SparseOperator::from_rows(
            self.dim,
            rows,
            self.degree + other.degree,
            self.word_len + other.word_len,
        ))
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.dim)
            .map(|r| self.row(r).map(|(c, x)| x * v[c]).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.vals.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest `|X[r, c]|` with both `r` and `c` in the mask, and where it
    /// occurs.
    pub fn max_abs_on(&self, mask: &[bool]) -> (f64, Option<(usize, usize)>) {
        let mut best = (0.0, None);
        for (r, c, v) in self.triplets() {
            if mask[r] && mask[c] && v.norm() > best.0 {
                best = (v.norm(), Some((r, c)));
            }
        }
        best
    }

    pub fn to_dense(&self) -> nalgebra::DMatrix<Complex64> {
        let mut m = nalgebra::DMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v;
        }
        m
    }

    /// Dense submatrix on the given (sorted) index set.
    pub fn restrict_dense(&self, idx: &[usize]) -> nalgebra::DMatrix<Complex64> {
        let mut pos = vec![usize::MAX; self.dim];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let mut m = nalgebra::DMatrix::zeros(idx.len(), idx.len());
        for &r in idx {
            for (c, v) in self.row(r) {
                if pos[c] != usize::MAX {
                    m[(pos[r], pos[c])] = v;
                }
            }
        }
        m
    }
}

fn merge_row(mut acc: Vec<(usize, Complex64)>) -> Vec<(usize, Complex64)> {
    acc.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(usize, Complex64)> = Vec::with_capacity(acc.len());
    for (c, v) in acc {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| v.norm() >= DROP_TOL);
    out
}

/// `xy − yx` or `xy + yx`. The result has degree `g(x) + g(y)` and word
/// length `w(x) + w(y)`.
pub fn op_algebra(x: &SparseOperator, y: &SparseOperator, kind: BracketKind) -> Result<SparseOperator, DimMismatch> {
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    let s = match kind {
        BracketKind::Commutator => -1.0,
        BracketKind::Anticommutator => 1.0,
    };
    SparseOperator::lincomb(x.dim, &[(Complex64::new(1.0, 0.0), &xy), (Complex64::new(s, 0.0), &yx)])
}

/// The graded product, with the bracket kind chosen from the degrees.
pub fn graded_bracket(x: &SparseOperator, y: &SparseOperator) -> Result<SparseOperator, DimMismatch> {
    op_algebra(x, y, bracket_kind(x.degree(), y.degree()))
}
