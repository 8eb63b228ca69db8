//! Finite-dimensional Z₂,₂-graded algebras given by structure constants, and
//! the axiom checkers that run on them.
//!
//! An [`AlgebraSpec`] stores a basis `e_0 … e_{n-1}`, each with a [`Degree`],
//! and the full table `e_i ∘ e_j = Σ_k C_ij^k e_k`. Specs are immutable once
//! built. The basis is kept sorted by `(degree, name)` so every report and
//! export iterates in the same order.

mod check;
mod json;
mod map;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::grading::{bracket_kind, BracketKind, Degree};
use crate::scalar::Scalar;

pub use check::{
    check_axioms, check_grading, check_involution, check_jacobi, check_supersymmetrization, count_jacobi_classes,
    subalgebra_closure, verify_homomorphism, Axiom, AxiomSuite, CheckOptions, CheckReport, JacobiClass, JacobiReport,
    Violation, VIOLATION_CAP,
};
pub use json::{AlgebraFile, BasisEntry, BracketEntry, Meta, Term};
pub use map::LinearMap;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("unknown basis element {0:?}")]
    UnknownElement(String),
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("bracket ({0}, {1}) given more than once")]
    DuplicateBracket(String, String),
    #[error("involution: {0}")]
    Involution(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("map: {0}")]
    Map(String),
}

/// A sparse linear combination of basis elements.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Element(BTreeMap<usize, Scalar>);

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Element::zero();
        e.add_term(i, Scalar::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    /// Adds `c·e_i`, dropping the entry if it cancels to a structural zero.
    pub fn add_term(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.0.remove(&i);
                } else {
                    *v = s;
                }
            }
            None => {
                self.0.insert(i, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (&i, v) in &other.0 {
            self.add_term(i, v * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut e = Element::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::int(-1));
        e
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.0.values().all(|c| c.is_zero_tol(tol))
    }

    pub fn is_exact(&self) -> bool {
        self.0.values().all(Scalar::is_exact)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: Degree,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    basis: Vec<BasisElement>,
    lookup: HashMap<String, usize>,
    // Row-major n×n table: table[i*n + j] = e_i ∘ e_j.
    table: Vec<Element>,
    // θ(e_i) = s_i · e_{π(i)}, conjugate-linear.
    involution: Option<Vec<(usize, Scalar)>>,
    kind_overrides: BTreeMap<(Degree, Degree), BracketKind>,
}

fn pair_key(a: Degree, b: Degree) -> (Degree, Degree) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl AlgebraSpec {
    pub fn builder() -> AlgebraBuilder {
        AlgebraBuilder::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.basis[i].degree
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownElement(name.to_string()))
    }

    /// `e_name` as an element.
    pub fn elem(&self, name: &str) -> Result<Element, AlgebraError> {
        self.index_of(name).map(Element::basis)
    }

    /// Builds an element from `(name, coefficient)` pairs.
    pub fn combo(&self, terms: &[(&str, Scalar)]) -> Result<Element, AlgebraError> {
        let mut e = Element::zero();
        for (n, c) in terms {
            e.add_term(self.index_of(n)?, c.clone());
        }
        Ok(e)
    }

    /// `e_i ∘ e_j`.
    pub fn structure(&self, i: usize, j: usize) -> &Element {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear extension of the product to arbitrary elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                let c = ci * cj;
                out.add_scaled(self.structure(i, j), &c);
            }
        }
        out
    }

    /// `e_i ∘ y`.
    pub fn bracket_left(&self, i: usize, y: &Element) -> Element {
        let mut out = Element::zero();
        for (j, cj) in y.iter() {
            out.add_scaled(self.structure(i, j), cj);
        }
        out
    }

    pub fn kind_overrides(&self) -> &BTreeMap<(Degree, Degree), BracketKind> {
        &self.kind_overrides
    }

    /// The bracket kind in force for a degree pair: the override if one is
    /// set, the dot-product rule otherwise.
    pub fn kind(&self, a: Degree, b: Degree) -> BracketKind {
        self.kind_overrides
            .get(&pair_key(a, b))
            .copied()
            .unwrap_or_else(|| bracket_kind(a, b))
    }

    /// `(−1)^{g·h}`, or the override's sign.
    pub fn sign(&self, a: Degree, b: Degree) -> i8 {
        self.kind(a, b).sign()
    }

    pub fn involution(&self) -> Option<&[(usize, Scalar)]> {
        self.involution.as_deref()
    }

    /// Applies the conjugate-linear involution, if present.
    pub fn apply_involution(&self, x: &Element) -> Option<Element> {
        let inv = self.involution.as_ref()?;
        let mut out = Element::zero();
        for (k, c) in x.iter() {
            let (target, s) = &inv[k];
            out.add_term(*target, &c.conj() * s);
        }
        Some(out)
    }

    /// True when every structure constant and involution scalar is exact.
    pub fn is_exact(&self) -> bool {
        self.table.iter().all(Element::is_exact) && self.involution.iter().flatten().all(|(_, s)| s.is_exact())
    }

    /// Number of basis elements per degree, in degree order.
    pub fn subspace_dims(&self) -> [usize; 4] {
        let mut d = [0; 4];
        for b in &self.basis {
            d[b.degree.index()] += 1;
        }
        d
    }

    /// A copy with one structure constant replaced. `C_ij^k` only; the
    /// reversed order is left untouched.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: Scalar) -> AlgebraSpec {
        let mut s = self.clone();
        let n = s.dim();
        let cell = &mut s.table[i * n + j];
        let old = cell.coeff(k);
        cell.add_term(k, &value - &old);
        s
    }

    /// A copy with the given kind overrides replacing the current ones. The
    /// structure table is not recomputed.
    pub fn with_overrides(&self, overrides: &[(Degree, Degree, BracketKind)]) -> AlgebraSpec {
        let mut s = self.clone();
        s.kind_overrides = overrides.iter().map(|&(a, b, k)| (pair_key(a, b), k)).collect();
        s
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| format!("({c})·{}", self.name(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims = self.subspace_dims();
        write!(
            f,
            "graded algebra, dim {} (L00:{} L01:{} L10:{} L11:{})",
            self.dim(),
            dims[0],
            dims[1],
            dims[2],
            dims[3]
        )
    }
}

/// Collects names, brackets and an optional involution, then resolves them
/// into an [`AlgebraSpec`].
type BracketRow = (String, String, Vec<(String, Scalar)>);

#[derive(Clone, Debug, Default)]
pub struct AlgebraBuilder {
    basis: Vec<BasisElement>,
    brackets: Vec<BracketRow>,
    involution: Vec<(String, String, Scalar)>,
    overrides: Vec<(Degree, Degree, BracketKind)>,
    no_reverse_fill: bool,
}

impl AlgebraBuilder {
    pub fn element(mut self, name: impl Into<String>, degree: Degree) -> Self {
        self.push_element(name, degree);
        self
    }

    pub fn push_element(&mut self, name: impl Into<String>, degree: Degree) {
        self.basis.push(BasisElement {
            name: name.into(),
            degree,
        });
    }

    /// Declares `left ∘ right = Σ c·elem`.
    pub fn bracket(mut self, left: &str, right: &str, result: &[(&str, Scalar)]) -> Self {
        self.push_bracket(
            left,
            right,
            result.iter().map(|(n, c)| (n.to_string(), c.clone())).collect(),
        );
        self
    }

    pub fn push_bracket(&mut self, left: &str, right: &str, result: Vec<(String, Scalar)>) {
        self.brackets.push((left.to_string(), right.to_string(), result));
    }

    /// Declares `θ(from) = scale · to`. If `to ≠ from` and the reverse entry
    /// is absent, `θ(to) = conj(scale)⁻¹ · from` is filled in.
    pub fn involution(mut self, from: &str, to: &str, scale: Scalar) -> Self {
        self.push_involution(from, to, scale);
        self
    }

    pub fn push_involution(&mut self, from: &str, to: &str, scale: Scalar) {
        self.involution.push((from.to_string(), to.to_string(), scale));
    }

    pub fn kind_override(mut self, a: Degree, b: Degree, kind: BracketKind) -> Self {
        self.overrides.push((a, b, kind));
        self
    }

    /// Keep only the brackets as given, without deriving reversed orders.
    pub fn without_reverse_fill(mut self) -> Self {
        self.no_reverse_fill = true;
        self
    }

    pub fn build(self) -> Result<AlgebraSpec, AlgebraError> {
        let mut basis = self.basis;
        basis.sort_by(|a, b| (a.degree, &a.name).cmp(&(b.degree, &b.name)));
        let mut lookup = HashMap::with_capacity(basis.len());
        for (i, b) in basis.iter().enumerate() {
            if lookup.insert(b.name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateName(b.name.clone()));
            }
        }
        let idx = |n: &str| {
            lookup
                .get(n)
                .copied()
                .ok_or_else(|| AlgebraError::UnknownElement(n.to_string()))
        };
        let overrides: BTreeMap<_, _> = self.overrides.iter().map(|&(a, b, k)| (pair_key(a, b), k)).collect();
        let n = basis.len();
        let mut given: Vec<Option<Element>> = vec![None; n * n];
        for (l, r, res) in &self.brackets {
            let (i, j) = (idx(l)?, idx(r)?);
            let mut e = Element::zero();
            for (name, c) in res {
                e.add_term(idx(name)?, c.clone());
            }
            if given[i * n + j].is_some() {
                return Err(AlgebraError::DuplicateBracket(l.clone(), r.clone()));
            }
            given[i * n + j] = Some(e);
        }
        let mut table = vec![Element::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(e) = &given[i * n + j] {
                    table[i * n + j] = e.clone();
                } else if !self.no_reverse_fill {
                    if let Some(rev) = &given[j * n + i] {
                        // u∘v = −s·v∘u
                        let kind = overrides
                            .get(&pair_key(basis[i].degree, basis[j].degree))
                            .copied()
                            .unwrap_or_else(|| bracket_kind(basis[i].degree, basis[j].degree));
                        table[i * n + j] = rev.scaled(&Scalar::int(-kind.sign() as i64));
                    }
                }
            }
        }

        let involution = if self.involution.is_empty() {
            None
        } else {
            let mut inv: Vec<Option<(usize, Scalar)>> = vec![None; n];
            for (from, to, s) in &self.involution {
                let (i, j) = (idx(from)?, idx(to)?);
                if inv[i].is_some() {
                    return Err(AlgebraError::Involution(format!("image of {from:?} given twice")));
                }
                inv[i] = Some((j, s.clone()));
            }
            for (from, to, s) in &self.involution {
                let (i, j) = (idx(from)?, idx(to)?);
                if i != j && inv[j].is_none() {
                    let back = s
                        .conj()
                        .inv()
                        .ok_or_else(|| AlgebraError::Involution(format!("zero scale on {from:?}")))?;
                    inv[j] = Some((i, back));
                }
            }
            let inv = inv
                .into_iter()
                .enumerate()
                .map(|(i, e)| e.ok_or_else(|| AlgebraError::Involution(format!("no image for {:?}", basis[i].name))))
                .collect::<Result<Vec<_>, _>>()?;
            Some(inv)
        };

        Ok(AlgebraSpec {
            basis,
            lookup,
            table,
            involution,
            kind_overrides: overrides,
        })
    }
}
