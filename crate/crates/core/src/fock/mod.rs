//! Matrix representations of `M` parabosons and `N` parafermions of order
//! `p` via the Green ansatz, on a truncated Fock space.
//!
//! Each paraparticle mode is a sum of `p` Green components living on their
//! own tensor factors ("sites"). Sites are ordered Green-index-major, bosons
//! before fermions; basis states are mixed-radix little-endian (site 0
//! fastest), so the vacuum is index 0.

mod manifest;
mod sparse;

use std::borrow::Cow;
use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::grading::Degree;
use crate::ops::{Family, OpId, SYSTEM_FAMILIES};

pub use manifest::{Manifest, ManifestOperator};
pub use sparse::{graded_bracket, op_algebra, DimMismatch, SparseOperator, DROP_TOL};

pub const DEFAULT_MAX_DIM: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FockError {
    #[error("invalid layout: {0}")]
    Layout(String),
    #[error("Hilbert space dimension {required} exceeds the allowed {allowed} (set PARALG_MAX_DIM to raise it)")]
    TooLarge { required: String, allowed: usize },
    #[error("operator {0} is not part of this representation")]
    UnknownOperator(String),
    #[error(transparent)]
    Dim(#[from] DimMismatch),
    #[error("manifest: {0}")]
    Manifest(String),
    #[error("Green sign convention self-test failed: {0}")]
    Convention(String),
}

/// The dimension cap: `PARALG_MAX_DIM` if set, else 2²⁰.
pub fn max_dim() -> usize {
    std::env::var("PARALG_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Species {
    Boson(usize),
    Fermion(usize),
}

/// One tensor factor: Green index `α ∈ 1..=p` and mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Site {
    pub green: usize,
    pub species: Species,
}

impl Site {
    pub fn is_boson(&self) -> bool {
        matches!(self.species, Species::Boson(_))
    }

    /// Whether the components on the two sites anticommute.
    pub fn anticommutes_with(&self, other: &Site) -> bool {
        match (self.is_boson(), other.is_boson()) {
            (true, true) => self.green != other.green,
            (false, false) => self.green == other.green,
            _ => self.green != other.green,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeLayout {
    pub parabosons: usize,
    pub parafermions: usize,
    pub order: usize,
    pub cutoff: usize,
}

impl ModeLayout {
    pub fn new(parabosons: usize, parafermions: usize, order: usize, cutoff: usize) -> Result<Self, FockError> {
        let l = ModeLayout {
            parabosons,
            parafermions,
            order,
            cutoff,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<(), FockError> {
        if self.order == 0 {
            return Err(FockError::Layout("order p must be at least 1".into()));
        }
        if self.parabosons == 0 && self.parafermions == 0 {
            return Err(FockError::Layout("need at least one mode".into()));
        }
        if self.parabosons > 0 && self.cutoff == 0 {
            return Err(FockError::Layout("cutoff must be at least 1".into()));
        }
        Ok(())
    }

    pub fn site_order(&self) -> Vec<Site> {
        let mut out = Vec::new();
        for green in 1..=self.order {
            out.extend((1..=self.parabosons).map(|k| Site {
                green,
                species: Species::Boson(k),
            }));
            out.extend((1..=self.parafermions).map(|mu| Site {
                green,
                species: Species::Fermion(mu),
            }));
        }
        out
    }

    pub fn site_dims(&self) -> Vec<usize> {
        self.site_order()
            .iter()
            .map(|s| if s.is_boson() { self.cutoff + 1 } else { 2 })
            .collect()
    }

    /// `(c+1)^{Mp} · 2^{Np}`, or `None` on overflow.
    pub fn dimension(&self) -> Option<usize> {
        self.site_dims().iter().try_fold(1usize, |acc, &d| acc.checked_mul(d))
    }

    fn required_text(&self) -> String {
        match self.dimension() {
            Some(d) => d.to_string(),
            None => format!(
                "({})^{} * 2^{}",
                self.cutoff + 1,
                self.parabosons * self.order,
                self.parafermions * self.order
            ),
        }
    }

    pub fn check_dimension(&self, allowed: usize) -> Result<usize, FockError> {
        match self.dimension() {
            Some(d) if d <= allowed => Ok(d),
            _ => Err(FockError::TooLarge {
                required: self.required_text(),
                allowed,
            }),
        }
    }

    /// Occupation numbers of a basis state, one per site.
    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        self.site_dims()
            .iter()
            .map(|d| {
                let n = index % d;
                index /= d;
                n
            })
            .collect()
    }
}

/// A Green-ansatz representation: generators `a_k, a_k†, f_μ, f_μ†`, the ten
/// bilinear families recomputed from them, and the identity.
#[derive(Debug, Clone)]
pub struct GreenRep {
    layout: ModeLayout,
    dim: usize,
    registry: BTreeMap<OpId, SparseOperator>,
    zero_even: SparseOperator,
}

impl GreenRep {
    pub fn layout(&self) -> &ModeLayout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vacuum(&self) -> usize {
        0
    }

    /// Operators stored in the registry, in `OpId` order.
    pub fn operators(&self) -> impl Iterator<Item = (&OpId, &SparseOperator)> {
        self.registry.iter()
    }

    /// Looks up any operator, rewriting `B` index order as needed;
    /// `B_αα(f)` is the zero operator.
    pub fn op(&self, id: &OpId) -> Result<Cow<'_, SparseOperator>, FockError> {
        if !id.in_range(self.layout.parabosons, self.layout.parafermions) {
            return Err(FockError::UnknownOperator(id.to_string()));
        }
        match id.canonical() {
            None => Ok(Cow::Owned(self.zero_even.clone())),
            Some((c, sign)) => {
                let x = self
                    .registry
                    .get(&c)
                    .ok_or_else(|| FockError::UnknownOperator(id.to_string()))?;
                Ok(if sign == 1 {
                    Cow::Borrowed(x)
                } else {
                    Cow::Owned(x.scale(Complex64::new(-1.0, 0.0)))
                })
            }
        }
    }

    /// A bilinear by name, e.g. `Ma_1_2` or `Qdag_1_1`.
    pub fn bilinear(&self, name: &str) -> Result<Cow<'_, SparseOperator>, FockError> {
        let id: OpId = name.parse().map_err(|_| FockError::UnknownOperator(name.to_string()))?;
        if id.family.is_generator() || id.family == Family::Identity {
            return Err(FockError::UnknownOperator(format!("{name} (not a bilinear)")));
        }
        self.op(&id)
    }

    pub fn generator(&self, family: Family, index: usize) -> Result<&SparseOperator, FockError> {
        let id = OpId::gen(family, index);
        self.registry
            .get(&id)
            .ok_or_else(|| FockError::UnknownOperator(id.to_string()))
    }

    /// Basis states whose every boson occupancy is at most `c − word_len`.
    /// Matrix elements of words of that length are unaffected by the cutoff
    /// between such states.
    pub fn safe_projector(&self, word_len: usize) -> Vec<usize> {
        let mask = self.safe_mask(word_len);
        let out: Vec<usize> = (0..self.dim).filter(|&i| mask[i]).collect();
        if out.is_empty() {
            log::warn!(
                "safe subspace is empty: cutoff {} is below word length {word_len}",
                self.layout.cutoff
            );
        }
        out
    }

    pub fn safe_mask(&self, word_len: usize) -> Vec<bool> {
        let sites = self.layout.site_order();
        let dims = self.layout.site_dims();
        let Some(cap) = self.layout.cutoff.checked_sub(word_len) else {
            return if sites.iter().any(Site::is_boson) {
                vec![false; self.dim]
            } else {
                vec![true; self.dim]
            };
        };
        let mut mask = vec![true; self.dim];
        for (idx, slot) in mask.iter_mut().enumerate() {
            let mut r = idx;
            for (s, d) in sites.iter().zip(&dims) {
                if s.is_boson() && r % d > cap {
                    *slot = false;
                    break;
                }
                r /= d;
            }
        }
        mask
    }
}

/// Green component `X_s`: the local ladder on site `s` times the parity of
/// every earlier site it anticommutes with.
fn green_component(layout: &ModeLayout, dim: usize, s: usize) -> SparseOperator {
    let sites = layout.site_order();
    let dims = layout.site_dims();
    let site = sites[s];
    let stride: usize = dims[..s].iter().product();
    let partners: Vec<usize> = (0..s).filter(|&t| sites[t].anticommutes_with(&site)).collect();
    let mut strides = Vec::with_capacity(sites.len());
    let mut acc = 1;
    for d in &dims {
        strides.push(acc);
        acc *= d;
    }
    let mut triplets = Vec::new();
    for col in 0..dim {
        let n = (col / stride) % dims[s];
        if n == 0 {
            continue;
        }
        let flips: usize = partners.iter().map(|&t| (col / strides[t]) % dims[t]).sum();
        let amp = if site.is_boson() { (n as f64).sqrt() } else { 1.0 };
        let sign = if flips.is_multiple_of(2) { 1.0 } else { -1.0 };
        triplets.push((col - stride, col, Complex64::new(sign * amp, 0.0)));
    }
    let degree = if site.is_boson() {
        Degree::PARABOSE
    } else {
        Degree::PARAFERMI
    };
    SparseOperator::from_triplets(dim, triplets, degree, 1)
}

/// Builds the representation, refusing layouts above the dimension cap.
pub fn build_green_rep(layout: &ModeLayout) -> Result<GreenRep, FockError> {
    if cfg!(debug_assertions) {
        convention_self_test()?;
    }
    build_unchecked(layout)
}

fn build_unchecked(layout: &ModeLayout) -> Result<GreenRep, FockError> {
    layout.validate()?;
    let dim = layout.check_dimension(max_dim())?;
    let sites = layout.site_order();
    let one = Complex64::new(1.0, 0.0);
    let mut gens = BTreeMap::new();
    for (family, species) in [
        (
            Family::A,
            (1..=layout.parabosons).map(Species::Boson).collect::<Vec<_>>(),
        ),
        (Family::F, (1..=layout.parafermions).map(Species::Fermion).collect()),
    ] {
        for sp in species {
            let comps: Vec<SparseOperator> = sites
                .iter()
                .enumerate()
                .filter(|(_, s)| s.species == sp)
                .map(|(i, _)| green_component(layout, dim, i))
                .collect();
            let terms: Vec<(Complex64, &SparseOperator)> = comps.iter().map(|c| (one, c)).collect();
            let x = SparseOperator::lincomb(dim, &terms)?;
            let idx = match sp {
                Species::Boson(k) | Species::Fermion(k) => k,
            };
            gens.insert(OpId::gen(family, idx), x);
        }
    }
    from_generators(*layout, gens)
}

/// Assembles a representation from `a_k` and `f_μ` (daggers are adjoints),
/// computing every bilinear from its definition.
pub(crate) fn from_generators(
    layout: ModeLayout,
    lowering: BTreeMap<OpId, SparseOperator>,
) -> Result<GreenRep, FockError> {
    let dim = layout
        .dimension()
        .ok_or_else(|| FockError::Layout("dimension overflow".into()))?;
    let mut registry = BTreeMap::new();
    for (id, x) in lowering {
        if x.dim() != dim {
            return Err(FockError::Dim(DimMismatch(dim, x.dim())));
        }
        registry.insert(id.dagger(), x.adjoint());
        registry.insert(id, x);
    }
    let half = Complex64::new(0.5, 0.0);
    let g = |fam: Family, i: usize| registry[&OpId::gen(fam, i)].clone();
    let mut bil = BTreeMap::new();
    for id in OpId::enumerate(layout.parabosons, layout.parafermions, &SYSTEM_FAMILIES) {
        use crate::grading::BracketKind::*;
        use Family::*;
        let (x, y, kind) = match id.family {
            Ma => (g(Adag, id.i), g(A, id.j), Anticommutator),
            Ba => (g(A, id.i), g(A, id.j), Anticommutator),
            Mf => (g(Fdag, id.i), g(F, id.j), Commutator),
            Bf => (g(F, id.i), g(F, id.j), Commutator),
            Fk => (g(A, id.i), g(F, id.j), Anticommutator),
            Q => (g(Adag, id.i), g(F, id.j), Anticommutator),
            _ => continue,
        };
        let b = op_algebra(&x, &y, kind)?.scale(half).with_tags(id.degree(), 2);
        if id.family != Ma && id.family != Mf {
            bil.insert(id.dagger(), b.adjoint());
        }
        bil.insert(id, b);
    }
    registry.extend(bil);
    registry.insert(OpId::identity(), SparseOperator::identity(dim));
    Ok(GreenRep {
        layout,
        dim,
        registry,
        zero_even: SparseOperator::zero(dim, Degree::ZERO),
    })
}

/// Runs the trilinear relations at `(M,N,p,c) = (1,1,2,4)` once per process
/// and fails if the mixed sign convention does not reproduce them.
fn convention_self_test() -> Result<(), FockError> {
    use std::sync::OnceLock;
    static RESULT: OnceLock<Result<(), String>> = OnceLock::new();
    RESULT
        .get_or_init(|| {
            let layout = ModeLayout::new(1, 1, 2, 4).expect("valid");
            let rep = build_unchecked(&layout).map_err(|e| e.to_string())?;
            let report =
                crate::verify::suite_eq12(&rep, &crate::verify::EvalOptions::default()).map_err(|e| e.to_string())?;
            if report.passed {
                Ok(())
            } else {
                Err(format!("max relative residual {:e}", report.max_relative_residual))
            }
        })
        .clone()
        .map_err(FockError::Convention)
}
