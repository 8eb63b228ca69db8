//! Relation checking on matrix representations: residual reports for
//! relation sets, structure-constant extraction, subalgebra classification,
//! supercharge spectra and the order-1 reduction.

mod eval;
mod extract;
pub mod relation;
pub mod sets;
mod spectra;

pub use eval::{
    eval_relation, eval_relations, instance_sides, reduction_check_p1, suite_closure, suite_eq12, with_workers,
    EvalOptions, InstanceResidual, RelationSummary, ResidualReport,
};
pub use extract::{
    classification_subsets, classify_subalgebras, extract_structure_constants, Classification, ExtractionReport,
    PairResidual, SubalgebraEntry, EXTRACTION_TOL,
};
pub use relation::{parse_relation_set, RelationError, RelationExpr};
pub use spectra::{supercharge_spectra, SpectralReport, Spectrum, DENSE_MAX_DIM};

use crate::algebra::AlgebraError;
use crate::fock::{DimMismatch, FockError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error(
        "cutoff too small: {relation} has word length {word_len}, which needs cutoff >= {word_len} (got {cutoff})"
    )]
    CutoffTooSmall {
        relation: String,
        word_len: usize,
        cutoff: usize,
    },
    #[error("operators are linearly dependent on the safe subspace: {}", .0.join(", "))]
    RankDeficient(Vec<String>),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Resource(String),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<DimMismatch> for VerifyError {
    fn from(e: DimMismatch) -> Self {
        VerifyError::Fock(FockError::Dim(e))
    }
}
