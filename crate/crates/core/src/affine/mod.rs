//! The centrally extended loop algebra `ĝ_N` of `sl2`, PBW-form modules at
//! arbitrary level, and Sugawara operators.

mod lie;
mod module;
mod singular;
mod sugawara;

use thiserror::Error;

use crate::kernel::Rat;

pub use lie::{
    bracket, commutator, critical_level, pbw_reduce, AffineElement, Commutator, Gen, LoopGen, Term,
};
pub use module::{Actor, Module, ModuleKind, ModuleVector, Monomial};
pub use singular::{is_singular, singular_vectors, verma_quotient_truncated, QuotientVerdict};
pub use sugawara::{
    centrality_check, centrality_prediction, delta, sugawara_apply, SugawaraOp, CENTRALITY_CONSTANT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("element at level {element} acting on module at level {module}")]
    LevelMismatch { element: Box<Rat>, module: Box<Rat> },
    #[error("graded pieces are infinite-dimensional; a zero-mode bound is required")]
    TruncationRequired,
    #[error("operation requires a Verma module")]
    NotVerma,
}
