//! Independent oracles: Buchberger bases, ideal membership, Krull dimension
//! and degree-truncated membership in the local ring at the origin.

mod buchberger;
mod dimension;
pub mod linalg;
mod local;

pub use buchberger::{buchberger, divide, ideal_membership, membership_certificate, normal_form, GroebnerBasis, MonomialOrder};
pub use dimension::krull_dimension;
pub use local::{local_membership_mod_degree, LocalIdealSpec};

use thiserror::Error;

use crate::algebra::{AlgebraError, JetVar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrobnerError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("degree bound {bound} must exceed ord F = {ord}")]
    BoundTooSmall { bound: u32, ord: u32 },
    #[error("{0} variables exceed the supported 128")]
    TooManyVariables(usize),
    #[error("variable {0} is not among the ring variables")]
    VariableOutsideRing(JetVar),
}
