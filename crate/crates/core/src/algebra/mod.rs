//! Exact polynomial arithmetic in jet variables.

mod field;
mod monomial;
mod parse;
mod poly;
mod series;

pub use field::{FieldSpec, Scalar, MAX_PRIME};
pub use monomial::{jet_variables, JetVar, Monomial};
pub use parse::{line_col, parse_poly, ParseContext, ParseError, ParseErrorKind};
pub use poly::{Order, Poly};
pub use series::{evaluate_at_series, expand_in_t, TruncatedSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("{0} is not an element of {1}")]
    NotInField(String, FieldSpec),
    #[error("the zero polynomial has no initial form")]
    ZeroPolynomial,
    #[error("variable {0} is not a level-0 variable")]
    NotLevelZero(JetVar),
    #[error("no series given for variable {0}")]
    UnknownIndex(JetVar),
}
