//! Smoothness and flatness criteria for jet schemes at the trivial jet.

mod embedding;
mod smoothness;
mod witness;

use thiserror::Error;

use crate::grobner::GrobnerError;
use crate::jets::JetError;

pub use embedding::{embedding_dimension_at_origin, EmbeddingReduction, ReductionMethod};
pub use smoothness::{jet_smoothness_report, tangent_space_at_origin, SmoothnessReport, TangentReport, Verdict};
pub use witness::{
    default_bound, flat_witness_char0, flat_witness_charp, ord_ideal, verify_witness, CharPCertificate, Check,
    FlatnessWitness, VerificationReport, WitnessKind, CHECK_CERTIFICATE, CHECK_FIBER_DIM, CHECK_FIBER_FREE,
    CHECK_FIBER_JUMP, CHECK_INITIAL_LEVEL, CHECK_INITIAL_WEIGHT, CHECK_IN_JET_IDEAL, CHECK_LOCAL, CHECK_MAXIMAL,
    CHECK_ORDER,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Grobner(#[from] GrobnerError),
    #[error("the origin does not lie on X")]
    OriginNotOnX,
    #[error("the ideal has no nonzero generator")]
    ZeroIdeal,
    #[error("characteristic {got} given where {expected} is required")]
    WrongCharacteristic { expected: &'static str, got: u32 },
    #[error("need m < m', got m = {m}, m' = {m_prime}")]
    InvalidRange { m: usize, m_prime: usize },
    #[error("m = 0 in positive characteristic is only handled for m' = 1 on reduced X (got m' = {m_prime})")]
    LevelZeroOpen { m_prime: usize },
    #[error("X is smooth at the origin, so every truncation there is flat")]
    SmoothOrigin,
    #[error("no polynomial minimal embedding at the origin was found")]
    NoMinimalEmbedding,
    #[error("no witness found: {0}")]
    NoWitness(String),
}

impl From<crate::algebra::AlgebraError> for CriteriaError {
    fn from(e: crate::algebra::AlgebraError) -> Self {
        CriteriaError::Jet(JetError::from(e))
    }
}
