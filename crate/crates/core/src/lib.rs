//! Jet schemes of affine schemes cut out by polynomial ideals.
//!
//! The crate builds the ideal of the `m`-jet scheme `X_m` from generators of
//! `X`, realizes truncation maps and trivial jets on rational points, and
//! implements Jacobian smoothness tests and constructive non-flatness
//! witnesses for truncation morphisms `X_{m'} -> X_m`, each checked by an
//! independent linear-algebra oracle.

pub mod algebra;
pub mod criteria;
pub mod grobner;
pub mod jets;

pub use algebra::{
    expand_in_t, parse_poly, AlgebraError, FieldSpec, JetVar, Monomial, Order, ParseContext, Poly, Scalar,
};
pub use criteria::{
    embedding_dimension_at_origin, flat_witness_char0, flat_witness_charp, jet_smoothness_report, ord_ideal,
    verify_witness, CriteriaError, EmbeddingReduction, FlatnessWitness, SmoothnessReport, Verdict,
    VerificationReport, WitnessKind,
};
pub use grobner::{
    buchberger, ideal_membership, krull_dimension, local_membership_mod_degree, GroebnerBasis, GrobnerError,
    LocalIdealSpec,
};
pub use jets::{
    fiber_over_trivial_jet, jet_of_morphism, jetify, trivial_jet, truncate_point, AmbientIdeal, FiberIdeal,
    JetError, JetIdeal, JetMorphism, JetPoint,
};
