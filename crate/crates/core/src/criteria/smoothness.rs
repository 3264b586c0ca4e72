use std::fmt;

use crate::algebra::{FieldSpec, Poly};
use crate::grobner::krull_dimension;
use crate::grobner::linalg::rank;
use crate::jets::{fiber_over_trivial_jet, jetify, trivial_jet, AmbientIdeal, JetPoint};

use super::embedding::{embedding_dimension_at_origin, ReductionMethod};
use super::CriteriaError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Smooth,
    Singular,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Smooth => "SMOOTH",
            Verdict::Singular => "SINGULAR",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Jacobian test of `X_m` at the trivial jet `0_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub point: JetPoint,
    pub order: usize,
    /// Rank of the Jacobian of the jet ideal (as given) at `0_m`.
    pub jacobian_rank: usize,
    /// Codimension of `X_m` at `0_m` when it is determined; `Smooth` exactly
    /// when it equals `jacobian_rank`.
    pub codim_expected: Option<usize>,
    pub embedding_dimension: u32,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Rank of the Jacobian at the origin: the gradient there is the linear part.
fn jacobian_rank_at_origin(field: FieldSpec, gens: &[Poly]) -> usize {
    let linear: Vec<Poly> = gens.iter().map(|g| g.filter_terms(|m| m.degree() == 1)).collect();
    rank(field, linear.iter())
}

/// Smoothness of `X_m` at `0_m`.
///
/// After passing to the minimal embedding at the origin, a nonzero ideal
/// has only generators of order at least 2, so every `F_{g,i}` has order at
/// least 2, the Jacobian of the jet ideal vanishes at `0_m` and `0_m` is
/// singular. A zero presentation means `X` (hence `X_m`) is an affine space
/// near the origin.
pub fn jet_smoothness_report(ideal: &AmbientIdeal, m: usize) -> Result<SmoothnessReport, CriteriaError> {
    if !ideal.contains_origin() {
        return Err(CriteriaError::OriginNotOnX);
    }
    let field = ideal.field();
    let n = ideal.dimension() as usize;
    let zeros = vec![field.zero(); n];
    let point = trivial_jet(ideal, &zeros, m)?;
    let jets = jetify(ideal, m);
    let jacobian_rank = jacobian_rank_at_origin(field, &jets.nonzero_generators());
    let reduction = embedding_dimension_at_origin(ideal)?;
    let embdim = reduction.embdim;
    let mut notes = Vec::new();
    if reduction.method != ReductionMethod::Unchanged {
        notes.push(format!(
            "minimal embedding at the origin: {} -> {} variables ({:?})",
            n, embdim, reduction.method
        ));
    }

    let (verdict, codim_expected) = match &reduction.presentation {
        Some(p) if p.is_zero_ideal() => {
            notes.push(format!("X is locally A^{embdim}, so X_{m} is locally A^{}", embdim as usize * (m + 1)));
            (Verdict::Smooth, Some(jacobian_rank))
        }
        Some(p) => {
            let reduced_rank = jacobian_rank_at_origin(field, &jetify(p, m).nonzero_generators());
            debug_assert_eq!(reduced_rank, 0);
            notes.push(format!(
                "minimal presentation has {} generator(s) of order >= 2: the Jacobian of its jet ideal vanishes at 0_{m} while the ideal is nonzero",
                p.generators().len()
            ));
            notes.push(format!("codimension at 0_{m} is at least 1 and exceeds the Jacobian rank of the minimal presentation"));
            (Verdict::Singular, None)
        }
        None => {
            notes.push(
                "no polynomial minimal embedding and not a complete intersection with independent linear parts: codimension undetermined"
                    .into(),
            );
            (Verdict::Inconclusive, None)
        }
    };
    Ok(SmoothnessReport {
        point,
        order: m,
        jacobian_rank,
        codim_expected,
        embedding_dimension: embdim,
        verdict,
        notes,
    })
}

/// Zariski tangent space at the origin seen as the fiber of `pi_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    /// `dim pi_1^{-1}(0)`, from the fiber ideal.
    pub fiber_dimension: usize,
    /// `N - rank(linear parts)`, computed independently.
    pub embedding_dimension: u32,
    /// Global Krull dimension of `X`.
    pub dimension: usize,
    pub singular: bool,
}

pub fn tangent_space_at_origin(ideal: &AmbientIdeal) -> Result<TangentReport, CriteriaError> {
    if !ideal.contains_origin() {
        return Err(CriteriaError::OriginNotOnX);
    }
    let fiber = fiber_over_trivial_jet(ideal, 0, 1)?;
    let gens = fiber.nonzero_generators();
    debug_assert!(gens.iter().all(|g| g.terms().all(|(m, _)| m.degree() == 1)));
    let fiber_dimension = fiber.ambient_dimension() - rank(ideal.field(), gens.iter());
    let embedding_dimension = embedding_dimension_at_origin(ideal)?.embdim;
    let dimension = krull_dimension(ideal.generators(), &ideal.variables())?;
    Ok(TangentReport { fiber_dimension, embedding_dimension, dimension, singular: fiber_dimension > dimension })
}
