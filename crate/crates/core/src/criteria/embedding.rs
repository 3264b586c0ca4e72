use std::collections::BTreeSet;

use crate::algebra::{JetVar, Poly};
use crate::grobner::linalg::{rank, LinearSpan};
use crate::jets::AmbientIdeal;

use super::CriteriaError;

/// How the minimal presentation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionMethod {
    /// No generator had a linear part.
    Unchanged,
    /// Variables occurring only linearly in some generator were solved for
    /// and substituted away.
    Substitution,
    /// The leftover generators have independent linear parts, so near the
    /// origin `X` is a smooth complete intersection and the presentation is
    /// the zero ideal (an analytic, not polynomial, change of coordinates).
    SmoothCompleteIntersection,
}

/// Embedding dimension at the origin and, when obtainable, a presentation of
/// `(X, 0)` in `A^{embdim}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReduction {
    pub embdim: u32,
    /// Rank of the linear parts of the generators.
    pub linear_rank: u32,
    pub presentation: Option<AmbientIdeal>,
    /// `(x, expression)` for each variable solved by substitution, in the
    /// original coordinates.
    pub eliminated: Vec<(JetVar, Poly)>,
    pub method: ReductionMethod,
}

fn linear_form(f: &Poly) -> Poly {
    f.filter_terms(|m| m.degree() == 1)
}

/// A generator and variable `v` such that `v` occurs in it only as a linear term.
fn solvable(gens: &[Poly]) -> Option<(usize, JetVar)> {
    for (k, g) in gens.iter().enumerate() {
        for (v, c) in g.linear_part() {
            if c.is_zero() {
                continue;
            }
            let only_linear = g.terms().all(|(m, _)| m.degree() == 1 || m.exponent(v) == 0);
            if only_linear {
                return Some((k, v));
            }
        }
    }
    None
}

/// `N - rank(linear parts)`, plus a presentation in that many variables.
pub fn embedding_dimension_at_origin(ideal: &AmbientIdeal) -> Result<EmbeddingReduction, CriteriaError> {
    if !ideal.contains_origin() {
        return Err(CriteriaError::OriginNotOnX);
    }
    let field = ideal.field();
    let n = ideal.dimension();
    let linear: Vec<Poly> = ideal.generators().iter().map(linear_form).collect();
    let r = rank(field, linear.iter()) as u32;
    let embdim = n - r;
    if r == 0 {
        return Ok(EmbeddingReduction {
            embdim,
            linear_rank: 0,
            presentation: Some(ideal.clone()),
            eliminated: Vec::new(),
            method: ReductionMethod::Unchanged,
        });
    }

    let mut gens: Vec<Poly> = ideal.generators().to_vec();
    let mut eliminated: Vec<(JetVar, Poly)> = Vec::new();
    while let Some((k, v)) = solvable(&gens) {
        let g = gens.remove(k);
        let c = g.linear_part()[&v].clone();
        let rest = &g - &Poly::term(field, crate::algebra::Monomial::var(v), c.clone());
        let expr = rest.scale(&field.neg(&field.inv(&c).unwrap()));
        let sub = |p: &Poly| p.substitute(|w| (w == v).then(|| expr.clone()));
        gens = gens.iter().map(sub).filter(|p| !p.is_zero()).collect();
        for (_, e) in eliminated.iter_mut() {
            *e = sub(e);
        }
        eliminated.push((v, expr));
    }

    let solved: BTreeSet<JetVar> = eliminated.iter().map(|(v, _)| *v).collect();
    let survivors: Vec<JetVar> = ideal.variables().into_iter().filter(|v| !solved.contains(v)).collect();
    let rename = |w: JetVar| JetVar::new(0, survivors.iter().position(|s| *s == w).expect("surviving variable") as u32 + 1);

    let leftover_rank = {
        let mut span = LinearSpan::new(field);
        for g in &gens {
            span.insert(&linear_form(g));
        }
        span.rank()
    };
    if leftover_rank == 0 {
        debug_assert_eq!(survivors.len() as u32, embdim);
        let renamed = gens.iter().map(|g| g.map_variables(rename)).collect();
        return Ok(EmbeddingReduction {
            embdim,
            linear_rank: r,
            presentation: Some(AmbientIdeal::new(field, embdim, renamed)?),
            eliminated,
            method: ReductionMethod::Substitution,
        });
    }
    let presentation = (leftover_rank == gens.len()).then(|| AmbientIdeal::zero(field, embdim));
    Ok(EmbeddingReduction {
        embdim,
        linear_rank: r,
        presentation,
        eliminated,
        method: ReductionMethod::SmoothCompleteIntersection,
    })
}
