//! Degree-truncated membership in the localization at the origin.
//!
//! `F` lies in `J R_loc + m^D` iff the degree-`<D` part of `F` is a
//! `k`-linear combination of the truncations of `mu * g` for generators `g`
//! and monomials `mu` with `deg(mu) + ord(g) < D`. A negative answer
//! therefore certifies `F` is not in `J R_loc`.

use std::collections::BTreeSet;

use crate::algebra::{jet_variables, FieldSpec, JetVar, Monomial, Order, Poly};
use crate::jets::{jetify, AmbientIdeal, JetError};

use super::linalg::LinearSpan;
use super::{buchberger::common_field, GrobnerError};

/// `J = M I' + I R_{m'}` as an explicit generator list, where `I`, `I'` are
/// the jet ideals at orders `m < m'` and `M = (x_0, ..., x_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdealSpec {
    pub generators: Vec<Poly>,
    pub maximal_ideal_level_bound: usize,
    pub variables: Vec<JetVar>,
}

impl LocalIdealSpec {
    pub fn new(generators: Vec<Poly>, maximal_ideal_level_bound: usize, variables: Vec<JetVar>) -> Self {
        LocalIdealSpec { generators, maximal_ideal_level_bound, variables }
    }

    /// `{x[l][j] F : l <= m, F in gens(I')} + gens(I)` in `R_{m'}`.
    pub fn for_truncation(ideal: &AmbientIdeal, m: usize, m_prime: usize) -> Result<Self, JetError> {
        if m >= m_prime {
            return Err(JetError::InvalidRange { m, m_prime });
        }
        let field = ideal.field();
        let upper = jetify(ideal, m_prime);
        let lower = jetify(ideal, m);
        let max_vars = jet_variables(ideal.dimension(), m as u32);
        let mut generators = Vec::new();
        for f in upper.nonzero_generators() {
            for v in &max_vars {
                generators.push(&Poly::var(field, *v) * &f);
            }
        }
        generators.extend(lower.nonzero_generators());
        Ok(LocalIdealSpec { generators, maximal_ideal_level_bound: m, variables: upper.variables() })
    }
}

/// All monomials in `vars` of degree at most `max_degree`.
pub(crate) fn monomials_up_to(vars: &[JetVar], max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![(Monomial::one(), 0usize)];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for (mono, start) in &frontier {
            for (k, v) in vars.iter().enumerate().skip(*start) {
                let grown = mono.mul(&Monomial::var(*v));
                out.push(grown.clone());
                next.push((grown, k));
            }
        }
        frontier = next;
    }
    out
}

/// Whether the degree-`<bound` part of `f` lies in the span of the truncated
/// multiples of `spec.generators`.
///
/// `false` proves `f` is not in the ideal of the local ring at the origin;
/// `true` only says membership is not excluded at this bound.
pub fn local_membership_mod_degree(f: &Poly, spec: &LocalIdealSpec, bound: u32) -> Result<bool, GrobnerError> {
    let ord = f.ord().finite().ok_or(GrobnerError::ZeroPolynomial)?;
    if bound <= ord {
        return Err(GrobnerError::BoundTooSmall { bound, ord });
    }
    let mut all = spec.generators.clone();
    all.push(f.clone());
    let field: FieldSpec = common_field(&all)?.expect("f is present");

    let mut vars: BTreeSet<JetVar> = spec.variables.iter().copied().collect();
    for g in &all {
        vars.extend(g.variables());
    }
    let vars: Vec<JetVar> = vars.into_iter().collect();

    let mut span = LinearSpan::new(field);
    for g in &spec.generators {
        let Order::Finite(o) = g.ord() else { continue };
        if o >= bound {
            continue;
        }
        let g = g.truncate_degree(bound);
        for mu in monomials_up_to(&vars, bound - 1 - o) {
            let v = g.mul_term(&mu, &field.one()).truncate_degree(bound);
            span.insert(&v);
        }
    }
    Ok(span.contains(&f.truncate_degree(bound)))
}
