//! Exact Gaussian elimination on sparse vectors indexed by monomials.

use std::collections::BTreeMap;

use crate::algebra::{FieldSpec, Monomial, Poly};

/// A subspace of the polynomial ring viewed as a `k`-vector space with the
/// monomial basis, kept in row-echelon form keyed by leading monomial.
#[derive(Clone, Debug)]
pub struct LinearSpan {
    field: FieldSpec,
    rows: BTreeMap<Monomial, Poly>,
}

impl LinearSpan {
    pub fn new(field: FieldSpec) -> Self {
        LinearSpan { field, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading monomials of the echelon rows.
    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.rows.keys()
    }

    /// Reduces `v` against the rows until its leading monomial is not a
    /// pivot. The result is zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &Poly) -> Poly {
        let mut v = v.clone();
        while let Some((lm, lc)) = v.leading_term() {
            let Some(row) = self.rows.get(lm) else { break };
            let c = self.field.neg(lc);
            v.add_scaled_term(row, &Monomial::one(), &c);
        }
        v
    }

    pub fn contains(&self, v: &Poly) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &Poly) -> bool {
        let r = self.reduce(v);
        match r.leading_monomial() {
            None => false,
            Some(lm) => {
                let lm = lm.clone();
                self.rows.insert(lm, r.monic());
                true
            }
        }
    }
}

/// Rank of a family of vectors.
pub fn rank<'a>(field: FieldSpec, vectors: impl IntoIterator<Item = &'a Poly>) -> usize {
    let mut span = LinearSpan::new(field);
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}
