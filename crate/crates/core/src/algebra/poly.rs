//! Sparse multivariate polynomials over a [`FieldSpec`] in jet variables.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldSpec, Scalar};
use super::monomial::{JetVar, Monomial};
use super::AlgebraError;

/// Order of vanishing at the origin: the lowest total degree of a term, or
/// `Infinite` for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(d) => Some(d),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(d) => write!(f, "{d}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// A polynomial in canonical form: no zero coefficients, terms keyed by
/// monomial in graded reverse lexicographic order (leading term last).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Poly::term(field, Monomial::one(), c)
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn var(field: FieldSpec, v: JetVar) -> Self {
        Poly::term(field, Monomial::var(v), field.one())
    }

    pub fn term(field: FieldSpec, m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { field, terms }
    }

    /// Builds a polynomial from terms, merging repeated monomials.
    ///
    /// Fails if a coefficient is not an element of `field`.
    pub fn from_terms<I>(field: FieldSpec, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if !field.contains(&c) {
                return Err(AlgebraError::NotInField(format!("{c:?}"), field));
            }
            accumulate(&field, &mut acc, m, c);
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Poly { field, terms: acc })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<JetVar> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn max_level(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_level).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn check_field(&self, other: &Poly) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_field(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&self.field, &mut terms, m.clone(), c.clone());
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Poly { field: self.field, terms })
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_field(other)?;
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_field(other)?;
        let f = self.field;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = f.add(slot, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Poly { field: f, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    fn neg_ref(&self) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(a, c))).collect(),
        }
    }

    /// `c * mono * self`.
    pub fn mul_term(&self, mono: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), self.field.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self + c * mono * other`, in place.
    pub(crate) fn add_scaled_term(&mut self, other: &Poly, mono: &Monomial, c: &Scalar) {
        let f = self.field;
        for (m, a) in &other.terms {
            let key = m.mul(mono);
            let val = f.mul(a, c);
            match self.terms.get_mut(&key) {
                Some(slot) => {
                    *slot = f.add(slot, &val);
                    if slot.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    if !val.is_zero() {
                        self.terms.insert(key, val);
                    }
                }
            }
        }
    }

    /// Makes the leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Lowest total degree among the terms.
    pub fn ord(&self) -> Order {
        self.terms.keys().map(Monomial::degree).min().map_or(Order::Infinite, Order::Finite)
    }

    /// Sum of the terms of degree exactly `ord(self)`.
    pub fn initial_form(&self) -> Result<Poly, AlgebraError> {
        let d = self.ord().finite().ok_or(AlgebraError::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Drops every term of degree `>= bound`.
    pub fn truncate_degree(&self, bound: u32) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().filter(|(m, _)| m.degree() < bound).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Formal partial derivative; exponents are reduced in the field.
    pub fn partial_derivative(&self, v: JetVar) -> Poly {
        let f = self.field;
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == 0 {
                continue;
            }
            let coeff = f.mul(c, &f.from_u64(e as u64));
            if coeff.is_zero() {
                continue;
            }
            let mono = rest.mul(&Monomial::var_pow(v, e - 1));
            accumulate(&f, &mut acc, mono, coeff);
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { field: f, terms: acc }
    }

    /// Evaluates at the point given by `value`.
    pub fn eval(&self, mut value: impl FnMut(JetVar) -> Scalar) -> Scalar {
        let f = self.field;
        let mut sum = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                t = f.mul(&t, &f.pow(&value(v), e));
                if t.is_zero() {
                    break;
                }
            }
            sum = f.add(&sum, &t);
        }
        sum
    }

    /// Replaces every variable `v` for which `image(v)` is `Some` by that
    /// polynomial.
    pub fn substitute(&self, mut image: impl FnMut(JetVar) -> Option<Poly>) -> Poly {
        let f = self.field;
        let mut cache: HashMap<JetVar, Option<Poly>> = HashMap::new();
        let mut out = Poly::zero(f);
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = Poly::one(f);
            for &(v, e) in m.factors() {
                let img = cache.entry(v).or_insert_with(|| image(v));
                match img {
                    Some(p) => prod = &prod * &p.pow(e),
                    None => kept.push((v, e)),
                }
            }
            out.add_scaled_term(&prod, &Monomial::from_pairs(kept), c);
        }
        out
    }

    /// Renames variables through `rename`; the map must be injective on the
    /// variables that occur.
    pub fn map_variables(&self, mut rename: impl FnMut(JetVar) -> JetVar) -> Poly {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            let mono = Monomial::from_pairs(m.factors().iter().map(|&(v, e)| (rename(v), e)));
            accumulate(&self.field, &mut acc, mono, c.clone());
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { field: self.field, terms: acc }
    }

    /// Coefficients of the degree-one part, keyed by variable.
    pub fn linear_part(&self) -> BTreeMap<JetVar, Scalar> {
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| (m.factors()[0].0, c.clone()))
            .collect()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }
}

fn accumulate(field: &FieldSpec, terms: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    match terms.get_mut(&m) {
        Some(slot) => *slot = field.add(slot, &c),
        None => {
            terms.insert(m, c);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomials over different fields")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials over different fields")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials over different fields")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

impl fmt::Display for Poly {
    /// Terms from the leading one down, e.g. `2*x[0][1]*x[1][1] - 3*x[0][2]^2*x[1][2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, abs) = c.display_parts(&self.field);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
