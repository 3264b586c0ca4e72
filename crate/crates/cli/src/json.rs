//! Exact JSON encoding of polynomials: coefficients are strings, monomials
//! are lists of `{level, index, exp}` in variable order, terms run from the
//! leading term down.

use jetforge_core::{FieldSpec, JetVar, Monomial, Poly};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFactor {
    pub level: u32,
    pub index: u32,
    pub exp: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub monomial: Vec<JsonFactor>,
}

/// One `F_{g,i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonJetGenerator {
    pub generator: usize,
    pub level: usize,
    pub terms: Vec<JsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonJetIdeal {
    pub field: String,
    pub vars: Vec<String>,
    pub m: usize,
    pub generators: Vec<JsonJetGenerator>,
}

/// Pretty-printed with keys in sorted order and a trailing newline, so that
/// re-serializing parsed output reproduces it byte for byte.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub fn terms_of(p: &Poly) -> Vec<JsonTerm> {
    let field = p.field();
    p.terms()
        .rev()
        .map(|(mono, c)| JsonTerm {
            coeff: c.to_string_in(&field),
            monomial: mono.factors().iter().map(|&(v, e)| JsonFactor { level: v.level, index: v.index, exp: e }).collect(),
        })
        .collect()
}

pub fn parse_field(text: &str) -> Option<FieldSpec> {
    match text.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["Q"] => Some(FieldSpec::Rationals),
        ["Fp", p] => FieldSpec::prime(p.parse().ok()?).ok(),
        _ => None,
    }
}

pub fn poly_from_terms(field: FieldSpec, terms: &[JsonTerm]) -> Option<Poly> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let (num, den) = match t.coeff.split_once('/') {
            Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
            None => (t.coeff.parse::<BigInt>().ok()?, BigInt::from(1)),
        };
        let c = field.from_ratio(&num, &den).ok()?;
        let mono = Monomial::from_pairs(t.monomial.iter().map(|f| (JetVar::new(f.level, f.index), f.exp)));
        out.push((mono, c));
    }
    Poly::from_terms(field, out).ok()
}
