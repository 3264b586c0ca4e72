//! Truncated power series in `t` with polynomial coefficients, and the
//! `t`-expansion `f(sum_i x_i t^i) = F_0 + F_1 t + ... + F_m t^m + O(t^{m+1})`.

use std::collections::BTreeMap;

use super::field::FieldSpec;
use super::monomial::{JetVar, Monomial};
use super::poly::Poly;
use super::AlgebraError;

/// `c_0 + c_1 t + ... + c_m t^m` modulo `t^{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    pub fn zero(field: FieldSpec, m: usize) -> Self {
        TruncatedSeries { coeffs: vec![Poly::zero(field); m + 1] }
    }

    pub fn constant(p: Poly, m: usize) -> Self {
        let field = p.field();
        let mut s = TruncatedSeries::zero(field, m);
        s.coeffs[0] = p;
        s
    }

    /// The generic arc through coordinate `index`: `sum_{i<=m} x[i][index] t^i`.
    pub fn generic_arc(field: FieldSpec, index: u32, m: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=m).map(|i| Poly::var(field, JetVar::new(i as u32, index))).collect(),
        }
    }

    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    /// Product truncated at `t^{m+1}`.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order().min(other.order());
        let field = self.coeffs[0].field();
        let mut out = vec![Poly::zero(field); m + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(m + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn scale(&self, p: &Poly) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }
}

/// Cached powers `s^0, s^1, ...` of one series.
struct PowerTable {
    powers: Vec<TruncatedSeries>,
}

impl PowerTable {
    fn new(base: TruncatedSeries) -> Self {
        let one = TruncatedSeries::constant(Poly::one(base.coeffs[0].field()), base.order());
        PowerTable { powers: vec![one, base] }
    }

    fn get(&mut self, e: u32) -> &TruncatedSeries {
        while self.powers.len() <= e as usize {
            let next = self.powers.last().unwrap().mul(&self.powers[1]);
            self.powers.push(next);
        }
        &self.powers[e as usize]
    }
}

/// Evaluates `f` at the series `arcs[j]` for `x[0][j]`, Horner-style in one
/// variable at a time.
///
/// Every variable of `f` must be level 0 and have an entry in `arcs`.
pub fn evaluate_at_series(
    f: &Poly,
    arcs: &BTreeMap<u32, TruncatedSeries>,
    m: usize,
) -> Result<TruncatedSeries, AlgebraError> {
    for v in f.variables() {
        if v.level != 0 {
            return Err(AlgebraError::NotLevelZero(v));
        }
        if !arcs.contains_key(&v.index) {
            return Err(AlgebraError::UnknownIndex(v));
        }
    }
    let field = f.field();
    let order: Vec<u32> = f.variables().into_iter().map(|v| v.index).collect();
    let mut tables: BTreeMap<u32, PowerTable> =
        order.iter().map(|&j| (j, PowerTable::new(arcs[&j].clone()))).collect();
    let terms: Vec<(Monomial, _)> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    Ok(horner(field, &terms, &order, &mut tables, m))
}

fn horner(
    field: FieldSpec,
    terms: &[(Monomial, crate::algebra::Scalar)],
    vars: &[u32],
    tables: &mut BTreeMap<u32, PowerTable>,
    m: usize,
) -> TruncatedSeries {
    let Some((&j, rest_vars)) = vars.split_first() else {
        // only the constant monomial remains
        let mut c = field.zero();
        for (_, a) in terms {
            c = field.add(&c, a);
        }
        return TruncatedSeries::constant(Poly::constant(field, c), m);
    };
    let v = JetVar::new(0, j);
    let mut groups: BTreeMap<u32, Vec<(Monomial, crate::algebra::Scalar)>> = BTreeMap::new();
    for (mono, c) in terms {
        let (e, rest) = mono.split_off(v);
        groups.entry(e).or_default().push((rest, c.clone()));
    }
    // f = sum_e c_e * v^e, evaluated as ((c_E v^{E-e'} + c_e') v^{e'-e''} + ...) v^{e_min}
    let mut acc: Option<TruncatedSeries> = None;
    let mut prev: u32 = 0;
    for (&e, group) in groups.iter().rev() {
        let inner = horner(field, group, rest_vars, tables, m);
        acc = Some(match acc {
            None => inner,
            Some(a) => a.mul(tables.get_mut(&j).unwrap().get(prev - e)).add(&inner),
        });
        prev = e;
    }
    let acc = acc.unwrap_or_else(|| TruncatedSeries::zero(field, m));
    if prev == 0 {
        acc
    } else {
        acc.mul(tables.get_mut(&j).unwrap().get(prev))
    }
}

/// `[F_0, ..., F_m]`: coefficients of `t^i` in `f(sum_{i<=m} x_i t^i)`.
///
/// `f` must involve only level-0 variables. `F_0 = f` and each `F_i` is
/// weight-homogeneous of weight `i`.
pub fn expand_in_t(f: &Poly, m: usize) -> Result<Vec<Poly>, AlgebraError> {
    let field = f.field();
    let arcs: BTreeMap<u32, TruncatedSeries> = f
        .variables()
        .into_iter()
        .map(|v| (v.index, TruncatedSeries::generic_arc(field, v.index, m)))
        .collect();
    Ok(evaluate_at_series(f, &arcs, m)?.into_coeffs())
}
