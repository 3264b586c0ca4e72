//! Jet variables and sparse monomials.

use std::cmp::Ordering;
use std::fmt;

/// The jet variable `x[level][index]`: coefficient of `t^level` in the arc
/// expansion of ambient coordinate `index` (1-based).
///
/// The derived order is level-major, then index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JetVar {
    pub level: u32,
    pub index: u32,
}

impl JetVar {
    pub const fn new(level: u32, index: u32) -> Self {
        JetVar { level, index }
    }

    /// The same coordinate at another level.
    pub fn at_level(self, level: u32) -> Self {
        JetVar { level, index: self.index }
    }
}

impl fmt::Display for JetVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{}][{}]", self.level, self.index)
    }
}

/// All jet variables `x[i][j]` with `i <= max_level`, `1 <= j <= n`, in
/// ascending order.
pub fn jet_variables(n: u32, max_level: u32) -> Vec<JetVar> {
    (0..=max_level)
        .flat_map(|i| (1..=n).map(move |j| JetVar::new(i, j)))
        .collect()
}

/// A monomial as a sorted list of `(variable, exponent)` pairs with no zero
/// exponents.
///
/// `Ord` is graded reverse lexicographic, ranking variables so that
/// `x[0][1]` is the largest, then `x[0][2]`, ..., then `x[1][1]`, ...
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(JetVar, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: JetVar) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn var_pow(v: JetVar, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { factors: vec![(v, e)] }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (JetVar, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(JetVar, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        factors.sort_by_key(|(v, _)| *v);
        let mut merged: Vec<(JetVar, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn factors(&self) -> &[(JetVar, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Sum of `level * exponent` over all factors.
    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(v, e)| v.level * e).sum()
    }

    pub fn exponent(&self, v: JetVar) -> u32 {
        self.factors
            .binary_search_by_key(&v, |(w, _)| *w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn max_level(&self) -> Option<u32> {
        self.factors.iter().map(|(v, _)| v.level).max()
    }

    pub fn variables(&self) -> impl Iterator<Item = JetVar> + '_ {
        self.factors.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { factors: self.factors.iter().map(|(v, x)| (*v, x * e)).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|(v, e)| other.exponent(*v) >= *e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(other.factors.len());
        let mut j = 0;
        for &(v, e) in &other.factors {
            let mine = if j < self.factors.len() && self.factors[j].0 == v {
                j += 1;
                self.factors[j - 1].1
            } else {
                0
            };
            if mine > e {
                return None;
            }
            if e > mine {
                out.push((v, e - mine));
            }
        }
        if j < self.factors.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(
            self.factors
                .iter()
                .chain(other.factors.iter())
                .map(|(v, _)| (*v, self.exponent(*v).max(other.exponent(*v))))
                .collect::<std::collections::BTreeMap<_, _>>(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|(v, _)| other.exponent(*v) == 0)
    }

    /// Removes `v` entirely, returning its former exponent and the rest.
    pub fn split_off(&self, v: JetVar) -> (u32, Monomial) {
        let e = self.exponent(v);
        let rest = Monomial { factors: self.factors.iter().copied().filter(|(w, _)| *w != v).collect() };
        (e, rest)
    }

    /// Graded reverse lexicographic comparison.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (va, ea) = a[i - 1];
            let (vb, eb) = b[j - 1];
            match va.cmp(&vb) {
                // `self` carries the smallest-ranked variable: it is smaller.
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            }
        }
        // Equal degree and equal tails force both to be exhausted.
        debug_assert!(i == 0 && j == 0);
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32, j: u32) -> JetVar {
        JetVar::new(i, j)
    }

    #[test]
    fn weight_and_degree() {
        assert_eq!(Monomial::var_pow(x(0, 1), 5).weight(), 0);
        let m = Monomial::from_pairs([(x(1, 1), 1), (x(2, 3), 1)]);
        assert_eq!(m.weight(), 3);
        assert_eq!(m.degree(), 2);
        assert_eq!(Monomial::var_pow(x(4, 1), 3).weight(), 12);
    }

    #[test]
    fn grevlex_examples() {
        let a = Monomial::var_pow(x(0, 1), 2);
        let b = Monomial::from_pairs([(x(0, 1), 1), (x(0, 2), 1)]);
        let c = Monomial::var_pow(x(0, 2), 2);
        assert!(a > b && b > c);
        // x1*x3 < x2^2 under grevlex (x1 > x2 > x3)
        let d = Monomial::from_pairs([(x(0, 1), 1), (x(0, 3), 1)]);
        assert!(d < c);
        assert!(Monomial::var_pow(x(0, 2), 3) > a);
        assert!(Monomial::var(x(0, 1)) > Monomial::var(x(1, 1)));
    }

    #[test]
    fn division_helpers() {
        let a = Monomial::from_pairs([(x(0, 1), 2), (x(1, 2), 1)]);
        let b = Monomial::var(x(0, 1));
        assert!(b.divides(&a));
        assert_eq!(b.quotient_of(&a).unwrap(), Monomial::from_pairs([(x(0, 1), 1), (x(1, 2), 1)]));
        assert!(a.quotient_of(&b).is_none());
        assert_eq!(a.lcm(&Monomial::var(x(0, 2))).degree(), 4);
        assert!(Monomial::var(x(0, 2)).is_coprime(&a));
    }
}
