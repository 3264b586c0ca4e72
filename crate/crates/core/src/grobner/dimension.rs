use crate::algebra::{JetVar, Poly};

use super::{buchberger, GrobnerError};

/// Krull dimension of `k[vars]/(gens)`: the largest set of variables no
/// leading monomial of the Gröbner basis is supported in.
pub fn krull_dimension(gens: &[Poly], vars: &[JetVar]) -> Result<usize, GrobnerError> {
    if vars.len() > 128 {
        return Err(GrobnerError::TooManyVariables(vars.len()));
    }
    let basis = buchberger(gens)?;
    if basis.is_unit_ideal() {
        return Err(GrobnerError::UnitIdeal);
    }
    let position = |v: JetVar| vars.iter().position(|w| *w == v).ok_or(GrobnerError::VariableOutsideRing(v));
    let mut supports: Vec<u128> = Vec::new();
    for lm in basis.leading_monomials() {
        let mut mask = 0u128;
        for v in lm.variables() {
            mask |= 1u128 << position(v)?;
        }
        supports.push(mask);
    }
    supports.sort_unstable();
    supports.dedup();
    let mut search = IndependentSetSearch { n: vars.len(), supports, best: 0 };
    search.run(0, 0, 0);
    Ok(search.best)
}

struct IndependentSetSearch {
    n: usize,
    supports: Vec<u128>,
    best: usize,
}

impl IndependentSetSearch {
    fn independent(&self, set: u128) -> bool {
        self.supports.iter().all(|s| s & !set != 0)
    }

    fn run(&mut self, next: usize, set: u128, size: usize) {
        if size + (self.n - next) <= self.best {
            return;
        }
        if next == self.n {
            self.best = size;
            return;
        }
        let with = set | (1u128 << next);
        if self.independent(with) {
            self.run(next + 1, with, size + 1);
        }
        self.run(next + 1, set, size);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{jet_variables, parse_poly, FieldSpec, ParseContext};

    #[test]
    fn dimension_examples() {
        let q = FieldSpec::Rationals;
        let vars3 = jet_variables(3, 0);
        assert_eq!(krull_dimension(&[], &vars3).unwrap(), 3);
        let ctx = ParseContext::new(q, vec!["x".into(), "y".into()]);
        let cusp = parse_poly("x^2 - y^3", &ctx).unwrap();
        assert_eq!(krull_dimension(&[cusp], &jet_variables(2, 0)).unwrap(), 1);
        let node = parse_poly("x*y", &ctx).unwrap();
        assert_eq!(krull_dimension(&[node], &jet_variables(2, 0)).unwrap(), 1);
        let unit = parse_poly("x*y - 1", &ctx).unwrap();
        let y = parse_poly("y", &ctx).unwrap();
        assert_eq!(krull_dimension(&[unit, y], &jet_variables(2, 0)), Err(GrobnerError::UnitIdeal));
    }

    #[test]
    fn example_five_three_dimension() {
        // (x[0][1]^p, x[1][1]^p) in pq + r + 1 variables
        for (p, r) in [(2u32, 1u32), (3, 2), (5, 4)] {
            let fp = FieldSpec::prime(p as u64).unwrap();
            let nvars = p + r + 1;
            let vars: Vec<JetVar> = (0..nvars).map(|i| JetVar::new(i, 1)).collect();
            let gens = vec![Poly::var(fp, JetVar::new(0, 1)).pow(p), Poly::var(fp, JetVar::new(1, 1)).pow(p)];
            assert_eq!(krull_dimension(&gens, &vars).unwrap(), nvars as usize - 2);
        }
    }
}
