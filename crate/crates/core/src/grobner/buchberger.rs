use std::collections::BTreeSet;

use crate::algebra::{FieldSpec, Monomial, Poly};

use super::GrobnerError;

/// Monomial order used for leading terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x[0][1] > x[0][2] > ... > x[1][1] > ...`.
    #[default]
    GrevLex,
}

/// A reduced Gröbner basis: monic, interreduced, sorted by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }
}

pub(crate) fn common_field(gens: &[Poly]) -> Result<Option<FieldSpec>, GrobnerError> {
    let mut field = None;
    for g in gens {
        match field {
            None => field = Some(g.field()),
            Some(f) if f != g.field() => {
                return Err(crate::algebra::AlgebraError::FieldMismatch(f, g.field()).into());
            }
            _ => {}
        }
    }
    Ok(field)
}

/// Fully reduces `f` modulo `divisors` (remainder of multivariate division).
pub fn normal_form(f: &Poly, divisors: &[Poly]) -> Poly {
    divide(f, divisors).1
}

/// Multivariate division: `f = sum q_i g_i + r` with no term of `r`
/// divisible by any leading monomial.
pub fn divide(f: &Poly, divisors: &[Poly]) -> (Vec<Poly>, Poly) {
    let field = f.field();
    let mut p = f.clone();
    let mut quotients = vec![Poly::zero(field); divisors.len()];
    let mut remainder = Poly::zero(field);
    'outer: while let Some((lm, lc)) = p.leading_term() {
        let (lm, lc) = (lm.clone(), lc.clone());
        for (g, q) in divisors.iter().zip(quotients.iter_mut()) {
            let Some((glm, glc)) = g.leading_term() else { continue };
            if let Some(mult) = glm.quotient_of(&lm) {
                let c = field.div(&lc, glc).expect("nonzero leading coefficient");
                p.add_scaled_term(g, &mult, &field.neg(&c));
                q.add_scaled_term(&Poly::one(field), &mult, &c);
                continue 'outer;
            }
        }
        let lead = Poly::term(field, lm.clone(), lc.clone());
        remainder = &remainder + &lead;
        p = &p - &lead;
    }
    (quotients, remainder)
}

fn s_polynomial(a: &Poly, b: &Poly) -> Poly {
    let field = a.field();
    let (am, ac) = a.leading_term().unwrap();
    let (bm, bc) = b.leading_term().unwrap();
    let l = am.lcm(bm);
    let mut s = a.mul_term(&am.quotient_of(&l).unwrap(), &field.inv(ac).unwrap());
    s.add_scaled_term(b, &bm.quotient_of(&l).unwrap(), &field.neg(&field.inv(bc).unwrap()));
    s
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under grevlex.
///
/// Pairs are taken by smallest lcm first; pairs with coprime leading
/// monomials, and pairs made redundant by a third element whose leading
/// monomial divides their lcm, are skipped.
pub fn buchberger(gens: &[Poly]) -> Result<GroebnerBasis, GrobnerError> {
    common_field(gens)?;
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = lcm_of(&basis, a.0, a.1);
        let lb = lcm_of(&basis, b.0, b.1);
        la.cmp(&lb).then(a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let k = basis.len();
        basis.push(r.monic());
        for i in 0..k {
            pending.insert((i, k));
        }
    }
    Ok(GroebnerBasis { order: MonomialOrder::GrevLex, elements: reduce_basis(basis) })
}

fn lcm_of(basis: &[Poly], i: usize, j: usize) -> Monomial {
    basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap())
}

fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
        let (lm, _) = minimal[k].leading_term().unwrap();
        let lead = Poly::term(minimal[k].field(), lm.clone(), minimal[k].field().one());
        let tail = &minimal[k].monic() - &lead;
        reduced.push(&lead + &normal_form(&tail, &others));
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Whether `f` lies in the ideal generated by `gens`.
pub fn ideal_membership(f: &Poly, gens: &[Poly]) -> Result<bool, GrobnerError> {
    let mut all = gens.to_vec();
    all.push(f.clone());
    common_field(&all)?;
    Ok(buchberger(gens)?.contains(f))
}

/// Cofactors `q` with `f = sum q_i gens_i` when `f` is in the ideal.
///
/// Uses a Buchberger run that tracks how every basis element is built from
/// the input generators, so it is meant for small inputs.
pub fn membership_certificate(f: &Poly, gens: &[Poly]) -> Result<Option<Vec<Poly>>, GrobnerError> {
    let mut all = gens.to_vec();
    all.push(f.clone());
    let Some(field) = common_field(&all)? else { return Ok(None) };
    let n = gens.len();
    let unit = |k: usize| -> Vec<Poly> {
        (0..n).map(|l| if l == k { Poly::one(field) } else { Poly::zero(field) }).collect()
    };
    let mut basis: Vec<(Poly, Vec<Poly>)> =
        gens.iter().enumerate().filter(|(_, g)| !g.is_zero()).map(|(k, g)| (g.clone(), unit(k))).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (a, ra) = &basis[i];
        let (b, rb) = &basis[j];
        let (am, ac) = a.leading_term().unwrap();
        let (bm, bc) = b.leading_term().unwrap();
        let l = am.lcm(bm);
        let (ma, ca) = (am.quotient_of(&l).unwrap(), field.inv(ac).unwrap());
        let (mb, cb) = (bm.quotient_of(&l).unwrap(), field.neg(&field.inv(bc).unwrap()));
        let s = s_polynomial(a, b);
        let mut rep: Vec<Poly> = ra.iter().map(|r| r.mul_term(&ma, &ca)).collect();
        for (slot, r) in rep.iter_mut().zip(rb) {
            slot.add_scaled_term(r, &mb, &cb);
        }
        let divisors: Vec<Poly> = basis.iter().map(|(g, _)| g.clone()).collect();
        let (qs, rem) = divide(&s, &divisors);
        if rem.is_zero() {
            continue;
        }
        for (q, (_, rg)) in qs.iter().zip(&basis) {
            for (slot, r) in rep.iter_mut().zip(rg) {
                *slot = &*slot - &(q * r);
            }
        }
        let k = basis.len();
        basis.push((rem, rep));
        pairs.extend((0..k).map(|i| (i, k)));
    }
    let divisors: Vec<Poly> = basis.iter().map(|(g, _)| g.clone()).collect();
    let (qs, rem) = divide(f, &divisors);
    if !rem.is_zero() {
        return Ok(None);
    }
    let mut cofactors = vec![Poly::zero(field); n];
    for (q, (_, rg)) in qs.iter().zip(&basis) {
        for (slot, r) in cofactors.iter_mut().zip(rg) {
            *slot = &*slot + &(q * r);
        }
    }
    Ok(Some(cofactors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, ParseContext};

    fn ctx() -> ParseContext {
        ParseContext::new(FieldSpec::Rationals, vec!["x".into(), "y".into(), "z".into()])
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ctx()).unwrap()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(buchberger(&[p("x"), p("y")]).unwrap().elements, vec![p("y"), p("x")]);
        assert_eq!(buchberger(&[p("x^2 - y^3")]).unwrap().elements, vec![p("y^3 - x^2")]);
        assert_eq!(buchberger(&[p("x^2 - 1"), p("x - 1")]).unwrap().elements, vec![p("x - 1")]);
        assert!(buchberger(&[p("x*y - 1"), p("y")]).unwrap().is_unit_ideal());
        assert!(buchberger(&[]).unwrap().elements.is_empty());
    }

    #[test]
    fn twisted_cubic() {
        let g = buchberger(&[p("y - x^2"), p("z - x^3")]).unwrap();
        // every S-pair reduces to zero
        for a in &g.elements {
            for b in &g.elements {
                if a != b {
                    assert!(normal_form(&s_polynomial(a, b), &g.elements).is_zero());
                }
            }
            assert!(a.leading_term().unwrap().1.is_one());
        }
        assert!(g.contains(&p("x*z - y^2")));
        assert!(!g.contains(&p("x*z")));
    }

    #[test]
    fn membership() {
        assert!(ideal_membership(&p("x^2"), &[p("x")]).unwrap());
        assert!(!ideal_membership(&p("1"), &[p("x^2 - y^3")]).unwrap());
        let q5 = FieldSpec::prime(5).unwrap();
        let other = Poly::one(q5);
        assert!(ideal_membership(&other, &[p("x")]).is_err());
    }

    #[test]
    fn certificates_reconstruct() {
        let gens = [p("y - x^2"), p("z - x^3")];
        let f = p("x*z - y^2 + 3*(y - x^2)*z");
        let cof = membership_certificate(&f, &gens).unwrap().unwrap();
        let rebuilt = gens.iter().zip(&cof).fold(Poly::zero(FieldSpec::Rationals), |acc, (g, q)| &acc + &(g * q));
        assert_eq!(rebuilt, f);
        assert!(membership_certificate(&p("x"), &gens).unwrap().is_none());
    }
}
