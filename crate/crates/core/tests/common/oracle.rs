//! Test-only oracles, deliberately naive and independent of the library's
//! Horner expansion and Groebner code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use jetforge_core::{FieldSpec, JetPoint, JetVar, Monomial, Poly, Scalar};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Substitutes `x[0][j] -> sum_i x[i][j] t^i` into every monomial by
/// multiplying out one variable factor at a time, with no truncation until
/// the very end, then reads off the coefficient of each `t^i`.
pub fn naive_expand(f: &Poly, m: usize) -> Vec<Poly> {
    let field = f.field();
    let mut acc: BTreeMap<(usize, Monomial), Scalar> = BTreeMap::new();
    for (mono, c) in f.terms() {
        let mut partial: Vec<(usize, Monomial, Scalar)> = vec![(0, Monomial::one(), c.clone())];
        for &(v, e) in mono.factors() {
            assert_eq!(v.level, 0, "oracle expects level-0 input");
            for _ in 0..e {
                let mut next = Vec::new();
                for (tpow, mm, cc) in &partial {
                    for i in 0..=m {
                        let factor = Monomial::var(JetVar::new(i as u32, v.index));
                        next.push((tpow + i, mm.mul(&factor), cc.clone()));
                    }
                }
                partial = next;
            }
        }
        for (tpow, mm, cc) in partial {
            let slot = acc.entry((tpow, mm)).or_insert_with(|| field.zero());
            *slot = field.add(slot, &cc);
        }
    }
    (0..=m)
        .map(|i| {
            let terms = acc.iter().filter(|((t, _), _)| *t == i).map(|((_, mm), c)| (mm.clone(), c.clone()));
            Poly::from_terms(field, terms).unwrap()
        })
        .collect()
}

/// Truncated product of scalar series.
fn series_mul(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len();
    let mut out = vec![field.zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] = field.add(&out[i + j], &field.mul(&a[i], &b[j]));
        }
    }
    out
}

/// `f(arc)` modulo `t^{m+1}` where `arc_j(t) = sum_i point[x[i][j]] t^i`.
pub fn evaluate_on_arc(f: &Poly, point: &JetPoint) -> Vec<Scalar> {
    let field = f.field();
    let m = point.order();
    let mut total = vec![field.zero(); m + 1];
    for (mono, c) in f.terms() {
        let mut prod = vec![field.zero(); m + 1];
        prod[0] = c.clone();
        for &(v, e) in mono.factors() {
            let arc: Vec<Scalar> = (0..=m).map(|i| point.get(JetVar::new(i as u32, v.index))).collect();
            for _ in 0..e {
                prod = series_mul(field, &prod, &arc);
            }
        }
        for i in 0..=m {
            total[i] = field.add(&total[i], &prod[i]);
        }
    }
    total
}

pub fn random_scalar<R: Rng>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let num = BigInt::from(rng.gen_range(-9i64..=9));
            let den = BigInt::from(rng.gen_range(1i64..=4));
            field.from_ratio(&num, &den).unwrap()
        }
        FieldSpec::Prime(p) => field.from_u64(rng.gen_range(0..p as u64)),
    }
}

pub fn random_nonzero_scalar<R: Rng>(field: FieldSpec, rng: &mut R) -> Scalar {
    loop {
        let c = random_scalar(field, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// All exponent vectors in `n` variables of total degree in `lo..=hi`.
pub fn exponent_vectors(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, hi, &mut Vec::new(), &mut out);
    out.retain(|v| v.iter().sum::<u32>() >= lo);
    out
}

pub fn level0_monomial(exps: &[u32]) -> Monomial {
    Monomial::from_pairs(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, &e)| (JetVar::new(0, j as u32 + 1), e)))
}

/// A random nonzero polynomial in `x[0][1..=n]` with degrees in
/// `min_degree..=max_degree`, keeping each candidate monomial with
/// probability `density`.
pub fn random_poly<R: Rng>(field: FieldSpec, n: usize, min_degree: u32, max_degree: u32, density: f64, rng: &mut R) -> Poly {
    let candidates = exponent_vectors(n, min_degree, max_degree);
    loop {
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        for e in &candidates {
            if rng.gen_bool(density) {
                terms.push((level0_monomial(e), random_nonzero_scalar(field, rng)));
            }
        }
        let f = Poly::from_terms(field, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random homogeneous polynomial of the given degree in the given
/// variables, possibly zero.
pub fn random_homogeneous<R: Rng>(field: FieldSpec, vars: &[JetVar], degree: u32, terms: usize, rng: &mut R) -> Poly {
    let mut out = Vec::new();
    for _ in 0..terms {
        let pairs: Vec<(JetVar, u32)> = (0..degree).map(|_| (vars[rng.gen_range(0..vars.len())], 1)).collect();
        out.push((Monomial::from_pairs(pairs), random_nonzero_scalar(field, rng)));
    }
    let mut f = Poly::zero(field);
    for (mono, c) in out {
        f = &f + &Poly::term(field, mono, c);
    }
    f
}

/// A random jet point on the `(n, m)` grid.
pub fn random_point<R: Rng>(field: FieldSpec, n: u32, m: usize, rng: &mut R) -> JetPoint {
    let coords: Vec<(JetVar, Scalar)> = (0..=m as u32)
        .flat_map(|i| (1..=n).map(move |j| JetVar::new(i, j)))
        .map(|v| (v, random_scalar(field, rng)))
        .collect();
    JetPoint::from_coords(field, n, m, coords).unwrap()
}

/// Dense rank over the field by textbook row reduction on a matrix whose
/// columns are indexed by the monomials that occur.
pub fn dense_rank(field: FieldSpec, rows: &[Poly]) -> usize {
    let mut columns: Vec<Monomial> = rows.iter().flat_map(|r| r.terms().map(|(m, _)| m.clone())).collect();
    columns.sort();
    columns.dedup();
    let mut mat: Vec<Vec<Scalar>> = rows.iter().map(|r| columns.iter().map(|c| r.coefficient(c)).collect()).collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else { continue };
        mat.swap(rank, pivot);
        let inv = field.inv(&mat[rank][col]).unwrap();
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = field.mul(&mat[r][col], &inv);
                let pivot_row = mat[rank].clone();
                for (entry, p) in mat[r].iter_mut().zip(&pivot_row).skip(col) {
                    *entry = field.sub(entry, &field.mul(&factor, p));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `f` is in `J + m^bound` near the origin, by brute force: every
/// monomial multiple of every generator, truncated below `bound`, goes into
/// a dense matrix and `f` is tested by a rank comparison.
pub fn brute_local_membership(f: &Poly, generators: &[Poly], vars: &[JetVar], bound: u32) -> bool {
    let field = f.field();
    let mut multipliers = vec![Monomial::one()];
    for d in 1..bound {
        for exps in exponent_vectors(vars.len(), d, d) {
            multipliers.push(Monomial::from_pairs(vars.iter().copied().zip(exps)));
        }
    }
    let rows: Vec<Poly> = generators
        .iter()
        .flat_map(|g| multipliers.iter().map(move |mu| g.mul_term(mu, &field.one()).truncate_degree(bound)))
        .filter(|r| !r.is_zero())
        .collect();
    let base = dense_rank(field, &rows);
    let mut with_f = rows;
    with_f.push(f.truncate_degree(bound));
    dense_rank(field, &with_f) == base
}
