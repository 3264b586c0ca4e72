#[path = "common/oracle.rs"]
mod oracle;

use jetforge_core::grobner::membership_certificate;
use jetforge_core::{
    buchberger, expand_in_t, fiber_over_trivial_jet, ideal_membership, jet_of_morphism, jetify,
    local_membership_mod_degree, trivial_jet, truncate_point, AmbientIdeal, FieldSpec, JetVar, LocalIdealSpec,
    Monomial, Poly,
};
use oracle::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn field_of(choice: u8) -> FieldSpec {
    match choice % 3 {
        0 => FieldSpec::Rationals,
        1 => FieldSpec::prime(5).unwrap(),
        _ => FieldSpec::prime(2).unwrap(),
    }
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    any::<u8>().prop_map(field_of)
}

/// Points of `X` are made by shifting each generator by its value there.
fn ideal_through(field: FieldSpec, n: usize, x: &[jetforge_core::Scalar], gens: Vec<Poly>) -> AmbientIdeal {
    let shifted = gens
        .into_iter()
        .map(|g| {
            let value = g.eval(|v| x[v.index as usize - 1].clone());
            &g - &Poly::constant(field, value)
        })
        .filter(|g| !g.is_zero())
        .collect();
    AmbientIdeal::new(field, n as u32, shifted).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(field in fields(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_poly(field, 2, 0, 3, 0.4, &mut r);
        let b = random_poly(field, 2, 0, 3, 0.4, &mut r);
        let c = random_poly(field, 2, 0, 3, 0.4, &mut r);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(field), a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_matches_naive_oracle(field in fields(), seed in any::<u64>(), n in 1usize..=3, m in 0usize..=4) {
        let f = random_poly(field, n, 0, 3, 0.5, &mut rng(seed));
        prop_assert_eq!(expand_in_t(&f, m).unwrap(), naive_expand(&f, m));
    }

    #[test]
    fn weight_homogeneity(field in fields(), seed in any::<u64>(), n in 1usize..=3, m in 0usize..=5) {
        let f = random_poly(field, n, 0, 4, 0.5, &mut rng(seed));
        let fs = expand_in_t(&f, m).unwrap();
        prop_assert_eq!(&fs[0], &f);
        for (i, fi) in fs.iter().enumerate() {
            for (mono, _) in fi.terms() {
                prop_assert_eq!(mono.weight() as usize, i);
                prop_assert!(mono.max_level().unwrap_or(0) as usize <= i);
            }
        }
    }

    #[test]
    fn expansion_is_linear(field in fields(), seed in any::<u64>(), m in 0usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(field, 2, 0, 3, 0.5, &mut r);
        let g = random_poly(field, 2, 0, 3, 0.5, &mut r);
        let a = random_scalar(field, &mut r);
        let b = random_scalar(field, &mut r);
        let lhs = expand_in_t(&(&f.scale(&a) + &g.scale(&b)), m).unwrap();
        let (ef, eg) = (expand_in_t(&f, m).unwrap(), expand_in_t(&g, m).unwrap());
        for i in 0..=m {
            prop_assert_eq!(&lhs[i], &(&ef[i].scale(&a) + &eg[i].scale(&b)));
        }
    }

    #[test]
    fn expansion_product_rule(field in fields(), seed in any::<u64>(), m in 0usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(field, 2, 0, 2, 0.5, &mut r);
        let g = random_poly(field, 2, 0, 2, 0.5, &mut r);
        let lhs = expand_in_t(&(&f * &g), m).unwrap();
        let (ef, eg) = (expand_in_t(&f, m).unwrap(), expand_in_t(&g, m).unwrap());
        for i in 0..=m {
            let mut rhs = Poly::zero(field);
            for a in 0..=i {
                rhs = &rhs + &(&ef[a] * &eg[i - a]);
            }
            prop_assert_eq!(&lhs[i], &rhs);
        }
    }

    #[test]
    fn order_is_preserved_in_char_zero(seed in any::<u64>(), n in 1usize..=3) {
        let f = random_poly(FieldSpec::Rationals, n, 1, 4, 0.5, &mut rng(seed));
        for (m, fm) in expand_in_t(&f, 5).unwrap().iter().enumerate() {
            prop_assert!(!fm.is_zero(), "F_{} vanished", m);
            prop_assert_eq!(fm.ord(), f.ord());
        }
    }

    #[test]
    fn coefficient_transport(field in fields(), seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let f = random_poly(field, n, 1, 4, 0.5, &mut r);
        let terms: Vec<(Monomial, jetforge_core::Scalar)> = f.terms().map(|(a, b)| (a.clone(), b.clone())).collect();
        let (mono, c) = terms.choose(&mut r).unwrap().clone();
        let levels: Vec<u32> = (0..n).map(|_| r.gen_range(0..=3)).collect();
        let lifted = Monomial::from_pairs(mono.factors().iter().map(|&(v, e)| (JetVar::new(levels[v.index as usize - 1], v.index), e)));
        let m = lifted.weight() as usize;
        let fm = expand_in_t(&f, m).unwrap().pop().unwrap();
        prop_assert_eq!(fm.coefficient(&lifted), c);
    }

    #[test]
    fn derivative_is_the_linear_term_in_epsilon(field in fields(), seed in any::<u64>(), j in 1u32..=3) {
        let f = random_poly(field, 3, 0, 4, 0.4, &mut rng(seed));
        let v = JetVar::new(0, j);
        let eps = JetVar::new(0, 9);
        let shifted = f.substitute(|w| (w == v).then(|| &Poly::var(field, v) + &Poly::var(field, eps)));
        let rest = &(&shifted - &f) - &(&Poly::var(field, eps) * &f.partial_derivative(v));
        for (mono, _) in rest.terms() {
            prop_assert!(mono.exponent(eps) >= 2, "{} survives", mono);
        }
    }

    #[test]
    fn prefix_compatibility(field in fields(), seed in any::<u64>(), m in 0usize..=3, extra in 1usize..=2) {
        let mut r = rng(seed);
        let gens = vec![random_poly(field, 2, 1, 3, 0.5, &mut r), random_poly(field, 2, 1, 3, 0.5, &mut r)];
        let ideal = AmbientIdeal::new(field, 2, gens).unwrap();
        let low = jetify(&ideal, m);
        let high = jetify(&ideal, m + extra);
        for g in 0..2 {
            for i in 0..=m {
                prop_assert_eq!(low.get(g, i), high.get(g, i));
            }
        }
    }

    #[test]
    fn evaluation_consistency(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3]), m in 0usize..=3) {
        let field = FieldSpec::prime(p).unwrap();
        let mut r = rng(seed);
        let ideal = AmbientIdeal::new(field, 2, vec![random_poly(field, 2, 1, 3, 0.6, &mut r)]).unwrap();
        let point = random_point(field, 2, m, &mut r);
        let killed = ideal.generators().iter().all(|g| evaluate_on_arc(g, &point).iter().all(|c| c.is_zero()));
        prop_assert_eq!(point.lies_on(&jetify(&ideal, m)), killed);
    }

    #[test]
    fn trivial_jet_is_a_section(field in fields(), seed in any::<u64>(), m in 0usize..=4) {
        let mut r = rng(seed);
        let x: Vec<_> = (0..2).map(|_| random_scalar(field, &mut r)).collect();
        let ideal = ideal_through(field, 2, &x, vec![random_poly(field, 2, 1, 3, 0.5, &mut r)]);
        let jet = trivial_jet(&ideal, &x, m).unwrap();
        prop_assert!(jet.lies_on(&jetify(&ideal, m)));
        let back = truncate_point(&ideal, &jet, 0).unwrap();
        prop_assert_eq!(back.base_point(), x);
    }

    #[test]
    fn morphism_jets_compose(field in fields(), seed in any::<u64>(), m in 0usize..=3) {
        let mut r = rng(seed);
        let f = vec![random_poly(field, 2, 0, 2, 0.5, &mut r), random_poly(field, 2, 0, 2, 0.5, &mut r)];
        let g = vec![random_poly(field, 2, 0, 2, 0.5, &mut r)];
        let gf: Vec<Poly> = g.iter().map(|gq| gq.substitute(|v| Some(f[v.index as usize - 1].clone()))).collect();
        let point = random_point(field, 2, m, &mut r);
        let fm = jet_of_morphism(field, 2, &f, m).unwrap();
        let gm = jet_of_morphism(field, 2, &g, m).unwrap();
        let gfm = jet_of_morphism(field, 2, &gf, m).unwrap();
        let image = fm.apply(&point).unwrap();
        prop_assert_eq!(gm.apply(&image).unwrap(), gfm.apply(&point).unwrap());
        let base: Vec<_> = f.iter().map(|fq| fq.eval(|v| point.get(v))).collect();
        prop_assert_eq!(image.base_point(), base);
        for (q, fq) in f.iter().enumerate() {
            let arc = evaluate_on_arc(fq, &point);
            prop_assert_eq!(image.arc(q as u32 + 1), arc);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn normal_form_is_linear(field in fields(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = vec![random_poly(field, 3, 1, 2, 0.4, &mut r), random_poly(field, 3, 1, 2, 0.4, &mut r)];
        let gb = buchberger(&gens).unwrap();
        let f = random_poly(field, 3, 0, 3, 0.4, &mut r);
        let g = random_poly(field, 3, 0, 3, 0.4, &mut r);
        let a = random_scalar(field, &mut r);
        let b = random_scalar(field, &mut r);
        prop_assert_eq!(
            gb.normal_form(&(&f.scale(&a) + &g.scale(&b))),
            &gb.normal_form(&f).scale(&a) + &gb.normal_form(&g).scale(&b)
        );
    }

    #[test]
    fn membership_cofactors_reconstruct(field in fields(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = vec![random_poly(field, 3, 1, 2, 0.4, &mut r), random_poly(field, 3, 1, 2, 0.4, &mut r)];
        let mut f = Poly::zero(field);
        for g in &gens {
            f = &f + &(&random_poly(field, 3, 0, 2, 0.4, &mut r) * g);
        }
        prop_assert!(ideal_membership(&f, &gens).unwrap());
        let cof = membership_certificate(&f, &gens).unwrap().expect("member has cofactors");
        let mut sum = Poly::zero(field);
        for (q, g) in cof.iter().zip(&gens) {
            sum = &sum + &(q * g);
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn local_non_membership_persists_at_higher_bounds(field in fields(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = vec![random_poly(field, 2, 1, 3, 0.4, &mut r), random_poly(field, 2, 2, 3, 0.4, &mut r)];
        let f = random_poly(field, 2, 1, 3, 0.4, &mut r);
        let spec = LocalIdealSpec::new(gens, 0, jetforge_core::algebra::jet_variables(2, 0));
        let ord = f.ord().finite().unwrap();
        let verdicts: Vec<bool> = (ord + 1..=ord + 4).map(|d| local_membership_mod_degree(&f, &spec, d).unwrap()).collect();
        if let Some(first_false) = verdicts.iter().position(|v| !v) {
            prop_assert!(verdicts[first_false..].iter().all(|v| !v), "{:?}", verdicts);
        }
    }

    #[test]
    fn homogeneous_local_and_global_membership_agree(field in fields(), seed in any::<u64>(), member in any::<bool>()) {
        let mut r = rng(seed);
        let vars = jetforge_core::algebra::jet_variables(3, 0);
        let gens: Vec<Poly> = (0..2)
            .map(|_| random_homogeneous(field, &vars, 2, 3, &mut r))
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let f = if member {
            let mut f = Poly::zero(field);
            for g in &gens {
                f = &f + &(&random_homogeneous(field, &vars, 1, 2, &mut r) * g);
            }
            f
        } else {
            random_homogeneous(field, &vars, 3, 4, &mut r)
        };
        prop_assume!(!f.is_zero());
        let spec = LocalIdealSpec::new(gens.clone(), 0, vars.clone());
        let global = ideal_membership(&f, &gens).unwrap();
        prop_assert_eq!(local_membership_mod_degree(&f, &spec, 4).unwrap(), global);
        if member {
            prop_assert!(global);
        }
    }

    #[test]
    fn tangent_fiber_is_level_one_copy_of_linear_parts(field in fields(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = vec![random_poly(field, 3, 1, 3, 0.4, &mut r), random_poly(field, 3, 1, 3, 0.4, &mut r)];
        let ideal = AmbientIdeal::new(field, 3, gens.clone()).unwrap();
        let fiber = fiber_over_trivial_jet(&ideal, 0, 1).unwrap();
        let got = fiber.nonzero_generators();
        let expected: Vec<Poly> = gens
            .iter()
            .map(|g| g.filter_terms(|m| m.degree() == 1).map_variables(|v| v.at_level(1)))
            .filter(|g| !g.is_zero())
            .collect();
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn evaluation_consistency_sees_points_on_and_off_the_jet_scheme() {
    let field = FieldSpec::prime(2).unwrap();
    let (mut on, mut off) = (0, 0);
    for seed in 0..200 {
        let mut r = rng(seed);
        let ideal = AmbientIdeal::new(field, 2, vec![random_poly(field, 2, 1, 3, 0.6, &mut r)]).unwrap();
        let point = random_point(field, 2, 2, &mut r);
        let killed = ideal.generators().iter().all(|g| evaluate_on_arc(g, &point).iter().all(|c| c.is_zero()));
        assert_eq!(point.lies_on(&jetify(&ideal, 2)), killed);
        if killed {
            on += 1
        } else {
            off += 1
        }
    }
    assert!(on > 10 && off > 10, "on = {on}, off = {off}");
}
