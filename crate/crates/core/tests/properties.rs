use std::cmp::Ordering;
use std::sync::Arc;

use blowup_core::hilbert::{hilbert_function, hilbert_series};
use blowup_core::{
    buchberger, parse_polynomial, print_polynomial, Field, Ideal, Monomial, MonomialOrder, Polynomial, Ring,
};
use proptest::prelude::*;

const NVARS: usize = 3;

fn ring() -> Arc<Ring> {
    Ring::standard(NVARS, Field::Rationals)
}

fn monomial(max_deg: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_deg, NVARS).prop_map(move |mut e| {
        let mut budget = max_deg;
        for x in e.iter_mut() {
            *x = (*x).min(budget);
            budget -= *x;
        }
        Monomial::new(&e).unwrap()
    })
}

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, monomial(max_deg)), 0..=max_terms).prop_map(|terms| {
        let r = ring();
        let f = r.field();
        Polynomial::from_terms(&r, terms.into_iter().map(|(c, m)| (f.from_i64(c), m)))
    })
}

/// A homogeneous polynomial of degree `d`, possibly zero.
fn homogeneous(d: u32) -> impl Strategy<Value = Polynomial> {
    poly(d, 3).prop_map(move |f| {
        let r = f.ring().clone();
        let terms = f.terms().iter().filter(|t| t.mono.degree() == d).map(|t| (t.coeff.clone(), t.mono.clone()));
        Polynomial::from_terms(&r, terms.collect::<Vec<_>>())
    })
}

fn small_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec((1u32..=2).prop_flat_map(homogeneous), 1..=3)
        .prop_map(|gens| Ideal::new(&ring(), gens.into_iter().filter(|g| !g.is_zero()).collect()).unwrap())
        .prop_filter("nonzero ideal", |i| !i.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(3, 4), g in poly(3, 4), h in poly(3, 4)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(f.ring()), f.clone());
    }

    #[test]
    fn orders_are_total_and_multiplicative(a in monomial(4), b in monomial(4), c in monomial(4)) {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::elimination(1, 2)] {
            let ab = order.cmp(&a, &b);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ab, order.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_ne!(order.cmp(&a.mul(&c), &a), Ordering::Less);
        }
    }

    #[test]
    fn print_then_parse_round_trips(f in poly(4, 5)) {
        let text = print_polynomial(&f);
        prop_assert_eq!(parse_polynomial(&text, f.ring()).unwrap(), f);
    }

    #[test]
    fn groebner_basis_is_certified_and_idempotent(gens in prop::collection::vec(poly(3, 3), 1..=3)) {
        let r = ring();
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let gb = buchberger(&r, &gens).unwrap();
        prop_assert!(gb.verify_s_pairs());
        prop_assert!(gb.is_reduced());
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
        let again = buchberger(&r, gb.polys()).unwrap();
        prop_assert_eq!(again.polys(), gb.polys());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn intersection_colon_saturation_laws(i in small_ideal(), j in small_ideal()) {
        let meet = i.intersection(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet).unwrap());
        prop_assert!(j.contains_ideal(&meet).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()).unwrap());
        prop_assert!(meet.equals(&j.intersection(&i).unwrap()).unwrap());

        let colon = i.colon(&j).unwrap();
        prop_assert!(colon.contains_ideal(&i).unwrap());
        prop_assert!(i.contains_ideal(&colon.product(&j).unwrap()).unwrap());
        prop_assert_eq!(colon.equals(&Ideal::unit(i.ring())).unwrap(), i.contains_ideal(&j).unwrap());

        let sat = i.saturation(&j, 50).unwrap();
        prop_assert!(sat.contains_ideal(&colon).unwrap());
        prop_assert!(sat.saturation(&j, 50).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn powers_multiply(i in small_ideal(), s in 1u32..=2, t in 1u32..=2) {
        let lhs = i.power(s).product(&i.power(t)).unwrap();
        prop_assert!(lhs.equals(&i.power(s + t)).unwrap());
    }

    #[test]
    fn series_matches_function(i in small_ideal()) {
        let series = hilbert_series(&i).unwrap();
        for d in 0..=6 {
            prop_assert_eq!(series.coefficient(d), hilbert_function(&i, d).unwrap());
        }
    }
}
