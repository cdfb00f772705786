mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::{ass_by_definition, member, minimal, power_gens, up_to_degree, Exps};
use socle_core::assoc::{ass_primes, corner_elements, has_maximal_associated};
use socle_core::decompose::{ass_from_decomposition, irreducible_decomposition, recompose};
use socle_core::parse::parse_ideal;
use socle_core::{Monomial, MonomialIdeal, RingContext};

const N: usize = 3;

fn ctx() -> Arc<RingContext> {
    RingContext::new(&["x", "y", "z"]).unwrap().into_shared()
}

fn exps(max: u32) -> impl Strategy<Value = Exps> {
    prop::collection::vec(0..=max, N)
}

fn mono(max: u32) -> impl Strategy<Value = Monomial> {
    exps(max).prop_map(|e| Monomial::new(e).unwrap())
}

fn nontrivial(max: u32) -> impl Strategy<Value = Exps> {
    exps(max).prop_filter("not the identity", |e| e.iter().any(|&x| x > 0))
}

fn gens(max_gens: usize, max: u32) -> impl Strategy<Value = Vec<Exps>> {
    prop::collection::vec(nontrivial(max), 1..=max_gens)
}

fn build(c: &Arc<RingContext>, g: &[Exps]) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        c,
        g.iter()
            .map(|e| Monomial::new(e.clone()).unwrap())
            .collect(),
    )
    .unwrap()
}

fn raw(i: &MonomialIdeal) -> Vec<Exps> {
    i.generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divisibility_is_antisymmetric(a in mono(4), b in mono(4)) {
        if a.divides(&b).unwrap() && b.divides(&a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn lcm_and_gcd_are_bounds(a in mono(5), b in mono(5)) {
        let l = a.lcm(&b).unwrap();
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.divides(&l).unwrap() && b.divides(&l).unwrap());
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        prop_assert_eq!(g.multiply(&l).unwrap(), a.multiply(&b).unwrap());
        prop_assert_eq!(a.lcm(&b).unwrap(), b.lcm(&a).unwrap());
    }

    #[test]
    fn colon_quotient_recovers_lcm(a in mono(5), b in mono(5)) {
        let q = a.colon_quotient(&b).unwrap();
        prop_assert_eq!(q.multiply(&b).unwrap(), a.lcm(&b).unwrap());
    }

    #[test]
    fn support_of_product_is_union(a in mono(3), b in mono(3)) {
        let p = a.multiply(&b).unwrap();
        let mut u = a.support();
        u.extend(b.support());
        prop_assert_eq!(p.support(), u);
    }

    #[test]
    fn constructor_is_idempotent_and_minimal(g in gens(6, 4)) {
        let c = ctx();
        let i = build(&c, &g);
        prop_assert_eq!(&build(&c, &raw(&i)), &i);
        let set: std::collections::BTreeSet<Exps> = raw(&i).into_iter().collect();
        prop_assert_eq!(set, minimal(&g));
        prop_assert_eq!(parse_ideal(&c, &i.to_string()).unwrap(), i);
    }

    #[test]
    fn colon_contains_ideal(g in gens(5, 4), f in mono(3)) {
        let c = ctx();
        let i = build(&c, &g);
        let q = i.colon_monomial(&f);
        prop_assert!(i.is_subset_of(&q));
        for h in q.generators() {
            prop_assert!(i.contains(&h.multiply(&f).unwrap()));
        }
    }

    #[test]
    fn powers_add(g in gens(3, 3), a in 1u32..=2, b in 1u32..=2) {
        let c = ctx();
        let i = build(&c, &g);
        let lhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &i.power(a + b).unwrap());
        let brute: std::collections::BTreeSet<Exps> = power_gens(&g, a + b).into_iter().collect();
        let got: std::collections::BTreeSet<Exps> = raw(&lhs).into_iter().collect();
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn intersection_is_pointwise(g in gens(4, 3), h in gens(4, 3)) {
        let c = ctx();
        let (i, j) = (build(&c, &g), build(&c, &h));
        let k = i.intersection(&j).unwrap();
        for f in up_to_degree(N, 6) {
            prop_assert_eq!(member(&raw(&k), &f), member(&g, &f) && member(&h, &f));
        }
    }

    #[test]
    fn deleting_a_variable_removes_it_from_the_support(g in gens(5, 3), v in 0usize..N) {
        let c = ctx();
        let d = build(&c, &g).delete_variable(v);
        prop_assert!(!d.support().contains(&v));
        for h in d.generators() {
            prop_assert!(g.iter().any(|e| e.as_slice() == h.exponents()));
        }
    }

    #[test]
    fn radical_is_stable_under_powers(g in gens(4, 3), s in 1u32..=3) {
        let c = ctx();
        let i = build(&c, &g);
        prop_assert_eq!(i.power(s).unwrap().radical(), i.radical());
        prop_assert!(i.radical().is_squarefree());
    }

    #[test]
    fn decomposition_recomposes(g in gens(5, 4)) {
        let c = ctx();
        let i = build(&c, &g);
        let comps = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(recompose(&c, &comps).unwrap(), i);
        for (a, p) in comps.iter().enumerate() {
            for (b, q) in comps.iter().enumerate() {
                prop_assert!(a == b || !p.is_subset_of(q));
            }
        }
    }

    #[test]
    fn associated_primes_three_ways(g in gens(4, 3)) {
        let c = ctx();
        let i = build(&c, &g);
        let socle = ass_primes(&i).unwrap();
        let by_def: std::collections::BTreeSet<Vec<usize>> = ass_by_definition(&g);
        let got: std::collections::BTreeSet<Vec<usize>> =
            socle.iter().map(|p| p.vars().to_vec()).collect();
        prop_assert_eq!(got, by_def);
        prop_assert_eq!(&ass_from_decomposition(&i).unwrap(), &socle);
        prop_assert_eq!(socle.support(), i.support());
        prop_assert_eq!(has_maximal_associated(&i).unwrap(), socle.contains_maximal());
        prop_assert_eq!(corner_elements(&i).unwrap().is_empty(), !socle.contains_maximal());
    }
}
