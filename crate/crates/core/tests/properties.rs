//! Randomized invariants over groups larger than the exhaustive sweeps reach.

mod common;

use proptest::prelude::*;

use semiaffine::structure::{
    classify, periodic_semiaffine_classify, reconstruct, reconstruct_periodic,
    ClassificationRecord, Subgroup, TheoremVerifier, VerifyOptions,
};
use semiaffine::{half_set, Decomposition, Element, GroupSpec, SubsetBits, Witness};

fn arb_group() -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec(1u64..=8, 1..=3).prop_map(|o| GroupSpec::new(&o).unwrap())
}

/// Groups of order at most 64, for checks that scan every triple of a
/// dense set.
fn arb_moderate_group() -> impl Strategy<Value = GroupSpec> {
    arb_group().prop_filter("order at most 64", |g| g.order() <= 64)
}

fn arb_element(g: &GroupSpec) -> impl Strategy<Value = Element> {
    let g = g.clone();
    (0..g.order()).prop_map(move |i| g.element_at(i).unwrap())
}

fn arb_subset(g: &GroupSpec) -> impl Strategy<Value = SubsetBits> {
    let g = g.clone();
    let n = g.order() as usize;
    prop::collection::vec(any::<bool>(), n).prop_map(move |bits| {
        SubsetBits::from_indices(&g, bits.iter().enumerate().filter(|b| *b.1).map(|b| b.0)).unwrap()
    })
}

/// A set that is semiaffine by construction, to reach the interesting
/// branches far more often than uniform sampling would.
fn arb_semiaffine(g: &GroupSpec) -> impl Strategy<Value = SubsetBits> {
    let g = g.clone();
    let gens = prop::collection::vec(arb_element(&g), 0..=2);
    (
        gens,
        arb_element(&g),
        arb_element(&g),
        any::<bool>(),
        any::<u64>(),
    )
        .prop_map(move |(gens, a, b, two_cosets, pick)| {
            let h = Subgroup::generated(&g, &gens).unwrap();
            if two_cosets {
                return h.coset(&a).unwrap().union(&h.coset(&b).unwrap()).unwrap();
            }
            // (H ∖ C) + a with C = P + c, where P contains the 2-Sylow
            // subgroup of H so that H / P has odd order.
            let hm: Vec<usize> = h.bits().indices().collect();
            let at = |k: u64| {
                g.element_at(hm[(k % hm.len() as u64) as usize] as u64)
                    .unwrap()
            };
            let mut gens: Vec<Element> = hm
                .iter()
                .map(|&i| g.element_at(i as u64).unwrap())
                .filter(|e| g.element_order(e).unwrap().is_power_of_two())
                .collect();
            gens.push(at(pick));
            let p = Subgroup::generated(&g, &gens).unwrap();
            let c = at(pick / 7);
            let cset = p.coset(&c).unwrap();
            h.bits().difference(&cset).unwrap().shift(&a).unwrap()
        })
}

fn with_group<S: Strategy>(
    f: impl Fn(&GroupSpec) -> S + Clone + 'static,
) -> impl Strategy<Value = (GroupSpec, S::Value)> {
    in_group(arb_group(), f)
}

fn in_group<S: Strategy>(
    groups: impl Strategy<Value = GroupSpec>,
    f: impl Fn(&GroupSpec) -> S + Clone + 'static,
) -> impl Strategy<Value = (GroupSpec, S::Value)> {
    groups.prop_flat_map(move |g| {
        let s = f(&g);
        (Just(g), s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms((g, (a, b, c)) in with_group(|g| (arb_element(g), arb_element(g), arb_element(g)))) {
        let z = g.zero();
        prop_assert_eq!(g.add(&a, &b).unwrap(), g.add(&b, &a).unwrap());
        prop_assert_eq!(
            g.add(&g.add(&a, &b).unwrap(), &c).unwrap(),
            g.add(&a, &g.add(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(g.add(&a, &z).unwrap(), a.clone());
        prop_assert_eq!(g.add(&a, &g.neg(&a).unwrap()).unwrap(), z.clone());
        prop_assert_eq!(g.sub(&a, &b).unwrap(), g.add(&a, &g.neg(&b).unwrap()).unwrap());
        let m = g.element_order(&a).unwrap();
        prop_assert_eq!(g.scalar_mul(m as i64, &a).unwrap(), z.clone());
        for k in 1..m {
            prop_assert_ne!(g.scalar_mul(k as i64, &a).unwrap(), z.clone());
        }
        prop_assert_eq!(g.order() % m, 0);
    }

    #[test]
    fn index_is_a_bijection(g in arb_group()) {
        for i in 0..g.order() {
            let e = g.element_at(i).unwrap();
            prop_assert_eq!(g.index_of(&e).unwrap() as u64, i);
        }
        prop_assert_eq!(g.elements().count() as u64, g.order());
        prop_assert!(g.element_at(g.order()).is_err());
    }

    #[test]
    fn predicates_are_shift_invariant((g, (x, t)) in with_group(|g| (arb_subset(g), arb_element(g)))) {
        let y = x.shift(&t).unwrap();
        let whole = Subgroup::whole(&g);
        prop_assert_eq!(y.len(), x.len());
        prop_assert_eq!(y.is_affine(), x.is_affine());
        prop_assert_eq!(y.is_semiaffine(), x.is_semiaffine());
        prop_assert_eq!(y.is_midconvex(&whole).unwrap(), x.is_midconvex(&whole).unwrap());
        prop_assert_eq!(y.difference_set(), x.difference_set());
        // Affine ⊆ semiaffine.
        prop_assert!(!x.is_affine() || x.is_semiaffine());
    }

    #[test]
    fn half_sets_are_empty_or_cosets_of_the_two_torsion((g, s) in with_group(arb_element)) {
        let z = g.zero();
        let torsion = half_set(&g, &z).unwrap();
        let hs = half_set(&g, &s).unwrap();
        if let Some(first) = hs.first_index() {
            let shifted = torsion.shift(&g.element_at(first as u64).unwrap()).unwrap();
            prop_assert_eq!(hs, shifted);
        }
        // 2s always has s among its halves.
        let twice = g.add(&s, &s).unwrap();
        prop_assert!(half_set(&g, &twice).unwrap().contains(&s).unwrap());
    }

    #[test]
    fn witnesses_replay((g, x) in with_group(arb_subset)) {
        let whole = Subgroup::whole(&g);
        for w in [
            x.affine_witness(),
            x.semiaffine_witness(),
            x.midconvex_witness(&whole).unwrap(),
        ].into_iter().flatten() {
            let ambient = matches!(w, Witness::Midconvex { .. }).then_some(&whole);
            prop_assert!(w.replay(&x, ambient), "{:?}", w);
        }
    }

    #[test]
    fn hex_and_literal_round_trip((g, x) in with_group(arb_subset)) {
        prop_assert_eq!(SubsetBits::from_hex(&g, &x.to_hex()).unwrap(), x.clone());
        prop_assert_eq!(SubsetBits::parse_literal(&g, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn constructed_semiaffine_sets_classify((g, x) in in_group(arb_moderate_group(), arb_semiaffine)) {
        prop_assert!(x.is_semiaffine(), "{}", x);
        let c = classify(&x).unwrap();
        prop_assert!(c.is_semiaffine());
        prop_assert_eq!(reconstruct(&c).unwrap(), x.clone());
        if let Decomposition::TwoCosets { lemma: t, .. } = &c.decomposition {
            prop_assert!(t.invariants_hold());
            prop_assert!(t.restriction_claim_holds(&x).unwrap());
        }
        let rec = ClassificationRecord::from(&c);
        let json = serde_json::to_string(&rec).unwrap();
        let back: ClassificationRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.reconstruct(&g).unwrap(), x.clone());
        let p = periodic_semiaffine_classify(&x).unwrap();
        prop_assert_eq!(reconstruct_periodic(&p).unwrap(), x);
    }

    #[test]
    fn theorem_holds_on_random_sets((g, x) in with_group(arb_subset)) {
        let v = TheoremVerifier::new(&g, VerifyOptions { converse_limit: 6 });
        let report = v.verify(&x);
        prop_assert!(report.passed(), "{}: {}", x, report);
    }
}
