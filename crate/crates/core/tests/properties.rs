//! Randomized checks over small products of catalog groups.

mod common;

use std::sync::Arc;

use goursat_core::chain::{gamman, qn};
use goursat_core::classify::{cyclic_criterion_pair, is_cyclic_direct};
use goursat_core::hom::{enumerate_homomorphisms, HomFilter};
use goursat_core::lattice::HasseDiagram;
use goursat_core::oracle::all_subgroups_bruteforce;
use goursat_core::pair::{gamma2_prime, q2_prime};
use goursat_core::{direct_product, make_group, quotient, FiniteGroup, GroupKind, Limits, Subgroup};
use proptest::prelude::*;

fn small_kind() -> impl Strategy<Value = GroupKind> {
    prop_oneof![
        (1usize..=6).prop_map(GroupKind::Cyclic),
        (2usize..=3).prop_map(GroupKind::Symmetric),
        (2usize..=4).prop_map(GroupKind::Dihedral),
        Just(GroupKind::Quaternion8),
        Just(GroupKind::Trivial),
    ]
}

fn build(kinds: &[GroupKind]) -> Arc<FiniteGroup> {
    let factors: Vec<_> = kinds
        .iter()
        .map(|&k| make_group(k, &Limits::default()).unwrap())
        .collect();
    direct_product(&factors, &Limits::default()).unwrap().into_group()
}

/// A product of up to four small factors with order at most 96, plus a few
/// raw generator picks.
fn product_and_gens() -> impl Strategy<Value = (Vec<GroupKind>, Vec<usize>)> {
    prop::collection::vec(small_kind(), 1..=4)
        .prop_filter("order cap", |ks| {
            ks.iter().map(|k| k.order().unwrap()).product::<usize>() <= 96
        })
        .prop_flat_map(|ks| {
            let order: usize = ks.iter().map(|k| k.order().unwrap()).product();
            (Just(ks), prop::collection::vec(0..order, 0..=3))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_round_trip((kinds, gens) in product_and_gens()) {
        let p = build(&kinds);
        let g = Subgroup::generated(&p, &gens).unwrap();
        let c = qn(&g).unwrap();
        prop_assert_eq!(c.component_count(), 3 * kinds.len() - 2);
        prop_assert_eq!(gamman(&c).unwrap(), g.clone());
        prop_assert_eq!(qn(&gamman(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn generation_is_idempotent((kinds, gens) in product_and_gens()) {
        let p = build(&kinds);
        let g = Subgroup::generated(&p, &gens).unwrap();
        prop_assert_eq!(Subgroup::generated(&p, g.members()).unwrap(), g.clone());
        prop_assert_eq!(p.order() % g.order(), 0);
    }

    #[test]
    fn pair_round_trip_and_criterion(a in small_kind(), b in small_kind(), gens in prop::collection::vec(0usize..1000, 0..=2)) {
        let p = build(&[a, b]);
        let gens: Vec<usize> = gens.into_iter().map(|x| x % p.order()).collect();
        let g = Subgroup::generated(&p, &gens).unwrap();
        let q = q2_prime(&g).unwrap();
        prop_assert_eq!(gamma2_prime(&q, &p).unwrap(), g.clone());
        let verdict = cyclic_criterion_pair(&g).unwrap();
        prop_assert_eq!(verdict.is_cyclic, is_cyclic_direct(&g));
        if verdict.is_cyclic {
            prop_assert_eq!(verdict.predicted_order, Some(g.order()));
        }
    }

    #[test]
    fn quotient_orders_multiply((kinds, gens) in product_and_gens()) {
        let p = build(&kinds);
        let whole = Subgroup::whole(&p);
        let h = Subgroup::generated(&p, &gens).unwrap();
        if h.is_normal_in(&whole).unwrap() {
            let q = quotient(&whole, &h).unwrap();
            prop_assert_eq!(q.order() * h.order(), p.order());
            prop_assert_eq!(q.projection().kernel(), h);
            prop_assert!(q.projection().is_surjective());
        }
    }
}

#[test]
fn automorphism_counts_of_cyclic_groups_are_totients() {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    for n in 1..=12 {
        let g = make_group(GroupKind::Cyclic(n), &Limits::default()).unwrap();
        let auts = enumerate_homomorphisms(&g, &g, HomFilter::BIJECTIVE, &Limits::default()).unwrap();
        assert_eq!(auts.len(), (1..=n).filter(|&k| gcd(k, n) == 1).count());
    }
}

#[test]
fn oracle_closed_under_intersection() {
    let p = build(&[GroupKind::Symmetric(3), GroupKind::Cyclic(2), GroupKind::Cyclic(2)]);
    let subs = all_subgroups_bruteforce(&p, &Limits::default()).unwrap();
    for a in &subs {
        for b in &subs {
            assert!(subs.contains(&a.intersection(b).unwrap()));
        }
    }
}

#[test]
fn hasse_edges_match_brute_force_cover_count() {
    for kinds in [
        vec![GroupKind::Cyclic(2), GroupKind::Cyclic(2)],
        vec![GroupKind::Cyclic(4)],
        vec![GroupKind::Cyclic(1)],
        vec![GroupKind::Dihedral(4)],
    ] {
        let p = build(&kinds);
        let subs = all_subgroups_bruteforce(&p, &Limits::default()).unwrap();
        let sets: Vec<Vec<usize>> = subs.iter().map(|s| s.members().to_vec()).collect();
        let proper_subset = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
        let covers = sets
            .iter()
            .flat_map(|a| sets.iter().map(move |b| (a, b)))
            .filter(|(a, b)| proper_subset(a, b) && !sets.iter().any(|c| proper_subset(a, c) && proper_subset(c, b)))
            .count();
        let diagram = HasseDiagram::new(subs);
        assert_eq!(diagram.edges().len(), covers);
    }
    let klein = HasseDiagram::new(
        all_subgroups_bruteforce(
            &build(&[GroupKind::Cyclic(2), GroupKind::Cyclic(2)]),
            &Limits::default(),
        )
        .unwrap(),
    );
    assert_eq!((klein.nodes().len(), klein.edges().len()), (5, 6));
}
