mod common;

use common::{product, z};
use goursat_core::classify::{
    cyclic_criterion_pair, cyclic_criterion_triple, is_abelian_via_projections, is_cyclic_direct, is_p_group_direct,
    is_p_group_via_projections, is_product_of_projections, is_product_of_projections_direct, order_formula_check,
};
use goursat_core::oracle::all_subgroups_bruteforce;
use goursat_core::pair::q2_prime;
use goursat_core::{GroupKind, Limits};

#[test]
fn pair_criterion_agrees_with_element_orders() {
    for kinds in [
        vec![z(4), z(6)],
        vec![z(2), z(4)],
        vec![GroupKind::Symmetric(3), z(4)],
        vec![z(3), z(3)],
    ] {
        let p = product(&kinds);
        for g in all_subgroups_bruteforce(p.group(), &Limits::default()).unwrap() {
            let verdict = cyclic_criterion_pair(&g).unwrap();
            assert_eq!(verdict.is_cyclic, is_cyclic_direct(&g), "{g:?}");
            if verdict.is_cyclic {
                assert_eq!(verdict.predicted_order, Some(g.order()));
            } else {
                assert_eq!(verdict.predicted_order, None);
            }
            assert!(order_formula_check(&q2_prime(&g).unwrap(), p.group()).unwrap());
        }
    }
}

#[test]
fn triple_criterion_agrees_with_element_orders() {
    for kinds in [
        vec![z(2), z(3), z(5)],
        vec![z(2), z(2), z(3)],
        vec![z(2), z(4), z(3)],
        vec![z(4), z(2), z(2)],
    ] {
        let p = product(&kinds);
        for g in all_subgroups_bruteforce(p.group(), &Limits::default()).unwrap() {
            let verdict = cyclic_criterion_triple(&g).unwrap();
            assert_eq!(verdict.is_cyclic, is_cyclic_direct(&g), "{g:?}");
            if verdict.is_cyclic {
                assert_eq!(verdict.predicted_order, Some(g.order()));
            }
        }
    }
}

#[test]
fn projection_predicates_agree_with_direct_checks() {
    for kinds in [
        vec![GroupKind::Symmetric(3), z(4)],
        vec![GroupKind::Quaternion8, z(2)],
        vec![z(2), z(2), z(3)],
        vec![GroupKind::Dihedral(4), z(2)],
    ] {
        let p = product(&kinds);
        for g in all_subgroups_bruteforce(p.group(), &Limits::default()).unwrap() {
            assert_eq!(is_abelian_via_projections(&g), g.is_abelian(), "{g:?}");
            for prime in [2, 3, 5] {
                assert_eq!(
                    is_p_group_via_projections(&g, prime).unwrap(),
                    is_p_group_direct(&g, prime).unwrap()
                );
            }
            assert_eq!(
                is_product_of_projections(&g).unwrap(),
                is_product_of_projections_direct(&g)
            );
        }
    }
}

#[test]
fn ambient_abelian_means_every_subgroup_abelian() {
    let p = product(&[z(4), z(6)]);
    for g in all_subgroups_bruteforce(p.group(), &Limits::default()).unwrap() {
        assert!(is_abelian_via_projections(&g));
    }
}
