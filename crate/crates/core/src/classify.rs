//! Structural properties of a subgroup read off its projections and Goursat
//! data, each paired with a direct check on the subgroup itself.

use std::sync::Arc;

use num_integer::Integer;

use crate::chain::{qn, section, SectionSpec};
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::pair::{gamma2_prime, q2_prime, GoursatQuintuple};
use crate::product::encode;
use crate::subgroup::Subgroup;

/// Outcome of a cyclicity criterion. `predicted_order` is only reported when
/// the subgroup is cyclic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicVerdict {
    pub is_cyclic: bool,
    pub predicted_order: Option<usize>,
}

impl CyclicVerdict {
    fn cyclic(order: usize) -> Self {
        Self {
            is_cyclic: true,
            predicted_order: Some(order),
        }
    }

    fn not_cyclic() -> Self {
        Self {
            is_cyclic: false,
            predicted_order: None,
        }
    }
}

/// The single-factor projections `Ḡ_1, ..., Ḡ_n`.
pub fn projections(g: &Subgroup) -> Vec<Subgroup> {
    let n = g.parent().factor_count();
    (0..n)
        .map(|j| section(g, &SectionSpec::new(j, [], n).expect("valid factor")).expect("valid section"))
        .collect()
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn is_power_of(mut k: usize, p: u64) -> bool {
    let p = p as usize;
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

/// Some member generates `g`.
pub fn is_cyclic_direct(g: &Subgroup) -> bool {
    let parent = g.parent();
    g.members().iter().any(|&x| parent.element_order(x) == g.order())
}

/// Whether every projection `Ḡ_j` is abelian.
pub fn is_abelian_via_projections(g: &Subgroup) -> bool {
    projections(g).iter().all(Subgroup::is_abelian)
}

/// Whether every projection `Ḡ_j` has `p`-power order.
pub fn is_p_group_via_projections(g: &Subgroup, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    Ok(projections(g).iter().all(|h| is_power_of(h.order(), p)))
}

/// Whether `|g|` is a power of `p`.
pub fn is_p_group_direct(g: &Subgroup, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    Ok(is_power_of(g.order(), p))
}

/// The prime `p` for which `g` is a nontrivial `p`-group, if any.
pub fn p_group_prime(g: &Subgroup) -> Option<u64> {
    let k = g.order() as u64;
    let p = (2..=k).find(|&d| k.is_multiple_of(d))?;
    is_power_of(g.order(), p).then_some(p)
}

/// Whether every `θ_j` of the chain of `g` is the trivial map; this is the
/// case exactly when `g = Ḡ_1 x ... x Ḡ_n`.
pub fn is_product_of_projections(g: &Subgroup) -> Result<bool> {
    Ok(qn(g)?.all_theta_trivial())
}

/// Literal comparison of `g` with the encoded product of its projections.
pub fn is_product_of_projections_direct(g: &Subgroup) -> bool {
    let factors = g.parent().factor_list();
    let proj = projections(g);
    let mut product = vec![Vec::new()];
    for h in &proj {
        product = product
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                h.members().iter().map(move |&x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let mut members: Vec<usize> = product.iter().map(|t| encode(&factors, t)).collect();
    members.sort_unstable();
    members == g.members()
}

/// Cyclicity of a subgroup of `A x B` from its quintuple: cyclic iff `Ḡ₁` and
/// `Ḡ₂` are cyclic and `|G₁|`, `|G₂|` are coprime, with `|G| = lcm(|Ḡ₁|, |Ḡ₂|)`.
pub fn cyclic_criterion_pair(g: &Subgroup) -> Result<CyclicVerdict> {
    let q = q2_prime(g)?;
    let cyclic = is_cyclic_direct(q.g1bar()) && is_cyclic_direct(q.g2bar()) && q.g1().order().gcd(&q.g2().order()) == 1;
    Ok(if cyclic {
        CyclicVerdict::cyclic(q.g1bar().order().lcm(&q.g2bar().order()))
    } else {
        CyclicVerdict::not_cyclic()
    })
}

/// Cyclicity of a subgroup of `A x B x C`: all `Ḡ_i` cyclic and, for every
/// pair `i < k`, `|G(i|k)|` coprime to `|G(k|i)|`. Then
/// `|G| = lcm(|Ḡ₁|, |Ḡ₂|, |Ḡ₃|)`.
pub fn cyclic_criterion_triple(g: &Subgroup) -> Result<CyclicVerdict> {
    let n = g.parent().factor_count();
    if n != 3 {
        return Err(GroupError::FactorCount { expected: 3, found: n });
    }
    let proj = projections(g);
    let section_order =
        |j: usize, pinned: usize| -> Result<usize> { Ok(section(g, &SectionSpec::new(j, [pinned], 3)?)?.order()) };
    let mut coprime = true;
    for (i, k) in [(0, 1), (0, 2), (1, 2)] {
        coprime &= section_order(i, k)?.gcd(&section_order(k, i)?) == 1;
    }
    let cyclic = coprime && proj.iter().all(is_cyclic_direct);
    Ok(if cyclic {
        CyclicVerdict::cyclic(proj.iter().fold(1, |acc, h| acc.lcm(&h.order())))
    } else {
        CyclicVerdict::not_cyclic()
    })
}

/// `|Γ(q)| = |𝒢_θ| |G₁| |G₂|`.
pub fn order_formula_check(q: &GoursatQuintuple, product: &Arc<FiniteGroup>) -> Result<bool> {
    let g = match gamma2_prime(q, product) {
        Ok(g) => g,
        Err(GroupError::Invariant(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(g.order() == q.quotient_order() * q.g1().order() * q.g2().order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_group, GroupKind};
    use crate::group::{Elem, Limits};
    use crate::product::{direct_product, DirectProduct};

    fn product(kinds: &[GroupKind]) -> DirectProduct {
        let factors: Vec<_> = kinds
            .iter()
            .map(|&k| make_group(k, &Limits::default()).unwrap())
            .collect();
        direct_product(&factors, &Limits::default()).unwrap()
    }

    fn z(n: usize) -> GroupKind {
        GroupKind::Cyclic(n)
    }

    fn generated(p: &DirectProduct, gens: &[&[Elem]]) -> Subgroup {
        let gens: Vec<Elem> = gens.iter().map(|t| p.encode(t).unwrap()).collect();
        Subgroup::generated(p.group(), &gens).unwrap()
    }

    #[test]
    fn primes() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn abelian_predicates() {
        let p = product(&[GroupKind::Symmetric(3), z(2)]);
        let whole = Subgroup::whole(p.group());
        assert!(!is_abelian_via_projections(&whole));
        assert!(!whole.is_abelian());
        let s3s3 = product(&[GroupKind::Symmetric(3), GroupKind::Symmetric(3)]);
        let diag: Vec<Elem> = (0..6).map(|x| s3s3.encode(&[x, x]).unwrap()).collect();
        let diag = Subgroup::from_members(s3s3.group(), diag).unwrap();
        assert!(!is_abelian_via_projections(&diag));
        assert!(!diag.is_abelian());
    }

    #[test]
    fn p_group_predicates() {
        let p = product(&[z(4), z(4)]);
        let diag = generated(&p, &[&[1, 1]]);
        assert!(is_p_group_via_projections(&diag, 2).unwrap());
        assert!(is_p_group_via_projections(&Subgroup::trivial(p.group()), 7).unwrap());
        let q = product(&[z(2), z(3)]);
        assert!(!is_p_group_via_projections(&Subgroup::whole(q.group()), 2).unwrap());
        assert_eq!(is_p_group_via_projections(&diag, 4), Err(GroupError::NotPrime(4)));
        assert_eq!(p_group_prime(&diag), Some(2));
        assert_eq!(p_group_prime(&Subgroup::whole(q.group())), None);
        assert_eq!(p_group_prime(&Subgroup::trivial(q.group())), None);
    }

    #[test]
    fn product_of_projections() {
        let p = product(&[z(2), z(2)]);
        assert!(is_product_of_projections(&Subgroup::whole(p.group())).unwrap());
        let diag = generated(&p, &[&[1, 1]]);
        assert!(!is_product_of_projections(&diag).unwrap());
        assert!(!is_product_of_projections_direct(&diag));
        let q = product(&[z(4), z(2)]);
        let g = generated(&q, &[&[2, 0], &[0, 1]]);
        assert_eq!(g.order(), 4);
        assert!(is_product_of_projections(&g).unwrap());
        assert!(is_product_of_projections_direct(&g));
    }

    #[test]
    fn pair_criterion_examples() {
        let p = product(&[z(2), z(3)]);
        let g = generated(&p, &[&[1, 1]]);
        assert_eq!(cyclic_criterion_pair(&g).unwrap(), CyclicVerdict::cyclic(6));
        let k = product(&[z(2), z(2)]);
        let whole = Subgroup::whole(k.group());
        assert_eq!(cyclic_criterion_pair(&whole).unwrap(), CyclicVerdict::not_cyclic());
        assert!(!is_cyclic_direct(&whole));
        assert_eq!(
            cyclic_criterion_pair(&Subgroup::trivial(k.group())).unwrap(),
            CyclicVerdict::cyclic(1)
        );
        let r = product(&[z(2), z(4)]);
        let h = generated(&r, &[&[1, 1]]);
        assert!(is_cyclic_direct(&h));
        assert_eq!(h.order(), 4);
    }

    #[test]
    fn triple_criterion_examples() {
        let p = product(&[z(2), z(3), z(5)]);
        let g = generated(&p, &[&[1, 1, 1]]);
        assert_eq!(cyclic_criterion_triple(&g).unwrap(), CyclicVerdict::cyclic(30));
        let q = product(&[z(2), z(2), z(3)]);
        let h = generated(&q, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(cyclic_criterion_triple(&h).unwrap(), CyclicVerdict::not_cyclic());
        assert_eq!(
            cyclic_criterion_triple(&Subgroup::trivial(q.group())).unwrap(),
            CyclicVerdict::cyclic(1)
        );
        assert!(cyclic_criterion_triple(&Subgroup::whole(product(&[z(2), z(2)]).group())).is_err());
    }

    #[test]
    fn order_formula_examples() {
        let p = product(&[z(2), z(2)]);
        let q = q2_prime(&generated(&p, &[&[1, 1]])).unwrap();
        assert!(order_formula_check(&q, p.group()).unwrap());
        let r = product(&[z(2), z(3)]);
        let q = q2_prime(&Subgroup::whole(r.group())).unwrap();
        assert_eq!(q.quotient_order() * q.g1().order() * q.g2().order(), 6);
        assert!(order_formula_check(&q, r.group()).unwrap());
    }
}
