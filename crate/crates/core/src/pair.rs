//! Subgroups of a two-factor product `A x B` and their Goursat data.
//!
//! A subgroup `G` determines the quintuple `(Ḡ₁, G₁, Ḡ₂, G₂, θ)` where
//! `Ḡ₁ = π₁(G)`, `G₁ = {a | (a, e) ∈ G}` (likewise for `B`) and
//! `θ: Ḡ₁/G₁ → Ḡ₂/G₂` sends `[a]` to `[b]` for `(a, b) ∈ G`. Conversely `G` is
//! the preimage of the graph of `θ` in `Ḡ₁ x Ḡ₂`. The asymmetric form keeps
//! `θ₁: Ḡ₁ ↠ Ḡ₂/G₂` instead, with `G₁` recovered as its kernel.
//!
//! Quotient maps are stored on coset indices; coset `i` is the one whose
//! minimum element is the `i`-th smallest representative.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Limits};
use crate::hom::{enumerate_homomorphisms_between, HomFilter, Homomorphism};
use crate::quotient::{quotient, QuotientGroup};
use crate::subgroup::{normal_pairs, Subgroup};

/// `(Ḡ₁, G₁, Ḡ₂, G₂, θ)` with `θ` an isomorphism `Ḡ₁/G₁ → Ḡ₂/G₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoursatQuintuple {
    g1bar: Subgroup,
    g1: Subgroup,
    g2bar: Subgroup,
    g2: Subgroup,
    theta: Homomorphism,
}

/// `(Ḡ₁, Ḡ₂, G₂, θ₁)` with `θ₁` a surjection `Ḡ₁ ↠ Ḡ₂/G₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoursatQuadruple {
    g1bar: Subgroup,
    g2bar: Subgroup,
    g2: Subgroup,
    theta1: Homomorphism,
}

impl GoursatQuintuple {
    /// Checks normality, that `θ` maps between the right quotients, and that
    /// it is a bijective homomorphism.
    pub fn new(g1bar: Subgroup, g1: Subgroup, g2bar: Subgroup, g2: Subgroup, theta: Homomorphism) -> Result<Self> {
        let q1 = quotient(&g1bar, &g1)?;
        let q2 = quotient(&g2bar, &g2)?;
        if theta.domain() != q1.as_subgroup() || theta.codomain() != q2.as_subgroup() {
            return Err(GroupError::Invariant("θ does not map Ḡ₁/G₁ to Ḡ₂/G₂".into()));
        }
        let theta = Homomorphism::new(
            theta.domain().clone(),
            theta.codomain().clone(),
            theta.images().to_vec(),
        )?;
        if !theta.is_bijective() {
            return Err(GroupError::Invariant("θ is not an isomorphism".into()));
        }
        Ok(Self {
            g1bar,
            g1,
            g2bar,
            g2,
            theta,
        })
    }

    pub fn g1bar(&self) -> &Subgroup {
        &self.g1bar
    }

    pub fn g1(&self) -> &Subgroup {
        &self.g1
    }

    pub fn g2bar(&self) -> &Subgroup {
        &self.g2bar
    }

    pub fn g2(&self) -> &Subgroup {
        &self.g2
    }

    pub fn theta(&self) -> &Homomorphism {
        &self.theta
    }

    /// Common order of the two quotients, i.e. `|𝒢_θ|`.
    pub fn quotient_order(&self) -> usize {
        self.g1bar.order() / self.g1.order()
    }
}

impl GoursatQuadruple {
    /// Checks normality of `G₂` in `Ḡ₂` and that `θ₁` is a surjective
    /// homomorphism from `Ḡ₁` onto `Ḡ₂/G₂`.
    pub fn new(g1bar: Subgroup, g2bar: Subgroup, g2: Subgroup, theta1: Homomorphism) -> Result<Self> {
        let q2 = quotient(&g2bar, &g2)?;
        if theta1.domain() != &g1bar || theta1.codomain() != q2.as_subgroup() {
            return Err(GroupError::Invariant("θ₁ does not map Ḡ₁ to Ḡ₂/G₂".into()));
        }
        let theta1 = Homomorphism::new(
            theta1.domain().clone(),
            theta1.codomain().clone(),
            theta1.images().to_vec(),
        )?;
        if !theta1.is_surjective() {
            return Err(GroupError::Invariant("θ₁ is not surjective".into()));
        }
        Ok(Self {
            g1bar,
            g2bar,
            g2,
            theta1,
        })
    }

    pub(crate) fn new_unchecked(g1bar: Subgroup, g2bar: Subgroup, g2: Subgroup, theta1: Homomorphism) -> Self {
        Self {
            g1bar,
            g2bar,
            g2,
            theta1,
        }
    }

    pub fn g1bar(&self) -> &Subgroup {
        &self.g1bar
    }

    pub fn g2bar(&self) -> &Subgroup {
        &self.g2bar
    }

    pub fn g2(&self) -> &Subgroup {
        &self.g2
    }

    pub fn theta1(&self) -> &Homomorphism {
        &self.theta1
    }
}

/// The two factors of `g`'s parent.
fn pair_factors(parent: &Arc<FiniteGroup>) -> Result<(Arc<FiniteGroup>, Arc<FiniteGroup>)> {
    match parent.factors() {
        [a, b] => Ok((Arc::clone(a), Arc::clone(b))),
        other => Err(GroupError::FactorCount {
            expected: 2,
            found: other.len().max(1),
        }),
    }
}

fn check_target(product: &Arc<FiniteGroup>, a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<()> {
    let (pa, pb) = pair_factors(product)?;
    if pa != *a || pb != *b {
        return Err(GroupError::ParentMismatch);
    }
    Ok(())
}

/// Projections, coordinate sections and a witness `b` for each `a ∈ Ḡ₁`.
struct PairScan {
    g1bar: Subgroup,
    g1: Subgroup,
    g2bar: Subgroup,
    g2: Subgroup,
    /// `partner[a]` is some `b` with `(a, b) ∈ G`.
    partner: Vec<Option<Elem>>,
}

fn scan(g: &Subgroup) -> Result<PairScan> {
    let (a, b) = pair_factors(g.parent())?;
    let nb = b.order();
    let (ea, eb) = (a.identity(), b.identity());
    let mut partner = vec![None; a.order()];
    let (mut p1, mut s1, mut p2, mut s2) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for &x in g.members() {
        let (xa, xb) = (x / nb, x % nb);
        partner[xa].get_or_insert(xb);
        p1.push(xa);
        p2.push(xb);
        if xb == eb {
            s1.push(xa);
        }
        if xa == ea {
            s2.push(xb);
        }
    }
    Ok(PairScan {
        g1bar: Subgroup::from_unsorted_unchecked(&a, p1),
        g1: Subgroup::from_unsorted_unchecked(&a, s1),
        g2bar: Subgroup::from_unsorted_unchecked(&b, p2),
        g2: Subgroup::from_unsorted_unchecked(&b, s2),
        partner,
    })
}

/// Goursat quintuple of a subgroup of `A x B`.
pub fn q2_prime(g: &Subgroup) -> Result<GoursatQuintuple> {
    let s = scan(g)?;
    let q1 = quotient(&s.g1bar, &s.g1)?;
    let q2 = quotient(&s.g2bar, &s.g2)?;
    let image = (0..q1.order())
        .map(|i| {
            let b = s.partner[q1.representative(i)].expect("representative lies in Ḡ₁");
            q2.coset_index(b).expect("partner lies in Ḡ₂")
        })
        .collect();
    let theta = Homomorphism::new_unchecked(q1.as_subgroup().clone(), q2.as_subgroup().clone(), image);
    Ok(GoursatQuintuple {
        g1bar: s.g1bar,
        g1: s.g1,
        g2bar: s.g2bar,
        g2: s.g2,
        theta,
    })
}

/// Preimage of the graph of `θ` in `Ḡ₁ x Ḡ₂`, as a subgroup of `product`.
pub fn gamma2_prime(q: &GoursatQuintuple, product: &Arc<FiniteGroup>) -> Result<Subgroup> {
    check_target(product, q.g1bar.parent(), q.g2bar.parent())?;
    let q1 = quotient(&q.g1bar, &q.g1)?;
    let q2 = quotient(&q.g2bar, &q.g2)?;
    let g = pullback(product, &q.g1bar, &q2, |a| {
        q.theta.apply(q1.coset_index(a).expect("a ∈ Ḡ₁")).expect("θ is total")
    });
    let expected = q.quotient_order() * q.g1.order() * q.g2.order();
    if g.order() != expected {
        return Err(GroupError::Invariant(format!(
            "pullback has order {}, expected |𝒢_θ||G₁||G₂| = {expected}",
            g.order()
        )));
    }
    Ok(g)
}

/// `{(a, b) | a ∈ domain, b ∈ Ḡ₂, coset_of_image(a) = [b]}` inside `product`,
/// where `product` encodes `(a, b)` as `a * |B| + b`.
pub(crate) fn pullback(
    product: &Arc<FiniteGroup>,
    domain: &Subgroup,
    target: &QuotientGroup,
    coset_of_image: impl Fn(Elem) -> usize,
) -> Subgroup {
    let nb = target.whole().parent().order();
    let mut members = Vec::with_capacity(domain.order() * target.kernel().order());
    for &a in domain.members() {
        let c = coset_of_image(a);
        members.extend(target.cosets()[c].iter().map(|&b| a * nb + b));
    }
    Subgroup::from_unsorted_unchecked(product, members)
}

/// Asymmetric Goursat quadruple of a subgroup of `A x B`.
pub fn q2(g: &Subgroup) -> Result<GoursatQuadruple> {
    let s = scan(g)?;
    let q2 = quotient(&s.g2bar, &s.g2)?;
    let image = s
        .g1bar
        .members()
        .iter()
        .map(|&a| {
            q2.coset_index(s.partner[a].expect("a ∈ Ḡ₁"))
                .expect("partner lies in Ḡ₂")
        })
        .collect();
    let theta1 = Homomorphism::new_unchecked(s.g1bar.clone(), q2.as_subgroup().clone(), image);
    Ok(GoursatQuadruple::new_unchecked(s.g1bar, s.g2bar, s.g2, theta1))
}

/// Preimage of the graph of `θ₁` in `Ḡ₁ x Ḡ₂`, as a subgroup of `product`.
pub fn gamma2(q: &GoursatQuadruple, product: &Arc<FiniteGroup>) -> Result<Subgroup> {
    check_target(product, q.g1bar.parent(), q.g2bar.parent())?;
    let q2 = quotient(&q.g2bar, &q.g2)?;
    Ok(pullback(product, &q.g1bar, &q2, |a| {
        q.theta1.apply(a).expect("θ₁ is total")
    }))
}

/// `θ₁ = θ ∘ p` where `p: Ḡ₁ ↠ Ḡ₁/G₁`.
pub fn quadruple_from_quintuple(q: &GoursatQuintuple) -> Result<GoursatQuadruple> {
    let q1 = quotient(&q.g1bar, &q.g1)?;
    let theta1 = q1.projection().then(&q.theta)?;
    Ok(GoursatQuadruple::new_unchecked(
        q.g1bar.clone(),
        q.g2bar.clone(),
        q.g2.clone(),
        theta1,
    ))
}

/// Recovers `G₁ = Ker θ₁` and the induced isomorphism `θ` on `Ḡ₁/G₁`.
pub fn quintuple_from_quadruple(q: &GoursatQuadruple) -> Result<GoursatQuintuple> {
    let g1 = q.theta1.kernel();
    let q1 = quotient(&q.g1bar, &g1)?;
    let q2 = quotient(&q.g2bar, &q.g2)?;
    let image = (0..q1.order())
        .map(|i| q.theta1.apply(q1.representative(i)).expect("representative lies in Ḡ₁"))
        .collect();
    let theta = Homomorphism::new_unchecked(q1.as_subgroup().clone(), q2.as_subgroup().clone(), image);
    Ok(GoursatQuintuple {
        g1bar: q.g1bar.clone(),
        g1,
        g2bar: q.g2bar.clone(),
        g2: q.g2.clone(),
        theta,
    })
}

/// Every subgroup of the two-factor product `product`, obtained by running
/// `gamma2_prime` over all quintuples. Canonically ordered.
pub fn enumerate_subgroups_pair(product: &Arc<FiniteGroup>, limits: &Limits) -> Result<Vec<Subgroup>> {
    let (a, b) = pair_factors(product)?;
    limits.check_enumeration(product.order())?;
    let with_quotients = |g: &Arc<FiniteGroup>| -> Result<Vec<(Subgroup, Subgroup, QuotientGroup)>> {
        normal_pairs(g, limits)?
            .into_iter()
            .map(|(upper, lower)| {
                let q = quotient(&upper, &lower)?;
                Ok((upper, lower, q))
            })
            .collect()
    };
    let left = with_quotients(&a)?;
    let right = with_quotients(&b)?;

    let chunks: Vec<Vec<Subgroup>> = left
        .par_iter()
        .map(|(g1bar, g1, q1)| -> Result<Vec<Subgroup>> {
            let mut out = Vec::new();
            for (g2bar, g2, q2) in right.iter().filter(|r| r.2.order() == q1.order()) {
                let isos =
                    enumerate_homomorphisms_between(q1.as_subgroup(), q2.as_subgroup(), HomFilter::BIJECTIVE, None)?;
                for theta in isos {
                    let q = GoursatQuintuple {
                        g1bar: g1bar.clone(),
                        g1: g1.clone(),
                        g2bar: g2bar.clone(),
                        g2: g2.clone(),
                        theta,
                    };
                    out.push(gamma2_prime(&q, product)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<Subgroup> = chunks.into_iter().flatten().collect();
    all.sort();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(GroupError::Invariant(
            "two quintuples produced the same subgroup".into(),
        ));
    }
    Ok(all)
}

/// Whether `G₁ x G₂` is normal in `G` with `G/(G₁ x G₂) ≅ Ḡ₁/G₁ ≅ Ḡ₂/G₂`.
pub fn quotients_agree(g: &Subgroup) -> Result<bool> {
    let q = q2_prime(g)?;
    let nb = q.g2bar.parent().order();
    let members =
        q.g1.members()
            .iter()
            .flat_map(|&a| q.g2.members().iter().map(move |&b| a * nb + b))
            .collect();
    let n = Subgroup::from_unsorted_unchecked(g.parent(), members);
    if !n.is_contained_in(g) || !n.is_normal_in(g)? {
        return Ok(false);
    }
    let top = quotient(g, &n)?;
    let q1 = quotient(&q.g1bar, &q.g1)?;
    let q2 = quotient(&q.g2bar, &q.g2)?;
    Ok(isomorphic(top.as_subgroup(), q1.as_subgroup())? && isomorphic(q1.as_subgroup(), q2.as_subgroup())?)
}

fn isomorphic(x: &Subgroup, y: &Subgroup) -> Result<bool> {
    Ok(!enumerate_homomorphisms_between(x, y, HomFilter::BIJECTIVE, Some(1))?.is_empty())
}
