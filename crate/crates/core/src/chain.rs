//! Subgroups of `A_1 x ... x A_n` via the recursive asymmetric correspondence.
//!
//! A subgroup `G` is peeled one factor at a time along the left-nested grouping
//! `((A_1 x A_2) x A_3) x ...`. Step `j` records `Ḡ_j`, the section
//! `G(j | 1..j-1)` and a surjection `θ` from `Λ`, the projection of `G` onto the
//! first `j - 1` factors, onto `Ḡ_j / G(j | 1..j-1)`. Together with `Ḡ_1` this is
//! `1 + 3(n - 1) = 3n - 2` components.
//!
//! Factor positions in this module are zero-based.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Limits};
use crate::hom::{enumerate_homomorphisms_between, HomFilter, Homomorphism};
use crate::pair::pullback;
use crate::product::{decode, direct_product, encode};
use crate::quotient::quotient;
use crate::subgroup::{all_subgroups, normal_pairs, Subgroup};

/// Factor `j` together with a set `s` of factors pinned to the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SectionSpec {
    j: usize,
    s: Vec<usize>,
}

impl SectionSpec {
    /// Validates `j ∉ s` and `s ⊆ 0..n`.
    pub fn new(j: usize, s: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut s: Vec<usize> = s.into_iter().collect();
        s.sort_unstable();
        s.dedup();
        if j >= n {
            return Err(GroupError::InvalidSelection(format!(
                "factor {j} out of range for {n} factors"
            )));
        }
        if let Some(&bad) = s.iter().find(|&&i| i >= n) {
            return Err(GroupError::InvalidSelection(format!(
                "factor {bad} out of range for {n} factors"
            )));
        }
        if s.contains(&j) {
            return Err(GroupError::InvalidSelection(format!(
                "factor {j} is both selected and pinned"
            )));
        }
        Ok(Self { j, s })
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn pinned(&self) -> &[usize] {
        &self.s
    }
}

/// Coordinates of every member of `g`.
fn coordinates(g: &Subgroup) -> (Vec<Arc<FiniteGroup>>, Vec<Vec<Elem>>) {
    let factors = g.parent().factor_list();
    let coords = g.members().iter().map(|&x| decode(&factors, x)).collect();
    (factors, coords)
}

fn is_identity_on(factors: &[Arc<FiniteGroup>], coords: &[Elem], idx: &[usize]) -> bool {
    idx.iter().all(|&i| coords[i] == factors[i].identity())
}

/// `G(j|S)`: the `j`-th coordinates of members of `g` whose coordinates in `S`
/// are the identity. A subgroup of factor `j`.
pub fn section(g: &Subgroup, spec: &SectionSpec) -> Result<Subgroup> {
    let n = g.parent().factor_count();
    let spec = SectionSpec::new(spec.j, spec.s.iter().copied(), n)?;
    let (factors, coords) = coordinates(g);
    let members = coords
        .iter()
        .filter(|c| is_identity_on(&factors, c, &spec.s))
        .map(|c| c[spec.j])
        .collect();
    Ok(Subgroup::from_unsorted_unchecked(&g.parent().factor(spec.j), members))
}

fn check_index_set(s: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(GroupError::InvalidSelection("empty factor set".into()));
    }
    if let Some(&bad) = s.iter().find(|&&i| i >= n) {
        return Err(GroupError::InvalidSelection(format!(
            "factor {bad} out of range for {n} factors"
        )));
    }
    Ok(s)
}

/// `∏_{j ∈ s} A_j` in increasing index order. The whole index set gives the
/// parent itself, a single index gives that factor and a leading run
/// `0..k` gives the cached prefix product.
pub fn subproduct(parent: &Arc<FiniteGroup>, s: &[usize]) -> Result<Arc<FiniteGroup>> {
    let n = parent.factor_count();
    let s = check_index_set(s, n)?;
    if s.len() == n {
        return Ok(Arc::clone(parent));
    }
    if s.len() == 1 {
        return Ok(parent.factor(s[0]));
    }
    if s.iter().enumerate().all(|(i, &x)| i == x) {
        return Ok(parent.prefix(s.len()));
    }
    let factors = parent.factor_list();
    let selected: Vec<_> = s.iter().map(|&i| Arc::clone(&factors[i])).collect();
    Ok(direct_product(&selected, &Limits::uniform(parent.order()))?.into_group())
}

/// `Ḡ_S = π_S(G)`, a subgroup of [`subproduct`]`(parent, s)`.
pub fn g_bar_s(g: &Subgroup, s: &[usize]) -> Result<Subgroup> {
    restrict(g, s, false)
}

/// `G_S = ι_S⁻¹(G)`: members supported on `s`, read in [`subproduct`]`(parent, s)`.
pub fn g_s(g: &Subgroup, s: &[usize]) -> Result<Subgroup> {
    restrict(g, s, true)
}

fn restrict(g: &Subgroup, s: &[usize], supported_only: bool) -> Result<Subgroup> {
    let n = g.parent().factor_count();
    let s = check_index_set(s, n)?;
    let target = subproduct(g.parent(), &s)?;
    let (factors, coords) = coordinates(g);
    let outside: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
    let selected: Vec<_> = s.iter().map(|&i| Arc::clone(&factors[i])).collect();
    let members = coords
        .iter()
        .filter(|c| !supported_only || is_identity_on(&factors, c, &outside))
        .map(|c| {
            let picked: Vec<Elem> = s.iter().map(|&i| c[i]).collect();
            encode(&selected, &picked)
        })
        .collect();
    let sub = Subgroup::from_unsorted_unchecked(&target, members);
    Ok(sub)
}

/// Whether `G(j|S)` is normal in `G(j|T)`; requires `T ⊆ S` and `j ∉ S`.
pub fn nesting_check(g: &Subgroup, j: usize, t: &[usize], s: &[usize]) -> Result<bool> {
    let n = g.parent().factor_count();
    let inner = SectionSpec::new(j, s.iter().copied(), n)?;
    let outer = SectionSpec::new(j, t.iter().copied(), n)?;
    if !outer.s.iter().all(|i| inner.s.contains(i)) {
        return Err(GroupError::InvalidSelection("T is not a subset of S".into()));
    }
    section(g, &inner)?.is_normal_in(&section(g, &outer)?)
}

/// One step of a chain: `(Ḡ_j, G(j | earlier factors), θ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink {
    gbar: Subgroup,
    g_rel: Subgroup,
    theta: Homomorphism,
}

impl ChainLink {
    pub fn new(gbar: Subgroup, g_rel: Subgroup, theta: Homomorphism) -> Self {
        Self { gbar, g_rel, theta }
    }

    pub fn gbar(&self) -> &Subgroup {
        &self.gbar
    }

    pub fn g_rel(&self) -> &Subgroup {
        &self.g_rel
    }

    /// Surjection from `Λ` (a subgroup of the preceding factors) onto
    /// `Ḡ_j / G(j | earlier)`, on coset indices.
    pub fn theta(&self) -> &Homomorphism {
        &self.theta
    }

    /// The domain `Λ` of `θ`.
    pub fn lambda(&self) -> &Subgroup {
        self.theta.domain()
    }
}

/// The `(3n - 2)`-component Goursat data of a subgroup of an `n`-fold product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoursatChain {
    product: Arc<FiniteGroup>,
    g1bar: Subgroup,
    links: Vec<ChainLink>,
}

impl GoursatChain {
    /// Assembles a chain, checking every invariant: each `G(j|..)` normal in
    /// its `Ḡ_j`, each `θ` a surjective homomorphism onto the right quotient,
    /// and each `θ` defined on the subgroup rebuilt from the links before it.
    pub fn new(product: &Arc<FiniteGroup>, g1bar: Subgroup, links: Vec<ChainLink>) -> Result<Self> {
        let n = product.factor_count();
        if links.len() + 1 != n {
            return Err(GroupError::FactorCount {
                expected: n,
                found: links.len() + 1,
            });
        }
        if g1bar.parent() != &product.prefix(1) {
            return Err(GroupError::ParentMismatch);
        }
        for (k, link) in links.iter().enumerate() {
            if link.gbar.parent() != &product.factor(k + 1) {
                return Err(GroupError::ParentMismatch);
            }
            let q = quotient(&link.gbar, &link.g_rel)?;
            let theta = &link.theta;
            if theta.codomain() != q.as_subgroup() {
                return Err(GroupError::Invariant(format!("θ{} has the wrong codomain", k + 1)));
            }
            Homomorphism::new(
                theta.domain().clone(),
                theta.codomain().clone(),
                theta.images().to_vec(),
            )?;
            if !theta.is_surjective() {
                return Err(GroupError::Invariant(format!("θ{} is not surjective", k + 1)));
            }
        }
        let chain = Self {
            product: Arc::clone(product),
            g1bar,
            links,
        };
        chain.rebuild()?;
        Ok(chain)
    }

    pub fn product(&self) -> &Arc<FiniteGroup> {
        &self.product
    }

    pub fn n(&self) -> usize {
        self.links.len() + 1
    }

    pub fn g1bar(&self) -> &Subgroup {
        &self.g1bar
    }

    pub fn links(&self) -> &[ChainLink] {
        &self.links
    }

    /// `1 + 3(n - 1)`.
    pub fn component_count(&self) -> usize {
        1 + 3 * self.links.len()
    }

    /// Whether every `θ` is the trivial map.
    pub fn all_theta_trivial(&self) -> bool {
        self.links.iter().all(|l| l.theta.is_trivial())
    }

    fn rebuild(&self) -> Result<Subgroup> {
        let mut lambda = self.g1bar.clone();
        for (k, link) in self.links.iter().enumerate() {
            if link.theta.domain() != &lambda {
                return Err(GroupError::Invariant(format!(
                    "θ{} is not defined on the subgroup rebuilt from the preceding links",
                    k + 1
                )));
            }
            let q = quotient(&link.gbar, &link.g_rel)?;
            let target = self.product.prefix(k + 2);
            lambda = pullback(&target, &lambda, &q, |x| link.theta.apply(x).expect("θ is total"));
        }
        Ok(lambda)
    }
}

/// Chain of a subgroup of an `n`-fold product. For one factor the chain is
/// just `Ḡ_1 = g`.
pub fn qn(g: &Subgroup) -> Result<GoursatChain> {
    let product = Arc::clone(g.parent());
    let n = product.factor_count();
    let (factors, coords) = coordinates(g);
    let e: Vec<Elem> = factors.iter().map(|f| f.identity()).collect();

    let first = product.prefix(1);
    let g1bar = Subgroup::from_unsorted_unchecked(&first, coords.iter().map(|c| c[0]).collect());
    let mut links = Vec::with_capacity(n - 1);
    for j in 1..n {
        let head = product.prefix(j);
        let aj = &factors[j];
        let gbar = Subgroup::from_unsorted_unchecked(aj, coords.iter().map(|c| c[j]).collect());
        let g_rel =
            Subgroup::from_unsorted_unchecked(aj, coords.iter().filter(|c| c[..j] == e[..j]).map(|c| c[j]).collect());
        let q = quotient(&gbar, &g_rel)?;
        let mut partner = vec![None; head.order()];
        for c in &coords {
            partner[encode(&factors[..j], &c[..j])].get_or_insert(c[j]);
        }
        let lambda =
            Subgroup::from_unsorted_unchecked(&head, (0..head.order()).filter(|&x| partner[x].is_some()).collect());
        let image = lambda
            .members()
            .iter()
            .map(|&x| q.coset_index(partner[x].expect("x ∈ Λ")).expect("partner lies in Ḡ_j"))
            .collect();
        let theta = Homomorphism::new_unchecked(lambda, q.as_subgroup().clone(), image);
        links.push(ChainLink::new(gbar, g_rel, theta));
    }
    Ok(GoursatChain { product, g1bar, links })
}

/// The subgroup a chain describes: repeated pullbacks of the graphs of the `θ`s.
pub fn gamman(c: &GoursatChain) -> Result<Subgroup> {
    c.rebuild()
}

/// [`qn`] restricted to three factors.
pub fn q3(g: &Subgroup) -> Result<GoursatChain> {
    expect_factors(g.parent(), 3)?;
    qn(g)
}

/// [`gamman`] restricted to three factors.
pub fn gamma3(c: &GoursatChain) -> Result<Subgroup> {
    expect_factors(&c.product, 3)?;
    gamman(c)
}

fn expect_factors(g: &FiniteGroup, n: usize) -> Result<()> {
    if g.factor_count() != n {
        return Err(GroupError::FactorCount {
            expected: n,
            found: g.factor_count(),
        });
    }
    Ok(())
}

/// Every subgroup of an `n`-fold product, built factor by factor: for each
/// subgroup `Λ` of the first `j` factors, each normal pair `G(j+1|..) ◁ Ḡ_{j+1}`
/// and each surjection `Λ ↠ Ḡ_{j+1}/G(j+1|..)`. Canonically ordered.
pub fn enumerate_subgroups_n(product: &Arc<FiniteGroup>, limits: &Limits) -> Result<Vec<Subgroup>> {
    limits.check_enumeration(product.order())?;
    let factors = product.factor_list();
    let first = product.prefix(1);
    let mut level: Vec<Subgroup> = all_subgroups(&factors[0], limits)?
        .into_iter()
        .map(|s| Subgroup::from_sorted_unchecked(&first, s.members().to_vec()))
        .collect();
    for (j, factor) in factors.iter().enumerate().skip(1) {
        let target = product.prefix(j + 1);
        let targets = normal_pairs(factor, limits)?
            .into_iter()
            .map(|(upper, lower)| quotient(&upper, &lower))
            .collect::<Result<Vec<_>>>()?;
        let chunks = level
            .par_iter()
            .map(|lambda| -> Result<Vec<Subgroup>> {
                let mut out = Vec::new();
                for q in targets.iter().filter(|q| lambda.order() % q.order() == 0) {
                    let surjections =
                        enumerate_homomorphisms_between(lambda, q.as_subgroup(), HomFilter::SURJECTIVE, None)?;
                    for theta in surjections {
                        out.push(pullback(&target, lambda, q, |x| theta.apply(x).expect("θ is total")));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        level = chunks.into_iter().flatten().collect();
        level.sort();
        if level.windows(2).any(|w| w[0] == w[1]) {
            return Err(GroupError::Invariant("two chains produced the same subgroup".into()));
        }
    }
    Ok(level)
}
