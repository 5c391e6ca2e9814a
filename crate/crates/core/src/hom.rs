//! Homomorphisms between subgroups and their exhaustive enumeration.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Limits};
use crate::subgroup::Subgroup;

/// A multiplicative map from `domain` to `codomain`.
///
/// `image[i]` is the image of `domain.members()[i]`, given as an element index
/// of the codomain's parent group.
#[derive(Clone, PartialEq, Eq)]
pub struct Homomorphism {
    domain: Subgroup,
    codomain: Subgroup,
    image: Vec<Elem>,
}

/// Which homomorphisms [`enumerate_homomorphisms`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HomFilter {
    pub surjective_only: bool,
    pub bijective_only: bool,
}

impl HomFilter {
    pub const ALL: Self = Self {
        surjective_only: false,
        bijective_only: false,
    };
    pub const SURJECTIVE: Self = Self {
        surjective_only: true,
        bijective_only: false,
    };
    pub const BIJECTIVE: Self = Self {
        surjective_only: false,
        bijective_only: true,
    };
}

impl Homomorphism {
    /// Builds a map and checks that it is a homomorphism.
    pub fn new(domain: Subgroup, codomain: Subgroup, image: Vec<Elem>) -> Result<Self> {
        let hom = Self {
            domain,
            codomain,
            image,
        };
        hom.validate()?;
        Ok(hom)
    }

    pub(crate) fn new_unchecked(domain: Subgroup, codomain: Subgroup, image: Vec<Elem>) -> Self {
        debug_assert_eq!(domain.order(), image.len());
        Self {
            domain,
            codomain,
            image,
        }
    }

    /// The map sending everything to the identity.
    pub fn trivial(domain: Subgroup, codomain: Subgroup) -> Self {
        let e = codomain.parent().identity();
        let image = vec![e; domain.order()];
        Self::new_unchecked(domain, codomain, image)
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    /// Images in domain-member order.
    pub fn images(&self) -> &[Elem] {
        &self.image
    }

    /// Image of `x`, or `None` when `x` is not in the domain.
    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.domain.position(x).map(|i| self.image[i])
    }

    /// `(x, image(x))` for every domain member.
    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.domain.members().iter().copied().zip(self.image.iter().copied())
    }

    pub fn is_trivial(&self) -> bool {
        let e = self.codomain.parent().identity();
        self.image.iter().all(|&y| y == e)
    }

    pub fn image_subgroup(&self) -> Subgroup {
        Subgroup::from_unsorted_unchecked(self.codomain.parent(), self.image.clone())
    }

    pub fn is_surjective(&self) -> bool {
        self.image_subgroup().order() == self.codomain.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_surjective()
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.codomain.parent().identity();
        let members = self.pairs().filter(|&(_, y)| y == e).map(|(x, _)| x).collect();
        Subgroup::from_sorted_unchecked(self.domain.parent(), members)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if !self.image_subgroup().is_contained_in(&other.domain) {
            return Err(GroupError::NotContained);
        }
        let image = self
            .image
            .iter()
            .map(|&y| other.apply(y).expect("image lies in the next domain"))
            .collect();
        Ok(Self::new_unchecked(self.domain.clone(), other.codomain.clone(), image))
    }

    fn validate(&self) -> Result<()> {
        if self.image.len() != self.domain.order() {
            return Err(GroupError::NotHomomorphism(
                "image length differs from domain order".into(),
            ));
        }
        if let Some(&y) = self.image.iter().find(|&&y| !self.codomain.contains(y)) {
            return Err(GroupError::NotHomomorphism(format!("{y} is outside the codomain")));
        }
        let (d, c) = (self.domain.parent(), self.codomain.parent());
        for (i, &x) in self.domain.members().iter().enumerate() {
            for (j, &y) in self.domain.members().iter().enumerate() {
                let xy = self.apply(d.op(x, y)).expect("domain is closed");
                if xy != c.op(self.image[i], self.image[j]) {
                    return Err(GroupError::NotHomomorphism(format!("f({x}*{y}) != f({x})*f({y})")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

/// All homomorphisms between two groups; see
/// [`enumerate_homomorphisms_between`].
pub fn enumerate_homomorphisms(
    domain: &Arc<FiniteGroup>,
    codomain: &Arc<FiniteGroup>,
    filter: HomFilter,
    limits: &Limits,
) -> Result<Vec<Homomorphism>> {
    limits.check_order(domain.order())?;
    limits.check_order(codomain.order())?;
    enumerate_homomorphisms_between(&Subgroup::whole(domain), &Subgroup::whole(codomain), filter, None)
}

/// All homomorphisms `domain -> codomain` passing `filter`, sorted
/// lexicographically by image array. With `limit`, the search stops after that
/// many hits and returns those (sorted), which need not be the smallest ones.
///
/// Images are chosen for a greedy generating set of the domain, with each
/// generator's image order required to divide the generator's order (to equal
/// it when only bijections are wanted), then propagated along the Cayley graph.
pub fn enumerate_homomorphisms_between(
    domain: &Subgroup,
    codomain: &Subgroup,
    filter: HomFilter,
    limit: Option<usize>,
) -> Result<Vec<Homomorphism>> {
    let bijective = filter.bijective_only;
    let surjective = filter.surjective_only || bijective;
    if bijective && domain.order() != codomain.order() {
        return Ok(Vec::new());
    }
    if surjective && !domain.order().is_multiple_of(codomain.order()) {
        return Ok(Vec::new());
    }
    let d = domain.parent();
    let c = codomain.parent();
    let gens = domain.greedy_generators();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let n = d.element_order(g);
            codomain
                .members()
                .iter()
                .copied()
                .filter(|&y| {
                    let m = c.element_order(y);
                    if bijective {
                        m == n
                    } else {
                        n.is_multiple_of(m)
                    }
                })
                .collect()
        })
        .collect();
    let searcher = Extender::new(domain, codomain, &gens);

    let keep = |img: Vec<Elem>| -> Option<Homomorphism> {
        let hom = Homomorphism::new_unchecked(domain.clone(), codomain.clone(), img);
        if surjective && !hom.is_surjective() {
            return None;
        }
        Some(hom)
    };

    let mut found: Vec<Homomorphism> = if limit.is_some() || gens.is_empty() {
        let mut out = Vec::new();
        for_each_assignment(&candidates, &mut |choice| {
            if let Some(h) = searcher.extend(choice).and_then(keep) {
                out.push(h);
            }
            limit.is_none_or(|l| out.len() < l)
        });
        out
    } else {
        // Branch on the first generator's image in parallel; the final sort
        // makes the result independent of scheduling.
        candidates[0]
            .par_iter()
            .flat_map_iter(|&first| {
                let mut local = Vec::new();
                let mut rest = candidates.clone();
                rest[0] = vec![first];
                for_each_assignment(&rest, &mut |choice| {
                    if let Some(h) = searcher.extend(choice).and_then(keep) {
                        local.push(h);
                    }
                    true
                });
                local
            })
            .collect()
    };
    found.sort_by(|a, b| a.image.cmp(&b.image));
    found.dedup_by(|a, b| a.image == b.image);
    if let Some(l) = limit {
        found.truncate(l);
    }
    Ok(found)
}

/// Visits every tuple in the cartesian product of `choices` until `visit`
/// returns false.
fn for_each_assignment(choices: &[Vec<Elem>], visit: &mut dyn FnMut(&[Elem]) -> bool) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut current: Vec<Elem> = choices.iter().map(|c| c[0]).collect();
    loop {
        if !visit(&current) {
            return;
        }
        let mut k = choices.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                current[k] = choices[k][idx[k]];
                break;
            }
            idx[k] = 0;
            current[k] = choices[k][0];
        }
    }
}

/// Extends generator images to a full map by walking the Cayley graph of the
/// domain, rejecting assignments that are inconsistent on any edge.
struct Extender<'a> {
    domain: &'a Subgroup,
    codomain: &'a Subgroup,
    gens: &'a [Elem],
    /// `edges[i][k]` is the member position of `members[i] * gens[k]`.
    edges: Vec<Vec<usize>>,
}

impl<'a> Extender<'a> {
    fn new(domain: &'a Subgroup, codomain: &'a Subgroup, gens: &'a [Elem]) -> Self {
        let d = domain.parent();
        let edges = domain
            .members()
            .iter()
            .map(|&x| {
                gens.iter()
                    .map(|&g| domain.position(d.op(x, g)).expect("domain is closed"))
                    .collect()
            })
            .collect();
        Self {
            domain,
            codomain,
            gens,
            edges,
        }
    }

    fn extend(&self, gen_images: &[Elem]) -> Option<Vec<Elem>> {
        debug_assert_eq!(gen_images.len(), self.gens.len());
        let c = self.codomain.parent();
        const UNSET: Elem = Elem::MAX;
        let mut image = vec![UNSET; self.domain.order()];
        let start = self.domain.position(self.domain.parent().identity())?;
        image[start] = c.identity();
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (k, &j) in self.edges[i].iter().enumerate() {
                let y = c.op(image[i], gen_images[k]);
                if image[j] == UNSET {
                    image[j] = y;
                    queue.push_back(j);
                } else if image[j] != y {
                    return None;
                }
            }
        }
        Some(image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_group, GroupKind};

    fn group(kind: GroupKind) -> Arc<FiniteGroup> {
        make_group(kind, &Limits::default()).unwrap()
    }

    fn z(n: usize) -> Arc<FiniteGroup> {
        group(GroupKind::Cyclic(n))
    }

    fn count(d: &Arc<FiniteGroup>, c: &Arc<FiniteGroup>, filter: HomFilter) -> usize {
        enumerate_homomorphisms(d, c, filter, &Limits::default()).unwrap().len()
    }

    /// Every map d -> c checked for multiplicativity.
    fn brute_force(d: &Arc<FiniteGroup>, c: &Arc<FiniteGroup>, filter: HomFilter) -> Vec<Vec<Elem>> {
        let total = c.order().pow(d.order() as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut img = Vec::with_capacity(d.order());
            let mut rest = code;
            for _ in 0..d.order() {
                img.push(rest % c.order());
                rest /= c.order();
            }
            img.reverse();
            let multiplicative = d
                .elements()
                .all(|x| d.elements().all(|y| img[d.op(x, y)] == c.op(img[x], img[y])));
            if !multiplicative {
                continue;
            }
            let mut distinct = img.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let onto = distinct.len() == c.order();
            let ok = if filter.bijective_only {
                onto && d.order() == c.order()
            } else if filter.surjective_only {
                onto
            } else {
                true
            };
            if ok {
                out.push(img);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn spec_examples() {
        assert_eq!(count(&z(2), &z(2), HomFilter::BIJECTIVE), 1);
        let id = &enumerate_homomorphisms(&z(2), &z(2), HomFilter::BIJECTIVE, &Limits::default()).unwrap()[0];
        assert_eq!(id.images(), &[0, 1]);
        assert_eq!(count(&z(3), &z(3), HomFilter::BIJECTIVE), 2);
        assert_eq!(count(&z(4), &z(2), HomFilter::SURJECTIVE), 1);
    }

    #[test]
    fn matches_brute_force_on_small_pairs() {
        let groups = [
            z(1),
            z(2),
            z(3),
            z(4),
            group(GroupKind::Symmetric(3)),
            group(GroupKind::Dihedral(2)),
        ];
        for d in &groups {
            for c in &groups {
                if c.order().pow(d.order() as u32) > 5_000_000 {
                    continue;
                }
                for filter in [HomFilter::ALL, HomFilter::SURJECTIVE, HomFilter::BIJECTIVE] {
                    let ours: Vec<Vec<Elem>> = enumerate_homomorphisms(d, c, filter, &Limits::default())
                        .unwrap()
                        .into_iter()
                        .map(|h| h.images().to_vec())
                        .collect();
                    assert_eq!(ours, brute_force(d, c, filter), "{d} -> {c} {filter:?}");
                }
            }
        }
    }

    #[test]
    fn automorphisms_of_cyclic_groups_count_totients() {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for n in 1..=12 {
            let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(count(&z(n), &z(n), HomFilter::BIJECTIVE), phi, "Z{n}");
        }
    }

    #[test]
    fn kernel_and_composition() {
        let homs = enumerate_homomorphisms(&z(4), &z(2), HomFilter::SURJECTIVE, &Limits::default()).unwrap();
        let f = &homs[0];
        assert_eq!(f.kernel().members(), &[0, 2]);
        assert!(f.is_surjective() && !f.is_bijective());
        let auts = enumerate_homomorphisms(&z(2), &z(2), HomFilter::BIJECTIVE, &Limits::default()).unwrap();
        let g = f.then(&auts[0]).unwrap();
        assert_eq!(g.images(), f.images());
    }

    #[test]
    fn new_rejects_non_homomorphisms() {
        let whole4 = Subgroup::whole(&z(4));
        let whole2 = Subgroup::whole(&z(2));
        assert!(Homomorphism::new(whole4.clone(), whole2.clone(), vec![0, 1, 1, 0]).is_err());
        assert!(Homomorphism::new(whole4.clone(), whole2.clone(), vec![0, 1, 0, 1]).is_ok());
        assert!(Homomorphism::new(whole4, whole2, vec![0, 1]).is_err());
    }

    #[test]
    fn limit_truncates_in_order() {
        let d = Subgroup::whole(&z(6));
        let all = enumerate_homomorphisms_between(&d, &d, HomFilter::ALL, None).unwrap();
        let first = enumerate_homomorphisms_between(&d, &d, HomFilter::ALL, Some(1)).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(first.len(), 1);
        assert!(all.contains(&first[0]));
    }
}
