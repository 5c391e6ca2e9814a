//! Subgroups as sorted member lists, with closure, normality and the
//! cyclic-join subgroup lattice of a single group.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Limits};

/// A subgroup of `parent`, identified by its strictly increasing member list.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<Elem>,
}

impl Subgroup {
    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self {
            members: vec![parent.identity()],
            parent: Arc::clone(parent),
        }
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Self {
            members: parent.elements().collect(),
            parent: Arc::clone(parent),
        }
    }

    /// Builds a subgroup from an explicit member set, checking closure.
    pub fn from_members(parent: &Arc<FiniteGroup>, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut members: Vec<Elem> = members.into_iter().collect();
        for &x in &members {
            parent.check_index(x)?;
        }
        members.sort_unstable();
        members.dedup();
        let sub = Self {
            parent: Arc::clone(parent),
            members,
        };
        sub.check_closed()?;
        Ok(sub)
    }

    /// Wraps a member list already known to be a sorted, closed subgroup.
    pub(crate) fn from_sorted_unchecked(parent: &Arc<FiniteGroup>, members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self {
            parent: Arc::clone(parent),
            members,
        }
    }

    /// Like [`Subgroup::from_sorted_unchecked`] but sorts first.
    pub(crate) fn from_unsorted_unchecked(parent: &Arc<FiniteGroup>, mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self::from_sorted_unchecked(parent, members)
    }

    /// Smallest subgroup containing `generators`.
    pub fn generated(parent: &Arc<FiniteGroup>, generators: &[Elem]) -> Result<Self> {
        for &g in generators {
            parent.check_index(g)?;
        }
        Ok(Self::from_sorted_unchecked(parent, closure(parent, generators)))
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` in the member list.
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent
    }

    /// Whether every member of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.order() <= other.order() && self.members.iter().all(|&x| other.contains(x))
    }

    /// Whether `self` is normal in `enclosing`: `x h x^-1` stays in `self` for
    /// every `x` in `enclosing`.
    pub fn is_normal_in(&self, enclosing: &Subgroup) -> Result<bool> {
        if !self.same_parent(enclosing) {
            return Err(GroupError::ParentMismatch);
        }
        if !self.is_contained_in(enclosing) {
            return Err(GroupError::NotContained);
        }
        let g = &self.parent;
        Ok(enclosing.members.iter().all(|&x| {
            let xi = g.inv(x);
            self.members.iter().all(|&h| self.contains(g.op(g.op(x, h), xi)))
        }))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .enumerate()
            .all(|(i, &x)| self.members[i + 1..].iter().all(|&y| g.op(x, y) == g.op(y, x)))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.same_parent(other) {
            return Err(GroupError::ParentMismatch);
        }
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Ok(Self::from_sorted_unchecked(&self.parent, members))
    }

    /// Greedy generating set: repeatedly adds the smallest member not yet in
    /// the span of the chosen generators.
    pub fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.parent.order()];
        span[self.parent.identity()] = true;
        for &x in &self.members {
            if !span[x] {
                gens.push(x);
                for y in closure(&self.parent, &gens) {
                    span[y] = true;
                }
            }
        }
        gens
    }

    /// Member list rendered with the parent's element labels.
    pub fn member_labels(&self) -> Vec<String> {
        self.members.iter().map(|&x| self.parent.element_label(x)).collect()
    }

    fn check_closed(&self) -> Result<()> {
        let g = &self.parent;
        if !self.contains(g.identity()) {
            return Err(GroupError::Invariant("subgroup lacks the identity".into()));
        }
        for &x in &self.members {
            if !self.contains(g.inv(x)) {
                return Err(GroupError::Invariant(format!("not closed under inverse of {x}")));
            }
            for &y in &self.members {
                if !self.contains(g.op(x, y)) {
                    return Err(GroupError::Invariant(format!("not closed under {x}*{y}")));
                }
            }
        }
        debug_assert_eq!(g.order() % self.order(), 0, "Lagrange");
        Ok(())
    }
}

/// Worklist closure of `generators` under right multiplication. In a finite
/// group this also yields inverses, as they are positive powers.
pub(crate) fn closure(g: &FiniteGroup, generators: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; g.order()];
    let e = g.identity();
    seen[e] = true;
    let mut out = vec![e];
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        for &s in generators {
            let y = g.op(x, s);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.same_parent(other)
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// Canonical order: by size, then lexicographically by members.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup({} of {}: {:?})",
            self.order(),
            self.parent.label(),
            self.members
        )
    }
}

/// Every subgroup of `g`, found as iterated joins of cyclic subgroups, in
/// canonical order.
pub fn all_subgroups(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<Vec<Subgroup>> {
    limits.check_enumeration(g.order())?;
    let mut cyclic: Vec<(Elem, Vec<Elem>)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in g.elements() {
        let members = closure(g, &[x]);
        if seen_cyclic.insert(members.clone()) {
            cyclic.push((x, members));
        }
    }
    let mut known: HashSet<Vec<Elem>> = HashSet::new();
    let mut frontier: Vec<(Vec<Elem>, Vec<Elem>)> = Vec::new();
    for (x, members) in &cyclic {
        known.insert(members.clone());
        frontier.push((vec![*x], members.clone()));
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (gens, members) in &frontier {
            for (x, cyc) in &cyclic {
                if cyc.iter().all(|c| members.binary_search(c).is_ok()) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(*x);
                let joined = closure(g, &joined_gens);
                if known.insert(joined.clone()) {
                    next.push((joined_gens, joined));
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = known
        .into_iter()
        .map(|m| Subgroup::from_sorted_unchecked(g, m))
        .collect();
    out.sort();
    Ok(out)
}

/// All pairs `(upper, lower)` of subgroups of `g` with `lower` normal in
/// `upper`, ordered by `upper` then `lower`.
pub fn normal_pairs(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<Vec<(Subgroup, Subgroup)>> {
    let subs = all_subgroups(g, limits)?;
    let mut pairs = Vec::new();
    for upper in &subs {
        for lower in subs.iter().filter(|l| l.is_contained_in(upper)) {
            if lower.is_normal_in(upper)? {
                pairs.push((upper.clone(), lower.clone()));
            }
        }
    }
    Ok(pairs)
}
