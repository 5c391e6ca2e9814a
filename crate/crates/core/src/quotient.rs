//! Quotients `whole / kernel` by a normal subgroup.

use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::hom::Homomorphism;
use crate::subgroup::Subgroup;

const NOT_IN_WHOLE: usize = usize::MAX;

/// The coset space of a normal subgroup with its induced multiplication.
///
/// Cosets are indexed by their minimum member (the representative), in
/// increasing order of representative; quotient element `i` is coset `i`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    whole: Subgroup,
    kernel: Subgroup,
    cosets: Vec<Vec<Elem>>,
    coset_of: Vec<usize>,
    quotient: Arc<FiniteGroup>,
    projection: Homomorphism,
}

impl PartialEq for QuotientGroup {
    fn eq(&self, other: &Self) -> bool {
        self.whole == other.whole && self.kernel == other.kernel
    }
}

impl Eq for QuotientGroup {}

/// Forms `whole / kernel`; `kernel` must be normal in `whole`.
pub fn quotient(whole: &Subgroup, kernel: &Subgroup) -> Result<QuotientGroup> {
    if !kernel.is_normal_in(whole)? {
        return Err(GroupError::NotNormal);
    }
    let g = whole.parent();
    let mut coset_of = vec![NOT_IN_WHOLE; g.order()];
    let mut cosets: Vec<Vec<Elem>> = Vec::new();
    for &x in whole.members() {
        if coset_of[x] != NOT_IN_WHOLE {
            continue;
        }
        let mut block: Vec<Elem> = kernel.members().iter().map(|&n| g.op(x, n)).collect();
        block.sort_unstable();
        for &y in &block {
            coset_of[y] = cosets.len();
        }
        cosets.push(block);
    }
    let k = cosets.len();
    let reps: Vec<Elem> = cosets.iter().map(|c| c[0]).collect();
    let table = reps
        .iter()
        .flat_map(|&a| reps.iter().map(|&b| coset_of[g.op(a, b)]).collect::<Vec<_>>())
        .collect();
    let identity = coset_of[g.identity()];
    let inverses = reps.iter().map(|&a| coset_of[g.inv(a)]).collect();
    let labels = reps.iter().map(|&a| format!("[{}]", g.element_label(a))).collect();
    let label = format!("{}:{}/{}", g.label(), whole.order(), kernel.order());
    let quotient = Arc::new(FiniteGroup::from_parts(
        label,
        k,
        table,
        identity,
        inverses,
        labels,
        Vec::new(),
    ));
    let image = whole.members().iter().map(|&x| coset_of[x]).collect();
    let projection = Homomorphism::new_unchecked(whole.clone(), Subgroup::whole(&quotient), image);
    Ok(QuotientGroup {
        whole: whole.clone(),
        kernel: kernel.clone(),
        cosets,
        coset_of,
        quotient,
        projection,
    })
}

impl QuotientGroup {
    pub fn whole(&self) -> &Subgroup {
        &self.whole
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn cosets(&self) -> &[Vec<Elem>] {
        &self.cosets
    }

    /// The quotient as a group whose elements are coset indices.
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.quotient
    }

    /// The whole quotient group as a subgroup of itself.
    pub fn as_subgroup(&self) -> &Subgroup {
        self.projection.codomain()
    }

    /// The natural surjection `whole -> quotient`.
    pub fn projection(&self) -> &Homomorphism {
        &self.projection
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    /// Coset index of `x`, or `None` if `x` is outside `whole`.
    pub fn coset_index(&self, x: Elem) -> Option<usize> {
        self.coset_of.get(x).copied().filter(|&c| c != NOT_IN_WHOLE)
    }

    /// Minimum member of coset `i`.
    pub fn representative(&self, i: usize) -> Elem {
        self.cosets[i][0]
    }
}
