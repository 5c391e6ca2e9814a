//! Brute-force subgroup enumeration, independent of the Goursat machinery.
//!
//! Starting from the trivial subgroup, every known subgroup is extended by each
//! element outside it and closed again, until no new member set appears.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::Result;
use crate::group::{Elem, FiniteGroup, Limits};
use crate::subgroup::Subgroup;

/// Every subgroup of `g` by layered closure, ordered by size then members.
pub fn all_subgroups_bruteforce(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<Vec<Subgroup>> {
    limits.check_enumeration(g.order())?;
    let trivial = Subgroup::trivial(g);
    let mut known: HashSet<Vec<Elem>> = HashSet::from([trivial.members().to_vec()]);
    let mut found = vec![trivial.clone()];
    let mut layer: Vec<(Vec<Elem>, Subgroup)> = vec![(Vec::new(), trivial)];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (gens, h) in &layer {
            for x in g.elements().filter(|&x| !h.contains(x)) {
                let mut extended = gens.clone();
                extended.push(x);
                let k = Subgroup::generated(g, &extended)?;
                if known.insert(k.members().to_vec()) {
                    found.push(k.clone());
                    next.push((extended, k));
                }
            }
        }
        layer = next;
    }
    found.sort();
    Ok(found)
}

/// Number of subgroups of `g`.
pub fn subgroup_count(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<usize> {
    Ok(all_subgroups_bruteforce(g, limits)?.len())
}
