#![allow(dead_code)]

use std::sync::Arc;

use goursat_core::{direct_product, make_group, DirectProduct, Elem, FiniteGroup, GroupKind, Limits, Subgroup};

pub fn group(kind: GroupKind) -> Arc<FiniteGroup> {
    make_group(kind, &Limits::default()).unwrap()
}

pub fn product(kinds: &[GroupKind]) -> DirectProduct {
    let factors: Vec<_> = kinds.iter().map(|&k| group(k)).collect();
    direct_product(&factors, &Limits::default()).unwrap()
}

pub fn z(n: usize) -> GroupKind {
    GroupKind::Cyclic(n)
}

pub fn generated(p: &DirectProduct, gens: &[&[Elem]]) -> Subgroup {
    let gens: Vec<Elem> = gens.iter().map(|t| p.encode(t).unwrap()).collect();
    Subgroup::generated(p.group(), &gens).unwrap()
}
