//! Direct products with a mixed-radix element encoding.
//!
//! A tuple `(a_1, ..., a_n)` is stored as the flat index
//! `((a_1 * |A_2| + a_2) * |A_3| + a_3) ...`, first factor most significant.
//! With this layout the product of the first `k` factors, taken as a single
//! factor next to `A_{k+1}`, encodes elements exactly as the `(k+1)`-fold
//! product does, so left-nested groupings share indices.

use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Limits};

/// A direct product of an ordered list of factors.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectProduct {
    group: Arc<FiniteGroup>,
}

/// Builds `factors[0] x ... x factors[n-1]` with componentwise multiplication.
pub fn direct_product(factors: &[Arc<FiniteGroup>], limits: &Limits) -> Result<DirectProduct> {
    if factors.is_empty() {
        return Err(GroupError::InvalidSelection("empty factor list".into()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .unwrap_or(usize::MAX);
    limits.check_order(order)?;
    Ok(DirectProduct {
        group: Arc::new(build_product(factors)),
    })
}

impl DirectProduct {
    /// Views an existing group as a product. Atomic groups are one-factor
    /// products of themselves.
    pub fn view(group: &Arc<FiniteGroup>) -> Self {
        Self {
            group: Arc::clone(group),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn into_group(self) -> Arc<FiniteGroup> {
        self.group
    }

    pub fn factor_count(&self) -> usize {
        self.group.factor_count()
    }

    pub fn factors(&self) -> Vec<Arc<FiniteGroup>> {
        self.group.factor_list()
    }

    /// Flat index of a coordinate tuple.
    pub fn encode(&self, coords: &[Elem]) -> Result<Elem> {
        let factors = self.factors();
        if coords.len() != factors.len() {
            return Err(GroupError::FactorCount {
                expected: factors.len(),
                found: coords.len(),
            });
        }
        for (f, &c) in factors.iter().zip(coords) {
            f.check_index(c)?;
        }
        Ok(encode(&factors, coords))
    }

    /// Coordinate tuple of a flat index.
    pub fn decode(&self, x: Elem) -> Vec<Elem> {
        decode(&self.factors(), x)
    }
}

pub(crate) fn encode(factors: &[Arc<FiniteGroup>], coords: &[Elem]) -> Elem {
    factors.iter().zip(coords).fold(0, |acc, (f, &c)| acc * f.order() + c)
}

pub(crate) fn decode(factors: &[Arc<FiniteGroup>], mut x: Elem) -> Vec<Elem> {
    let mut coords = vec![0; factors.len()];
    for (slot, f) in coords.iter_mut().zip(factors).rev() {
        *slot = x % f.order();
        x /= f.order();
    }
    coords
}

/// Componentwise Cayley table; callers are responsible for the order cap.
pub(crate) fn build_product(factors: &[Arc<FiniteGroup>]) -> FiniteGroup {
    let order: usize = factors.iter().map(|f| f.order()).product();
    let coords: Vec<Vec<Elem>> = (0..order).map(|x| decode(factors, x)).collect();
    let mut table = Vec::with_capacity(order * order);
    let mut buf = vec![0; factors.len()];
    for a in &coords {
        for b in &coords {
            for (k, f) in factors.iter().enumerate() {
                buf[k] = f.op(a[k], b[k]);
            }
            table.push(encode(factors, &buf));
        }
    }
    let identity = encode(factors, &factors.iter().map(|f| f.identity()).collect::<Vec<_>>());
    let inverses = coords
        .iter()
        .map(|a| {
            let inv: Vec<Elem> = factors.iter().zip(a).map(|(f, &c)| f.inv(c)).collect();
            encode(factors, &inv)
        })
        .collect();
    let label = factors
        .iter()
        .map(|f| f.label().to_string())
        .collect::<Vec<_>>()
        .join("x");
    FiniteGroup::from_parts(label, order, table, identity, inverses, Vec::new(), factors.to_vec())
}
