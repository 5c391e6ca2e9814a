//! Finite groups stored as Cayley tables over element indices `0..order`.
//!
//! Every group in this crate, whether an atom from the catalog or a direct
//! product, is a [`FiniteGroup`]. Elements are plain `usize` indices and all
//! structure lives in the multiplication table.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{GroupError, Result};
use crate::product;

/// Element index inside a [`FiniteGroup`].
pub type Elem = usize;

/// Groups up to this order have associativity checked exhaustively on
/// construction from a raw table.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 128;

/// Order caps used by constructions and enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be constructed.
    pub max_order: usize,
    /// Largest group whose full subgroup list may be enumerated.
    pub max_enumeration_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: 2000,
            max_enumeration_order: 400,
        }
    }
}

impl Limits {
    /// Both caps set to `cap`.
    pub fn uniform(cap: usize) -> Self {
        Self {
            max_order: cap,
            max_enumeration_order: cap,
        }
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(GroupError::OrderCap {
                order,
                cap: self.max_order,
            });
        }
        Ok(())
    }

    pub(crate) fn check_enumeration(&self, order: usize) -> Result<()> {
        if order > self.max_enumeration_order {
            return Err(GroupError::OrderCap {
                order,
                cap: self.max_enumeration_order,
            });
        }
        Ok(())
    }
}

/// A finite group given by its multiplication table.
pub struct FiniteGroup {
    label: String,
    order: usize,
    /// Row-major: `table[i * order + j]` is the index of `g_i * g_j`.
    table: Vec<Elem>,
    identity: Elem,
    inverses: Vec<Elem>,
    element_labels: Vec<String>,
    /// Factors when this group was built as a direct product; empty for atoms.
    factors: Vec<Arc<FiniteGroup>>,
    /// Lazily built products of the leading factors, see [`FiniteGroup::prefix`].
    prefixes: OnceLock<Vec<Arc<FiniteGroup>>>,
}

impl FiniteGroup {
    /// Builds a group from a square Cayley table, checking the group axioms.
    ///
    /// Associativity is checked exhaustively for orders up to 128.
    pub fn from_table(
        label: impl Into<String>,
        rows: Vec<Vec<Elem>>,
        element_labels: Option<Vec<String>>,
    ) -> Result<Arc<Self>> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Invariant("a group needs at least one element".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(GroupError::Invariant("Cayley table is not square".into()));
            }
            for &x in row {
                if x >= order {
                    return Err(GroupError::InvalidElement { index: x, order });
                }
                table.push(x);
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e * order + j] == j && table[j * order + e] == j))
            .ok_or_else(|| GroupError::Invariant("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(order);
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| table[i * order + j] == identity && table[j * order + i] == identity)
                .ok_or_else(|| GroupError::Invariant(format!("element {i} has no inverse")))?;
            inverses.push(inv);
        }
        let element_labels = element_labels.unwrap_or_else(|| (0..order).map(|i| i.to_string()).collect());
        if element_labels.len() != order {
            return Err(GroupError::Invariant("wrong number of element labels".into()));
        }
        let group = Self::from_parts(
            label.into(),
            order,
            table,
            identity,
            inverses,
            element_labels,
            Vec::new(),
        );
        if order <= ASSOCIATIVITY_CHECK_LIMIT && !group.is_associative() {
            return Err(GroupError::Invariant("operation is not associative".into()));
        }
        Ok(Arc::new(group))
    }

    pub(crate) fn from_parts(
        label: String,
        order: usize,
        table: Vec<Elem>,
        identity: Elem,
        inverses: Vec<Elem>,
        element_labels: Vec<String>,
        factors: Vec<Arc<FiniteGroup>>,
    ) -> Self {
        Self {
            label,
            order,
            table,
            identity,
            inverses,
            element_labels,
            factors,
            prefixes: OnceLock::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn contains_index(&self, x: Elem) -> bool {
        x < self.order
    }

    pub(crate) fn check_index(&self, x: Elem) -> Result<()> {
        if x >= self.order {
            return Err(GroupError::InvalidElement {
                index: x,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: Elem) -> &[Elem] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// Human-readable name of an element. Products render as `(x,y,...)`.
    pub fn element_label(&self, x: Elem) -> String {
        if self.factors.is_empty() {
            return self.element_labels[x].clone();
        }
        let coords = product::decode(&self.factors, x);
        let parts: Vec<String> = self
            .factors
            .iter()
            .zip(coords)
            .map(|(f, c)| f.element_label(c))
            .collect();
        format!("({})", parts.join(","))
    }

    /// Looks up an atom element by its label.
    pub fn element_by_label(&self, label: &str) -> Option<Elem> {
        self.element_labels.iter().position(|l| l == label)
    }

    /// Factors of a direct product; empty for atomic groups.
    pub fn factors(&self) -> &[Arc<FiniteGroup>] {
        &self.factors
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.op(i, j) == self.op(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let ij = self.op(i, j);
                (0..self.order).all(|k| self.op(ij, k) == self.op(i, self.op(j, k)))
            })
        })
    }

    /// Exhaustive check of identity, inverse and associativity axioms.
    pub fn satisfies_axioms(&self) -> bool {
        let e = self.identity;
        (0..self.order).all(|j| self.op(e, j) == j && self.op(j, e) == j)
            && (0..self.order).all(|i| self.op(i, self.inv(i)) == e && self.op(self.inv(i), i) == e)
            && self.is_associative()
    }

    /// Product of the first `len` factors, sharing the mixed-radix layout of
    /// `self`. For `len == factor count` this is `self`, and `prefix(1)` is the
    /// first factor itself. Atomic groups are their own single prefix.
    pub fn prefix(self: &Arc<Self>, len: usize) -> Arc<FiniteGroup> {
        let n = self.factor_count();
        assert!(len >= 1 && len <= n, "prefix length {len} out of range 1..={n}");
        if len == n {
            return Arc::clone(self);
        }
        if len == 1 {
            return Arc::clone(&self.factors[0]);
        }
        let cache = self.prefixes.get_or_init(|| {
            (2..n)
                .map(|k| Arc::new(product::build_product(&self.factors[..k])))
                .collect()
        });
        Arc::clone(&cache[len - 2])
    }

    /// Number of direct factors, counting an atomic group as one factor.
    pub fn factor_count(&self) -> usize {
        self.factors.len().max(1)
    }

    /// The `i`-th factor; an atomic group is its own only factor.
    pub fn factor(self: &Arc<Self>, i: usize) -> Arc<FiniteGroup> {
        if self.factors.is_empty() {
            assert_eq!(i, 0, "atomic group has a single factor");
            Arc::clone(self)
        } else {
            Arc::clone(&self.factors[i])
        }
    }

    /// Factor list where an atomic group counts as a product of itself.
    pub fn factor_list(self: &Arc<Self>) -> Vec<Arc<FiniteGroup>> {
        if self.factors.is_empty() {
            vec![Arc::clone(self)]
        } else {
            self.factors.clone()
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.order == other.order
                && self.identity == other.identity
                && self.table == other.table
                && self.label == other.label
                && self.factors == other.factors
                && self.element_labels == other.element_labels)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}
