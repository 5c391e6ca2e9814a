//! Catalog of named groups: cyclic, symmetric, alternating, dihedral, Q8.

use std::fmt;
use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Limits};

/// Largest degree supported for symmetric and alternating groups.
pub const MAX_PERMUTATION_DEGREE: usize = 5;

/// A named group from the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Z_n, integers mod n.
    Cyclic(usize),
    /// S_n, n <= 5.
    Symmetric(usize),
    /// A_n, n <= 5.
    Alternating(usize),
    /// D_n, the symmetries of an n-gon, of order 2n.
    Dihedral(usize),
    Quaternion8,
    Trivial,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "Z{n}"),
            GroupKind::Symmetric(n) => write!(f, "S{n}"),
            GroupKind::Alternating(n) => write!(f, "A{n}"),
            GroupKind::Dihedral(n) => write!(f, "D{n}"),
            GroupKind::Quaternion8 => f.write_str("Q8"),
            GroupKind::Trivial => f.write_str("1"),
        }
    }
}

impl GroupKind {
    /// Order of the group this kind describes, or `None` if the parameter is
    /// unsupported.
    pub fn order(&self) -> Option<usize> {
        match *self {
            GroupKind::Cyclic(n) if n >= 1 => Some(n),
            GroupKind::Symmetric(n) if (1..=MAX_PERMUTATION_DEGREE).contains(&n) => Some(factorial(n)),
            GroupKind::Alternating(n) if (1..=MAX_PERMUTATION_DEGREE).contains(&n) => Some((factorial(n) / 2).max(1)),
            GroupKind::Dihedral(n) if n >= 1 => n.checked_mul(2),
            GroupKind::Quaternion8 => Some(8),
            GroupKind::Trivial => Some(1),
            _ => None,
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Builds a catalog group, refusing orders above `limits.max_order`.
pub fn make_group(kind: GroupKind, limits: &Limits) -> Result<Arc<FiniteGroup>> {
    let order = kind.order().ok_or_else(|| GroupError::Unsupported(kind.to_string()))?;
    limits.check_order(order)?;
    let label = kind.to_string();
    let group = match kind {
        GroupKind::Cyclic(n) => cyclic(label, n),
        GroupKind::Trivial => cyclic(label, 1),
        GroupKind::Symmetric(n) => permutations(label, n, false),
        GroupKind::Alternating(n) => permutations(label, n, true),
        GroupKind::Dihedral(n) => dihedral(label, n),
        GroupKind::Quaternion8 => quaternion(label),
    };
    Ok(Arc::new(group))
}

fn assemble(label: String, order: usize, table: Vec<Elem>, labels: Vec<String>) -> FiniteGroup {
    let inverses = (0..order)
        .map(|i| {
            (0..order)
                .find(|&j| table[i * order + j] == 0)
                .expect("catalog group has inverses")
        })
        .collect();
    FiniteGroup::from_parts(label, order, table, 0, inverses, labels, Vec::new())
}

fn cyclic(label: String, n: usize) -> FiniteGroup {
    let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
    assemble(label, n, table, (0..n).map(|i| i.to_string()).collect())
}

/// All permutations of `0..n` in lexicographic order (identity first).
fn lex_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Permutations compose right to left: `(p * q)(x) = p(q(x))`.
fn permutations(label: String, n: usize, even_only: bool) -> FiniteGroup {
    let perms: Vec<Vec<usize>> = lex_permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    for p in &perms {
        for q in &perms {
            let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
            table.push(perms.binary_search(&pq).expect("closed under composition"));
        }
    }
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
        .collect();
    assemble(label, order, table, labels)
}

/// Index `k` is the rotation r^k, index `n + k` is the reflection s r^k.
fn dihedral(label: String, n: usize) -> FiniteGroup {
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (xs, a) = (x >= n, x % n);
            let (ys, b) = (y >= n, y % n);
            // r^a s = s r^-a
            let z = match (xs, ys) {
                (false, false) => (a + b) % n,
                (false, true) => n + (n - a + b) % n,
                (true, false) => n + (a + b) % n,
                (true, true) => (n - a + b) % n,
            };
            table.push(z);
        }
    }
    assemble(label, order, table, (0..order).map(|i| i.to_string()).collect())
}

/// Index `2u + s` is the unit `u` in (1, i, j, k) with sign `(-1)^s`.
fn quaternion(label: String) -> FiniteGroup {
    // unit products: (sign flip, unit)
    const UNITS: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (flip, unit) = UNITS[x / 2][y / 2];
            let negative = (x % 2 == 1) ^ (y % 2 == 1) ^ flip;
            table.push(2 * unit + usize::from(negative));
        }
    }
    assemble(label, 8, table, (0..8).map(|i| i.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(kind: GroupKind) -> Arc<FiniteGroup> {
        make_group(kind, &Limits::default()).unwrap()
    }

    fn order_histogram(g: &FiniteGroup) -> Vec<usize> {
        let mut h = vec![0; g.order() + 1];
        for x in g.elements() {
            h[g.element_order(x)] += 1;
        }
        h
    }

    #[test]
    fn trivial_and_cyclic_tables() {
        let z1 = build(GroupKind::Cyclic(1));
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.row(0), &[0]);
        let z4 = build(GroupKind::Cyclic(4));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(z4.op(i, j), (i + j) % 4);
            }
        }
        assert_eq!(build(GroupKind::Trivial).order(), 1);
    }

    #[test]
    fn s3_element_orders() {
        let s3 = build(GroupKind::Symmetric(3));
        assert_eq!(s3.order(), 6);
        let h = order_histogram(&s3);
        assert_eq!(h[2], 3);
        assert_eq!(h[3], 2);
        assert_eq!(s3.element_label(0), "123");
        assert!(!s3.is_abelian());
    }

    #[test]
    fn catalog_satisfies_axioms() {
        let kinds = [
            GroupKind::Cyclic(7),
            GroupKind::Symmetric(1),
            GroupKind::Symmetric(4),
            GroupKind::Alternating(1),
            GroupKind::Alternating(2),
            GroupKind::Alternating(4),
            GroupKind::Dihedral(1),
            GroupKind::Dihedral(4),
            GroupKind::Dihedral(5),
            GroupKind::Quaternion8,
        ];
        for kind in kinds {
            let g = build(kind);
            assert_eq!(Some(g.order()), kind.order());
            assert!(g.satisfies_axioms(), "{kind}");
        }
    }

    #[test]
    fn small_group_structure() {
        // Q8: one involution, six elements of order 4, nonabelian.
        let q8 = build(GroupKind::Quaternion8);
        let h = order_histogram(&q8);
        assert_eq!((h[1], h[2], h[4]), (1, 1, 6));
        assert!(!q8.is_abelian());
        // D4: five involutions, two elements of order 4.
        let d4 = build(GroupKind::Dihedral(4));
        let h = order_histogram(&d4);
        assert_eq!((h[2], h[4]), (5, 2));
        // A4 has no element of order 6 and three involutions.
        let a4 = build(GroupKind::Alternating(4));
        let h = order_histogram(&a4);
        assert_eq!((a4.order(), h[2], h[3]), (12, 3, 8));
        assert_eq!(build(GroupKind::Alternating(5)).order(), 60);
        assert_eq!(build(GroupKind::Symmetric(5)).order(), 120);
    }

    #[test]
    fn rejects_unsupported_and_oversized() {
        let limits = Limits::default();
        assert!(matches!(
            make_group(GroupKind::Cyclic(0), &limits),
            Err(GroupError::Unsupported(_))
        ));
        assert!(matches!(
            make_group(GroupKind::Symmetric(6), &limits),
            Err(GroupError::Unsupported(_))
        ));
        assert!(matches!(
            make_group(GroupKind::Cyclic(2001), &limits),
            Err(GroupError::OrderCap { order: 2001, cap: 2000 })
        ));
    }

    #[test]
    fn from_table_rejects_non_groups() {
        // a magma without identity
        let bad = vec![vec![1, 0], vec![1, 1]];
        assert!(FiniteGroup::from_table("bad", bad, None).is_err());
        let z2 = FiniteGroup::from_table("Z2", vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(z2.inv(1), 1);
    }
}
