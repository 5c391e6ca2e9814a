//! Finite groups as Cayley tables, and exact bijections between the subgroups
//! of a direct product `A_1 x ... x A_n` and Goursat data.
//!
//! * [`group`], [`catalog`], [`product`], [`subgroup`], [`hom`], [`quotient`]:
//!   the group toolkit.
//! * [`pair`]: the two-factor correspondence, symmetric (quintuples) and
//!   asymmetric (quadruples).
//! * [`chain`]: sections `G(j|S)`, projections and restrictions to factor
//!   subsets, and the recursive `(3n-2)`-component chains for `n` factors.
//! * [`classify`]: structural predicates and cyclicity criteria read off the
//!   Goursat data.
//! * [`oracle`]: a naive subgroup enumerator kept independent of the above.
//! * [`lattice`]: Hasse diagrams of subgroup lattices.

pub mod catalog;
pub mod chain;
pub mod classify;
pub mod error;
pub mod group;
pub mod hom;
pub mod lattice;
pub mod oracle;
pub mod pair;
pub mod product;
pub mod quotient;
pub mod subgroup;

pub use catalog::{make_group, GroupKind};
pub use error::{GroupError, Result};
pub use group::{Elem, FiniteGroup, Limits};
pub use hom::{enumerate_homomorphisms, enumerate_homomorphisms_between, HomFilter, Homomorphism};
pub use product::{direct_product, DirectProduct};
pub use quotient::{quotient, QuotientGroup};
pub use subgroup::Subgroup;
