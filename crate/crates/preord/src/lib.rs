//! Finite preorders and their stable category.
//!
//! A finite preorder is a reflexive, transitive relation on a carrier
//! `{0, …, n−1}`. The pair of subcategories (equivalence relations,
//! partial orders) splits every preorder into a torsion part `ρ ∩ ρ°`
//! and a torsion-free condensation, connected by a short sequence that
//! is exact modulo the ideal of trivial morphisms (those factoring
//! through a discrete preorder). Quotienting the category of partial
//! monotone maps by the induced congruence yields a pointed category
//! with kernels, cokernels, and disjoint pre-universal coproducts, and
//! the canonical functor into it is universal among coproduct-preserving
//! torsion theory functors.
//!
//! This crate makes all of that executable at small scale:
//!
//! * [`preorder`] — carriers, relations, monotone maps, complemented
//!   subobjects, coproducts;
//! * [`pretorsion`] — trivial morphisms, torsion and torsion-free parts,
//!   kernels and cokernels modulo trivials, exactness;
//! * [`stable`] — partial maps, the congruence decision procedure, the
//!   functor `Σ`, kernels/cokernels/coproducts in the stable category;
//! * [`universal`] — torsion theory functors into an oracle category and
//!   the induced functor `[G(f), 0]` with its verification battery;
//! * [`enumerate`] — exhaustive enumerators for small objects and
//!   hom-sets;
//! * [`laws`] — seeded generators and the executable law suite;
//! * [`document`] — the text format used by the command-line tool.

pub mod document;
pub mod enumerate;
mod error;
pub mod laws;
pub mod preorder;
pub mod pretorsion;
pub mod stable;
pub mod universal;

pub use error::Error;
pub use preorder::{ComplementedSub, Coproduct, FinPreorder, MonotoneMap, Relation};
pub use stable::{PartialMap, StableMorphism};
