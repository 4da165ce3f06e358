//! Finite specialization semilattices and their universal closure
//! extensions.
//!
//! A specialization semilattice is a join semilattice carrying a relation
//! `a ⊑ b` ("a specializes to b", think: a lies in the closure of b) that
//! extends the order, is transitive, and respects joins on the left. Such
//! structures arise as subfamilies of closure spaces that contain unions
//! but not necessarily closures. A closure semilattice is the richer
//! structure where an explicit closure operation exists; every finite valid
//! specialization semilattice of this crate is principal, meaning `Ka`
//! exists for every element, and the two presentations convert back and
//! forth losslessly.
//!
//! The centerpiece is [`extension::build_extension`]: every specialization
//! semilattice `S` embeds canonically into a closure semilattice `S~` built
//! from pairs `(a, b)` modulo an explicit equivalence, and every
//! homomorphism from `S` into a closure semilattice factors through `S~`
//! uniquely. [`extension::lift_homomorphism`] computes that factorization
//! and [`extension::check_universal_property`] verifies its uniqueness by
//! exhaustive enumeration.
//!
//! Modules:
//!
//! - [`semilattice`]: the two structures, law validation with replayable
//!   witnesses, closures.
//! - [`constructions`]: closure spaces, hom-induced structures, difference
//!   ideals, quotients, products, named fixtures, a seeded generator.
//! - [`morphisms`]: homomorphism/embedding/K-homomorphism predicates and
//!   budgeted exhaustive enumeration.
//! - [`extension`]: the canonical extension, lifting, and the universal
//!   property checker.
//! - [`io`]: JSON file formats for structures, morphisms, and extensions.
//!
//! The `examples/` directory exercises each capability end to end, and the
//! thin `speclat` binary exposes the same operations on JSON files.

pub mod constructions;
pub mod error;
pub mod extension;
pub mod io;
pub mod morphisms;
pub mod semilattice;
mod union_find;

pub use error::Error;
pub use extension::{
    build_extension, build_extension_with_limit, check_universal_property, lift_functorial,
    lift_homomorphism, ExtensionResult, UniversalCheck, UniversalFailure,
};
pub use morphisms::{
    enumerate_homomorphisms, enumerate_k_homomorphisms, EnumOptions, Morphism,
};
pub use semilattice::{
    Axiom, ClosureSemilattice, SpecSemilattice, ValidationReport, Violation,
};
