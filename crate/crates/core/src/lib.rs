//! Finite-model tooling for implicator groupoids `⟨A, →, 0⟩`: terms and
//! identities, finite models, variety membership, model enumeration,
//! counterexample search and replay of equational derivations.
//!
//! Most functionality is shown in the `examples/` directory; the `igl`
//! binary exposes the same operations on the command line.

pub mod algebra;
pub mod checker;
pub mod cli;
pub mod derivation;
pub mod enumerator;
pub mod lab;
pub mod registry;
pub mod term;
