//! A solver library for abstract argumentation frameworks.
//!
//! Besides the classical conflict-free, admissible, complete, stable,
//! semi-stable and stage semantics, the crate computes paracoherent
//! extensions: conflict-free sets that admit a subset-minimal *stabilizer*,
//! a set of arguments supplying exactly the attacks missing for stability.
//! Paracoherent extensions coincide with the stable ones whenever those
//! exist and keep producing symmetric, non-empty answers on frameworks
//! wrecked by odd-length attack cycles.
//!
//! The same semantics is reachable through a second, independent route: a
//! framework translates into a logic program, an epistemic transformation
//! introduces belief atoms, and gap-minimal answer sets project back onto
//! argument sets ([`paraco`]). The two routes check each other in the test
//! suites.

pub mod af;
pub mod error;
pub mod generators;
pub mod io;
pub mod lp;
pub mod paraco;
pub mod reasoning;
pub mod semantics;
pub mod stabilizer;

pub use af::{ArgSet, Framework};
pub use error::{Defect, Error, Result};
pub use semantics::{ExtensionSet, SemanticsId};
