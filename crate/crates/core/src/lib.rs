//! Exact Lie-theoretic computations for smooth Schubert varieties in
//! Hermitian symmetric spaces `G/P`.
//!
//! The crate is organised bottom-up:
//!
//! - [`root_system`]: Cartan data and positive roots for types A to E.
//! - [`weyl`]: inversion sets, minimal coset representatives, Weyl dimensions.
//! - [`diagram`]: marked Dynkin diagrams, connected subdiagrams and their root sets.
//! - [`rigidity`]: the fibre sets `D`, `D'`, `D''` and Schubert rigidity certificates.
//! - [`kostant`]: Chevalley basis, the wedge algebra of `m`, Kostant components and oracles.
//! - [`schur`]: partitions, semistandard tableaux, Kostka numbers.
//! - [`report`]: verdict assembly, catalog verification and serialisation.
//!
//! Simple roots are 0-indexed in the API; reports and the command line use
//! 1-based node labels.

pub mod diagram;
pub mod error;
pub mod kostant;
pub mod report;
pub mod rigidity;
pub mod root_system;
pub mod schur;
pub mod weyl;

pub use error::{Error, Result};
