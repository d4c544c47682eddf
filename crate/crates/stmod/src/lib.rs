//! Exact computations in the stable module category of a modular group
//! algebra kG: k a prime field F_p, G a finite group of order at most 64
//! given by its multiplication table. The crate builds syzygies by
//! minimal projective covers, computes Tate cohomology as stable maps
//! from a canonical syzygy chain of the trivial module, detects ghost
//! and strong ghost maps with replayable certificates, and constructs
//! almost split sequences.
//!
//! All linear algebra is exact arithmetic over F_p; no floats anywhere.

pub mod ar;
pub mod cli;
pub mod cohom;
pub mod error;
pub mod files;
pub mod fingerprint;
pub mod ghosts;
pub mod groups;
pub mod linalg;
pub mod reports;
pub mod reps;
pub mod stable;

pub use error::{Error, Result};
