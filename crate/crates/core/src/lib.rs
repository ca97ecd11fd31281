//! Reversible logic synthesis workbench.
//!
//! The crate covers the full path from a single-output Boolean function to a
//! verified Multiple-Control Toffoli circuit:
//!
//! * [`boolfn`] — truth tables, algebraic normal form (ANF/ESOP), cofactors
//!   and the Shannon/Davio decompositions.
//! * [`circuit`] — mixed-polarity MCT gates, circuits with line roles
//!   (input / constant / garbage / primary output), exact simulation,
//!   metrics, and RevLib-REAL-style file I/O.
//! * [`decomp`] — synthesis of a single-output function by recursive
//!   positive-Davio division, a shared minterm bank, per-leaf XOR assembly
//!   and Toffoli recombination.
//! * [`baselines`] — transformation-based synthesis (MMD) and Young-subgroup
//!   decomposition into single-target gates expanded via ANF.
//! * [`bounds`] — closed-form gate-count upper bounds for all of the above,
//!   plus the comparison table across methods.

pub mod baselines;
pub mod boolfn;
pub mod bounds;
pub mod circuit;
pub mod decomp;
mod error;

pub(crate) mod bits;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
