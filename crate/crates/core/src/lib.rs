//! Exact q-series engine and partition-pair laboratory.
//!
//! The crate counts partition pairs `(π1, π2)` with `π1` nonempty,
//! `s(π1) <= s(π2)` and `ℓ(π2) < 2 s(π1)`, refines the count by the pair
//! crank, and checks the q-series identities behind their congruences mod 3
//! and mod 5 to any truncation order in exact arithmetic.

pub mod algebra;
pub mod cli;
pub mod identities;
pub mod lambert;
pub mod par;
pub mod partitions;
pub mod qseries;

pub use par::Exec;
