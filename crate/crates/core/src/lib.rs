//! Exact combinatorics for the 2-blocks of the symmetric and alternating
//! groups.
//!
//! The crate covers partitions and their hooks, beta-sets and James' abacus,
//! character degrees and Murnaghan-Nakayama values, the 2-block structure of
//! `S_n` and `A_n`, the recursive p-divisibility criterion on `p^k`-cores, and
//! a constructive search for p-divisible characters inside a prescribed
//! 2-block together with a certificate checker that re-derives every claim
//! independently.
//!
//! Everything here is `no_std` and only needs `alloc`; IO, text parsing,
//! JSON and the command-line driver live in the `blockwitness` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod abacus;
pub mod alternating;
pub mod blocks;
pub mod character;
mod error;
pub mod partition;
pub mod witness;

pub use abacus::{AbacusConfig, BetaSet, ParitySplit};
pub use alternating::{AltCharacter, QuadraticValue, SplitClassValues};
pub use blocks::{BlockLabel, Group, PDecomposition, Sign};
pub use character::CycleType;
pub use error::{Error, Result};
pub use partition::{Cell, HookData, Partition, Partitions};
pub use witness::{CaseParams, CaseTag, CertificateFacts, WitnessCertificate};
