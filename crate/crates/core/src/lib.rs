//! Consecutive patterns of length 3 on 3-1-2-avoiding permutations.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: permutations, words, occurrence counting, the left-to-right
//!   maxima factorization and lexicographic enumeration of `S_n(3-1-2)`.
//! * [`path`]: Dyck and Motzkin paths, factor statistics and the Deutsch
//!   involution.
//! * [`bijection`]: the Krattenthaler bijection, its induced involution on
//!   avoiders and the two Motzkin bijections.
//! * [`distribution`]: exact distribution tables computed from closed forms,
//!   a Dyck-path dynamic program, series expansion and enumeration.
//! * [`verify`]: exhaustive checks tying the above together.
//!
//! All counts are arbitrary-precision integers.

pub mod bijection;
pub mod distribution;
pub mod error;
pub mod path;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
