//! Exact arithmetic for homomorphisms between dihedral groups.
//!
//! `D_n` is the group of order `2n` generated by a rotation `r` of order `n`
//! and a reflection `f` of order 2 subject to `rf = fr⁻¹`. A homomorphism
//! `D_m → D_n` is fixed by the images of `r` and `f`, and the number of such
//! maps has a closed form in terms of `n` and `Σ_{k | gcd(m,n)} φ(k)`.
//!
//! The crate is organised in three layers:
//!
//! * [`arith`]: gcd, Euler's totient, divisor lists and divisor-totient sums.
//! * [`dihedral`]: elements of `D_n` in `(rotation, flip)` normal form and
//!   the relation check that decides whether a pair of generator images
//!   extends to a homomorphism.
//! * [`homcount`]: the closed-form counts, a constructive enumerator that
//!   follows the case analysis by parity, and a brute-force oracle that only
//!   ever consults the relation check.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod arith;
pub mod dihedral;
mod error;
pub mod homcount;

pub use arith::PositiveInt;
pub use dihedral::{DihedralElement, GroupIndex};
pub use error::Error;
pub use homcount::{HomCount, Homomorphism, ParityCase};

/// Largest `m` or `n` accepted by the counting functions.
///
/// With `n ≤ 2⁶³` the widest intermediate, `n·gcd(m,n) + 4n + 4`, stays
/// below `2¹²⁷`, so every count fits a `u128` with room to spare.
pub const MAX_INDEX: u64 = 1 << 63;

/// Largest codomain index accepted by [`homcount::brute_force_count`].
pub const MAX_BRUTE_FORCE_N: u64 = 10_000;

/// Largest number of homomorphisms [`homcount::enumerate_homs`] will
/// materialise.
pub const MAX_ENUMERATION: u128 = 1 << 24;
