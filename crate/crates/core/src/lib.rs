//! Exact character theory for finite group actions on curves.
//!
//! The crate decides whether the tensor cube of the Hurwitz representation
//! `H^1(X)` of a `G`-curve `X -> P^1` has nonzero `G`-invariants, using only
//! exact arithmetic (big rationals and cyclotomic fields). Around that core
//! it carries the concrete groups needed to exercise the question (symmetric
//! groups, `PGL_2(F_q)`, `PSL_2(F_q)`, `GL_2(Z/nZ)`, products), a Dixon
//! character-table engine, the explicit character theory of `PGL_2(F_q)` with
//! its trilinear-form identity, and the `PSL_2(F_q)` Hurwitz-curve scan.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![cfg_attr(not(test), forbid(unsafe_code))]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod character;
mod error;
pub mod field;
pub mod group;
pub mod hurwitz;
pub mod pgl2;
pub mod psl2_scan;

pub use arith::{BigInt, BigRational, Cyclotomic};
pub use character::{CharacterTable, ClassFunction};
pub use error::{Error, Result};
pub use group::{ClassStructure, ConjugacyClass, FiniteGroup, GroupElement, GroupSpec};
pub use hurwitz::{RamificationType, VanishingCertificate};
