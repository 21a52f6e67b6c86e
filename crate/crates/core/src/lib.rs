//! Numerical semigroups, cyclotomic and inclusion-exclusion polynomials,
//! and machine verification of the identities connecting them.
//!
//! The crate is organized around three objects and the bridges between them:
//!
//! - [`NumericalSemigroup`]: a cofinite submonoid of the non-negative
//!   integers given by generators, with its Apery set, Frobenius number,
//!   genus, gaps, and semigroup polynomial
//!   `P_S = 1 + (x - 1) * sum of x^s over gaps s`.
//! - [`IntPoly`]: dense integer polynomials with exact arithmetic, including
//!   the exact division that powers cyclotomic and inclusion-exclusion
//!   computations ([`cyclo::cyclotomic`], [`CoprimeBase`]).
//! - [`BinaryPair`]: a coprime pair `p, q >= 2`, where the semigroup and
//!   polynomial worlds meet.  The central verified statement is that the
//!   semigroup polynomial of `<p, q>` equals the pair's inclusion-exclusion
//!   polynomial, and around it sit coefficient closed forms, gap power sums
//!   via Bernoulli numbers, Bernoulli recursions through semigroups,
//!   telescoping gap identities, block counts, corner censuses, and the
//!   `q x p` remainder diagram ([`Diagram`]).
//!
//! Identity checks live in [`identities`] (each computing both sides by
//! independent routes) and are bundled per pair by [`report::verify_pair`].
//!
//! Conventions used throughout: the Bernoulli numbers take `B_1 = -1/2`;
//! the Frobenius number of the full semigroup (generated by 1) is `-1`, and
//! that semigroup counts as symmetric.
//!
//! Input validation errors are returned as [`Error`]; violations of internal
//! invariants (which would indicate bugs, not bad input) panic via
//! assertions instead.

pub mod arith;
pub mod cyclo;
pub mod diagram;
pub mod error;
pub mod identities;
pub mod poly;
pub mod report;
pub mod semigroup;

pub use cyclo::{BinaryPair, CoprimeBase};
pub use diagram::{Diagram, DiagramFormat, RenderOptions};
pub use error::{Error, Result};
pub use poly::IntPoly;
pub use report::{IdentityRecord, Status};
pub use semigroup::NumericalSemigroup;
