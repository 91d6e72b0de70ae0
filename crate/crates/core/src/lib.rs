//! Exact computation of the two generating symplectic invariants of
//! trivectors on a six-dimensional vector space.
//!
//! Everything runs over exact rationals. The crate provides:
//!
//! - an exterior-algebra kernel fixed at dimension six ([`exterior`]);
//! - the standard symplectic form, the 21-element square-zero basis of its
//!   Lie algebra, and generation of symplectic group elements ([`symplectic`]);
//! - the invariants `I₁` and `I₂`, each computed by independent routes that
//!   are cross-validated ([`invariants`]);
//! - the induced derivations on coordinate polynomials, infinitesimal
//!   invariance checks, and the generic-rank computation ([`infinitesimal`]);
//! - constructors and expected-invariant tables for the classical normal
//!   forms of trivectors under the symplectic group ([`catalog`]);
//! - seeded, reproducible verification sweeps ([`verify`]), parallelized via
//!   rayon behind the default `parallel` feature.

pub mod catalog;
pub mod exterior;
pub mod infinitesimal;
pub mod invariants;
pub mod parallel;
pub mod scalar;
pub mod symplectic;
pub mod verify;

pub use exterior::{Matrix6, Multivector, Trivector, Vector};
pub use scalar::Rational;
