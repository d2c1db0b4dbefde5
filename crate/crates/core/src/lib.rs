//! Exact arithmetic for representation varieties of cocompact oriented
//! Fuchsian groups.
//!
//! The crate evaluates Euler characteristics and Weil's cocycle-dimension
//! formula on concrete representations (principal homomorphisms and
//! alternating-group images), classifies SO(3)-density of Fuchsian groups,
//! and certifies explicit generating triples of alternating groups with a
//! deterministic Schreier-Sims engine. No floating point is used anywhere:
//! every fractional quantity is an exact rational.

pub mod cli;
pub mod cocycle;
pub mod density;
pub mod eigen;
pub mod error;
pub mod liedata;
pub mod perm;
pub mod permgrp;
pub mod presentation;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::ExactScalar;

pub use cocycle::{TorsionFixedData, TorsionImage};
pub use density::{DensityReason, DensityVerdict};
pub use eigen::{CycleType, EigenProfile};
pub use liedata::{ClassicalGroup, Family, RootSystem};
pub use perm::Permutation;
pub use permgrp::{AppendixEntry, AppendixReport, StabilizerChain};
pub use presentation::FuchsianPresentation;
pub use report::Table;

/// Arbitrary-precision exact rational; the scalar used by every public entry point.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Fixed-width rational, handy for small instances and cross-checks.
pub type Rational64 = num_rational::Ratio<i64>;
/// Wider fixed-width rational.
pub type Rational128 = num_rational::Ratio<i128>;
