//! Finite group computations for the symmetric exceptional points of the
//! elliptic-hyperelliptic locus in the moduli space of compact Riemann surfaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`signature`] handles NEC and Fuchsian signatures, areas and Riemann–Hurwitz.
//! * [`quad`] implements Gaussian and Eisenstein integers and their quotient rings.
//! * [`group`] is a normal-form engine for the six families of groups A–F.
//! * [`catalog`] lists the triangular actions of those groups.
//! * [`locus`] classifies the symmetric actions at a given genus.
//! * [`ovals`] counts ovals of the symmetries of full actions.
//! * [`verify`] re-derives the reference tables and reports any mismatch.

pub mod catalog;
pub mod error;
pub mod group;
pub mod locus;
pub mod num;
pub mod ovals;
pub mod quad;
pub mod signature;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational used for areas and indices.
pub type Rational = num_rational::Ratio<i64>;
/// Gaussian or Eisenstein integer with 64-bit coordinates.
pub type QuadInt64 = quad::QuadInt<i64>;
/// Gaussian or Eisenstein integer with 128-bit coordinates.
pub type QuadInt128 = quad::QuadInt<i128>;
