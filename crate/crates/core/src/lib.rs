//! Exact-arithmetic characters of simple Lie algebras, weight polytopes,
//! and their vertex-cone (Brion) expansions.
//!
//! The crate computes, entirely in exact arithmetic:
//!
//! * root-system data for the finite simple series A-G ([`rootsys`]),
//! * Weyl groups, orbits and inversion sets ([`weyl`]),
//! * irreducible characters as multiplicity maps ([`charmult`]),
//! * weight polytopes, their lattice points, and numeric vertex sums
//!   ([`polytope`]),
//! * the triangular expansion coefficients relating characters to vertex
//!   sums, plus verification scans over weight ranges ([`expansion`]).
//!
//! Floating point appears only in the numeric evaluation helpers used for
//! cross-checking the exact results.

pub mod charmult;
pub mod error;
mod linalg;
pub mod expansion;
pub mod polytope;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::Rat;
pub use rootsys::{build, AlgebraId, CartanData, EvaluationPoint, RootCoords, Series, Weight};
