//! Exact computational toolkit for Euler elements in semisimple Lie algebras.
//!
//! The crate computes, classifies, and cross-verifies — entirely in exact
//! rational arithmetic — the standard invariants attached to Euler elements
//! (elements `h` with `ad h` diagonalizable with spectrum in `{-1, 0, 1}`):
//!
//! * root systems in Bourbaki coordinates, dual bases, Weyl orbits
//!   ([`rootsys`]);
//! * Euler elements and their symmetry ([`euler`]);
//! * a curated catalog of simple real Lie algebras carrying Euler elements
//!   ([`catalog`]);
//! * classification of orthogonal Euler pairs by sign vectors ([`pairs`]);
//! * fundamental groups of adjoint orbits, computed two independent ways
//!   ([`pi1`]);
//! * concrete rational-matrix realizations with 3-gradings, sl(2)-triples and
//!   Jordan algebra structure ([`matrixlie`]);
//! * winding classes of central elements and the Z1 ⊆ Z2 ⊆ Z3 lattice in
//!   the fundamental group of the maximal compact subgroup ([`central`]).
//!
//! The core linear algebra ([`linalg`]) and the root-system layer are generic
//! over an exact [`scalar::Scalar`]; concrete aliases below pin the default
//! instantiation to arbitrary-precision rationals.

pub mod catalog;
pub mod central;
pub mod euler;
pub mod linalg;
pub mod matrixlie;
pub mod pairs;
pub mod pi1;
pub mod report;
pub mod rootsys;
pub mod scalar;

/// Default exact scalar: arbitrary-precision rational numbers.
pub type Rat = num_rational::BigRational;

/// Machine-word rational scalar, for small exact computations.
pub type Rat64 = num_rational::Rational64;

/// Dense matrix over the default scalar.
pub type Mat = linalg::Matrix<Rat>;

/// Root system over the default scalar.
pub type RootSys = rootsys::RootSystem<Rat>;

/// Vector over the default scalar (roots, coweights, coordinates).
pub type RVec = Vec<Rat>;
