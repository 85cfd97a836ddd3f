//! Exact integer machinery for equilateral triangles and regular tetrahedra
//! with vertices in `Z^4`.
//!
//! The crate is organised bottom-up:
//!
//! - [`diophantine`]: solutions and counts for `a^2 + b^2 + c^2 = 3d^2`
//!   and `2a^2 + c^2 = 3d^2`.
//! - [`lattice`]: 4-vectors, the 384-element symmetry group, triangles,
//!   tetrahedra and the explicit families that build them.
//! - [`characterize`]: the minor system of a triangle, the plane it spans,
//!   reconstruction from two representations of `3k^2`, Ehrhart polynomials.
//! - [`enumerate`]: exhaustive orbit enumeration, minimality and census.
//!
//! Everything is 64-bit signed arithmetic. Overflow on user-sized inputs is
//! reported as [`Error::Overflow`]; the build profiles also keep overflow
//! checks on so nothing wraps silently.

pub mod arith;
pub mod characterize;
pub mod diophantine;
pub mod enumerate;
pub mod error;
pub mod lattice;

/// Exact rational with 64-bit parts.
pub type Rational = num_rational::Ratio<i64>;

pub use characterize::{DeltaSystem, EhrhartPoly, PlaneLattice, PlaneSystem, QfData, RepresentationPair};
pub use diophantine::{
    Branch, BranchSolution, CountBreakdown, QuadrupleSeed, TripleSolution, TwoOneSolution,
};
pub use enumerate::{CensusRow, ConjectureReport, CoverageReport};
pub use error::{Error, Result};
pub use lattice::{SymmetryOp, Tetrahedron, Triangle, Vec4, ZetaFrame};
