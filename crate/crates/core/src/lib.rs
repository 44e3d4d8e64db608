//! Partial alternating sign matrix polytopes of skew shapes.
//!
//! For partitions `lambda ⊆ nu ⊆ (n-1)^(m-1)` the polytope `PASM(nu/lambda, m, n)`
//! is the convex hull of the matrices `M^mu` with `lambda ⊆ mu ⊆ nu`. This crate
//! builds its vertices and inequality system, the face labeling that certifies
//! its dimension, the corner-sum equivalence with the order polytope of the
//! skew poset, the associated flow polytope, and the volume and Ehrhart
//! polynomial through linear extensions, the Naruse hook-length formula and
//! lattice-point counts.

pub mod cli;
pub mod equivalences;
pub mod error;
pub mod facelattice;
pub mod flowpoly;
pub mod hooklength;
pub(crate) mod linalg;
pub mod matrices;
pub mod polytope;
pub mod rational;
pub mod shapes;
pub mod skewposet;

pub use error::{Error, Result};
pub use matrices::{CornerSumMatrix, IntMatrix, Matrix, RationalMatrix};
pub use polytope::PasmPolytopeSpec;
pub use rational::Rational;
pub use shapes::{Cell, CellSet, Partition, SkewShape};
pub use skewposet::{PosetPoint, SkewPoset, UniPoly};
