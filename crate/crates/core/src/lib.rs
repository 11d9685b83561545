//! Exact algebraic models of free loop spaces.
//!
//! The crate builds finite truncations of cochain complexes modelling the
//! free loop space of a simply connected space, its homotopy orbits under the
//! circle action and mod-2 topological cyclic homology, starting from a
//! presented commutative cochain algebra. It also contains symbolic cubical
//! chains on the circle and the algebraic structures built from them.

pub mod cubes;
pub mod dga;
pub mod graded;
pub mod lincomb;
pub mod loops;
pub mod scalar;
pub mod sign;
pub mod verify;

pub use lincomb::LinComb;
pub use scalar::{EuclideanScalar, Scalar};

/// Arbitrary-precision integers, the default coefficient ring.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
pub type IntMatrix = graded::SparseMatrix<Integer>;
pub type IntComplex = graded::TruncatedComplex<Integer>;
pub type IntHomology = graded::HomologyGroup<Integer>;
