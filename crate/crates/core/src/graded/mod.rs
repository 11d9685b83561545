//! Exact graded linear algebra: sparse matrices, Smith normal form and
//! homology of truncated cochain complexes over ℤ, ℚ and `F_p`.

pub mod complex;
pub mod fp;
pub mod matrix;
pub mod rational;
pub mod snf;

pub use complex::{BasisIndex, ComplexError, FpComplex, HomologyGroup, TruncatedComplex};
pub use fp::{is_prime, FpMatrix};
pub use matrix::SparseMatrix;
pub use snf::{smith_normal_form, SmithForm};
