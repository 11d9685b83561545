//! Free loop space models built from a presented commutative cochain algebra.

pub mod fls;
pub mod full;
pub mod hos;
pub mod model;
pub mod tc;

pub use fls::{cyclic_s, fls_basis, hochschild_differential, power_map, FlsElem, FlsKey};
pub use full::{FullKey, FullLoop, FullLoopError};
pub use hos::{hos_differential, HosElem, HosKey};
pub use model::{build_model, hos_basis, power_map_matrix, tc_basis, Model, ModelError};
pub use tc::{tc_cone_differential, TcElem, TcKey};
