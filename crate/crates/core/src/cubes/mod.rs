//! Cubical chains on the circle and the dg algebras built from them.

pub mod cube;
pub mod family;
pub mod orbit;
pub mod tdga;

pub use cube::{
    boundary, boundary_chain, diagonal_chain, product_chain, reduced_diagonal, serre_diagonal, sigma_chain,
    tensor_boundary, CircleChain, CircleCube, CubeTensor, MAX_CUBE_DIM,
};
pub use family::{equal_up_to_relabeling, quadratic_term, t_family, CubeError, MAX_T_INDEX};
pub use orbit::{random_spec, OmegaComplexSpec, OmegaError, OrbitKey};
pub use tdga::{
    realize, resolution_basis, resolution_differential, t_degree, t_differential, t_words_of_degree, ResElem,
    ResKey, TElem, TWord,
};
