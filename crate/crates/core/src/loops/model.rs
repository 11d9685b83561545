use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::fls::{fls_basis, hochschild_differential, power_map, FlsKey};
use super::hos::{hos_differential, HosKey};
use super::tc::{tc_cone_differential, TcKey};
use crate::dga::{AlgebraError, PresentedAlgebra};
use crate::graded::{ComplexError, SparseMatrix, TruncatedComplex};
use crate::scalar::Scalar;

/// Which loop-space model to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// Free loop space.
    Fls,
    /// Homotopy orbits of the circle action.
    Hos,
    /// Mod-2 topological cyclic homology (mapping cone of `1 - P` into orbits).
    Tc,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::Fls, Model::Hos, Model::Tc];

    pub fn name(self) -> &'static str {
        match self {
            Model::Fls => "fls",
            Model::Hos => "hos",
            Model::Tc => "tc",
        }
    }

    /// Lowest degree in which the model can be non-zero.
    pub fn min_degree(self) -> i64 {
        match self {
            Model::Tc => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fls" => Ok(Model::Fls),
            "hos" => Ok(Model::Hos),
            "tc" => Ok(Model::Tc),
            other => Err(ModelError::UnknownModel(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown model {0:?} (expected fls, hos or tc)")]
    UnknownModel(String),
    #[error("max degree must be at least 1, got {0}")]
    MaxDegree(i64),
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

pub fn hos_basis<T: Scalar>(a: &PresentedAlgebra<T>, n: i64) -> Vec<HosKey> {
    let mut out = Vec::new();
    let mut k = 0u32;
    while n - 2 * k as i64 >= 0 {
        out.extend(fls_basis(a, n - 2 * k as i64).into_iter().map(|f| HosKey::new(k, f)));
        k += 1;
    }
    out
}

pub fn tc_basis<T: Scalar>(a: &PresentedAlgebra<T>, n: i64) -> Vec<TcKey> {
    let mut out: Vec<TcKey> = fls_basis(a, n).into_iter().map(TcKey::Base).collect();
    out.extend(hos_basis(a, n + 1).into_iter().map(TcKey::Shift));
    out
}

/// Builds the requested model truncated at `max_degree`; `H^n` is reliable for
/// `n < max_degree`. The algebra is validated first.
pub fn build_model<T: Scalar>(
    a: &PresentedAlgebra<T>,
    model: Model,
    max_degree: i64,
) -> Result<TruncatedComplex<T>, ModelError> {
    if max_degree < 1 {
        return Err(ModelError::MaxDegree(max_degree));
    }
    a.validate()?;
    let lo = model.min_degree();
    let c = match model {
        Model::Fls => TruncatedComplex::assemble(
            lo,
            (lo..=max_degree).map(|n| fls_basis(a, n)).collect(),
            |k: &FlsKey| hochschild_differential(a, k),
            |k: &FlsKey| k.label(a),
        )?,
        Model::Hos => TruncatedComplex::assemble(
            lo,
            (lo..=max_degree).map(|n| hos_basis(a, n)).collect(),
            |k: &HosKey| hos_differential(a, k),
            |k: &HosKey| k.label(a),
        )?,
        Model::Tc => TruncatedComplex::assemble(
            lo,
            (lo..=max_degree).map(|n| tc_basis(a, n)).collect(),
            |k: &TcKey| tc_cone_differential(a, k),
            |k: &TcKey| k.label(a),
        )?,
    };
    Ok(c)
}

/// Matrix of the power map on degree `n` of the fls model, in the basis order
/// used by [`build_model`].
pub fn power_map_matrix<T: Scalar>(a: &PresentedAlgebra<T>, n: i64) -> SparseMatrix<T> {
    let basis = fls_basis(a, n);
    let index: std::collections::HashMap<&FlsKey, usize> =
        basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = SparseMatrix::zeros(basis.len(), basis.len());
    for (j, k) in basis.iter().enumerate() {
        for (t, c) in power_map(a, k).iter() {
            m.add_to(index[t], j, c.clone());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::presets;
    use crate::graded::HomologyGroup;
    use crate::Integer;

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn three_sphere_fls() {
        let c = build_model(&presets::sphere(3), Model::Fls, 12).unwrap();
        for n in 0..12 {
            let h = c.homology(n).unwrap();
            let expect = if n == 0 || n >= 2 { 1 } else { 0 };
            assert_eq!(h, HomologyGroup { free_rank: expect, torsion: vec![] }, "degree {n}");
        }
    }

    #[test]
    fn three_sphere_orbits() {
        let c = build_model(&presets::sphere(3), Model::Hos, 12).unwrap();
        assert_eq!(c.homology(8).unwrap(), HomologyGroup { free_rank: 2, torsion: vec![z(6)] });
        assert_eq!(c.homology(10).unwrap(), HomologyGroup { free_rank: 2, torsion: vec![z(2), z(12)] });
    }

    #[test]
    fn every_model_squares_to_zero() {
        let algebras = vec![
            presets::sphere(2),
            presets::sphere(3),
            presets::sphere(4),
            presets::wedge(&[2, 3]),
            presets::wedge(&[3, 3]),
            presets::truncated_polynomial(2, 3),
            presets::small_dga(),
        ];
        for a in &algebras {
            for m in Model::ALL {
                build_model(a, m, 9).unwrap_or_else(|e| panic!("{} {m}: {e}", a.name()));
            }
        }
    }

    #[test]
    fn rejects_bad_truncation() {
        assert_eq!(
            build_model(&presets::sphere(3), Model::Fls, 0).unwrap_err(),
            ModelError::MaxDegree(0)
        );
        assert!("hh".parse::<Model>().is_err());
    }
}
