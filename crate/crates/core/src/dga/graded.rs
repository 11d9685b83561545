use std::fmt::Debug;
use std::hash::Hash;

use super::algebra::{Gen, PresentedAlgebra, UNIT};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// A graded algebra with a distinguished basis, enumerable degree by degree.
pub trait GradedAlgebra<T: Scalar> {
    type Basis: Ord + Clone + Hash + Debug;

    fn degree(&self, b: &Self::Basis) -> i64;
    fn unit(&self) -> Self::Basis;
    fn basis_of_degree(&self, n: i64) -> Vec<Self::Basis>;
    fn mul(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis, T>;
    fn d(&self, a: &Self::Basis) -> LinComb<Self::Basis, T>;
    fn label(&self, a: &Self::Basis) -> String;

    fn mul_elem(&self, x: &LinComb<Self::Basis, T>, y: &LinComb<Self::Basis, T>) -> LinComb<Self::Basis, T> {
        let mut out = LinComb::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.mul(a, b), &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    fn d_elem(&self, x: &LinComb<Self::Basis, T>) -> LinComb<Self::Basis, T> {
        x.map_linear(|a| self.d(a))
    }
}

impl<T: Scalar> GradedAlgebra<T> for PresentedAlgebra<T> {
    type Basis = Gen;

    fn degree(&self, b: &Gen) -> i64 {
        PresentedAlgebra::degree(self, *b)
    }

    fn unit(&self) -> Gen {
        UNIT
    }

    fn basis_of_degree(&self, n: i64) -> Vec<Gen> {
        (0..self.len()).filter(|&g| PresentedAlgebra::degree(self, g) == n).collect()
    }

    fn mul(&self, a: &Gen, b: &Gen) -> LinComb<Gen, T> {
        PresentedAlgebra::mul(self, *a, *b)
    }

    fn d(&self, a: &Gen) -> LinComb<Gen, T> {
        PresentedAlgebra::d(self, *a)
    }

    fn label(&self, a: &Gen) -> String {
        PresentedAlgebra::label(self, *a).to_string()
    }
}
