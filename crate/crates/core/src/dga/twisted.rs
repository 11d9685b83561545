use thiserror::Error;

use super::cobar::{Cobar, CobarWord};
use super::coalgebra::{CoGen, FiniteCoalgebra};
use super::graded::GradedAlgebra;
use crate::graded::{ComplexError, TruncatedComplex};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("t must vanish on the unit")]
    UnitNotKilled,
    #[error("t({element}) has a term of degree {got}, expected {expected}")]
    Degree { element: String, got: i64, expected: i64 },
    #[error("twisting condition dt + td = μ(t⊗t)Δ fails on {element}")]
    Condition { element: String },
    #[error("t is given on {got} elements but the coalgebra has {expected}")]
    Arity { got: usize, expected: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A map `t: C → A` of degree +1 (upper grading), checked against the
/// twisting condition `dt + td = μ(t⊗t)Δ` at construction.
#[derive(Clone, Debug)]
pub struct TwistingCochainSpec<A: GradedAlgebra<T>, T: Scalar> {
    coalgebra: FiniteCoalgebra<T>,
    algebra: A,
    t: Vec<LinComb<A::Basis, T>>,
}

impl<A: GradedAlgebra<T>, T: Scalar> TwistingCochainSpec<A, T> {
    pub fn new(coalgebra: FiniteCoalgebra<T>, algebra: A, t: Vec<LinComb<A::Basis, T>>) -> Result<Self, TwistError> {
        if t.len() != coalgebra.len() {
            return Err(TwistError::Arity { got: t.len(), expected: coalgebra.len() });
        }
        if !t[0].is_zero() {
            return Err(TwistError::UnitNotKilled);
        }
        let spec = TwistingCochainSpec { coalgebra, algebra, t };
        spec.verify()?;
        Ok(spec)
    }

    /// The zero map, which twists nothing.
    pub fn zero(coalgebra: FiniteCoalgebra<T>, algebra: A) -> Self {
        let t = vec![LinComb::zero(); coalgebra.len()];
        TwistingCochainSpec { coalgebra, algebra, t }
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra<T> {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn t(&self, c: CoGen) -> &LinComb<A::Basis, T> {
        &self.t[c]
    }

    fn verify(&self) -> Result<(), TwistError> {
        let a = &self.algebra;
        for c in self.coalgebra.positive() {
            let element = self.coalgebra.label(c).to_string();
            let expected = self.coalgebra.degree(c) + 1;
            for (b, _) in self.t[c].iter() {
                if a.degree(b) != expected {
                    return Err(TwistError::Degree { element, got: a.degree(b), expected });
                }
            }
            let mut lhs = a.d_elem(&self.t[c]);
            lhs.add_assign(&self.coalgebra.d(c).map_linear(|x| self.t[*x].clone()));
            let mut rhs = LinComb::zero();
            for (&(x, y), k) in self.coalgebra.reduced_coproduct(c).iter() {
                let sign = T::sign(self.coalgebra.degree(x) % 2 != 0);
                rhs.add_scaled(&a.mul_elem(&self.t[x], &self.t[y]), &(sign * k.clone()));
            }
            if lhs != rhs {
                return Err(TwistError::Condition { element });
            }
        }
        Ok(())
    }
}

impl<T: Scalar> TwistingCochainSpec<Cobar<T>, T> {
    /// The universal twisting cochain `c ↦ s⁻¹c` into the cobar construction.
    pub fn cobar(coalgebra: FiniteCoalgebra<T>) -> Result<Self, TwistError> {
        let t = (0..coalgebra.len())
            .map(|c| if c == 0 { LinComb::zero() } else { LinComb::basis(CobarWord(vec![c])) })
            .collect();
        Self::new(coalgebra.clone(), Cobar::new(coalgebra), t)
    }
}

/// `D_t(a⊗c) = da⊗c + (-1)^{|a|} a⊗dc + (-1)^{|a|} Σ a·t(c')⊗c''` over `Δc`.
pub fn twisted_differential<A: GradedAlgebra<T>, T: Scalar>(
    spec: &TwistingCochainSpec<A, T>,
    a: &A::Basis,
    c: CoGen,
) -> LinComb<(A::Basis, CoGen), T> {
    let alg = &spec.algebra;
    let co = &spec.coalgebra;
    let sa = T::sign(alg.degree(a) % 2 != 0);
    let mut out = LinComb::zero();
    for (da, k) in alg.d(a).iter() {
        out.add_term((da.clone(), c), k.clone());
    }
    for (dc, k) in co.d(c).iter() {
        out.add_term((a.clone(), *dc), sa.clone() * k.clone());
    }
    for (&(c1, c2), k) in co.coproduct(c).iter() {
        let prod = alg.mul_elem(&LinComb::basis(a.clone()), &spec.t[c1]);
        for (b, kb) in prod.iter() {
            out.add_term((b.clone(), c2), sa.clone() * k.clone() * kb.clone());
        }
    }
    out
}

/// The truncated complex `A ⊗_t C` on degrees `0..=n`.
pub fn twisted_tensor<A: GradedAlgebra<T>, T: Scalar>(
    spec: &TwistingCochainSpec<A, T>,
    n: i64,
) -> Result<TruncatedComplex<T>, TwistError> {
    let co = &spec.coalgebra;
    let alg = &spec.algebra;
    let bases: Vec<Vec<(A::Basis, CoGen)>> = (0..=n)
        .map(|deg| {
            let mut b = Vec::new();
            for c in 0..co.len() {
                let rest = deg - co.degree(c);
                if rest >= 0 {
                    b.extend(alg.basis_of_degree(rest).into_iter().map(|x| (x, c)));
                }
            }
            b
        })
        .collect();
    let complex = TruncatedComplex::assemble(
        0,
        bases,
        |(a, c)| twisted_differential(spec, a, *c),
        |(a, c)| format!("{}⊗{}", alg.label(a), co.label(*c)),
    )?;
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::presets;
    use crate::Integer;

    #[test]
    fn acyclic_cobar_on_a_primitive() {
        let spec = TwistingCochainSpec::cobar(presets::primitive_coalgebra(2)).unwrap();
        let c = twisted_tensor(&spec, 12).unwrap();
        assert_eq!(c.homology(0).unwrap().free_rank, 1);
        for n in 1..12 {
            assert!(c.homology(n).unwrap().is_zero(), "H^{n} ≠ 0");
        }
    }

    #[test]
    fn acyclic_cobar_with_coproducts() {
        for co in [presets::divided_coalgebra(), presets::rank_three_coalgebra()] {
            let spec = TwistingCochainSpec::cobar(co).unwrap();
            let c = twisted_tensor(&spec, 12).unwrap();
            assert_eq!(c.homology(0).unwrap().free_rank, 1);
            for n in 1..12 {
                assert!(c.homology(n).unwrap().is_zero(), "H^{n} ≠ 0");
            }
        }
    }

    #[test]
    fn zero_twist_is_the_plain_tensor_product() {
        let co = presets::primitive_coalgebra(2);
        let spec = TwistingCochainSpec::zero(co.clone(), Cobar::new(co));
        let c = twisted_tensor(&spec, 8).unwrap();
        // d = 0 on both factors, so homology is the whole tensor product
        for n in 0..8 {
            assert_eq!(c.homology(n).unwrap().free_rank, c.dim(n));
        }
    }

    #[test]
    fn bad_twist_names_the_element() {
        let co = presets::divided_coalgebra();
        let omega = Cobar::new(co.clone());
        // t(c2) = s⁻¹c2 but t(c4) = 0 violates the condition at c4
        let t = vec![LinComb::zero(), LinComb::basis(CobarWord(vec![1])), LinComb::<CobarWord, Integer>::zero()];
        let e = TwistingCochainSpec::new(co, omega, t).unwrap_err();
        assert_eq!(e, TwistError::Condition { element: "c4".into() });
    }
}
