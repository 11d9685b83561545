use std::collections::HashMap;

use thiserror::Error;

use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::Integer;

/// Basis index in a finite coalgebra; `0` is the counit dual `1`.
pub type CoGen = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoalgebraError {
    #[error("unknown basis element `{0}`")]
    Unknown(String),
    #[error("basis element `{0}` has degree 1; the coalgebra must be simply connected")]
    DegreeOne(String),
    #[error("basis element `{label}` has degree {degree}")]
    BadDegree { label: String, degree: i64 },
    #[error("d({0}) has a term of the wrong degree")]
    DifferentialDegree(String),
    #[error("reduced coproduct of {0} has a term of the wrong degree")]
    CoproductDegree(String),
    #[error("d(d({0})) != 0")]
    SquareNonZero(String),
    #[error("reduced coproduct is not coassociative on {0}")]
    Coassociativity(String),
    #[error("d is not a coderivation on {0}")]
    Coderivation(String),
}

/// A finite simply connected cochain coalgebra given by a basis, a
/// differential and a reduced coproduct table.
#[derive(Clone, Debug)]
pub struct FiniteCoalgebra<T = Integer> {
    labels: Vec<String>,
    degrees: Vec<i64>,
    d: Vec<LinComb<CoGen, T>>,
    reduced: Vec<LinComb<(CoGen, CoGen), T>>,
}

#[derive(Clone, Debug, Default)]
pub struct CoalgebraBuilder<T = Integer> {
    elements: Vec<(String, i64)>,
    d: Vec<(String, Vec<(String, T)>)>,
    coproducts: Vec<(String, Vec<(String, String, T)>)>,
}

impl<T: Scalar> CoalgebraBuilder<T> {
    pub fn new() -> Self {
        CoalgebraBuilder { elements: Vec::new(), d: Vec::new(), coproducts: Vec::new() }
    }

    pub fn element(mut self, label: &str, degree: i64) -> Self {
        self.elements.push((label.into(), degree));
        self
    }

    pub fn differential(mut self, from: &str, to: Vec<(&str, T)>) -> Self {
        self.d.push((from.into(), to.into_iter().map(|(l, c)| (l.into(), c)).collect()));
        self
    }

    pub fn coproduct(mut self, of: &str, terms: Vec<(&str, &str, T)>) -> Self {
        self.coproducts
            .push((of.into(), terms.into_iter().map(|(a, b, c)| (a.into(), b.into(), c)).collect()));
        self
    }

    pub fn build(self) -> Result<FiniteCoalgebra<T>, CoalgebraError> {
        let mut labels = vec!["1".to_string()];
        let mut degrees = vec![0];
        for (l, d) in &self.elements {
            if *d == 1 {
                return Err(CoalgebraError::DegreeOne(l.clone()));
            }
            if *d <= 0 {
                return Err(CoalgebraError::BadDegree { label: l.clone(), degree: *d });
            }
            labels.push(l.clone());
            degrees.push(*d);
        }
        let index: HashMap<&str, CoGen> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let find = |l: &str| -> Result<CoGen, CoalgebraError> {
            match index.get(l) {
                Some(&i) if i != 0 => Ok(i),
                _ => Err(CoalgebraError::Unknown(l.into())),
            }
        };
        let n = labels.len();
        let mut d = vec![LinComb::zero(); n];
        for (from, to) in &self.d {
            let f = find(from)?;
            for (t, c) in to {
                let g = find(t)?;
                if degrees[g] != degrees[f] + 1 {
                    return Err(CoalgebraError::DifferentialDegree(from.clone()));
                }
                d[f].add_term(g, c.clone());
            }
        }
        let mut reduced = vec![LinComb::zero(); n];
        for (of, terms) in &self.coproducts {
            let f = find(of)?;
            for (a, b, c) in terms {
                let (ga, gb) = (find(a)?, find(b)?);
                if degrees[ga] + degrees[gb] != degrees[f] {
                    return Err(CoalgebraError::CoproductDegree(of.clone()));
                }
                reduced[f].add_term((ga, gb), c.clone());
            }
        }
        let c = FiniteCoalgebra { labels, degrees, d, reduced };
        c.validate()?;
        Ok(c)
    }
}

impl<T: Scalar> FiniteCoalgebra<T> {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn positive(&self) -> impl Iterator<Item = CoGen> {
        1..self.labels.len()
    }

    pub fn degree(&self, c: CoGen) -> i64 {
        self.degrees[c]
    }

    pub fn label(&self, c: CoGen) -> &str {
        &self.labels[c]
    }

    pub fn d(&self, c: CoGen) -> &LinComb<CoGen, T> {
        &self.d[c]
    }

    pub fn reduced_coproduct(&self, c: CoGen) -> &LinComb<(CoGen, CoGen), T> {
        &self.reduced[c]
    }

    /// Full coproduct `1⊗c + c⊗1 + Δ̄c` (just `1⊗1` on the unit).
    pub fn coproduct(&self, c: CoGen) -> LinComb<(CoGen, CoGen), T> {
        if c == 0 {
            return LinComb::basis((0, 0));
        }
        let mut out = self.reduced[c].clone();
        out.add_term((0, c), T::one());
        out.add_term((c, 0), T::one());
        out
    }

    fn validate(&self) -> Result<(), CoalgebraError> {
        for c in self.positive() {
            let lab = || self.labels[c].clone();
            if !self.d[c].map_linear(|x| self.d[*x].clone()).is_zero() {
                return Err(CoalgebraError::SquareNonZero(lab()));
            }
            // (Δ̄⊗1)Δ̄ = (1⊗Δ̄)Δ̄
            let mut left: LinComb<(CoGen, CoGen, CoGen), T> = LinComb::zero();
            let mut right: LinComb<(CoGen, CoGen, CoGen), T> = LinComb::zero();
            for (&(a, b), k) in self.reduced[c].iter() {
                for (&(a1, a2), k2) in self.reduced[a].iter() {
                    left.add_term((a1, a2, b), k.clone() * k2.clone());
                }
                for (&(b1, b2), k2) in self.reduced[b].iter() {
                    right.add_term((a, b1, b2), k.clone() * k2.clone());
                }
            }
            if left != right {
                return Err(CoalgebraError::Coassociativity(lab()));
            }
            // Δ̄d = (d⊗1 + 1⊗d)Δ̄
            let lhs = self.d[c].map_linear(|x| self.reduced[*x].clone());
            let mut rhs = LinComb::zero();
            for (&(a, b), k) in self.reduced[c].iter() {
                for (da, kd) in self.d[a].iter() {
                    rhs.add_term((*da, b), k.clone() * kd.clone());
                }
                let sign = T::sign(self.degrees[a] % 2 != 0);
                for (db, kd) in self.d[b].iter() {
                    rhs.add_term((a, *db), k.clone() * kd.clone() * sign.clone());
                }
            }
            if lhs != rhs {
                return Err(CoalgebraError::Coderivation(lab()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degree_one() {
        let e = CoalgebraBuilder::<Integer>::new().element("c", 1).build().unwrap_err();
        assert_eq!(e, CoalgebraError::DegreeOne("c".into()));
    }

    #[test]
    fn full_coproduct_adds_unit_terms() {
        let c = crate::dga::presets::divided_coalgebra();
        assert_eq!(c.coproduct(2).len(), 3);
        assert_eq!(c.coproduct(0), LinComb::basis((0, 0)));
    }
}
