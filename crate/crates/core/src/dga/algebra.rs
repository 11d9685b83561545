use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::Integer;

/// Index of an additive generator; `0` is always the unit.
pub type Gen = usize;
/// An element of a presented algebra.
pub type AlgElem<T> = LinComb<Gen, T>;

pub const UNIT: Gen = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub degree: i64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has degree 1; the algebra must be simply connected")]
    DegreeOne(String),
    #[error("generator `{label}` has degree {degree}; only the unit may sit in degree 0 and degrees must be nonnegative")]
    BadDegree { label: String, degree: i64 },
    #[error("the unit cannot appear in a differential or product table")]
    UnitInTable,
    #[error("d({from}) has a term `{term}` of degree {got}, expected {expected}")]
    DifferentialDegree { from: String, term: String, got: i64, expected: i64 },
    #[error("d({0}) is given twice")]
    DuplicateDifferential(String),
    #[error("{a}·{b} has a term `{term}` of degree {got}, expected {expected}")]
    ProductDegree { a: String, b: String, term: String, got: i64, expected: i64 },
    #[error("d(d({0})) != 0")]
    SquareNonZero(String),
    #[error("Leibniz rule fails on {a}·{b}")]
    Leibniz { a: String, b: String },
    #[error("{a}·{b} and {b}·{a} are not graded-commutative")]
    NonCommutative { a: String, b: String },
    #[error("{a}·{a} must vanish for an odd generator")]
    OddSquare { a: String },
    #[error("associativity fails on ({a}·{b})·{c}")]
    Associativity { a: String, b: String, c: String },
}

/// A finite-type graded-commutative cochain algebra given by additive
/// generators, a differential table and a product table.
///
/// Products are stored once per unordered pair; the other order is recovered
/// with the graded-commutativity sign.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra<T = Integer> {
    name: String,
    generators: Vec<Generator>,
    index: HashMap<String, Gen>,
    differential: Vec<AlgElem<T>>,
    products: BTreeMap<(Gen, Gen), AlgElem<T>>,
}

/// Incremental description of a [`PresentedAlgebra`]; validated by [`AlgebraBuilder::build`].
#[derive(Clone, Debug)]
pub struct AlgebraBuilder<T = Integer> {
    name: String,
    unit_label: String,
    generators: Vec<Generator>,
    differential: Vec<(String, Vec<(String, T)>)>,
    products: Vec<(String, String, Vec<(String, T)>)>,
}

impl<T: Scalar> AlgebraBuilder<T> {
    pub fn new(name: impl Into<String>) -> Self {
        AlgebraBuilder {
            name: name.into(),
            unit_label: "1".into(),
            generators: Vec::new(),
            differential: Vec::new(),
            products: Vec::new(),
        }
    }

    pub fn unit_label(mut self, label: impl Into<String>) -> Self {
        self.unit_label = label.into();
        self
    }

    pub fn generator(mut self, label: impl Into<String>, degree: i64) -> Self {
        self.generators.push(Generator { label: label.into(), degree });
        self
    }

    pub fn differential(mut self, from: impl Into<String>, to: Vec<(&str, T)>) -> Self {
        self.differential.push((from.into(), to.into_iter().map(|(g, c)| (g.to_string(), c)).collect()));
        self
    }

    pub fn product(mut self, a: impl Into<String>, b: impl Into<String>, result: Vec<(&str, T)>) -> Self {
        self.products.push((
            a.into(),
            b.into(),
            result.into_iter().map(|(g, c)| (g.to_string(), c)).collect(),
        ));
        self
    }

    pub fn build(self) -> Result<PresentedAlgebra<T>, AlgebraError> {
        let mut generators = vec![Generator { label: self.unit_label.clone(), degree: 0 }];
        let mut index = HashMap::new();
        index.insert(self.unit_label.clone(), UNIT);
        for g in self.generators {
            if g.degree == 0 && g.label == self.unit_label {
                continue;
            }
            if g.degree == 1 {
                return Err(AlgebraError::DegreeOne(g.label));
            }
            if g.degree <= 0 {
                return Err(AlgebraError::BadDegree { label: g.label, degree: g.degree });
            }
            if index.insert(g.label.clone(), generators.len()).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.label));
            }
            generators.push(g);
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| AlgebraError::UnknownGenerator(l.into()));
        let positive = |l: &str| -> Result<Gen, AlgebraError> {
            let g = lookup(l)?;
            if g == UNIT {
                Err(AlgebraError::UnitInTable)
            } else {
                Ok(g)
            }
        };

        let mut differential = vec![AlgElem::<T>::zero(); generators.len()];
        let mut seen = vec![false; generators.len()];
        for (from, to) in &self.differential {
            let f = positive(from)?;
            if std::mem::replace(&mut seen[f], true) {
                return Err(AlgebraError::DuplicateDifferential(from.clone()));
            }
            for (t, c) in to {
                let g = positive(t)?;
                let expected = generators[f].degree + 1;
                if generators[g].degree != expected {
                    return Err(AlgebraError::DifferentialDegree {
                        from: from.clone(),
                        term: t.clone(),
                        got: generators[g].degree,
                        expected,
                    });
                }
                differential[f].add_term(g, c.clone());
            }
        }

        // Collect both orders as given, then check they agree up to sign.
        let mut given: BTreeMap<(Gen, Gen), AlgElem<T>> = BTreeMap::new();
        for (a, b, result) in &self.products {
            let (ga, gb) = (positive(a)?, positive(b)?);
            let expected = generators[ga].degree + generators[gb].degree;
            let mut elem = AlgElem::zero();
            for (t, c) in result {
                let g = positive(t)?;
                if generators[g].degree != expected {
                    return Err(AlgebraError::ProductDegree {
                        a: a.clone(),
                        b: b.clone(),
                        term: t.clone(),
                        got: generators[g].degree,
                        expected,
                    });
                }
                elem.add_term(g, c.clone());
            }
            given.entry((ga, gb)).or_insert_with(AlgElem::zero).add_assign(&elem);
        }
        let mut products = BTreeMap::new();
        for (&(a, b), v) in &given {
            let sign = T::sign(generators[a].degree * generators[b].degree % 2 != 0);
            if a == b {
                if !v.is_zero() && generators[a].degree % 2 != 0 {
                    return Err(AlgebraError::OddSquare { a: generators[a].label.clone() });
                }
            } else if let Some(w) = given.get(&(b, a)) {
                if *w != v.scaled(&sign) {
                    return Err(AlgebraError::NonCommutative {
                        a: generators[a].label.clone(),
                        b: generators[b].label.clone(),
                    });
                }
            }
            let (key, val) = if a <= b { ((a, b), v.clone()) } else { ((b, a), v.scaled(&sign)) };
            if !val.is_zero() {
                products.insert(key, val);
            }
        }

        let alg = PresentedAlgebra { name: self.name, generators, index, differential, products };
        alg.validate()?;
        Ok(alg)
    }
}

impl<T: Scalar> PresentedAlgebra<T> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self, g: Gen) -> i64 {
        self.generators[g].degree
    }

    pub fn label(&self, g: Gen) -> &str {
        &self.generators[g].label
    }

    pub fn lookup(&self, label: &str) -> Option<Gen> {
        self.index.get(label).copied()
    }

    /// Positive-degree generators.
    pub fn positive(&self) -> impl Iterator<Item = Gen> + '_ {
        1..self.generators.len()
    }

    pub fn max_generator_degree(&self) -> i64 {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    pub fn d(&self, g: Gen) -> AlgElem<T> {
        self.differential[g].clone()
    }

    pub fn d_elem(&self, x: &AlgElem<T>) -> AlgElem<T> {
        x.map_linear(|g| self.d(*g))
    }

    pub fn mul(&self, a: Gen, b: Gen) -> AlgElem<T> {
        if a == UNIT {
            return AlgElem::basis(b);
        }
        if b == UNIT {
            return AlgElem::basis(a);
        }
        if a <= b {
            self.products.get(&(a, b)).cloned().unwrap_or_default()
        } else {
            let sign = T::sign(self.degree(a) * self.degree(b) % 2 != 0);
            self.products.get(&(b, a)).map(|v| v.scaled(&sign)).unwrap_or_default()
        }
    }

    pub fn mul_elem(&self, x: &AlgElem<T>, y: &AlgElem<T>) -> AlgElem<T> {
        let mut out = AlgElem::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.mul(*a, *b), &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    /// Stored products, one per unordered pair `a ≤ b`.
    pub fn product_table(&self) -> impl Iterator<Item = (Gen, Gen, &AlgElem<T>)> {
        self.products.iter().map(|(&(a, b), v)| (a, b, v))
    }

    /// Checks `d² = 0`, the Leibniz rule and associativity on generators.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let gens: Vec<Gen> = self.positive().collect();
        let lab = |g: Gen| self.label(g).to_string();
        for &g in &gens {
            if !self.d_elem(&self.d(g)).is_zero() {
                return Err(AlgebraError::SquareNonZero(lab(g)));
            }
        }
        for &a in &gens {
            for &b in &gens {
                let lhs = self.d_elem(&self.mul(a, b));
                let mut rhs = self.mul_elem(&self.d(a), &AlgElem::basis(b));
                let sign = T::sign(self.degree(a) % 2 != 0);
                rhs.add_scaled(&self.mul_elem(&AlgElem::basis(a), &self.d(b)), &sign);
                if lhs != rhs {
                    return Err(AlgebraError::Leibniz { a: lab(a), b: lab(b) });
                }
            }
        }
        for &a in &gens {
            for &b in &gens {
                let ab = self.mul(a, b);
                for &c in &gens {
                    let left = self.mul_elem(&ab, &AlgElem::basis(c));
                    let right = self.mul_elem(&AlgElem::basis(a), &self.mul(b, c));
                    if left != right {
                        return Err(AlgebraError::Associativity { a: lab(a), b: lab(b), c: lab(c) });
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable form of an element.
    pub fn format(&self, x: &AlgElem<T>) -> String
    where
        T: std::fmt::Display,
    {
        if x.is_zero() {
            return "0".into();
        }
        x.iter().map(|(g, c)| format!("{c}·{}", self.label(*g))).collect::<Vec<_>>().join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn odd_sphere() {
        let a = AlgebraBuilder::<Integer>::new("S3").generator("z", 3).build().unwrap();
        let zg = a.lookup("z").unwrap();
        assert!(a.mul(zg, zg).is_zero());
        assert_eq!(a.mul(UNIT, zg), AlgElem::basis(zg));
    }

    #[test]
    fn commutativity_sign_on_lookup() {
        let a = AlgebraBuilder::<Integer>::new("t")
            .generator("a", 3)
            .generator("b", 5)
            .generator("c", 8)
            .product("a", "b", vec![("c", z(1))])
            .build()
            .unwrap();
        let (ga, gb, gc) = (a.lookup("a").unwrap(), a.lookup("b").unwrap(), a.lookup("c").unwrap());
        assert_eq!(a.mul(gb, ga), AlgElem::from_term(gc, z(-1)));
    }

    #[test]
    fn load_errors() {
        let e = AlgebraBuilder::<Integer>::new("x").generator("a", 1).build().unwrap_err();
        assert_eq!(e, AlgebraError::DegreeOne("a".into()));
        let e = AlgebraBuilder::<Integer>::new("x")
            .generator("a", 2)
            .generator("b", 2)
            .generator("c", 4)
            .product("a", "b", vec![("c", z(1))])
            .product("b", "a", vec![("c", z(2))])
            .build()
            .unwrap_err();
        assert!(matches!(e, AlgebraError::NonCommutative { .. }));
        let e = AlgebraBuilder::<Integer>::new("x")
            .generator("a", 2)
            .generator("b", 3)
            .generator("c", 4)
            .differential("a", vec![("c", z(1))])
            .build()
            .unwrap_err();
        assert!(matches!(e, AlgebraError::DifferentialDegree { .. }));
        let e = AlgebraBuilder::<Integer>::new("x")
            .generator("a", 2)
            .generator("b", 3)
            .generator("c", 4)
            .differential("a", vec![("b", z(1))])
            .differential("b", vec![("c", z(1))])
            .build()
            .unwrap_err();
        assert_eq!(e, AlgebraError::SquareNonZero("a".into()));
        let e = AlgebraBuilder::<Integer>::new("x")
            .generator("a", 3)
            .generator("b", 6)
            .product("a", "a", vec![("b", z(1))])
            .build()
            .unwrap_err();
        assert_eq!(e, AlgebraError::OddSquare { a: "a".into() });
    }

    #[test]
    fn leibniz_violation_is_reported() {
        // da = b but a·a = c with dc = 0: d(a·a) = 0 while 2a·b must be e.
        let e = AlgebraBuilder::<Integer>::new("x")
            .generator("a", 2)
            .generator("b", 3)
            .generator("c", 4)
            .generator("e", 5)
            .differential("a", vec![("b", z(1))])
            .product("a", "a", vec![("c", z(1))])
            .product("a", "b", vec![("e", z(1))])
            .build()
            .unwrap_err();
        assert!(matches!(e, AlgebraError::Leibniz { .. }));
    }
}
