//! The JSON presentation format for cochain algebras.

use serde::{Deserialize, Serialize};

use loopcoh::dga::{AlgebraBuilder, AlgebraError, PresentedAlgebra};
use loopcoh::Integer;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub label: String,
    pub degree: i64,
}

/// One term `coeff·gen`; coefficients are decimal strings so that any integer fits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub gen: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialEntry {
    pub from: String,
    pub to: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub a: String,
    pub b: String,
    pub result: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub differential: Vec<DifferentialEntry>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("schema violation: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("coefficient {0:?} is not a decimal integer")]
    Coefficient(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn parse_terms(terms: &[Term]) -> Result<Vec<(&str, Integer)>, DocumentError> {
    terms
        .iter()
        .map(|t| {
            let c: Integer = t.coeff.trim().parse().map_err(|_| DocumentError::Coefficient(t.coeff.clone()))?;
            Ok((t.gen.as_str(), c))
        })
        .collect()
}

fn terms_of(a: &PresentedAlgebra, x: &loopcoh::dga::AlgElem<Integer>) -> Vec<Term> {
    x.iter().map(|(g, c)| Term { gen: a.label(*g).to_string(), coeff: c.to_string() }).collect()
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Validates into a presented algebra; every algebra invariant is re-checked.
    pub fn to_algebra(&self) -> Result<PresentedAlgebra, DocumentError> {
        let mut b = AlgebraBuilder::new(self.name.clone());
        for g in &self.generators {
            b = b.generator(g.label.clone(), g.degree);
        }
        for d in &self.differential {
            b = b.differential(d.from.clone(), parse_terms(&d.to)?);
        }
        for p in &self.products {
            b = b.product(p.a.clone(), p.b.clone(), parse_terms(&p.result)?);
        }
        Ok(b.build()?)
    }

    /// The normal form of an algebra: generators in order, one product per unordered pair.
    pub fn from_algebra(a: &PresentedAlgebra) -> Self {
        let generators = a
            .generators()
            .iter()
            .skip(1)
            .map(|g| GeneratorEntry { label: g.label.clone(), degree: g.degree })
            .collect();
        let differential = a
            .positive()
            .filter(|&g| !a.d(g).is_zero())
            .map(|g| DifferentialEntry { from: a.label(g).to_string(), to: terms_of(a, &a.d(g)) })
            .collect();
        let products = a
            .product_table()
            .map(|(x, y, v)| ProductEntry {
                a: a.label(x).to_string(),
                b: a.label(y).to_string(),
                result: terms_of(a, v),
            })
            .collect();
        AlgebraDocument { name: a.name().to_string(), generators, differential, products }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
        "name": "small",
        "generators": [{"label": "a", "degree": 2}, {"label": "b", "degree": 3},
                       {"label": "c", "degree": 4}, {"label": "e", "degree": 5}],
        "differential": [{"from": "a", "to": [{"gen": "b", "coeff": "1"}]},
                         {"from": "c", "to": [{"gen": "e", "coeff": "2"}]}],
        "products": [{"a": "a", "b": "a", "result": [{"gen": "c", "coeff": "1"}]},
                     {"a": "b", "b": "a", "result": [{"gen": "e", "coeff": "1"}]}]
    }"#;

    #[test]
    fn loads_and_normalizes() {
        let doc = AlgebraDocument::from_json(SMALL).unwrap();
        let a = doc.to_algebra().unwrap();
        let once = AlgebraDocument::from_algebra(&a);
        let twice = AlgebraDocument::from_algebra(&once.to_algebra().unwrap());
        assert_eq!(once, twice);
        assert_eq!(AlgebraDocument::from_json(&once.to_json()).unwrap(), once);
    }

    #[test]
    fn distinct_diagnostics() {
        let bad_coeff = SMALL.replace("\"2\"", "\"two\"");
        assert!(matches!(
            AlgebraDocument::from_json(&bad_coeff).unwrap().to_algebra(),
            Err(DocumentError::Coefficient(_))
        ));
        let schema = SMALL.replace("\"products\"", "\"product\"");
        assert!(matches!(AlgebraDocument::from_json(&schema), Err(DocumentError::Schema(_))));
        let non_comm = SMALL.replace(
            r#"{"a": "b", "b": "a", "result": [{"gen": "e", "coeff": "1"}]}"#,
            r#"{"a": "b", "b": "a", "result": [{"gen": "e", "coeff": "1"}]},
               {"a": "a", "b": "b", "result": [{"gen": "e", "coeff": "3"}]}"#,
        );
        assert!(matches!(
            AlgebraDocument::from_json(&non_comm).unwrap().to_algebra(),
            Err(DocumentError::Algebra(AlgebraError::NonCommutative { .. }))
        ));
        let deg_one = SMALL.replace(r#""degree": 2"#, r#""degree": 1"#);
        assert!(matches!(
            AlgebraDocument::from_json(&deg_one).unwrap().to_algebra(),
            Err(DocumentError::Algebra(AlgebraError::DegreeOne(_)))
        ));
        let dd = r#"{"name": "x", "generators": [{"label": "a", "degree": 2}, {"label": "b", "degree": 3},
                     {"label": "c", "degree": 4}],
                     "differential": [{"from": "a", "to": [{"gen": "b", "coeff": "1"}]},
                                      {"from": "b", "to": [{"gen": "c", "coeff": "1"}]}]}"#;
        assert!(matches!(
            AlgebraDocument::from_json(dd).unwrap().to_algebra(),
            Err(DocumentError::Algebra(AlgebraError::SquareNonZero(_)))
        ));
    }
}
