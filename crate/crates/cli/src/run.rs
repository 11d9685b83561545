//! Model computations and their result tables.

use std::str::FromStr;

use loopcoh::dga::PresentedAlgebra;
use loopcoh::graded::ComplexError;
use loopcoh::loops::{build_model, Model, ModelError};
use loopcoh::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Prime(u64),
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p = match s {
            "Z" => return Ok(Coefficients::Integers),
            "F2" => 2,
            _ => s
                .strip_prefix("Fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("unknown coefficients {s:?} (expected Z, F2 or Fp:<p>)"))?,
        };
        if !loopcoh::graded::is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(Coefficients::Prime(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRow {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<Integer>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResultTable {
    Integral(Vec<IntegralRow>),
    ModP { p: u64, rows: Vec<(i64, usize)> },
}

/// `H^n` of the model for every degree from the model's lowest degree up to
/// `max_degree - 1` (`0` for fls and hos, `-1` for tc).
pub fn run(
    model: Model,
    a: &PresentedAlgebra,
    max_degree: i64,
    coeff: Coefficients,
) -> Result<ResultTable, ModelError> {
    let c = build_model(a, model, max_degree)?;
    Ok(match coeff {
        Coefficients::Integers => ResultTable::Integral(
            c.homology_table()
                .into_iter()
                .map(|(degree, h)| IntegralRow { degree, free_rank: h.free_rank, torsion: h.torsion })
                .collect(),
        ),
        Coefficients::Prime(p) => {
            let fp = c.reduce_mod_p(p).map_err(ModelError::Complex)?;
            ResultTable::ModP { p, rows: fp.dimension_table() }
        }
    })
}

/// Whether an error means a broken invariant inside the engine rather than bad input.
pub fn is_internal(e: &ModelError) -> bool {
    matches!(
        e,
        ModelError::Complex(ComplexError::SquareNonZero { .. } | ComplexError::DegreeMismatch { .. })
    )
}

impl ResultTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        match self {
            ResultTable::Integral(rows) => {
                out.push_str("degree\tfree_rank\ttorsion\n");
                for r in rows {
                    let t: Vec<String> = r.torsion.iter().map(Integer::to_string).collect();
                    out.push_str(&format!("{}\t{}\t{}\n", r.degree, r.free_rank, t.join(",")));
                }
            }
            ResultTable::ModP { rows, .. } => {
                out.push_str("degree\tdimension\n");
                for (n, d) in rows {
                    out.push_str(&format!("{n}\t{d}\n"));
                }
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        match self {
            ResultTable::Integral(rows) => {
                out.push_str("| degree | free rank | torsion |\n|---:|---:|:---|\n");
                for r in rows {
                    let t: Vec<String> = r.torsion.iter().map(|d| format!("ℤ/{d}")).collect();
                    out.push_str(&format!("| {} | {} | {} |\n", r.degree, r.free_rank, t.join(" ⊕ ")));
                }
            }
            ResultTable::ModP { p, rows } => {
                out.push_str(&format!("| degree | dim over 𝔽_{p} |\n|---:|---:|\n"));
                for (n, d) in rows {
                    out.push_str(&format!("| {n} | {d} |\n"));
                }
            }
        }
        out
    }
}
