use std::collections::HashMap;
use std::fmt::{self, Display};
use std::hash::Hash;

use thiserror::Error;

use super::fp::{is_prime, FpMatrix};
use super::matrix::SparseMatrix;
use super::snf::{smith_normal_form, SmithForm};
use crate::lincomb::LinComb;
use crate::scalar::{EuclideanScalar, Scalar};

/// Position of a basis element inside a truncated complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub degree: i64,
    pub ordinal: usize,
    pub label: String,
}

/// `H^n` over a Euclidean ring: free rank plus invariant factors `> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: EuclideanScalar + Display> Display for HomologyGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("degree {degree} outside the reportable range {lo}..={hi}")]
    OutOfRange { degree: i64, lo: i64, hi: i64 },
    #[error("d(d({label})) != 0 (degree {degree})")]
    SquareNonZero { degree: i64, label: String },
    #[error("d({label}) contains {term}, which is not a basis element of degree {target}")]
    DegreeMismatch { label: String, term: String, target: i64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("basis of degree {degree} has repeated label {label}")]
    DuplicateLabel { degree: i64, label: String },
}

/// A cochain complex known truthfully on degrees `min_degree..=max_degree`.
///
/// Nothing lives below `min_degree`. Differentials are stored for every
/// `n < max_degree`; `H^n` is reported for `min_degree ≤ n < max_degree`.
#[derive(Clone, Debug)]
pub struct TruncatedComplex<T> {
    min_degree: i64,
    max_degree: i64,
    bases: Vec<Vec<String>>,
    differentials: Vec<SparseMatrix<T>>,
}

impl<T: Scalar> TruncatedComplex<T> {
    /// Builds from explicit labels and matrices; checks shapes, labels and `d² = 0`.
    pub fn new(
        min_degree: i64,
        bases: Vec<Vec<String>>,
        differentials: Vec<SparseMatrix<T>>,
    ) -> Result<Self, ComplexError> {
        assert!(!bases.is_empty(), "a complex needs at least one degree");
        assert_eq!(differentials.len() + 1, bases.len(), "need one differential per step");
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!(d.cols(), bases[k].len(), "differential {k}: column count");
            assert_eq!(d.rows(), bases[k + 1].len(), "differential {k}: row count");
        }
        for (k, b) in bases.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for l in b {
                if !seen.insert(l) {
                    return Err(ComplexError::DuplicateLabel {
                        degree: min_degree + k as i64,
                        label: l.clone(),
                    });
                }
            }
        }
        let max_degree = min_degree + bases.len() as i64 - 1;
        let c = TruncatedComplex { min_degree, max_degree, bases, differentials };
        c.check_square_zero()?;
        Ok(c)
    }

    /// Assembles a complex from a basis per degree and a differential on basis elements.
    pub fn assemble<K, F, L>(
        min_degree: i64,
        bases: Vec<Vec<K>>,
        mut d: F,
        label: L,
    ) -> Result<Self, ComplexError>
    where
        K: Ord + Clone + Hash,
        F: FnMut(&K) -> LinComb<K, T>,
        L: Fn(&K) -> String,
    {
        let index: Vec<HashMap<K, usize>> = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect())
            .collect();
        let mut mats = Vec::with_capacity(bases.len().saturating_sub(1));
        for n in 0..bases.len().saturating_sub(1) {
            let mut m = SparseMatrix::zeros(bases[n + 1].len(), bases[n].len());
            for (j, k) in bases[n].iter().enumerate() {
                for (t, c) in d(k).iter() {
                    let Some(&i) = index[n + 1].get(t) else {
                        return Err(ComplexError::DegreeMismatch {
                            label: label(k),
                            term: label(t),
                            target: min_degree + n as i64 + 1,
                        });
                    };
                    m.set(i, j, c.clone());
                }
            }
            mats.push(m);
        }
        let labels = bases.iter().map(|b| b.iter().map(&label).collect()).collect();
        Self::new(min_degree, labels, mats)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n >= self.min_degree && n <= self.max_degree).then(|| (n - self.min_degree) as usize)
    }

    pub fn dim(&self, n: i64) -> usize {
        self.slot(n).map_or(0, |k| self.bases[k].len())
    }

    pub fn basis(&self, n: i64) -> &[String] {
        self.slot(n).map_or(&[], |k| &self.bases[k])
    }

    pub fn basis_index(&self, n: i64, ordinal: usize) -> Option<BasisIndex> {
        let k = self.slot(n)?;
        self.bases[k].get(ordinal).map(|l| BasisIndex { degree: n, ordinal, label: l.clone() })
    }

    /// The differential `C^n → C^{n+1}`; `None` for `n ≥ max_degree` or below the range.
    pub fn differential(&self, n: i64) -> Option<&SparseMatrix<T>> {
        let k = self.slot(n)?;
        self.differentials.get(k)
    }

    pub fn check_square_zero(&self) -> Result<(), ComplexError> {
        for k in 0..self.differentials.len().saturating_sub(1) {
            let dd = self.differentials[k + 1].mul(&self.differentials[k]);
            let bad = dd.entries().next().map(|(_, j, _)| j);
            if let Some(j) = bad {
                return Err(ComplexError::SquareNonZero {
                    degree: self.min_degree + k as i64,
                    label: self.bases[k][j].clone(),
                });
            }
        }
        Ok(())
    }

    fn check_reportable(&self, n: i64) -> Result<(), ComplexError> {
        if n < self.min_degree || n >= self.max_degree {
            return Err(ComplexError::OutOfRange {
                degree: n,
                lo: self.min_degree,
                hi: self.max_degree - 1,
            });
        }
        Ok(())
    }

    /// Reorders the basis of degree `n`: element at ordinal `i` moves to `perm[i]`.
    pub fn permute_basis(&self, n: i64, perm: &[usize]) -> Self {
        let k = self.slot(n).expect("degree in range");
        let mut out = self.clone();
        let mut labels = vec![String::new(); perm.len()];
        for (i, l) in self.bases[k].iter().enumerate() {
            labels[perm[i]] = l.clone();
        }
        out.bases[k] = labels;
        if k < self.differentials.len() {
            let d = &self.differentials[k];
            let rows: Vec<usize> = (0..d.rows()).collect();
            out.differentials[k] = d.permuted(&rows, perm);
        }
        if k > 0 {
            let d = &self.differentials[k - 1];
            let cols: Vec<usize> = (0..d.cols()).collect();
            out.differentials[k - 1] = d.permuted(perm, &cols);
        }
        out
    }
}

impl<T: EuclideanScalar> TruncatedComplex<T> {
    fn snf_of(&self, n: i64) -> Option<SmithForm<T>> {
        self.differential(n).map(smith_normal_form)
    }

    /// `H^n` for `min_degree ≤ n < max_degree`; `H^N` is refused.
    pub fn homology(&self, n: i64) -> Result<HomologyGroup<T>, ComplexError> {
        self.check_reportable(n)?;
        let out = self.snf_of(n).expect("differential present below max degree");
        let incoming = self.snf_of(n - 1);
        let rank_in = incoming.as_ref().map_or(0, |s| s.rank);
        let free_rank = self.dim(n) - out.rank - rank_in;
        let torsion = incoming.map_or_else(Vec::new, |s| s.torsion());
        Ok(HomologyGroup { free_rank, torsion })
    }

    /// All reportable homology groups, lowest degree first.
    pub fn homology_table(&self) -> Vec<(i64, HomologyGroup<T>)> {
        let snfs: Vec<SmithForm<T>> = self.differentials.iter().map(smith_normal_form).collect();
        (self.min_degree..self.max_degree)
            .map(|n| {
                let k = (n - self.min_degree) as usize;
                let rank_in = if k > 0 { snfs[k - 1].rank } else { 0 };
                let torsion = if k > 0 { snfs[k - 1].torsion() } else { Vec::new() };
                let free_rank = self.bases[k].len() - snfs[k].rank - rank_in;
                (n, HomologyGroup { free_rank, torsion })
            })
            .collect()
    }

    /// `dim H^n(C ⊗ F_p)` by universal coefficients from the integral Smith forms.
    pub fn mod_p_dimension_uct(&self, n: i64, p: u64) -> Result<usize, ComplexError> {
        if !is_prime(p) {
            return Err(ComplexError::NotPrime(p));
        }
        let h = self.homology(n)?;
        let pt = T::from_u64(p).expect("prime fits the scalar type");
        let divisible = |d: &T| d.is_multiple_of(&pt);
        let tensor = h.torsion.iter().filter(|d| divisible(d)).count();
        let tor = self
            .snf_of(n)
            .expect("outgoing differential present")
            .torsion()
            .iter()
            .filter(|d| divisible(d))
            .count();
        Ok(h.free_rank + tensor + tor)
    }

    /// Reduces every differential modulo a prime.
    pub fn reduce_mod_p(&self, p: u64) -> Result<FpComplex, ComplexError> {
        if !is_prime(p) {
            return Err(ComplexError::NotPrime(p));
        }
        let pt = T::from_u64(p).expect("prime fits the scalar type");
        let differentials = self
            .differentials
            .iter()
            .map(|d| {
                let mut m = FpMatrix::zeros(p, d.rows(), d.cols());
                for (i, j, v) in d.entries() {
                    let r = v.mod_floor(&pt).to_u64().expect("residue fits u64");
                    m.set(i, j, r);
                }
                m
            })
            .collect();
        Ok(FpComplex {
            p,
            min_degree: self.min_degree,
            max_degree: self.max_degree,
            dims: self.bases.iter().map(Vec::len).collect(),
            differentials,
        })
    }
}

/// A truncated complex over `F_p`.
#[derive(Clone, Debug)]
pub struct FpComplex {
    p: u64,
    min_degree: i64,
    max_degree: i64,
    dims: Vec<usize>,
    differentials: Vec<FpMatrix>,
}

impl FpComplex {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn differential(&self, n: i64) -> Option<&FpMatrix> {
        if n < self.min_degree {
            return None;
        }
        self.differentials.get((n - self.min_degree) as usize)
    }

    pub fn check_square_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    /// `dim ker − rank of incoming`, for `min_degree ≤ n < max_degree`.
    pub fn dimension(&self, n: i64) -> Result<usize, ComplexError> {
        if n < self.min_degree || n >= self.max_degree {
            return Err(ComplexError::OutOfRange {
                degree: n,
                lo: self.min_degree,
                hi: self.max_degree - 1,
            });
        }
        let k = (n - self.min_degree) as usize;
        let out = self.differentials[k].rank();
        let inc = if k > 0 { self.differentials[k - 1].rank() } else { 0 };
        Ok(self.dims[k] - out - inc)
    }

    pub fn dimension_table(&self) -> Vec<(i64, usize)> {
        let ranks: Vec<usize> = self.differentials.iter().map(FpMatrix::rank).collect();
        (self.min_degree..self.max_degree)
            .map(|n| {
                let k = (n - self.min_degree) as usize;
                let inc = if k > 0 { ranks[k - 1] } else { 0 };
                (n, self.dims[k] - ranks[k] - inc)
            })
            .collect()
    }
}

/// Convenience: a complex concentrated in two adjacent degrees with a single map.
pub fn two_term<T: Scalar>(d: SparseMatrix<T>) -> TruncatedComplex<T> {
    let src = (0..d.cols()).map(|i| format!("a{i}")).collect();
    let dst = (0..d.rows()).map(|i| format!("b{i}")).collect();
    let zero = SparseMatrix::zeros(0, d.rows());
    TruncatedComplex::new(0, vec![src, dst, vec![]], vec![d, zero]).expect("two-term complex")
}

impl<T: EuclideanScalar> HomologyGroup<T> {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Product of the torsion factors (1 for a torsion-free group).
    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |a, b| a * b.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn times(n: i64) -> TruncatedComplex<BigInt> {
        two_term(SparseMatrix::from_dense(&[vec![BigInt::from(n)]]))
    }

    #[test]
    fn multiplication_by_two() {
        let c = times(2);
        assert_eq!(c.homology(1).unwrap(), HomologyGroup { free_rank: 0, torsion: vec![BigInt::from(2)] });
        assert!(c.homology(0).unwrap().is_zero());
        assert!(matches!(c.homology(2), Err(ComplexError::OutOfRange { .. })));
        assert!(matches!(c.homology(-1), Err(ComplexError::OutOfRange { .. })));
    }

    #[test]
    fn mod_p_both_ways() {
        let c = times(2);
        let f = c.reduce_mod_p(2).unwrap();
        assert_eq!(f.dimension(0).unwrap(), 1);
        assert_eq!(f.dimension(1).unwrap(), 1);
        assert_eq!(c.mod_p_dimension_uct(0, 2).unwrap(), 1);
        assert_eq!(c.mod_p_dimension_uct(1, 2).unwrap(), 1);
        let f = times(3).reduce_mod_p(2).unwrap();
        assert_eq!(f.dimension(0).unwrap(), 0);
        assert_eq!(f.dimension(1).unwrap(), 0);
        assert_eq!(c.reduce_mod_p(4).unwrap_err(), ComplexError::NotPrime(4));
    }

    #[test]
    fn square_nonzero_names_the_element() {
        let d0 = SparseMatrix::<i64>::from_dense(&[vec![1]]);
        let d1 = SparseMatrix::<i64>::from_dense(&[vec![1]]);
        let err = TruncatedComplex::new(
            0,
            vec![vec!["x".into()], vec!["y".into()], vec!["z".into()]],
            vec![d0, d1],
        )
        .unwrap_err();
        assert_eq!(err, ComplexError::SquareNonZero { degree: 0, label: "x".into() });
    }

    #[test]
    fn permuting_a_basis_keeps_homology() {
        let d0 = SparseMatrix::<i64>::from_dense(&[vec![2, 0], vec![0, 0], vec![0, 3]]);
        let d1 = SparseMatrix::<i64>::zeros(0, 3);
        let c = TruncatedComplex::new(
            0,
            vec![vec!["a".into(), "b".into()], vec!["x".into(), "y".into(), "z".into()], vec![]],
            vec![d0, d1],
        )
        .unwrap();
        let p = c.permute_basis(1, &[2, 0, 1]);
        assert_eq!(c.homology(1).unwrap(), p.homology(1).unwrap());
        let q = c.permute_basis(0, &[1, 0]);
        assert_eq!(c.homology(0).unwrap(), q.homology(0).unwrap());
        assert_eq!(c.homology(1).unwrap().torsion, vec![6]);
    }
}
