//! The abstract homotopy-orbit complex `Λυ⊗A` of a complex `(A, d♯)` with
//! operators `ω_k` of degree `-(2k+1)`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::graded::{ComplexError, SparseMatrix, TruncatedComplex};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmegaError {
    #[error("{map} in degree {degree} has shape {found:?}, expected {expected:?}")]
    Shape { map: String, degree: usize, found: (usize, usize), expected: (usize, usize) },
    #[error("d♯d♯({element}) != 0 (degree {degree})")]
    SquareNonZero { degree: usize, element: String },
    #[error("relation for ω_{k} fails on {element} (degree {degree})")]
    Relation { k: usize, degree: usize, element: String },
    #[error("orbit complex through degree {requested} needs A through degree {requested}, but A stops at {available}")]
    Truncation { requested: i64, available: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// `(A, d♯)` on degrees `0..=top` with `ω_0..ω_K`.
///
/// `d[m]: A^m → A^{m+1}` for `m < top`; `omega[k][m]: A^m → A^{m-2k-1}` for
/// every `m ≤ top`, with zero rows when the target degree is negative.
#[derive(Clone, Debug)]
pub struct OmegaComplexSpec<T> {
    labels: Vec<Vec<String>>,
    d: Vec<SparseMatrix<T>>,
    omega: Vec<Vec<SparseMatrix<T>>>,
}

/// `υ^n⊗a` with `a` the `index`-th basis element of `A^degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitKey {
    pub n: u32,
    pub degree: usize,
    pub index: usize,
}

fn add_into<T: Scalar>(acc: &mut SparseMatrix<T>, m: &SparseMatrix<T>) {
    for (i, j, v) in m.entries() {
        acc.add_to(i, j, v.clone());
    }
}

impl<T: Scalar> OmegaComplexSpec<T> {
    /// Checks shapes, `d♯² = 0` and `[d♯, ω_j] = -Σ_{k+l=j-1} ω_l ω_k` on
    /// every `A^m` with `m < top`.
    pub fn new(
        labels: Vec<Vec<String>>,
        d: Vec<SparseMatrix<T>>,
        omega: Vec<Vec<SparseMatrix<T>>>,
    ) -> Result<Self, OmegaError> {
        assert!(!labels.is_empty(), "A needs at least one degree");
        let spec = OmegaComplexSpec { labels, d, omega };
        spec.check_shapes()?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn dim(&self, m: i64) -> usize {
        if m < 0 || m as usize > self.top() {
            0
        } else {
            self.labels[m as usize].len()
        }
    }

    pub fn omega_count(&self) -> usize {
        self.omega.len()
    }

    pub fn omega(&self, k: usize, m: usize) -> Option<&SparseMatrix<T>> {
        self.omega.get(k).map(|o| &o[m])
    }

    pub fn d(&self, m: usize) -> &SparseMatrix<T> {
        &self.d[m]
    }

    fn check_shapes(&self) -> Result<(), OmegaError> {
        let top = self.top();
        let shape = |map: String, degree: usize, m: &SparseMatrix<T>, expected: (usize, usize)| {
            if (m.rows(), m.cols()) == expected {
                Ok(())
            } else {
                Err(OmegaError::Shape { map, degree, found: (m.rows(), m.cols()), expected })
            }
        };
        if self.d.len() != top {
            return Err(OmegaError::Shape {
                map: "d♯".into(),
                degree: self.d.len(),
                found: (self.d.len(), 0),
                expected: (top, 0),
            });
        }
        for (m, dm) in self.d.iter().enumerate() {
            shape("d♯".into(), m, dm, (self.dim(m as i64 + 1), self.dim(m as i64)))?;
        }
        for (k, om) in self.omega.iter().enumerate() {
            if om.len() != top + 1 {
                return Err(OmegaError::Shape {
                    map: format!("ω_{k}"),
                    degree: om.len(),
                    found: (om.len(), 0),
                    expected: (top + 1, 0),
                });
            }
            for (m, o) in om.iter().enumerate() {
                let target = m as i64 - 2 * k as i64 - 1;
                shape(format!("ω_{k}"), m, o, (self.dim(target), self.dim(m as i64)))?;
            }
        }
        Ok(())
    }

    fn element(&self, m: usize, j: usize) -> String {
        self.labels[m][j].clone()
    }

    fn first_nonzero_column(mat: &SparseMatrix<T>) -> Option<usize> {
        mat.entries().map(|(_, j, _)| j).min()
    }

    /// `d♯ω_j + ω_j d♯ + Σ_{k+l=j-1} ω_l ω_k` on `A^m`, for `m < top`; the
    /// operators past `ω_K` are zero.
    pub fn relation_defect(&self, j: usize, m: usize) -> SparseMatrix<T> {
        let target = m as i64 - 2 * j as i64;
        let mut acc = SparseMatrix::zeros(self.dim(target), self.dim(m as i64));
        if let Some(om) = self.omega.get(j) {
            if target >= 1 {
                add_into(&mut acc, &self.d[target as usize - 1].mul(&om[m]));
            }
            if m < self.top() {
                add_into(&mut acc, &om[m + 1].mul(&self.d[m]));
            }
        }
        for k in 0..j {
            let l = j - 1 - k;
            let mid = m as i64 - 2 * k as i64 - 1;
            if mid >= 0 && k < self.omega.len() && l < self.omega.len() {
                add_into(&mut acc, &self.omega[l][mid as usize].mul(&self.omega[k][m]));
            }
        }
        acc
    }

    fn validate(&self) -> Result<(), OmegaError> {
        for m in 0..self.top().saturating_sub(1) {
            let dd = self.d[m + 1].mul(&self.d[m]);
            if let Some(j) = Self::first_nonzero_column(&dd) {
                return Err(OmegaError::SquareNonZero { degree: m, element: self.element(m, j) });
            }
        }
        // quadratic terms survive up to j = 2K-1
        for k in 0..2 * self.omega.len() {
            for m in 0..self.top() {
                if let Some(j) = Self::first_nonzero_column(&self.relation_defect(k, m)) {
                    return Err(OmegaError::Relation { k, degree: m, element: self.element(m, j) });
                }
            }
        }
        Ok(())
    }

    pub fn key_degree(&self, key: &OrbitKey) -> i64 {
        2 * key.n as i64 + key.degree as i64
    }

    pub fn key_label(&self, key: &OrbitKey) -> String {
        let u = match key.n {
            0 => "1".to_string(),
            1 => "υ".to_string(),
            n => format!("υ^{n}"),
        };
        format!("{u}⊗{}", self.labels[key.degree][key.index])
    }

    /// `D♯(υ^n⊗f) = υ^n⊗d♯f + Σ_k υ^{n+k+1}⊗ω_k(f)`.
    ///
    /// The sum runs over every `k` with `2k+1 ≤ |f|`; this is the same as the
    /// bound `⌈(|f|-1)/2⌉`, whose extra term for even `|f|` lands in degree -1.
    pub fn orbit_differential(&self, key: &OrbitKey) -> LinComb<OrbitKey, T> {
        let mut out = LinComb::zero();
        let m = key.degree;
        if m < self.top() {
            for (i, v) in self.d[m].column(key.index) {
                out.add_term(OrbitKey { n: key.n, degree: m + 1, index: i }, v);
            }
        }
        for (k, om) in self.omega.iter().enumerate() {
            if 2 * k + 1 > m {
                break;
            }
            for (i, v) in om[m].column(key.index) {
                out.add_term(OrbitKey { n: key.n + k as u32 + 1, degree: m - 2 * k - 1, index: i }, v);
            }
        }
        out
    }

    pub fn orbit_basis(&self, total: i64) -> Vec<OrbitKey> {
        let mut out = Vec::new();
        for m in 0..=self.top() {
            let rest = total - m as i64;
            if rest < 0 || rest % 2 != 0 {
                continue;
            }
            for index in 0..self.labels[m].len() {
                out.push(OrbitKey { n: (rest / 2) as u32, degree: m, index });
            }
        }
        out
    }

    /// `(Λυ⊗A, D♯)` on total degrees `0..=max_degree`; needs `max_degree ≤ top`.
    pub fn orbit_complex(&self, max_degree: i64) -> Result<TruncatedComplex<T>, OmegaError> {
        if max_degree < 0 || max_degree as usize > self.top() {
            return Err(OmegaError::Truncation { requested: max_degree, available: self.top() });
        }
        let bases = (0..=max_degree).map(|t| self.orbit_basis(t)).collect();
        Ok(TruncatedComplex::assemble(0, bases, |k| self.orbit_differential(k), |k| self.key_label(k))?)
    }
}

type Dense = Vec<Vec<i64>>;

fn dense_zero(n: usize) -> Dense {
    vec![vec![0; n]; n]
}

fn dense_identity(n: usize) -> Dense {
    let mut m = dense_zero(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = dense_zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn dense_add(a: &mut Dense, b: &Dense, s: i64) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += s * y;
        }
    }
}

/// A random valid spec on degrees `0..=top`.
///
/// A random complex `(A, d)` is twisted by `Φ = 1 + Σ_{k=1}^{twists} υ^k φ_k`
/// with random `φ_k` of degree `-2k`: the differential `Φ(1⊗d)Φ^{-1}` squares
/// to zero and its `υ^{k+1}` component is `ω_k`. Every `ω_k` that can act on
/// `A^{≤top}` is kept.
pub fn random_spec<T: Scalar>(seed: u64, top: usize, twists: usize) -> OmegaComplexSpec<T> {
    let mut rng = StdRng::seed_from_u64(seed);
    // one extra degree so that the ω's in degree `top` see the whole of d
    let degrees = top + 2;
    let dims: Vec<usize> = (0..degrees).map(|_| rng.random_range(1..=3)).collect();
    let offsets: Vec<usize> = dims.iter().scan(0, |acc, &n| {
        let o = *acc;
        *acc += n;
        Some(o)
    })
    .collect();
    let total: usize = dims.iter().sum();

    // a complex in normal form: basis vector `r_{m-1}+i` of A^m hits `c·e_i` in A^{m+1}
    let mut d = dense_zero(total);
    let mut prev_rank = 0;
    for m in 0..degrees - 1 {
        let free = dims[m] - prev_rank;
        let rank = rng.random_range(0..=free.min(dims[m + 1]));
        for i in 0..rank {
            d[offsets[m + 1] + i][offsets[m] + prev_rank + i] = rng.random_range(1..=3);
        }
        prev_rank = rank;
    }
    // conjugate by a unimodular change of basis inside each degree
    for _ in 0..2 * total {
        let m = rng.random_range(0..degrees);
        if dims[m] < 2 {
            continue;
        }
        let i = rng.random_range(0..dims[m]);
        let j = (i + rng.random_range(1..dims[m])) % dims[m];
        let c = rng.random_range(-2..=2);
        let (i, j) = (offsets[m] + i, offsets[m] + j);
        let mut e = dense_identity(total);
        e[i][j] = c;
        let mut e_inv = dense_identity(total);
        e_inv[i][j] = -c;
        d = dense_mul(&dense_mul(&e, &d), &e_inv);
    }

    let omegas = top / 2 + 1;
    let mut phi = vec![dense_identity(total)];
    for k in 1..=omegas {
        if k > twists {
            phi.push(dense_zero(total));
            continue;
        }
        let mut p = dense_zero(total);
        for m in 2 * k..degrees {
            for a in 0..dims[m] {
                for b in 0..dims[m - 2 * k] {
                    p[offsets[m - 2 * k] + b][offsets[m] + a] = rng.random_range(-1..=1);
                }
            }
        }
        phi.push(p);
    }
    let mut psi = vec![dense_identity(total)];
    for k in 1..=omegas {
        let mut p = dense_zero(total);
        for i in 1..=k {
            dense_add(&mut p, &dense_mul(&phi[i], &psi[k - i]), -1);
        }
        psi.push(p);
    }
    let mut big_d = Vec::new();
    for j in 0..=omegas {
        let mut dj = dense_zero(total);
        for a in 0..=j {
            dense_add(&mut dj, &dense_mul(&dense_mul(&phi[a], &d), &psi[j - a]), 1);
        }
        big_d.push(dj);
    }

    let block = |m: &Dense, target: i64, source: usize| -> SparseMatrix<T> {
        if target < 0 {
            return SparseMatrix::zeros(0, dims[source]);
        }
        let target = target as usize;
        let mut out = SparseMatrix::zeros(dims[target], dims[source]);
        for i in 0..dims[target] {
            for j in 0..dims[source] {
                out.set(i, j, T::from_int(m[offsets[target] + i][offsets[source] + j]));
            }
        }
        out
    };
    let labels = (0..=top).map(|m| (0..dims[m]).map(|i| format!("a{m}.{i}")).collect()).collect();
    let d_blocks = (0..top).map(|m| block(&big_d[0], m as i64 + 1, m)).collect();
    let omega = (0..omegas)
        .map(|k| (0..=top).map(|m| block(&big_d[k + 1], m as i64 - 2 * k as i64 - 1, m)).collect())
        .collect();
    OmegaComplexSpec::new(labels, d_blocks, omega).expect("conjugated differential satisfies the relations")
}
