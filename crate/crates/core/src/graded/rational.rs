//! Dense linear algebra over ℚ, used to read off induced maps on the free
//! part of homology.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::complex::{ComplexError, TruncatedComplex};
use super::matrix::SparseMatrix;

pub type QMatrix = Vec<Vec<BigRational>>;

fn to_q(m: &SparseMatrix<BigInt>) -> QMatrix {
    m.to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the null space of `m` (vectors of length `cols`).
pub fn kernel_basis(m: &QMatrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

fn rank_of(vectors: &[Vec<BigRational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut m: QMatrix = vectors.to_vec();
    rref(&mut m).len()
}

/// Solves `Σ x_i v_i = y` for given independent vectors `v_i`.
fn coordinates(vectors: &[Vec<BigRational>], y: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = y.len();
    let k = vectors.len();
    let mut aug: QMatrix = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = vectors.iter().map(|v| v[r].clone()).collect();
            row.push(y[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][k].clone();
    }
    Some(x)
}

/// Representatives of a basis of `H^n ⊗ ℚ` together with a spanning set of
/// boundaries, both as vectors in `C^n ⊗ ℚ`.
pub fn free_homology_basis(
    c: &TruncatedComplex<BigInt>,
    n: i64,
) -> Result<(Vec<Vec<BigRational>>, Vec<Vec<BigRational>>), ComplexError> {
    c.homology(n)?;
    let dim = c.dim(n);
    let d_out = to_q(c.differential(n).expect("reportable degree"));
    let cycles = kernel_basis(&d_out, dim);
    let mut boundaries: Vec<Vec<BigRational>> = Vec::new();
    if let Some(d_in) = c.differential(n - 1) {
        let cols = d_in.cols();
        let q = to_q(d_in);
        for j in 0..cols {
            let v: Vec<BigRational> = q.iter().map(|row| row[j].clone()).collect();
            let mut trial = boundaries.clone();
            trial.push(v.clone());
            if rank_of(&trial) > boundaries.len() {
                boundaries.push(v);
            }
        }
    }
    let mut span = boundaries.clone();
    let mut reps = Vec::new();
    for z in cycles {
        let mut trial = span.clone();
        trial.push(z.clone());
        if rank_of(&trial) > span.len() {
            span.push(z.clone());
            reps.push(z);
        }
    }
    Ok((reps, boundaries))
}

/// Matrix of the map induced on `H^n ⊗ ℚ` by a chain endomorphism `f: C^n → C^n`,
/// in the representative basis of [`free_homology_basis`]. Column `j` is the
/// image of the `j`-th class.
pub fn induced_endomorphism(
    c: &TruncatedComplex<BigInt>,
    f: &SparseMatrix<BigInt>,
    n: i64,
) -> Result<QMatrix, ComplexError> {
    let (reps, boundaries) = free_homology_basis(c, n)?;
    let fq = to_q(f);
    let mut frame = boundaries.clone();
    frame.extend(reps.iter().cloned());
    let nb = boundaries.len();
    let mut out = vec![vec![BigRational::zero(); reps.len()]; reps.len()];
    for (j, h) in reps.iter().enumerate() {
        let y: Vec<BigRational> = fq
            .iter()
            .map(|row| row.iter().zip(h).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        let x = coordinates(&frame, &y).expect("chain map sends cycles to cycles");
        for i in 0..reps.len() {
            out[i][j] = x[nb + i].clone();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let m = vec![vec![q(1), q(2), q(3)]];
        let k = kernel_basis(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = &v[0] + &(&v[1] * q(2)) + &v[2] * q(3);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn induced_map_of_scalar_multiplication() {
        let d = SparseMatrix::<BigInt>::zeros(0, 2);
        let c = TruncatedComplex::new(0, vec![vec!["a".into(), "b".into()], vec![]], vec![d]).unwrap();
        let f = SparseMatrix::from_dense(&[
            vec![BigInt::from(3), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(3)],
        ]);
        let m = induced_endomorphism(&c, &f, 0).unwrap();
        assert_eq!(m, vec![vec![q(3), q(0)], vec![q(1), q(3)]]);
    }
}
