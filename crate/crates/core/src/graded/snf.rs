use std::collections::BTreeMap;

use super::matrix::SparseMatrix;
use crate::scalar::EuclideanScalar;

/// Invariant factors `d_1 | d_2 | … | d_r` (all positive, units included) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub invariant_factors: Vec<T>,
    pub rank: usize,
}

impl<T: EuclideanScalar> SmithForm<T> {
    /// Factors strictly greater than one.
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form by sparse elimination with a smallest-magnitude pivot.
///
/// The matrix is diagonalized first; the diagonal is then brought into
/// divisibility-chain form by replacing pairs with `(gcd, lcm)`.
pub fn smith_normal_form<T: EuclideanScalar>(m: &SparseMatrix<T>) -> SmithForm<T> {
    let mut rows: Vec<BTreeMap<usize, T>> = m.clone().into_rows();
    let mut live_rows: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    let mut diagonal: Vec<T> = Vec::new();

    loop {
        let Some((pr, pc)) = smallest_entry(&rows, &live_rows) else { break };
        let p = rows[pr][&pc].clone();

        // Clear column pc with row operations, leaving remainders.
        let mut dirty = false;
        for &i in &live_rows {
            if i == pr {
                continue;
            }
            let Some(a) = rows[i].get(&pc).cloned() else { continue };
            let q = a.div_floor(&p);
            if !q.is_zero() {
                let pivot_row = rows[pr].clone();
                axpy(&mut rows[i], &pivot_row, &-q);
            }
            if rows[i].contains_key(&pc) {
                dirty = true;
            }
        }
        if !dirty {
            // Column pc is now zero outside pr; column operations only touch row pr.
            let row = &mut rows[pr];
            let others: Vec<usize> = row.keys().copied().filter(|&j| j != pc).collect();
            for j in others {
                let r = row[&j].mod_floor(&p);
                if r.is_zero() {
                    row.remove(&j);
                } else {
                    row.insert(j, r);
                    dirty = true;
                }
            }
        }
        if dirty {
            live_rows.retain(|&i| !rows[i].is_empty());
            continue;
        }
        diagonal.push(p.abs());
        rows[pr].clear();
        live_rows.retain(|&i| !rows[i].is_empty());
    }

    let rank = diagonal.len();
    normalize_chain(&mut diagonal);
    SmithForm { invariant_factors: diagonal, rank }
}

fn smallest_entry<T: EuclideanScalar>(
    rows: &[BTreeMap<usize, T>],
    live_rows: &[usize],
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for &i in live_rows {
        for (j, v) in &rows[i] {
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                let unit = a.is_one();
                best = Some((i, *j, a));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn axpy<T: EuclideanScalar>(target: &mut BTreeMap<usize, T>, src: &BTreeMap<usize, T>, q: &T) {
    for (j, v) in src {
        let e = target.entry(*j).or_insert_with(T::zero);
        *e += v.clone() * q.clone();
        if e.is_zero() {
            target.remove(j);
        }
    }
}

/// Rewrites a list of positive integers into a divisibility chain with the
/// same product and the same multiset of prime-power parts.
pub fn normalize_chain<T: EuclideanScalar>(d: &mut [T]) {
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn snf(rows: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let m = SparseMatrix::<i64>::from_dense(rows);
        let s = smith_normal_form(&m);
        (s.invariant_factors, s.rank)
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(snf(&[vec![1, 0], vec![0, 1]]), (vec![1, 1], 2));
        assert_eq!(snf(&[vec![0, 0], vec![0, 0], vec![0, 0]]), (vec![], 0));
        assert_eq!(snf(&[]), (vec![], 0));
    }

    #[test]
    fn two_by_two_by_hand() {
        // [[2,4],[6,8]]: R2 -= 3R1 -> [[2,4],[0,-4]]; C2 -= 2C1 -> diag(2,-4).
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), (vec![2, 4], 2));
    }

    #[test]
    fn non_chain_diagonal_is_normalized() {
        assert_eq!(snf(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]), (vec![2, 2, 60], 3));
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 2));
    }

    #[test]
    fn works_over_bigint() {
        let m = SparseMatrix::<BigInt>::from_dense(&[
            vec![BigInt::from(3), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(5)],
        ]);
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors, vec![BigInt::from(1), BigInt::from(15)]);
        assert_eq!(s.torsion(), vec![BigInt::from(15)]);
    }
}
