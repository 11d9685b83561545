use std::collections::BTreeMap;

/// Sparse matrix over the prime field `F_p`, entries stored as residues in `[1, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, u64>>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i].get(&j).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        let v = v % self.p;
        if v == 0 {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.rows);
        let p = self.p as u128;
        let mut out = FpMatrix::zeros(self.p, self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, u128> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    let e = acc.entry(*j).or_insert(0);
                    *e = (*e + (*a as u128) * (*b as u128)) % p;
                }
            }
            for (j, v) in acc {
                out.set(i, j, v as u64);
            }
        }
        out
    }

    /// Rank by Gaussian elimination over `F_p`.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut rows: Vec<BTreeMap<usize, u64>> =
            self.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut rank = 0;
        while let Some(idx) = rows.iter().position(|r| !r.is_empty()) {
            let pivot = rows.swap_remove(idx);
            let (&pc, &pv) = pivot.iter().next().expect("nonempty row");
            let inv = mod_inverse(pv, p);
            for r in rows.iter_mut() {
                if let Some(&a) = r.get(&pc) {
                    let f = mul_mod(a, inv, p);
                    for (j, v) in &pivot {
                        let cur = r.get(j).copied().unwrap_or(0);
                        let new = (cur + p - mul_mod(f, *v, p)) % p;
                        if new == 0 {
                            r.remove(j);
                        } else {
                            r.insert(*j, new);
                        }
                    }
                }
            }
            rows.retain(|r| !r.is_empty());
            rank += 1;
        }
        rank
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_mod_small_primes() {
        let mut m = FpMatrix::zeros(2, 2, 2);
        m.set(0, 0, 2);
        m.set(1, 1, 3);
        assert_eq!(m.rank(), 1);
        let mut m = FpMatrix::zeros(3, 2, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 2);
        m.set(1, 1, 1);
        // det = 1 - 4 = -3 = 0 mod 3
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
