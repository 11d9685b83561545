use std::collections::BTreeMap;
use std::fmt;

use crate::lincomb::LinComb;
use crate::sign::permutation_parity;

/// A cube `I^n → S¹`, `t ↦ e^{2πi f(t)}`, with `f` a multilinear integer
/// polynomial. Monomials are bitmasks over the variables `t_0..t_{n-1}`; the
/// constant term is dropped since it only shifts `f` by an integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircleCube {
    dim: usize,
    poly: BTreeMap<u64, i64>,
}

pub type CircleChain = LinComb<CircleCube, i64>;
pub type CubeTensor = LinComb<(CircleCube, CircleCube), i64>;

/// Largest cube dimension representable by the bitmask encoding.
pub const MAX_CUBE_DIM: usize = 63;

impl CircleCube {
    /// Builds `f = Σ c·Π t_i` from `(variables, coefficient)` pairs.
    pub fn new(dim: usize, terms: &[(&[usize], i64)]) -> Self {
        assert!(dim <= MAX_CUBE_DIM, "cube dimension {dim} too large");
        let mut poly = BTreeMap::new();
        for (vars, c) in terms {
            let mut mask = 0u64;
            for &v in *vars {
                assert!(v < dim, "variable t{v} outside a {dim}-cube");
                assert!(mask & (1 << v) == 0, "exponent must be multilinear");
                mask |= 1 << v;
            }
            *poly.entry(mask).or_insert(0) += c;
        }
        Self::from_poly(dim, poly)
    }

    fn from_poly(dim: usize, mut poly: BTreeMap<u64, i64>) -> Self {
        poly.remove(&0);
        poly.retain(|_, c| *c != 0);
        CircleCube { dim, poly }
    }

    /// The basepoint 0-cube, unit of the product.
    pub fn point() -> Self {
        CircleCube { dim: 0, poly: BTreeMap::new() }
    }

    /// `T_0(t) = e^{2πit}`.
    pub fn loop_generator() -> Self {
        Self::new(1, &[(&[0], 1)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Monomials as `(bitmask, coefficient)`.
    pub fn monomials(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.poly.iter().map(|(&m, &c)| (m, c))
    }

    /// Degenerate iff the exponent does not depend on some variable.
    pub fn is_degenerate(&self) -> bool {
        let used = self.poly.keys().fold(0u64, |acc, m| acc | m);
        used.count_ones() as usize != self.dim
    }

    /// Substitutes `t_i = eps` and renumbers the remaining variables.
    pub fn face(&self, i: usize, eps: bool) -> CircleCube {
        assert!(i < self.dim);
        let low = (1u64 << i) - 1;
        let mut poly = BTreeMap::new();
        for (&m, &c) in &self.poly {
            if m & (1 << i) != 0 && !eps {
                continue;
            }
            let rest = m & !(1 << i);
            let renum = (rest & low) | ((rest >> 1) & !low);
            *poly.entry(renum).or_insert(0) += c;
        }
        Self::from_poly(self.dim - 1, poly)
    }

    /// Keeps the variables in `keep` (a bitmask), setting the others to `value`.
    fn restrict(&self, keep: u64, value: bool) -> CircleCube {
        let mut out = self.clone();
        for i in (0..self.dim).rev() {
            if keep & (1 << i) == 0 {
                out = out.face(i, value);
            }
        }
        out
    }

    /// `σ(T)`: exponent `t_0·f(t_1,…,t_n)`, using the lift of `f` with
    /// vanishing constant term.
    pub fn sigma(&self) -> CircleCube {
        let poly = self.poly.iter().map(|(&m, &c)| ((m << 1) | 1, c)).collect();
        Self::from_poly(self.dim + 1, poly)
    }

    /// Pointwise product in `S¹`: exponent `f(t_1..t_m) + g(t_{m+1}..t_{m+n})`.
    pub fn product(&self, other: &CircleCube) -> CircleCube {
        let mut poly = self.poly.clone();
        for (&m, &c) in &other.poly {
            *poly.entry(m << self.dim).or_insert(0) += c;
        }
        Self::from_poly(self.dim + other.dim, poly)
    }

    /// Renames `t_i` to `t_{perm[i]}`.
    pub fn relabel(&self, perm: &[usize]) -> CircleCube {
        assert_eq!(perm.len(), self.dim);
        let poly = self
            .poly
            .iter()
            .map(|(&m, &c)| {
                let mask = (0..self.dim).filter(|i| m & (1 << i) != 0).fold(0u64, |acc, i| acc | (1 << perm[i]));
                (mask, c)
            })
            .collect();
        Self::from_poly(self.dim, poly)
    }
}

impl fmt::Display for CircleCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, &c) in &self.poly {
            let vars: String = (0..self.dim).filter(|i| m & (1 << i) != 0).map(|i| format!("t{i}")).collect();
            match (first, c) {
                (true, 1) => write!(f, "{vars}")?,
                (true, -1) => write!(f, "-{vars}")?,
                (true, c) => write!(f, "{c}{vars}")?,
                (false, 1) => write!(f, "+{vars}")?,
                (false, -1) => write!(f, "-{vars}")?,
                (false, c) if c > 0 => write!(f, "+{c}{vars}")?,
                (false, c) => write!(f, "{c}{vars}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CircleCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}: {}]", self.dim, self)
    }
}

fn push_cube(out: &mut CircleChain, c: CircleCube, coeff: i64) {
    if !c.is_degenerate() {
        out.add_term(c, coeff);
    }
}

/// Normalized cubical boundary `Σ_{i=1}^n (-1)^i (A_i - B_i)`, with `A_i` the
/// face `t_i = 0` and `B_i` the face `t_i = 1` (variables counted from 1).
pub fn boundary(c: &CircleCube) -> CircleChain {
    let mut out = CircleChain::zero();
    for i in 0..c.dim() {
        let s = if i % 2 == 0 { -1 } else { 1 };
        push_cube(&mut out, c.face(i, false), s);
        push_cube(&mut out, c.face(i, true), -s);
    }
    out
}

pub fn boundary_chain(x: &CircleChain) -> CircleChain {
    x.map_linear(boundary)
}

pub fn sigma_chain(x: &CircleChain) -> CircleChain {
    let mut out = CircleChain::zero();
    for (c, k) in x {
        push_cube(&mut out, c.sigma(), *k);
    }
    out
}

pub fn product_chain(x: &CircleChain, y: &CircleChain) -> CircleChain {
    let mut out = CircleChain::zero();
    for (a, i) in x {
        for (b, j) in y {
            push_cube(&mut out, a.product(b), i * j);
        }
    }
    out
}

/// Serre diagonal `Σ_{H⊔K} ±λ_H T ⊗ μ_K T`: the front factor keeps the
/// variables of `H` and sets those of `K` to 0, the back factor keeps `K` and
/// sets `H` to 1; the sign is that of the shuffle `(H, K)`.
pub fn serre_diagonal(c: &CircleCube) -> CubeTensor {
    let n = c.dim();
    let mut out = CubeTensor::zero();
    for h in 0..(1u64 << n) {
        let k = !h & ((1u64 << n) - 1);
        let front = c.restrict(h, false);
        let back = c.restrict(k, true);
        if front.is_degenerate() || back.is_degenerate() {
            continue;
        }
        let perm: Vec<usize> = (0..n).filter(|i| h & (1 << i) != 0).chain((0..n).filter(|i| k & (1 << i) != 0)).collect();
        let s = if permutation_parity(&vec![1; n], &perm) { -1 } else { 1 };
        out.add_term((front, back), s);
    }
    out
}

/// The diagonal with the terms `T⊗1` and `1⊗T` removed.
pub fn reduced_diagonal(c: &CircleCube) -> CubeTensor {
    let mut out = serre_diagonal(c);
    if c.dim() > 0 {
        out.add_term((c.clone(), CircleCube::point()), -1);
        out.add_term((CircleCube::point(), c.clone()), -1);
    }
    out
}

pub fn diagonal_chain(x: &CircleChain, reduced: bool) -> CubeTensor {
    let mut out = CubeTensor::zero();
    for (c, k) in x {
        let d = if reduced { reduced_diagonal(c) } else { serre_diagonal(c) };
        out.add_scaled(&d, k);
    }
    out
}

/// `(d⊗1 + 1⊗d)` on a tensor, with the Koszul sign on the second factor.
pub fn tensor_boundary(x: &CubeTensor) -> CubeTensor {
    let mut out = CubeTensor::zero();
    for ((a, b), k) in x {
        for (da, i) in boundary(a).iter() {
            out.add_term((da.clone(), b.clone()), k * i);
        }
        let s = if a.dim() % 2 == 0 { 1 } else { -1 };
        for (db, j) in boundary(b).iter() {
            out.add_term((a.clone(), db.clone()), s * k * j);
        }
    }
    out
}
