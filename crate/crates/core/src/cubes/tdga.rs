//! The abstract dg algebra `⟨𝒯⟩` on generators `T̂_n` of degree `2n+1` and
//! the semifree resolution `Γv⊗⟨𝒯⟩`.

use super::cube::{product_chain, CircleChain, CircleCube};
use crate::lincomb::LinComb;

/// A monomial `T̂_{n_1}⋯T̂_{n_k}`; the empty word is the unit.
pub type TWord = Vec<u32>;
pub type TElem = LinComb<TWord, i64>;

pub fn t_degree(w: &[u32]) -> i64 {
    w.iter().map(|&n| 2 * n as i64 + 1).sum()
}

/// `dT̂_n = Σ_{i=1}^n T̂_{i-1}T̂_{n-i}`, extended as a derivation.
pub fn t_differential(w: &[u32]) -> TElem {
    let mut out = TElem::zero();
    for (pos, &n) in w.iter().enumerate() {
        // every generator is odd, so the Koszul sign is the parity of the position
        let s = if pos % 2 == 0 { 1 } else { -1 };
        for i in 1..=n {
            let mut v = w[..pos].to_vec();
            v.push(i - 1);
            v.push(n - i);
            v.extend_from_slice(&w[pos + 1..]);
            out.add_term(v, s);
        }
    }
    out
}

pub fn t_differential_elem(x: &TElem) -> TElem {
    x.map_linear(|w| t_differential(w))
}

/// Sends `T̂_n` to the realized chain `T_n`; `family` must reach the largest index used.
pub fn realize(w: &[u32], family: &[CircleChain]) -> CircleChain {
    let mut out = CircleChain::basis(CircleCube::point());
    for &n in w {
        out = product_chain(&out, &family[n as usize]);
    }
    out
}

/// `v(n)⊗T̂_{n_1}⋯T̂_{n_k}` in `Γv⊗⟨𝒯⟩`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResKey {
    pub v: u32,
    pub word: TWord,
}

pub type ResElem = LinComb<ResKey, i64>;

impl ResKey {
    pub fn degree(&self) -> i64 {
        2 * self.v as i64 + t_degree(&self.word)
    }

    pub fn label(&self) -> String {
        let w: String = if self.word.is_empty() {
            "1".to_string()
        } else {
            self.word.iter().map(|n| format!("T{n}")).collect::<Vec<_>>().join("·")
        };
        format!("v({})⊗{w}", self.v)
    }
}

/// `∂̃(v(n)⊗a) = Σ_{k=0}^{n-1} (-1)^k v(n-k-1)⊗T̂_k·a + v(n)⊗da`.
///
/// The alternating sign is needed for `∂̃² = 0` over the integers; without it
/// the square is `2·Σ v(n-m-1)⊗dT̂_m`.
pub fn resolution_differential(k: &ResKey) -> ResElem {
    let mut out = ResElem::zero();
    for j in 0..k.v {
        let mut w = vec![j];
        w.extend_from_slice(&k.word);
        out.add_term(ResKey { v: k.v - j - 1, word: w }, if j % 2 == 0 { 1 } else { -1 });
    }
    for (w, c) in t_differential(&k.word).iter() {
        out.add_term(ResKey { v: k.v, word: w.clone() }, *c);
    }
    out
}

pub fn resolution_differential_elem(x: &ResElem) -> ResElem {
    x.map_linear(resolution_differential)
}

/// All words of total degree exactly `deg`.
pub fn t_words_of_degree(deg: i64) -> Vec<TWord> {
    if deg == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut n = 0u32;
    while 2 * n as i64 + 1 <= deg {
        for mut rest in t_words_of_degree(deg - 2 * n as i64 - 1) {
            rest.insert(0, n);
            out.push(rest);
        }
        n += 1;
    }
    out
}

/// Basis of `Γv⊗⟨𝒯⟩` in total degree `deg` with `v`-filtration at most `v_max`.
pub fn resolution_basis(deg: i64, v_max: u32) -> Vec<ResKey> {
    let mut out = Vec::new();
    for v in 0..=v_max {
        let rest = deg - 2 * v as i64;
        if rest < 0 {
            break;
        }
        out.extend(t_words_of_degree(rest).into_iter().map(|word| ResKey { v, word }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::cube::boundary_chain;
    use crate::cubes::family::t_family;

    #[test]
    fn generator_differentials() {
        assert!(t_differential(&[0]).is_zero());
        let mut expect = TElem::basis(vec![0, 1]);
        expect.add_term(vec![1, 0], 1);
        assert_eq!(t_differential(&[2]), expect);
    }

    #[test]
    fn square_zero_on_short_words() {
        for deg in 0..=12 {
            for w in t_words_of_degree(deg) {
                if w.len() <= 3 && w.iter().all(|&n| n <= 3) {
                    assert!(t_differential_elem(&t_differential(&w)).is_zero(), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn realization_is_a_chain_map() {
        let ts = t_family(3).unwrap();
        for deg in 1..=9 {
            for w in t_words_of_degree(deg) {
                if w.iter().any(|&n| n > 3) {
                    continue;
                }
                let lhs = boundary_chain(&realize(&w, &ts));
                let mut rhs = CircleChain::zero();
                for (u, c) in t_differential(&w).iter() {
                    rhs.add_scaled(&realize(u, &ts), c);
                }
                assert_eq!(lhs, rhs, "{w:?}");
            }
        }
    }

    #[test]
    fn resolution_low_filtration() {
        let d1 = resolution_differential(&ResKey { v: 1, word: vec![] });
        assert_eq!(d1, ResElem::basis(ResKey { v: 0, word: vec![0] }));
        let d2 = resolution_differential(&ResKey { v: 2, word: vec![] });
        let mut expect = ResElem::basis(ResKey { v: 1, word: vec![0] });
        expect.add_term(ResKey { v: 0, word: vec![1] }, -1);
        assert_eq!(d2, expect);
    }

    #[test]
    fn resolution_squares_to_zero() {
        for deg in 0..=12 {
            for k in resolution_basis(deg, 4) {
                assert!(resolution_differential_elem(&resolution_differential(&k)).is_zero(), "{}", k.label());
            }
        }
    }

    #[test]
    fn unsigned_display_does_not_square_to_zero() {
        // v(2)⊗1 ↦ v(1)⊗T̂_0 + 1⊗T̂_1 exactly as displayed
        let mut d = ResElem::basis(ResKey { v: 1, word: vec![0] });
        d.add_term(ResKey { v: 0, word: vec![1] }, 1);
        let mut dd = ResElem::zero();
        for (k, c) in d.iter() {
            let mut e = ResElem::zero();
            for j in 0..k.v {
                let mut w = vec![j];
                w.extend_from_slice(&k.word);
                e.add_term(ResKey { v: k.v - j - 1, word: w }, 1);
            }
            for (w, x) in t_differential(&k.word).iter() {
                e.add_term(ResKey { v: k.v, word: w.clone() }, *x);
            }
            dd.add_scaled(&e, c);
        }
        assert_eq!(dd, ResElem::from_term(ResKey { v: 0, word: vec![0, 0] }, 2));
    }
}
