//! The thin free loop model `C*K ⊗̃ 𝓑C*K` in the commutative case: the
//! Hochschild differential, the cyclic operator `S` and the power map.

use crate::dga::bar::{bar_differential, shuffle, words_of_bar_degree};
use crate::dga::{BarWord, Gen, PresentedAlgebra, UNIT};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Basis element `y ⊗ sx_1|…|sx_n` with `y` a generator or the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlsKey {
    pub y: Gen,
    pub word: BarWord,
}

pub type FlsElem<T> = LinComb<FlsKey, T>;

impl FlsKey {
    pub fn new(y: Gen, word: BarWord) -> Self {
        FlsKey { y, word }
    }

    pub fn degree<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> i64 {
        a.degree(self.y) + self.word.bar_degree(a)
    }

    pub fn label<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> String {
        format!("{}⊗{}", a.label(self.y), self.word.display(a))
    }
}

/// Basis of the free loop model in degree `n`.
pub fn fls_basis<T: Scalar>(a: &PresentedAlgebra<T>, n: i64) -> Vec<FlsKey> {
    let mut out = Vec::new();
    for y in 0..a.len() {
        let rest = n - a.degree(y);
        if rest >= 0 {
            out.extend(words_of_bar_degree(a, rest).into_iter().map(|w| FlsKey::new(y, w)));
        }
    }
    out
}

fn tensor<T: Scalar>(y: &LinComb<Gen, T>, word: &BarWord, scale: &T, out: &mut FlsElem<T>) {
    for (g, c) in y {
        out.add_term(FlsKey::new(*g, word.clone()), c.clone() * scale.clone());
    }
}

/// The Hochschild differential
/// `dy⊗c + (-1)^y y⊗d_𝓑c + (-1)^y [yx_1⊗sx_2|…|sx_n - (-1)^N yx_n⊗sx_1|…|sx_{n-1}]`
/// with `N = (1+|x_n|)(n-1+Σ_{j<n}|x_j|)`.
pub fn hochschild_differential<T: Scalar>(a: &PresentedAlgebra<T>, e: &FlsKey) -> FlsElem<T> {
    let mut out = FlsElem::zero();
    let x = e.word.letters();
    let n = x.len();
    let sy = T::sign(a.degree(e.y) % 2 != 0);
    tensor(&a.d(e.y), &e.word, &T::one(), &mut out);
    for (w, c) in bar_differential(a, &e.word).iter() {
        out.add_term(FlsKey::new(e.y, w.clone()), sy.clone() * c.clone());
    }
    if n >= 1 {
        tensor(&a.mul(e.y, x[0]), &e.word.slice(1, n), &sy, &mut out);
        let exponent = (1 + a.degree(x[n - 1])) * (n as i64 - 1 + x[..n - 1].iter().map(|&g| a.degree(g)).sum::<i64>());
        let sign = -(sy * T::sign(exponent % 2 != 0));
        tensor(&a.mul(e.y, x[n - 1]), &e.word.slice(0, n - 1), &sign, &mut out);
    }
    out
}

/// The cyclic operator: `S(y⊗1) = 1⊗sy`, `S(1⊗c) = 0`, and otherwise the sum
/// of the cyclic rotations `sx_j|…|sx_n|sy|sx_1|…|sx_{j-1}` signed by the
/// Koszul sign of the rotation from `sy|sx_1|…|sx_n`.
pub fn cyclic_s<T: Scalar>(a: &PresentedAlgebra<T>, e: &FlsKey) -> FlsElem<T> {
    let mut out = FlsElem::zero();
    if e.y == UNIT {
        return out;
    }
    let x = e.word.letters();
    let n = x.len();
    let bd = |g: Gen| a.degree(g) - 1;
    for j in 0..=n {
        // rotation with the block sy|sx_1..sx_j moved behind sx_{j+1}..sx_n
        let moved: i64 = bd(e.y) + x[..j].iter().map(|&g| bd(g)).sum::<i64>();
        let fixed: i64 = x[j..].iter().map(|&g| bd(g)).sum();
        let mut w = x[j..].to_vec();
        w.push(e.y);
        w.extend_from_slice(&x[..j]);
        out.add_term(FlsKey::new(UNIT, BarWord(w)), T::sign(moved * fixed % 2 != 0));
    }
    out
}

/// The power-map model `a⊗c ↦ a⊗Σ c'⋆c''` over all deconcatenations of `c`.
pub fn power_map<T: Scalar>(a: &PresentedAlgebra<T>, e: &FlsKey) -> FlsElem<T> {
    let mut out = FlsElem::zero();
    for (l, r) in e.word.deconcatenate() {
        for (w, c) in shuffle(a, &l, &r).iter() {
            out.add_term(FlsKey::new(e.y, w.clone()), c.clone());
        }
    }
    out
}

/// Extends a basis-level operator linearly.
pub fn apply<T: Scalar, F: Fn(&FlsKey) -> FlsElem<T>>(x: &FlsElem<T>, f: F) -> FlsElem<T> {
    x.map_linear(|k| f(k))
}

/// Untwisted left action `(y⊗1)·(x⊗c) = yx⊗c`.
pub fn left_multiply<T: Scalar>(a: &PresentedAlgebra<T>, y: Gen, x: &FlsElem<T>) -> FlsElem<T> {
    let mut out = FlsElem::zero();
    for (k, c) in x {
        tensor(&a.mul(y, k.y), &k.word, c, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::presets;
    use crate::Integer;

    #[test]
    fn odd_sphere_differential_vanishes() {
        let a = presets::sphere(3);
        for n in 0..=16 {
            for k in fls_basis(&a, n) {
                assert!(hochschild_differential(&a, &k).is_zero(), "{}", k.label(&a));
            }
        }
    }

    #[test]
    fn basis_sizes_for_the_three_sphere() {
        let a = presets::sphere(3);
        let sizes: Vec<usize> = (0..=12).map(|n| fls_basis(&a, n).len()).collect();
        assert_eq!(sizes, vec![1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn cyclic_operator_examples() {
        let a = presets::sphere(3);
        let z = a.lookup("z").unwrap();
        assert_eq!(
            cyclic_s(&a, &FlsKey::new(z, BarWord::empty())),
            FlsElem::basis(FlsKey::new(UNIT, BarWord::letter(z)))
        );
        assert!(cyclic_s(&a, &FlsKey::new(UNIT, BarWord::repeated(z, 3))).is_zero());
        // S(z⊗sz(m)) = (m+1)·1⊗sz(m+1)
        for m in 0..6 {
            let s = cyclic_s(&a, &FlsKey::new(z, BarWord::repeated(z, m)));
            assert_eq!(s, FlsElem::from_term(FlsKey::new(UNIT, BarWord::repeated(z, m + 1)), Integer::from(m as i64 + 1)));
        }
    }

    #[test]
    fn two_letter_cyclic_operator_is_a_shuffle() {
        let a = presets::wedge(&[3, 4]);
        let (x, y) = (a.lookup("x1").unwrap(), a.lookup("x2").unwrap());
        let s = cyclic_s(&a, &FlsKey::new(x, BarWord::letter(y)));
        let sh = shuffle(&a, &BarWord::letter(x), &BarWord::letter(y));
        let expect: FlsElem<Integer> = sh.map_keys(|w| Some((FlsKey::new(UNIT, w.clone()), Integer::from(1))));
        assert_eq!(s, expect);
    }

    #[test]
    fn power_map_on_divided_powers() {
        let a = presets::sphere(3);
        let z = a.lookup("z").unwrap();
        for m in 0..8 {
            let k = FlsKey::new(UNIT, BarWord::repeated(z, m));
            assert_eq!(power_map(&a, &k), FlsElem::from_term(k.clone(), Integer::from(1i64 << m)));
        }
        let k = FlsKey::new(z, BarWord::empty());
        assert_eq!(power_map(&a, &k), FlsElem::basis(k));
    }
}
