//! The bar construction of a presented algebra: words `sx_1|…|sx_n`, the
//! bar differential, the shuffle product and deconcatenation.

use std::fmt;

use super::algebra::{AlgElem, Gen, PresentedAlgebra, UNIT};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::sign::permutation_parity;

/// A word `sx_1|…|sx_n` of positive-degree generators; the empty word is `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BarWord(pub Vec<Gen>);

pub type BarElement<T> = LinComb<BarWord, T>;

impl BarWord {
    pub fn empty() -> Self {
        BarWord(Vec::new())
    }

    pub fn letter(g: Gen) -> Self {
        BarWord(vec![g])
    }

    pub fn repeated(g: Gen, m: usize) -> Self {
        BarWord(vec![g; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &BarWord) -> BarWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BarWord(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> BarWord {
        BarWord(self.0[from..to].to_vec())
    }

    /// All `n+1` splittings, from `(1, w)` to `(w, 1)`.
    pub fn deconcatenate(&self) -> Vec<(BarWord, BarWord)> {
        (0..=self.len()).map(|i| (self.slice(0, i), self.slice(i, self.len()))).collect()
    }

    pub fn bar_degree<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> i64 {
        self.0.iter().map(|&g| a.degree(g) - 1).sum()
    }

    pub fn display<'a, T: Scalar>(&'a self, a: &'a PresentedAlgebra<T>) -> impl fmt::Display + 'a {
        DisplayWord(self, a)
    }
}

struct DisplayWord<'a, T>(&'a BarWord, &'a PresentedAlgebra<T>);

impl<T: Scalar> fmt::Display for DisplayWord<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0 .0.iter().map(|&g| format!("s{}", self.1.label(g))).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Bar differential: the coderivation extending the linear part
/// `sa ↦ -s(da)`, `sa|sb ↦ (-1)^{|a|+1} s(ab)`.
pub fn bar_differential<T: Scalar>(a: &PresentedAlgebra<T>, w: &BarWord) -> BarElement<T> {
    let mut out = BarElement::zero();
    let letters = w.letters();
    let mut prefix = 0i64;
    for i in 0..letters.len() {
        let x = letters[i];
        let koszul = T::sign(prefix % 2 != 0);
        for (y, c) in a.d(x).iter() {
            let mut v = letters.to_vec();
            v[i] = *y;
            out.add_term(BarWord(v), -(koszul.clone() * c.clone()));
        }
        if i + 1 < letters.len() {
            let merge = koszul.clone() * T::sign((a.degree(x) + 1) % 2 != 0);
            for (y, c) in a.mul(x, letters[i + 1]).iter() {
                debug_assert_ne!(*y, UNIT);
                let mut v = letters[..i].to_vec();
                v.push(*y);
                v.extend_from_slice(&letters[i + 2..]);
                out.add_term(BarWord(v), merge.clone() * c.clone());
            }
        }
        prefix += a.degree(x) - 1;
    }
    out
}

pub fn bar_differential_elem<T: Scalar>(a: &PresentedAlgebra<T>, e: &BarElement<T>) -> BarElement<T> {
    e.map_linear(|w| bar_differential(a, w))
}

/// `s` applied to an algebra element: a combination of one-letter words.
pub fn suspend<T: Scalar>(x: &AlgElem<T>) -> BarElement<T> {
    x.map_keys(|g| (*g != UNIT).then(|| (BarWord::letter(*g), T::one())))
}

/// Shuffle product with Koszul signs from the bar degrees of the letters.
pub fn shuffle<T: Scalar>(a: &PresentedAlgebra<T>, u: &BarWord, v: &BarWord) -> BarElement<T> {
    shuffle_with(u, v, |g| a.degree(g) - 1)
}

/// Shuffle product for letters with an arbitrary degree function.
pub fn shuffle_with<T: Scalar, F: Fn(Gen) -> i64>(u: &BarWord, v: &BarWord, deg: F) -> BarElement<T> {
    let (m, n) = (u.len(), v.len());
    let letters: Vec<Gen> = u.0.iter().chain(v.0.iter()).copied().collect();
    let degrees: Vec<i64> = letters.iter().map(|&g| deg(g)).collect();
    let mut out = BarElement::zero();
    let mut perm = Vec::with_capacity(m + n);
    shuffle_rec(m, n, 0, 0, &mut perm, &mut |perm: &[usize]| {
        let odd = permutation_parity(&degrees, perm);
        let word = BarWord(perm.iter().map(|&k| letters[k]).collect());
        out.add_term(word, T::sign(odd));
    });
    out
}

fn shuffle_rec(m: usize, n: usize, i: usize, j: usize, perm: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if i == m && j == n {
        emit(perm);
        return;
    }
    if i < m {
        perm.push(i);
        shuffle_rec(m, n, i + 1, j, perm, emit);
        perm.pop();
    }
    if j < n {
        perm.push(m + j);
        shuffle_rec(m, n, i, j + 1, perm, emit);
        perm.pop();
    }
}

pub fn shuffle_elem<T: Scalar>(a: &PresentedAlgebra<T>, x: &BarElement<T>, y: &BarElement<T>) -> BarElement<T> {
    let mut out = BarElement::zero();
    for (u, cu) in x {
        for (v, cv) in y {
            out.add_scaled(&shuffle(a, u, v), &(cu.clone() * cv.clone()));
        }
    }
    out
}

/// All words over the positive generators with bar degree exactly `n`.
pub fn words_of_bar_degree<T: Scalar>(a: &PresentedAlgebra<T>, n: i64) -> Vec<BarWord> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    words_rec(a, n, &mut cur, &mut out);
    out
}

fn words_rec<T: Scalar>(a: &PresentedAlgebra<T>, left: i64, cur: &mut Vec<Gen>, out: &mut Vec<BarWord>) {
    if left == 0 {
        out.push(BarWord(cur.clone()));
        return;
    }
    for g in a.positive() {
        let d = a.degree(g) - 1;
        if d <= left {
            cur.push(g);
            words_rec(a, left - d, cur, out);
            cur.pop();
        }
    }
}

/// All words with bar degree at most `n`, ordered by bar degree.
pub fn words_up_to<T: Scalar>(a: &PresentedAlgebra<T>, n: i64) -> Vec<BarWord> {
    (0..=n).flat_map(|k| words_of_bar_degree(a, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::presets;
    use crate::Integer;

    #[test]
    fn deconcatenation_counts() {
        assert_eq!(BarWord::empty().deconcatenate(), vec![(BarWord::empty(), BarWord::empty())]);
        let w = BarWord(vec![1, 2]);
        assert_eq!(
            w.deconcatenate(),
            vec![
                (BarWord::empty(), w.clone()),
                (BarWord::letter(1), BarWord::letter(2)),
                (w.clone(), BarWord::empty())
            ]
        );
        for m in 0..7 {
            assert_eq!(BarWord::repeated(1, m).deconcatenate().len(), m + 1);
        }
    }

    #[test]
    fn truncated_polynomial_bar_differential() {
        let a = presets::truncated_polynomial(2, 3);
        let w = a.lookup("w").unwrap();
        let w2 = a.lookup("w^2").unwrap();
        let d = bar_differential(&a, &BarWord(vec![w, w]));
        assert_eq!(d, BarElement::from_term(BarWord::letter(w2), Integer::from(-1)));
        let s = presets::sphere(3);
        assert!(bar_differential(&s, &BarWord::letter(1)).is_zero());
    }

    #[test]
    fn shuffle_of_odd_letters() {
        let a = presets::wedge(&[2, 4]);
        let (x, y) = (a.lookup("x1").unwrap(), a.lookup("x2").unwrap());
        let p = shuffle(&a, &BarWord::letter(x), &BarWord::letter(y));
        let mut expect = BarElement::<Integer>::basis(BarWord(vec![x, y]));
        expect.add_term(BarWord(vec![y, x]), Integer::from(-1));
        assert_eq!(p, expect);
        let unit = shuffle(&a, &BarWord::letter(x), &BarWord::empty());
        assert_eq!(unit, BarElement::basis(BarWord::letter(x)));
    }
}
