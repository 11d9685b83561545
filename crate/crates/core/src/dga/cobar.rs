use super::coalgebra::{CoGen, FiniteCoalgebra};
use super::graded::GradedAlgebra;
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// A monomial `s⁻¹c_1 ⋯ s⁻¹c_k` in the cobar construction; empty is `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CobarWord(pub Vec<CoGen>);

/// The cobar construction `ΩC = (T s⁻¹C_+, d_Ω)` of a finite coalgebra.
#[derive(Clone, Debug)]
pub struct Cobar<T: Scalar> {
    coalgebra: FiniteCoalgebra<T>,
}

impl<T: Scalar> Cobar<T> {
    pub fn new(coalgebra: FiniteCoalgebra<T>) -> Self {
        Cobar { coalgebra }
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra<T> {
        &self.coalgebra
    }

    fn letter_degree(&self, c: CoGen) -> i64 {
        self.coalgebra.degree(c) + 1
    }

    /// `d_Ω(s⁻¹c) = -s⁻¹(dc) + Σ (-1)^{|c'|} s⁻¹c' s⁻¹c''` over `Δ̄c`.
    pub fn d_generator(&self, c: CoGen) -> LinComb<CobarWord, T> {
        let mut out = LinComb::zero();
        for (x, k) in self.coalgebra.d(c).iter() {
            out.add_term(CobarWord(vec![*x]), -k.clone());
        }
        for (&(a, b), k) in self.coalgebra.reduced_coproduct(c).iter() {
            let sign = T::sign(self.coalgebra.degree(a) % 2 != 0);
            out.add_term(CobarWord(vec![a, b]), sign * k.clone());
        }
        out
    }
}

/// The cobar differential extended as a derivation of concatenation.
pub fn cobar_differential<T: Scalar>(omega: &Cobar<T>, w: &CobarWord) -> LinComb<CobarWord, T> {
    let mut out = LinComb::zero();
    let mut prefix = 0i64;
    for (i, &c) in w.0.iter().enumerate() {
        let sign = T::sign(prefix % 2 != 0);
        for (mid, k) in omega.d_generator(c).iter() {
            let mut v = w.0[..i].to_vec();
            v.extend_from_slice(&mid.0);
            v.extend_from_slice(&w.0[i + 1..]);
            out.add_term(CobarWord(v), sign.clone() * k.clone());
        }
        prefix += omega.letter_degree(c);
    }
    out
}

impl<T: Scalar> GradedAlgebra<T> for Cobar<T> {
    type Basis = CobarWord;

    fn degree(&self, b: &CobarWord) -> i64 {
        b.0.iter().map(|&c| self.letter_degree(c)).sum()
    }

    fn unit(&self) -> CobarWord {
        CobarWord::default()
    }

    fn basis_of_degree(&self, n: i64) -> Vec<CobarWord> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec<T: Scalar>(o: &Cobar<T>, left: i64, cur: &mut Vec<CoGen>, out: &mut Vec<CobarWord>) {
            if left == 0 {
                out.push(CobarWord(cur.clone()));
                return;
            }
            for c in o.coalgebra.positive() {
                let d = o.letter_degree(c);
                if d <= left {
                    cur.push(c);
                    rec(o, left - d, cur, out);
                    cur.pop();
                }
            }
        }
        if n >= 0 {
            rec(self, n, &mut cur, &mut out);
        }
        out
    }

    fn mul(&self, a: &CobarWord, b: &CobarWord) -> LinComb<CobarWord, T> {
        let mut v = a.0.clone();
        v.extend_from_slice(&b.0);
        LinComb::basis(CobarWord(v))
    }

    fn d(&self, a: &CobarWord) -> LinComb<CobarWord, T> {
        cobar_differential(self, a)
    }

    fn label(&self, a: &CobarWord) -> String {
        if a.0.is_empty() {
            return "1".into();
        }
        a.0.iter().map(|&c| format!("s⁻¹{}", self.coalgebra.label(c))).collect::<Vec<_>>().join("·")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::presets;
    use crate::Integer;

    #[test]
    fn primitive_cocycle_is_a_cocycle() {
        let o = Cobar::new(presets::primitive_coalgebra(2));
        assert!(cobar_differential(&o, &CobarWord(vec![1])).is_zero());
    }

    #[test]
    fn coproduct_term_sign() {
        // Δ̄c4 = c2⊗c2, |c2| even: d(s⁻¹c4) = +s⁻¹c2·s⁻¹c2
        let o = Cobar::new(presets::divided_coalgebra());
        let d = cobar_differential(&o, &CobarWord(vec![2]));
        assert_eq!(d, LinComb::from_term(CobarWord(vec![1, 1]), Integer::from(1)));
    }

    #[test]
    fn square_zero_on_rank_three() {
        let o = Cobar::new(presets::rank_three_coalgebra());
        for n in 0..=10 {
            for w in o.basis_of_degree(n) {
                let dd = o.d_elem(&o.d(&w));
                assert!(dd.is_zero(), "d² ≠ 0 on {}", o.label(&w));
            }
        }
    }
}
