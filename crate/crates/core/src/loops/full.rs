//! The twisted extension `Ω𝓑A ⊙ 𝓑A` with its differential `D̄`, in the
//! strictly commutative case where `(1⊗a)(1⊗b) = 1⊗a⋆b`.
//!
//! Elements are stored in the basis `ω⊗c` of the free right `Ω𝓑A`-module on
//! `1⊗𝓑A`, with `ω⊗c = (-1)^{|ω||c|}(1⊗c)(ω⊗1)`.

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use super::fls::{FlsElem, FlsKey};
use crate::dga::bar::{bar_differential, shuffle};
use crate::dga::{AlgElem, BarElement, BarWord, PresentedAlgebra, UNIT};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// `s⁻¹w_1 ⋯ s⁻¹w_k ⊗ c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FullKey {
    pub omega: Vec<BarWord>,
    pub word: BarWord,
}

pub type FullElem<T> = LinComb<FullKey, T>;

impl FullKey {
    pub fn new(omega: Vec<BarWord>, word: BarWord) -> Self {
        FullKey { omega, word }
    }

    /// `1⊗c`.
    pub fn bar(word: BarWord) -> Self {
        FullKey { omega: Vec::new(), word }
    }

    pub fn label<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> String {
        let om: Vec<String> = self.omega.iter().map(|w| format!("s⁻¹[{}]", w.display(a))).collect();
        let om = if om.is_empty() { "1".to_string() } else { om.join("·") };
        format!("{om}⊗{}", self.word.display(a))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FullLoopError {
    #[error("{label} has degree {degree}; its differential lies beyond the truncation {max}")]
    Truncation { label: String, degree: i64, max: i64 },
}

/// Evaluator for `D̄`, the left action of `Ω𝓑A` on `1⊗𝓑A` and the
/// linearization `ε⊗Id`, valid up to total degree `max_degree`.
pub struct FullLoop<'a, T: Scalar> {
    a: &'a PresentedAlgebra<T>,
    max_degree: i64,
    act_cache: RefCell<HashMap<(BarWord, BarWord), FullElem<T>>>,
}

impl<'a, T: Scalar> FullLoop<'a, T> {
    pub fn new(a: &'a PresentedAlgebra<T>, max_degree: i64) -> Self {
        FullLoop { a, max_degree, act_cache: RefCell::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &PresentedAlgebra<T> {
        self.a
    }

    fn bd(&self, w: &BarWord) -> i64 {
        w.bar_degree(self.a)
    }

    fn omega_degree(&self, omega: &[BarWord]) -> i64 {
        omega.iter().map(|w| self.bd(w) + 1).sum()
    }

    pub fn degree(&self, k: &FullKey) -> i64 {
        self.omega_degree(&k.omega) + self.bd(&k.word)
    }

    /// `s⁻¹(x)⊗c` for a bar element `x`.
    fn desuspend_tensor(x: &BarElement<T>, c: &BarWord) -> FullElem<T> {
        x.map_keys(|w| Some((FullKey::new(vec![w.clone()], c.clone()), T::one())))
    }

    /// `(s⁻¹w⊗1)·(1⊗c)`, defined recursively on the length of `c`:
    /// `s⁻¹w⊗c - Σ_j [(s⁻¹(w⋆c'_j)⊗1)·(1⊗c''_j) - (-1)^{|c'_j||c''_j|} s⁻¹(w⋆c''_j)⊗c'_j]`.
    /// The minus sign inside the bracket is forced by `(s⁻¹w)·((1⊗u)(1⊗v)) = ((s⁻¹w)·(1⊗u))·(1⊗v)`.
    pub fn act(&self, w: &BarWord, c: &BarWord) -> FullElem<T> {
        if let Some(v) = self.act_cache.borrow().get(&(w.clone(), c.clone())) {
            return v.clone();
        }
        let n = c.len();
        let mut out = FullElem::basis(FullKey::new(vec![w.clone()], c.clone()));
        for j in 1..n {
            let (c1, c2) = (c.slice(0, j), c.slice(j, n));
            for (u, k) in shuffle(self.a, w, &c1).iter() {
                out.add_scaled(&self.act(u, &c2), &-k.clone());
            }
            let sign = T::sign(self.bd(&c1) * self.bd(&c2) % 2 != 0);
            out.add_scaled(&Self::desuspend_tensor(&shuffle(self.a, w, &c2), &c1), &sign);
        }
        self.act_cache.borrow_mut().insert((w.clone(), c.clone()), out.clone());
        out
    }

    fn sign(&self, e: i64) -> T {
        T::sign(e % 2 != 0)
    }

    /// `(ω'⊗c)·(ω⊗1) = (-1)^{|ω||c|} ω'ω⊗c`.
    fn right_mul(&self, x: &FullElem<T>, omega: &[BarWord]) -> FullElem<T> {
        let od = self.omega_degree(omega);
        x.map_keys(|k| {
            let mut m = k.omega.clone();
            m.extend_from_slice(omega);
            Some((FullKey::new(m, k.word.clone()), self.sign(od * self.bd(&k.word))))
        })
    }

    /// `(1⊗u)·x`.
    fn bar_left_mul(&self, u: &BarWord, x: &FullElem<T>) -> FullElem<T> {
        let mut out = FullElem::zero();
        for (k, c) in x {
            let od = self.omega_degree(&k.omega);
            for (v, e) in shuffle(self.a, u, &k.word).iter() {
                let s = self.sign(od * (self.bd(&k.word) + self.bd(v)));
                out.add_term(FullKey::new(k.omega.clone(), v.clone()), c.clone() * e.clone() * s);
            }
        }
        out
    }

    /// `(ω⊗1)·x` for a monomial `ω`, acting one generator at a time from the right.
    fn omega_left_mul(&self, omega: &[BarWord], x: &FullElem<T>) -> FullElem<T> {
        let mut cur = x.clone();
        for w in omega.iter().rev() {
            let mut next = FullElem::zero();
            for (k, c) in &cur {
                let s = self.sign(self.omega_degree(&k.omega) * self.bd(&k.word));
                let acted = self.right_mul(&self.act(w, &k.word), &k.omega);
                next.add_scaled(&acted, &(c.clone() * s));
            }
            cur = next;
        }
        cur
    }

    /// The product of the twisted extension, with `(1⊗a)(1⊗b) = 1⊗a⋆b`.
    pub fn multiply(&self, x: &FullElem<T>, y: &FullElem<T>) -> FullElem<T> {
        let mut out = FullElem::zero();
        for (k, c) in x {
            let s = self.sign(self.omega_degree(&k.omega) * self.bd(&k.word));
            let t = self.bar_left_mul(&k.word, &self.omega_left_mul(&k.omega, y));
            out.add_scaled(&t, &(c.clone() * s));
        }
        out
    }

    /// The cobar differential on `Ω𝓑A`, on a monomial.
    pub fn d_omega(&self, omega: &[BarWord]) -> LinComb<Vec<BarWord>, T> {
        let mut out = LinComb::zero();
        let mut prefix = 0;
        for (i, w) in omega.iter().enumerate() {
            let outer = T::sign(prefix % 2 != 0);
            let splice = |mid: Vec<BarWord>| {
                let mut m = omega[..i].to_vec();
                m.extend(mid);
                m.extend_from_slice(&omega[i + 1..]);
                m
            };
            for (v, k) in bar_differential(self.a, w).iter() {
                out.add_term(splice(vec![v.clone()]), -(outer.clone() * k.clone()));
            }
            for j in 1..w.len() {
                let (l, r) = (w.slice(0, j), w.slice(j, w.len()));
                let s = T::sign(self.bd(&l) % 2 != 0);
                out.add_term(splice(vec![l, r]), outer.clone() * s);
            }
            prefix += self.bd(w) + 1;
        }
        out
    }

    fn check(&self, k: &FullKey) -> Result<(), FullLoopError> {
        let degree = self.degree(k);
        if degree >= self.max_degree {
            return Err(FullLoopError::Truncation { label: k.label(self.a), degree, max: self.max_degree });
        }
        Ok(())
    }

    fn d_bar_unit(&self, c: &BarWord) -> FullElem<T> {
        let n = c.len();
        let mut out: FullElem<T> = bar_differential(self.a, c)
            .map_keys(|w| Some((FullKey::bar(w.clone()), T::one())));
        for j in 1..n {
            let (c1, c2) = (c.slice(0, j), c.slice(j, n));
            out.add_assign(&self.act(&c1, &c2));
            let sign = T::sign(self.bd(&c1) * self.bd(&c2) % 2 != 0);
            out.add_term(FullKey::new(vec![c2], c1), -sign);
        }
        out
    }

    /// `D̄` on a basis element, extended from `1⊗𝓑A` as a right-module derivation.
    pub fn differential(&self, k: &FullKey) -> Result<FullElem<T>, FullLoopError> {
        self.check(k)?;
        let od = self.omega_degree(&k.omega);
        let cd = self.bd(&k.word);
        let mut out = FullElem::zero();
        for (t, coef) in self.d_bar_unit(&k.word).iter() {
            let sign = T::sign((od * cd + od * self.bd(&t.word)) % 2 != 0);
            let mut omega = t.omega.clone();
            omega.extend_from_slice(&k.omega);
            out.add_term(FullKey::new(omega, t.word.clone()), sign * coef.clone());
        }
        for (m, coef) in self.d_omega(&k.omega).iter() {
            out.add_term(FullKey::new(m.clone(), k.word.clone()), coef.clone());
        }
        Ok(out)
    }

    pub fn differential_elem(&self, x: &FullElem<T>) -> Result<FullElem<T>, FullLoopError> {
        let mut out = FullElem::zero();
        for (k, c) in x {
            out.add_scaled(&self.differential(k)?, c);
        }
        Ok(out)
    }

    /// The counit `Ω𝓑A → A`: `s⁻¹(sx) ↦ x`, longer words to zero.
    pub fn epsilon(&self, omega: &[BarWord]) -> AlgElem<T> {
        let mut out = AlgElem::basis(UNIT);
        for w in omega {
            if w.len() != 1 {
                return AlgElem::zero();
            }
            out = self.a.mul_elem(&out, &AlgElem::basis(w.letters()[0]));
        }
        out
    }

    /// `ε⊗Id` onto the thin model.
    pub fn linearize(&self, x: &FullElem<T>) -> FlsElem<T> {
        let mut out = FlsElem::zero();
        for (k, c) in x {
            for (y, e) in self.epsilon(&k.omega).iter() {
                out.add_term(FlsKey::new(*y, k.word.clone()), c.clone() * e.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::bar::words_up_to;
    use crate::dga::presets;
    use crate::loops::fls::hochschild_differential;
    use crate::Integer;

    #[test]
    fn single_letter_has_no_correction() {
        let a = presets::small_dga();
        let f = FullLoop::new(&a, 20);
        for g in a.positive() {
            let c = BarWord::letter(g);
            let expect: FullElem<Integer> =
                bar_differential(&a, &c).map_keys(|w| Some((FullKey::bar(w.clone()), Integer::from(1))));
            assert_eq!(f.differential(&FullKey::bar(c)).unwrap(), expect);
        }
    }

    #[test]
    fn linearization_matches_hochschild() {
        for a in [presets::truncated_polynomial(2, 3), presets::small_dga(), presets::wedge(&[2, 3])] {
            let f = FullLoop::new(&a, 12);
            for c in words_up_to(&a, 8) {
                let lin = f.linearize(&f.differential(&FullKey::bar(c.clone())).unwrap());
                assert_eq!(lin, hochschild_differential(&a, &FlsKey::new(UNIT, c.clone())), "{}", c.display(&a));
            }
        }
    }

    #[test]
    fn squares_to_zero() {
        let a = presets::truncated_polynomial(2, 3);
        let f = FullLoop::new(&a, 12);
        for c in words_up_to(&a, 8) {
            let d = f.differential(&FullKey::bar(c.clone())).unwrap();
            assert!(f.differential_elem(&d).unwrap().is_zero(), "{}", c.display(&a));
        }
    }

    #[test]
    fn left_action_respects_the_bar_product() {
        for a in [presets::sphere(2), presets::truncated_polynomial(2, 3), presets::small_dga()] {
            let f = FullLoop::new(&a, 20);
            let ws = words_up_to(&a, 4);
            for w in ws.iter().filter(|w| !w.is_empty()) {
                for u in &ws {
                    for v in &ws {
                        if u.bar_degree(&a) + v.bar_degree(&a) > 4 {
                            continue;
                        }
                        let sw = FullElem::basis(FullKey::new(vec![w.clone()], BarWord::empty()));
                        let (eu, ev) = (FullElem::basis(FullKey::bar(u.clone())), FullElem::basis(FullKey::bar(v.clone())));
                        let left = f.multiply(&f.multiply(&sw, &eu), &ev);
                        let right = f.multiply(&sw, &f.multiply(&eu, &ev));
                        assert_eq!(left, right, "{} {} {}", w.display(&a), u.display(&a), v.display(&a));
                    }
                }
            }
        }
    }

    #[test]
    fn leibniz_rule() {
        let a = presets::truncated_polynomial(2, 3);
        let f = FullLoop::new(&a, 12);
        let ws = words_up_to(&a, 4);
        let mut elems: Vec<FullElem<Integer>> = ws.iter().map(|w| FullElem::basis(FullKey::bar(w.clone()))).collect();
        elems.extend(ws.iter().filter(|w| !w.is_empty()).map(|w| FullElem::basis(FullKey::new(vec![w.clone()], BarWord::empty()))));
        for x in &elems {
            for y in &elems {
                let deg = f.degree(x.keys().next().unwrap());
                if deg + f.degree(y.keys().next().unwrap()) > 7 {
                    continue;
                }
                let lhs = f.differential_elem(&f.multiply(x, y)).unwrap();
                let mut rhs = f.multiply(&f.differential_elem(x).unwrap(), y);
                rhs.add_scaled(&f.multiply(x, &f.differential_elem(y).unwrap()), &Integer::from(if deg % 2 == 0 { 1 } else { -1 }));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn truncation_is_reported() {
        let a = presets::sphere(3);
        let z = a.lookup("z").unwrap();
        let f = FullLoop::new(&a, 4);
        let k = FullKey::bar(BarWord::repeated(z, 2));
        assert!(matches!(f.differential(&k), Err(FullLoopError::Truncation { degree: 4, .. })));
    }
}
