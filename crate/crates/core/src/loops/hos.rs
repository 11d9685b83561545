use super::fls::{cyclic_s, hochschild_differential, FlsKey};
use crate::dga::PresentedAlgebra;
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// `υ^k ⊗ e` with `|υ| = 2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HosKey {
    pub k: u32,
    pub fls: FlsKey,
}

pub type HosElem<T> = LinComb<HosKey, T>;

impl HosKey {
    pub fn new(k: u32, fls: FlsKey) -> Self {
        HosKey { k, fls }
    }

    pub fn degree<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> i64 {
        2 * self.k as i64 + self.fls.degree(a)
    }

    pub fn label<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> String {
        match self.k {
            0 => format!("1⊗{}", self.fls.label(a)),
            1 => format!("υ⊗{}", self.fls.label(a)),
            k => format!("υ^{k}⊗{}", self.fls.label(a)),
        }
    }
}

/// `D̃(υ^k⊗e) = υ^k⊗⌣d(e) + υ^{k+1}⊗S(e)`.
pub fn hos_differential<T: Scalar>(a: &PresentedAlgebra<T>, e: &HosKey) -> HosElem<T> {
    let mut out = HosElem::zero();
    for (f, c) in hochschild_differential(a, &e.fls).iter() {
        out.add_term(HosKey::new(e.k, f.clone()), c.clone());
    }
    for (f, c) in cyclic_s(a, &e.fls).iter() {
        out.add_term(HosKey::new(e.k + 1, f.clone()), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::{presets, BarWord, UNIT};
    use crate::Integer;

    #[test]
    fn odd_sphere_formulas() {
        let a = presets::sphere(3);
        let z = a.lookup("z").unwrap();
        for k in 0..4 {
            for m in 0..5 {
                let e = HosKey::new(k, FlsKey::new(z, BarWord::repeated(z, m)));
                let expect = HosElem::from_term(
                    HosKey::new(k + 1, FlsKey::new(UNIT, BarWord::repeated(z, m + 1))),
                    Integer::from(m as i64 + 1),
                );
                assert_eq!(hos_differential(&a, &e), expect);
                let e = HosKey::new(k, FlsKey::new(UNIT, BarWord::repeated(z, m)));
                assert!(hos_differential(&a, &e).is_zero());
            }
        }
    }
}
