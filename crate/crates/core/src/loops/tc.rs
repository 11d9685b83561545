use super::fls::{hochschild_differential, power_map, FlsKey};
use super::hos::{hos_differential, HosKey};
use crate::dga::PresentedAlgebra;
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Basis of the mapping cone: an fls element, or `s(υ^k⊗e)` one degree lower.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TcKey {
    Base(FlsKey),
    Shift(HosKey),
}

pub type TcElem<T> = LinComb<TcKey, T>;

impl TcKey {
    pub fn degree<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> i64 {
        match self {
            TcKey::Base(f) => f.degree(a),
            TcKey::Shift(h) => h.degree(a) - 1,
        }
    }

    pub fn label<T: Scalar>(&self, a: &PresentedAlgebra<T>) -> String {
        match self {
            TcKey::Base(f) => f.label(a),
            TcKey::Shift(h) => format!("s({})", h.label(a)),
        }
    }
}

/// The cone differential:
/// `D(x⊗c) = ⌣d(x⊗c)`,
/// `D(s(1⊗x⊗c)) = x⊗c - P(x⊗c) - s(1⊗⌣d(x⊗c) + υ⊗S(x⊗c))`,
/// `D(s(υ^k⊗x⊗c)) = -s(υ^k⊗⌣d(x⊗c) + υ^{k+1}⊗S(x⊗c))` for `k > 0`.
pub fn tc_cone_differential<T: Scalar>(a: &PresentedAlgebra<T>, e: &TcKey) -> TcElem<T> {
    let mut out = TcElem::zero();
    match e {
        TcKey::Base(f) => {
            for (g, c) in hochschild_differential(a, f).iter() {
                out.add_term(TcKey::Base(g.clone()), c.clone());
            }
        }
        TcKey::Shift(h) => {
            if h.k == 0 {
                out.add_term(TcKey::Base(h.fls.clone()), T::one());
                for (g, c) in power_map(a, &h.fls).iter() {
                    out.add_term(TcKey::Base(g.clone()), -c.clone());
                }
            }
            for (g, c) in hos_differential(a, h).iter() {
                out.add_term(TcKey::Shift(g.clone()), -c.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::{presets, BarWord, UNIT};
    use crate::Integer;

    #[test]
    fn odd_sphere_cone_formulas() {
        let a = presets::sphere(3);
        let z = a.lookup("z").unwrap();
        for m in 0..6u32 {
            let e = TcKey::Shift(HosKey::new(0, FlsKey::new(z, BarWord::repeated(z, m as usize))));
            let mut expect = TcElem::from_term(
                TcKey::Base(FlsKey::new(z, BarWord::repeated(z, m as usize))),
                Integer::from(1 - (1i64 << m)),
            );
            expect.add_term(
                TcKey::Shift(HosKey::new(1, FlsKey::new(UNIT, BarWord::repeated(z, m as usize + 1)))),
                Integer::from(-(m as i64 + 1)),
            );
            assert_eq!(tc_cone_differential(&a, &e), expect);
        }
        for k in 1..4 {
            for m in 0..5 {
                let e = TcKey::Shift(HosKey::new(k, FlsKey::new(UNIT, BarWord::repeated(z, m))));
                assert!(tc_cone_differential(&a, &e).is_zero());
            }
        }
    }
}
