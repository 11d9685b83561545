//! Coefficient rings.
//!
//! Everything above the matrix layer is written against [`Scalar`], a thin
//! bundle of `num-traits` bounds. The models are only meaningful over exact
//! rings; `BigInt` is the production choice, `i64` is handy in tests and
//! `BigRational` is used when a field is needed (induced maps on free parts).

use std::fmt::Debug;
use std::ops::{AddAssign, Neg};

use num_integer::Integer as IntegerOps;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact commutative ring usable as a coefficient type.
pub trait Scalar:
    Num + Neg<Output = Self> + AddAssign + FromPrimitive + Clone + Debug + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar type cannot represent a small integer")
    }

    /// `(-1)^k` as a scalar.
    fn sign(odd: bool) -> Self {
        if odd {
            -Self::one()
        } else {
            Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + AddAssign + FromPrimitive + Clone + Debug + Send + Sync + 'static
{
}

/// A Euclidean ring with a sign: what Smith normal form needs.
pub trait EuclideanScalar: Scalar + IntegerOps + Signed + Ord + ToPrimitive {}

impl<T> EuclideanScalar for T where T: Scalar + IntegerOps + Signed + Ord + ToPrimitive {}

/// Binomial coefficient `n choose k` in any scalar ring.
pub fn binomial<T: Scalar>(n: u64, k: u64) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    // Multiplicative formula over the ring, exact at each step because the
    // running value is itself a binomial coefficient.
    let mut acc = num_bigint::BigInt::from(1u8);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    from_bigint(&acc)
}

/// Converts an arbitrary-precision integer into a scalar ring.
pub fn from_bigint<T: Scalar>(n: &num_bigint::BigInt) -> T {
    use num_traits::ToPrimitive;
    if let Some(small) = n.to_i64() {
        return T::from_int(small);
    }
    // Horner in base 2^32 for values that do not fit a machine word.
    let (sign, digits) = n.to_u32_digits();
    let base = T::from_int(1i64 << 32);
    let mut acc = T::zero();
    for d in digits.iter().rev() {
        acc = acc * base.clone() + T::from_int(*d as i64);
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else if acc.is_zero() {
        T::zero()
    } else {
        acc
    }
}
