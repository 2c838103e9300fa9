//! Coefficient types for polynomial maps and constants in expression trees.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// A coefficient field usable by [`crate::PolyMap`] and [`crate::ElemMap`].
///
/// Exact laws are only claimed for [`BigRational`]; the floating point
/// instances exist for quick numeric work on the same symbolic machinery.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Builds `numer / denom`. `denom` is never zero.
    fn from_ratio(numer: BigInt, denom: BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_ratio(BigInt::from(value), BigInt::from(1))
    }

    fn to_f64(&self) -> f64;

    /// Whether arithmetic on this type is exact.
    fn is_exact() -> bool;
}

impl Scalar for BigRational {
    fn from_ratio(numer: BigInt, denom: BigInt) -> Self {
        Ratio::new(numer, denom)
    }

    fn to_f64(&self) -> f64 {
        // Ratio::to_f64 handles huge numerators/denominators without overflow.
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_ratio(numer: BigInt, denom: BigInt) -> Self {
        numer.to_f64().unwrap_or(f64::NAN) / denom.to_f64().unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_exact() -> bool {
        false
    }
}

impl Scalar for f32 {
    fn from_ratio(numer: BigInt, denom: BigInt) -> Self {
        (numer.to_f64().unwrap_or(f64::NAN) / denom.to_f64().unwrap_or(f64::NAN)) as f32
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }

    fn is_exact() -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn rationals_are_reduced() {
        let q = BigRational::from_ratio(BigInt::from(6), BigInt::from(-4));
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        let z = BigRational::from_ratio(BigInt::zero(), BigInt::from(7));
        assert!(z.is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn float_instances() {
        assert_eq!(
            <f64 as Scalar>::from_ratio(BigInt::from(3), BigInt::from(2)),
            1.5
        );
        assert_eq!(<f32 as Scalar>::from_i64(-2), -2.0f32);
        assert!(!<f64 as Scalar>::is_exact());
    }
}
