//! Scalar abstraction for exact arithmetic.
//!
//! Every computation in this crate is exact. The [`Scalar`] trait collects the
//! arithmetic surface the core algorithms need (field operations, sign
//! queries, integrality tests) and is implemented for the rational types from
//! `num-rational`. The default scalar used throughout the higher-level
//! modules is [`crate::Rat`] (arbitrary-precision rationals), so intermediate
//! coefficient growth can never overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// An exact field scalar.
///
/// The trait is deliberately object-unsafe and value-oriented: matrices and
/// root systems are generic over `S: Scalar`, and concrete aliases at the
/// crate root pin the default instantiation.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + 'static
{
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self;

    /// Builds the exact fraction `num / den`. Panics if `den == 0`.
    fn ratio(num: i64, den: i64) -> Self;

    /// Returns the value as a machine integer if it is an integer that fits.
    fn to_int(&self) -> Option<i64>;

    /// Returns `(numerator, denominator)` in lowest terms with a positive
    /// denominator, if both fit in machine integers.
    fn to_fraction(&self) -> Option<(i64, i64)>;

    /// Whether the value is an integer.
    fn is_integer(&self) -> bool {
        self.to_fraction().map(|(_, d)| d == 1).unwrap_or(false)
    }

    /// Floor of the value as a machine integer, if representable.
    fn floor_int(&self) -> Option<i64>;
}

impl Scalar for Rational64 {
    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn ratio(num: i64, den: i64) -> Self {
        Rational64::new(num, den)
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            Some(*self.numer())
        } else {
            None
        }
    }

    fn to_fraction(&self) -> Option<(i64, i64)> {
        Some((*self.numer(), *self.denom()))
    }

    fn is_integer(&self) -> bool {
        Rational64::is_integer(self)
    }

    fn floor_int(&self) -> Option<i64> {
        Rational64::floor(self).to_integer().into()
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn to_fraction(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    fn is_integer(&self) -> bool {
        BigRational::is_integer(self)
    }

    fn floor_int(&self) -> Option<i64> {
        BigRational::floor(self).to_integer().to_i64()
    }
}

/// Convenience constructor: the scalar `n`.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_int(n)
}

/// Convenience constructor: the scalar `num / den`.
pub fn frac<S: Scalar>(num: i64, den: i64) -> S {
    S::ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn rational64_basics() {
        let half: Rational64 = frac(1, 2);
        assert_eq!(half.clone() + half.clone(), int(1));
        assert!(!half.is_integer());
        assert!(Scalar::is_integer(&int::<Rational64>(-3)));
        assert_eq!(half.to_fraction(), Some((1, 2)));
        assert_eq!(frac::<Rational64>(-2, 4).to_fraction(), Some((-1, 2)));
        assert_eq!(int::<Rational64>(7).to_int(), Some(7));
        assert_eq!(half.to_int(), None);
        assert_eq!(frac::<Rational64>(-3, 2).floor_int(), Some(-2));
    }

    #[test]
    fn bigrational_basics() {
        let x: Rat = frac(22, -4);
        assert_eq!(x.to_fraction(), Some((-11, 2)));
        assert_eq!((x.clone() * int::<Rat>(2)).to_int(), Some(-11));
        assert!((x.clone() - x).is_zero());
        assert_eq!(frac::<Rat>(5, 3).floor_int(), Some(1));
    }
}
