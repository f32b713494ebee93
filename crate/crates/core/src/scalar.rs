//! The value-domain contract shared by plain rational evaluation and
//! dual-number (derivative-at-zero) evaluation, plus the two generic
//! primitives built on it: generalized binomials and integer powers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::record::ReportValue;

/// A commutative ring with partial division that embeds the rationals.
///
/// `Rational` is a field; `Dual` divides only by elements with a nonzero
/// value part.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    fn is_invertible(&self) -> bool;

    fn try_div(&self, rhs: &Self) -> Result<Self>;

    /// Multiplication by an embedded rational constant.
    fn scale(&self, c: &Rational) -> Self;

    fn to_report(&self) -> ReportValue;
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn is_invertible(&self) -> bool {
        !self.is_zero()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }

    fn to_report(&self) -> ReportValue {
        ReportValue::Rational(self.to_string())
    }
}

/// `k!` as an exact integer.
pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Generalized binomial `C(q, k) = q(q-1)...(q-k+1) / k!`.
///
/// The falling factorial is accumulated left to right in the scalar domain
/// and divided by the integer `k!` once, so no domain division occurs.
pub fn gen_binom<S: Scalar>(q: &S, k: u64) -> S {
    let mut acc = S::one();
    for i in 0..k {
        let term = q.clone() - S::from_rational(Rational::from_int(i));
        acc = acc * term;
    }
    let inv_fact = Rational::new(1, factorial(k)).expect("k! is positive");
    acc.scale(&inv_fact)
}

/// `base^e` for any integer `e`; a negative `e` requires an invertible base.
pub fn pow_scalar<S: Scalar>(base: &S, e: i64) -> Result<S> {
    if e < 0 && !base.is_invertible() {
        return Err(Error::ZeroToNegativePower(e));
    }
    let mut acc = S::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc * base;
    }
    if e < 0 {
        S::one().try_div(&acc)
    } else {
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::frac(p, d)
    }

    #[test]
    fn gen_binom_examples() {
        assert_eq!(gen_binom(&q(7, 3), 0), Rational::one());
        assert_eq!(gen_binom(&q(-1, 2), 2), q(3, 8));
        assert_eq!(gen_binom(&q(3, 2), 1), q(3, 2));
        // top below bottom: falling factorial passes through zero
        assert_eq!(gen_binom(&q(1, 1), 2), Rational::zero());
        // negative integer top: C(-1, k) = (-1)^k
        assert_eq!(gen_binom(&q(-1, 1), 3), q(-1, 1));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pow_scalar(&q(-4, 1), 2).unwrap(), q(16, 1));
        assert_eq!(pow_scalar(&q(4, 1), -1).unwrap(), q(1, 4));
        assert_eq!(pow_scalar(&q(-1, 4), 3).unwrap(), q(-1, 64));
        assert_eq!(
            pow_scalar(&Rational::zero(), -1),
            Err(Error::ZeroToNegativePower(-1))
        );
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
