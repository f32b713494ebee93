//! Arbitrary-precision exact fractions.
//!
//! [`Rational`] is kept canonical after every operation: the denominator is
//! positive, numerator and denominator are coprime, and zero is `0/1`. Its
//! textual form is always `p/q`, integers included (`7/1`), so two equal
//! values always serialize to the same bytes.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Builds `numer/denom` from machine integers. Panics when `denom == 0`.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(div_impl(self, rhs))
    }

    /// `self^e`; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::ZeroToNegativePower(e));
        }
        let base = if e < 0 { self.0.recip() } else { self.0.clone() };
        let mut acc = BigRational::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc *= &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(Rational(acc))
    }

    /// Bit length of the larger of |numerator| and denominator.
    pub fn height_bits(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
            None => Ok(Rational::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

fn raw(numer: BigInt, denom: BigInt) -> Rational {
    Rational(BigRational::new_raw(numer, denom))
}

// Canonical-form arithmetic after Henrici: gcds are taken of the smallest
// operands that still guarantee a reduced result, so no full-size
// reduction pass is needed.

fn add_impl(x: &Rational, y: &Rational, negate_rhs: bool) -> Rational {
    let (a, b) = (x.numer(), x.denom());
    let c = if negate_rhs { -y.numer() } else { y.numer().clone() };
    let d = y.denom();
    if b.is_one() && d.is_one() {
        return raw(a + c, BigInt::one());
    }
    let g = b.gcd(d);
    if g.is_one() {
        return raw(a * d + c * b, b * d);
    }
    let b_g = b / &g;
    let d_g = d / &g;
    let t = a * &d_g + c * &b_g;
    if t.is_zero() {
        return Rational::zero();
    }
    let g2 = t.gcd(&g);
    if g2.is_one() {
        raw(t, b_g * d)
    } else {
        raw(t / &g2, b_g * (d / g2))
    }
}

fn mul_impl(x: &Rational, y: &Rational) -> Rational {
    let (a, b) = (x.numer(), x.denom());
    let (c, d) = (y.numer(), y.denom());
    if a.is_zero() || c.is_zero() {
        return Rational::zero();
    }
    let g1 = a.gcd(d);
    let g2 = c.gcd(b);
    let numer = if g1.is_one() { a.clone() } else { a / &g1 } * if g2.is_one() { c.clone() } else { c / &g2 };
    let denom = if g2.is_one() { b.clone() } else { b / &g2 } * if g1.is_one() { d.clone() } else { d / &g1 };
    raw(numer, denom)
}

fn div_impl(x: &Rational, y: &Rational) -> Rational {
    assert!(!y.is_zero(), "division by zero");
    let (c, d) = (y.numer(), y.denom());
    // y⁻¹ = d/c with the sign moved to the numerator
    let inv = if c.is_negative() {
        raw(-d, -c)
    } else {
        raw(d.clone(), c.clone())
    };
    mul_impl(x, &inv)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                $imp(&self, rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(self, &rhs)
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $imp(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| add_impl(x, y, false));
forward_binop!(Sub, sub, |x, y| add_impl(x, y, true));
forward_binop!(Mul, mul, mul_impl);
// Panics on a zero divisor, like the primitive numeric types.
forward_binop!(Div, div, div_impl);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = add_impl(self, rhs, false);
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = add_impl(self, &rhs, false);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}
