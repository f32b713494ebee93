//! Exact dual numbers `value + slope·ε` with `ε² = 0`.
//!
//! Evaluating an expression at `x = Dual::x()` yields `f(0)` in the value
//! part and `f'(0)` in the slope part, which is the derivative operator at
//! zero applied to `f`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::harmonic::{binom, harmonic};
use crate::rational::Rational;
use crate::record::ReportValue;
use crate::scalar::{gen_binom, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dual {
    pub value: Rational,
    pub slope: Rational,
}

impl Dual {
    pub fn new(value: Rational, slope: Rational) -> Self {
        Dual { value, slope }
    }

    /// The indeterminate `x` at `x = 0`.
    pub fn x() -> Self {
        Dual::new(Rational::zero(), Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        Dual::new(value, Rational::zero())
    }
}

/// `c0 + c1·x` evaluated at `x = 0`.
pub fn affine(c0: Rational, c1: Rational) -> Dual {
    Dual::new(c0, c1)
}

/// Quotient rule: `(a, b) / (c, d) = (a/c, (bc - ad)/c²)`; requires `c ≠ 0`.
pub fn dual_div(p: &Dual, q: &Dual) -> Result<Dual> {
    if q.value.is_zero() {
        return Err(Error::NonInvertibleDual);
    }
    let value = &p.value / &q.value;
    let slope = (&p.slope * &q.value - &p.value * &q.slope) / (&q.value * &q.value);
    Ok(Dual::new(value, slope))
}

/// Slope of `C(x + r, s)` at `x = 0`, computed by dual evaluation.
///
/// Equals `C(r, s)·(H_r - H_{r-s})`; see [`derivative_of_binomial_closed`].
pub fn derivative_of_binomial(r: u64, s: u64) -> Result<Rational> {
    if s > r {
        return Err(Error::Precondition(format!("s = {s} exceeds r = {r}")));
    }
    let top = affine(Rational::from_int(r), Rational::one());
    Ok(gen_binom(&top, s).slope)
}

pub fn derivative_of_binomial_closed(r: u64, s: u64) -> Result<Rational> {
    if s > r {
        return Err(Error::Precondition(format!("s = {s} exceeds r = {r}")));
    }
    Ok(binom(r, s as i64) * (harmonic(r) - harmonic(r - s)))
}

impl fmt::Debug for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.value, self.slope)
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        Dual::new(self.value + rhs.value, self.slope + rhs.slope)
    }
}

impl<'a> Add<&'a Dual> for Dual {
    type Output = Dual;
    fn add(self, rhs: &'a Dual) -> Dual {
        Dual::new(self.value + &rhs.value, self.slope + &rhs.slope)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        Dual::new(self.value - rhs.value, self.slope - rhs.slope)
    }
}

impl<'a> Sub<&'a Dual> for Dual {
    type Output = Dual;
    fn sub(self, rhs: &'a Dual) -> Dual {
        Dual::new(self.value - &rhs.value, self.slope - &rhs.slope)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        self * &rhs
    }
}

impl<'a> Mul<&'a Dual> for Dual {
    type Output = Dual;
    fn mul(self, rhs: &'a Dual) -> Dual {
        let slope = &self.value * &rhs.slope + &self.slope * &rhs.value;
        Dual::new(self.value * &rhs.value, slope)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.value, -self.slope)
    }
}

impl Scalar for Dual {
    fn from_rational(r: Rational) -> Self {
        Dual::constant(r)
    }

    fn is_invertible(&self) -> bool {
        !self.value.is_zero()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        dual_div(self, rhs)
    }

    fn scale(&self, c: &Rational) -> Self {
        Dual::new(&self.value * c, &self.slope * c)
    }

    fn to_report(&self) -> ReportValue {
        ReportValue::Dual {
            value: self.value.to_string(),
            slope: self.slope.to_string(),
        }
    }
}
