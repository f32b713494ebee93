//! Weighted Chu–Vandermonde kernels.
//!
//! Each [`WeightKind`] names one identity
//!
//! ```text
//! sum_{k=0}^n (-1)^k w(k) C(a+k, k) C(b+n, n-k) = closed form in (a, b, n)
//! ```
//!
//! [`kernel_lhs`] is the brute-force sum and [`kernel_rhs`] the closed form.
//! Both are generic over [`Scalar`], so one implementation serves rational
//! parameters and dual (x-specialized) parameters alike.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::record::{CheckKind, RecordParam, VerificationRecord};
use crate::scalar::{gen_binom, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightKind {
    /// `w(k) = 1`
    W1,
    /// `w(k) = k`
    Wk,
    /// `w(k) = k²`
    Wk2,
    /// `w(k) = 1 + k`
    W1pk,
    /// `w(k) = k(1 + k)`
    Wk1pk,
    /// `w(k) = k²(1 + k)`
    Wk21pk,
    /// `w(k) = 1/(1 + k)`
    Winv1pk,
    /// `w(k) = k/(1 + k)`
    Wkinv1pk,
    /// `w(k) = k²/(1 + k)`
    Wk2inv1pk,
}

impl WeightKind {
    pub const ALL: [WeightKind; 9] = [
        WeightKind::W1,
        WeightKind::Wk,
        WeightKind::Wk2,
        WeightKind::W1pk,
        WeightKind::Wk1pk,
        WeightKind::Wk21pk,
        WeightKind::Winv1pk,
        WeightKind::Wkinv1pk,
        WeightKind::Wk2inv1pk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::W1 => "W1",
            WeightKind::Wk => "Wk",
            WeightKind::Wk2 => "Wk2",
            WeightKind::W1pk => "W1pk",
            WeightKind::Wk1pk => "Wk1pk",
            WeightKind::Wk21pk => "Wk21pk",
            WeightKind::Winv1pk => "Winv1pk",
            WeightKind::Wkinv1pk => "Wkinv1pk",
            WeightKind::Wk2inv1pk => "Wk2inv1pk",
        }
    }

    /// The summand weight `w(k)`. Inverse weights divide by the integer
    /// `1 + k`, never by a domain element.
    pub fn weight(self, k: u64) -> Rational {
        let k = k as i64;
        let (num, den) = match self {
            WeightKind::W1 => (1, 1),
            WeightKind::Wk => (k, 1),
            WeightKind::Wk2 => (k * k, 1),
            WeightKind::W1pk => (1 + k, 1),
            WeightKind::Wk1pk => (k * (1 + k), 1),
            WeightKind::Wk21pk => (k * k * (1 + k), 1),
            WeightKind::Winv1pk => (1, 1 + k),
            WeightKind::Wkinv1pk => (k, 1 + k),
            WeightKind::Wk2inv1pk => (k * k, 1 + k),
        };
        Rational::frac(num, den)
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeightKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown weight kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelParams<S> {
    pub a: S,
    pub b: S,
    pub n: u64,
}

impl<S: Scalar> KernelParams<S> {
    pub fn new(a: S, b: S, n: u64) -> Self {
        KernelParams { a, b, n }
    }

    pub fn summary(&self) -> String {
        format!("a={};b={};n={}", self.a.to_report(), self.b.to_report(), self.n)
    }
}

fn int<S: Scalar>(n: u64) -> S {
    S::from_rational(Rational::from_int(n))
}

/// Chu–Vandermonde convolution: `sum_k C(x,k) C(y,n-k)` against `C(x+y, n)`.
pub fn cv_base(x: &Rational, y: &Rational, n: u64) -> (Rational, Rational) {
    let lhs = (0..=n)
        .map(|k| gen_binom(x, k) * gen_binom(y, n - k))
        .sum();
    let rhs = gen_binom(&(x + y), n);
    (lhs, rhs)
}

pub fn cv_verify(x: &Rational, y: &Rational, n: u64) -> VerificationRecord {
    let started = Instant::now();
    let (lhs, rhs) = cv_base(x, y, n);
    VerificationRecord::compare(
        CheckKind::CvBase,
        "cv",
        RecordParam::Summary(format!("x={x};y={y};n={n}")),
        &lhs,
        &rhs,
        started,
    )
}

/// Brute-force left side, summed term by term.
///
/// `C(a+k, k)` and `C(b+n, j)` are advanced by their integer-denominator
/// recurrences, so no domain division occurs.
pub fn kernel_lhs<S: Scalar>(kind: WeightKind, p: &KernelParams<S>) -> S {
    let n = p.n;
    let top_b = p.b.clone() + &int::<S>(n);
    // C(b+n, j) for j = 0..=n
    let mut right = Vec::with_capacity(n as usize + 1);
    right.push(S::one());
    for j in 1..=n {
        let prev = right.last().expect("seeded").clone();
        let next = (prev * (top_b.clone() - &int::<S>(j - 1))).scale(&Rational::frac(1, j as i64));
        right.push(next);
    }
    let mut left = S::one();
    let mut sum = S::zero();
    for k in 0..=n {
        if k > 0 {
            left = (left * (p.a.clone() + &int::<S>(k))).scale(&Rational::frac(1, k as i64));
        }
        let mut coeff = kind.weight(k);
        if k % 2 == 1 {
            coeff = -coeff;
        }
        let term = (left.clone() * &right[(n - k) as usize]).scale(&coeff);
        sum = sum + term;
    }
    sum
}

/// Fails with a pole error naming `label` when `v` is not invertible.
fn nonzero<S: Scalar>(v: S, label: &str) -> Result<S> {
    if v.is_invertible() {
        Ok(v)
    } else {
        Err(Error::PoleParameter(label.to_string()))
    }
}

/// Closed-form right side.
///
/// Returns [`Error::PoleParameter`] when a denominator of the closed form
/// vanishes at `p`; the sum side is still defined there.
pub fn kernel_rhs<S: Scalar>(kind: WeightKind, p: &KernelParams<S>) -> Result<S> {
    let a = &p.a;
    let b = &p.b;
    let n: S = int(p.n);
    let one = S::one();
    let two: S = S::from_int(2);
    // b - a - 1 + n
    let m = b.clone() - a - &one + &n;
    let cv = gen_binom(&m, p.n);

    let value = match kind {
        WeightKind::W1 => cv,
        WeightKind::Wk => {
            let den = nonzero(a.clone() + &one - b - &n, "a+1-b-n")?;
            ((a.clone() + &one) * &n).try_div(&den)? * cv
        }
        WeightKind::Wk2 => {
            let d1 = nonzero(m.clone() - &one, "b-a-2+n")?;
            let d2 = nonzero(m.clone(), "b-a-1+n")?;
            let num = n.clone() * (a.clone() + &one) * (a.clone() * &n + &n - b);
            num.try_div(&(d1 * d2))? * cv
        }
        WeightKind::W1pk => {
            let den = nonzero(m.clone(), "b-a-1+n")?;
            let num = b.clone() - a - &one - a.clone() * &n;
            num.try_div(&den)? * cv
        }
        WeightKind::Wk1pk => {
            let d1 = nonzero(m.clone() - &one, "b-a-2+n")?;
            let d2 = nonzero(m.clone(), "b-a-1+n")?;
            let num = (a.clone() + &one)
                * (a.clone() + &two - two.clone() * b + a.clone() * &n)
                * &n;
            num.try_div(&(d1 * d2))? * cv
        }
        WeightKind::Wk21pk => {
            let d1 = nonzero(m.clone() - &two, "b-a-3+n")?;
            let d2 = nonzero(m.clone() - &one, "b-a-2+n")?;
            let d3 = nonzero(m.clone(), "b-a-1+n")?;
            let a1 = one.clone() + a;
            let four: S = S::from_int(4);
            let brace = two.clone() * b * (one.clone() - b)
                - a1.clone() * (four.clone() + a - four * b) * &n
                - a.clone() * &a1 * &n * &n;
            let num = n.clone() * &a1 * &brace;
            cv * num.try_div(&(d1 * d2 * d3))?
        }
        WeightKind::Winv1pk => {
            let a_inv = one.clone().try_div(&nonzero(a.clone(), "a")?)?;
            let t1 = gen_binom(&(b.clone() + &n), p.n + 1);
            let t2 = gen_binom(&(b.clone() - a + &n), p.n + 1);
            a_inv.clone() * t1 - a_inv * t2
        }
        WeightKind::Wkinv1pk => {
            let a = nonzero(a.clone(), "a")?;
            let a_inv = one.clone().try_div(&a)?;
            let num = (one.clone() + &a) * &n + b;
            let den = a.clone() * (one.clone() + &n);
            let t2 = gen_binom(&(b.clone() + &n), p.n + 1);
            num.try_div(&den)? * cv - a_inv * t2
        }
        WeightKind::Wk2inv1pk => {
            let a = nonzero(a.clone(), "a")?;
            let d = nonzero(one.clone() + &a - b - &n, "1+a-b-n")?;
            let a_inv = one.clone().try_div(&a)?;
            let a1 = one.clone() + &a;
            // (1+a)(an+n-1)n - (1+a-2n-an)b + b²
            let num = a1.clone() * (a.clone() * &n + &n - &one) * &n
                - (a1 - two * &n - a.clone() * &n) * b
                + b.clone() * b;
            let den = a.clone() * (one.clone() + &n) * d;
            let t1 = gen_binom(&(b.clone() + &n), p.n + 1);
            a_inv * t1 + num.try_div(&den)? * cv
        }
    };
    Ok(value)
}

pub fn kernel_verify<S: Scalar>(kind: WeightKind, p: &KernelParams<S>) -> VerificationRecord {
    let started = Instant::now();
    let id = kind.name();
    let param = RecordParam::Summary(p.summary());
    let lhs = kernel_lhs(kind, p);
    match kernel_rhs(kind, p) {
        Ok(rhs) => VerificationRecord::compare(CheckKind::Kernel, id, param, &lhs, &rhs, started),
        Err(e) => VerificationRecord::from_error(CheckKind::Kernel, id, param, Some(&lhs), &e, started),
    }
}
