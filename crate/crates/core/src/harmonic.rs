//! Harmonic numbers, offset harmonic sums and integer binomials.
//!
//! Harmonic values come from process-wide prefix tables that grow on
//! demand. Tables sit behind locks; callers on any thread observe the same
//! values a sequential caller would.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::Rational;

fn harmonic_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::zero()]))
}

fn offset_tables() -> &'static Mutex<HashMap<Rational, Vec<Rational>>> {
    static TABLES: OnceLock<Mutex<HashMap<Rational, Vec<Rational>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rational {
    let idx = n as usize;
    {
        let table = harmonic_table().read().expect("harmonic table poisoned");
        if let Some(h) = table.get(idx) {
            return h.clone();
        }
    }
    let mut table = harmonic_table().write().expect("harmonic table poisoned");
    while table.len() <= idx {
        let i = table.len() as i64;
        let next = table.last().expect("table seeded with H_0") + Rational::frac(1, i);
        table.push(next);
    }
    table[idx].clone()
}

/// `sum_{i=1}^n 1/(i + c)`.
///
/// Fails with [`Error::ZeroDenominator`] when `c = -i` for some `1 <= i <= n`.
pub fn harmonic_offset(n: u64, c: &Rational) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::zero());
    }
    if c.is_integer() && c.is_negative() {
        let i = -c;
        if i <= Rational::from_int(n) {
            let index: u64 = i.numer().try_into().unwrap_or(u64::MAX);
            return Err(Error::ZeroDenominator {
                offset: c.to_string(),
                index,
            });
        }
    }
    let idx = n as usize;
    let mut tables = offset_tables().lock().expect("offset tables poisoned");
    let table = tables
        .entry(c.clone())
        .or_insert_with(|| vec![Rational::zero()]);
    while table.len() <= idx {
        let i = Rational::from_int(table.len() as i64);
        let term = (i + c).recip().expect("pole excluded above");
        let next = table.last().expect("table seeded with zero") + term;
        table.push(next);
    }
    Ok(table[idx].clone())
}

/// Integer binomial `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binom(n: u64, k: i64) -> Rational {
    Rational::from_int(binom_int(n, k))
}

pub fn binom_int(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc stays integral: after step i it equals C(n - k + i, i)
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0).to_string(), "0/1");
        assert_eq!(harmonic(1).to_string(), "1/1");
        assert_eq!(harmonic(4).to_string(), "25/12");
    }

    #[test]
    fn harmonic_offset_examples() {
        assert_eq!(
            harmonic_offset(0, &Rational::frac(-3, 1)).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            harmonic_offset(1, &Rational::frac(-1, 2)).unwrap().to_string(),
            "2/1"
        );
        assert_eq!(
            harmonic_offset(2, &Rational::frac(1, 2)).unwrap().to_string(),
            "16/15"
        );
        // 1/(1 - 3/2) = -2 is a legitimate negative first term
        assert_eq!(
            harmonic_offset(1, &Rational::frac(-3, 2)).unwrap(),
            Rational::from_int(-2)
        );
    }

    #[test]
    fn harmonic_offset_pole() {
        let err = harmonic_offset(5, &Rational::from_int(-3)).unwrap_err();
        assert!(matches!(err, Error::ZeroDenominator { index: 3, .. }));
        // pole beyond n is fine
        assert!(harmonic_offset(2, &Rational::from_int(-3)).is_ok());
        assert!(harmonic_offset(4, &Rational::from_int(3)).is_ok());
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2), Rational::from_int(10));
        assert_eq!(binom(0, 0), Rational::one());
        assert_eq!(binom(10, 5), Rational::from_int(252));
        assert_eq!(binom(4, -1), Rational::zero());
        assert_eq!(binom(4, 5), Rational::zero());
    }

    #[test]
    fn harmonic_step_is_reciprocal() {
        for n in 1..=300u64 {
            assert_eq!(harmonic(n) - harmonic(n - 1), Rational::frac(1, n as i64));
        }
    }

    #[test]
    fn zero_offset_matches_harmonic() {
        for n in 0..=200u64 {
            assert_eq!(harmonic_offset(n, &Rational::zero()).unwrap(), harmonic(n));
        }
    }

    #[test]
    fn pascal_rule_exhaustive() {
        for n in 2..=60u64 {
            for k in 1..n as i64 {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            }
        }
    }

    #[test]
    fn concurrent_callers_agree() {
        let sequential: Vec<Rational> = (0..400).map(harmonic).collect();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                std::thread::spawn(|| (0..400u64).rev().map(|n| (n, harmonic(n))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (n, v) in h.join().unwrap() {
                assert_eq!(v, sequential[n as usize]);
            }
        }
    }
}
