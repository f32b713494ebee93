//! The twelve harmonic-number summation formulas and the bridge relations
//! between half-integer binomials and central binomial coefficients.
//!
//! Family sums, for `t` in `0..=2`:
//!
//! ```text
//! 1: sum_k (-4)^k    C(n,k) / C(2k,k)   k^t H_{2k}
//! 2: sum_k (-4)^k    C(n,k) / C(1+2k,k) k^t H_{1+2k}
//! 3: sum_k (-1/4)^k  C(n,k) C(2k,k)     k^t H_{2k}
//! 4: sum_k (-1/4)^k  C(n,k) C(1+2k,k)   k^t H_{1+2k}
//! ```

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::harmonic::{binom, harmonic, harmonic_offset};
use crate::rational::Rational;
use crate::record::{CheckKind, RecordParam, VerificationRecord};
use crate::scalar::gen_binom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TheoremId {
    family: u8,
    t: u8,
}

impl TheoremId {
    pub fn new(family: u8, t: u8) -> Result<Self> {
        if !(1..=4).contains(&family) || t > 2 {
            return Err(Error::Parse(format!("no theorem for family {family}, t = {t}")));
        }
        Ok(TheoremId { family, t })
    }

    pub fn all() -> impl Iterator<Item = TheoremId> {
        (1..=4u8).flat_map(|family| (0..=2u8).map(move |t| TheoremId { family, t }))
    }

    pub fn family(self) -> u8 {
        self.family
    }

    pub fn t(self) -> u8 {
        self.t
    }

    /// `thm-a` through `thm-l`.
    pub fn label(self) -> String {
        let idx = (self.family - 1) * 3 + self.t;
        format!("thm-{}", (b'a' + idx) as char)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}t{}", self.family, self.t)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts `f1t0`..`f4t2` or `thm-a`..`thm-l`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown theorem id {s:?}"));
        if let Some(letter) = s.strip_prefix("thm-") {
            let &[c] = letter.as_bytes() else {
                return Err(bad());
            };
            if !(b'a'..=b'l').contains(&c) {
                return Err(bad());
            }
            let idx = c - b'a';
            return TheoremId::new(idx / 3 + 1, idx % 3);
        }
        let b = s.as_bytes();
        if b.len() == 4 && b[0] == b'f' && b[2] == b't' && b[1].is_ascii_digit() && b[3].is_ascii_digit() {
            return TheoremId::new(b[1] - b'0', b[3] - b'0').map_err(|_| bad());
        }
        Err(bad())
    }
}

/// Exact sum of fractions `p/q` over a running least common denominator;
/// reduced once at the end instead of after every term.
struct FractionSum {
    numer: BigInt,
    denom: BigInt,
}

impl FractionSum {
    fn new() -> Self {
        FractionSum {
            numer: BigInt::zero(),
            denom: BigInt::one(),
        }
    }

    fn add(&mut self, p: BigInt, q: &BigInt) {
        if q == &self.denom {
            self.numer += p;
            return;
        }
        let g = self.denom.gcd(q);
        let q_g = q / &g;
        self.numer = &self.numer * &q_g + p * (&self.denom / &g);
        self.denom *= q_g;
    }

    fn finish(self, extra_denom: &BigInt) -> Result<Rational> {
        Rational::new(self.numer, self.denom * extra_denom)
    }
}

/// Brute-force family sum over `k = 0..=n`, with `0^0 = 1`.
///
/// Every term is formed and added exactly. Harmonic numbers enter as
/// integers over the common denominator `lcm(1, ..., 2n+1)`.
pub fn family_lhs(family: u8, t: u8, n: u64) -> Result<Rational> {
    let id = TheoremId::new(family, t)?;
    let lcm = (1..=2 * n + 1).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)));
    // H_m · lcm for m = 0..=2n+1
    let mut scaled_h = Vec::with_capacity(2 * n as usize + 2);
    scaled_h.push(BigInt::zero());
    for m in 1..=2 * n + 1 {
        let next = scaled_h.last().expect("seeded") + &lcm / BigInt::from(m);
        scaled_h.push(next);
    }
    let pow4_n = BigInt::from(4).pow(n as u32);

    let mut sum = FractionSum::new();
    // C(n, k), C(2k, k) and C(1+2k, k), advanced exactly in the integers
    let mut c_nk = BigInt::one();
    let mut c_2k = BigInt::one();
    let mut c_2k1 = BigInt::one();
    let mut pow4 = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            c_nk = c_nk * BigInt::from(n - k + 1) / BigInt::from(k);
            // C(2k,k) = C(2k-2,k-1)·(2k)(2k-1)/k²
            c_2k = c_2k * BigInt::from(2 * k) * BigInt::from(2 * k - 1) / BigInt::from(k * k);
            // C(2k+1,k) = C(2k-1,k-1)·(2k+1)(2k)/(k(k+1))
            c_2k1 = c_2k1 * BigInt::from(2 * k + 1) * BigInt::from(2 * k) / BigInt::from(k * (k + 1));
            pow4 *= 4;
        }
        let weight = BigInt::from(k).pow(id.t as u32);
        if weight.is_zero() {
            continue;
        }
        let signed = if k % 2 == 0 { weight } else { -weight };
        let ku = k as usize;
        match id.family {
            1 => sum.add(signed * &pow4 * &c_nk * &scaled_h[2 * ku], &c_2k),
            2 => sum.add(signed * &pow4 * &c_nk * &scaled_h[2 * ku + 1], &c_2k1),
            // (-1/4)^k = (-1)^k 4^{n-k} / 4^n
            3 => sum.add(signed * (&pow4_n / &pow4) * &c_nk * &c_2k * &scaled_h[2 * ku], &pow4_n),
            _ => sum.add(signed * (&pow4_n / &pow4) * &c_nk * &c_2k1 * &scaled_h[2 * ku + 1], &pow4_n),
        }
    }
    sum.finish(&lcm)
}

/// The published closed form for theorem `id` at `n`.
///
/// The bare-`n` denominators inside the braces of thm-i, thm-k and thm-l
/// are distributed into their prefactors, so `n = 0` evaluates directly.
pub fn theorem_rhs(id: TheoremId, n: u64) -> Rational {
    let r = |v: i64| Rational::from_int(v);
    let nn = Rational::from_int(n);
    let h = harmonic(n);
    let h2 = harmonic(2 * n);
    let h21 = harmonic(2 * n + 1);
    let c2 = binom(2 * n, n as i64);
    let c21 = binom(2 * n + 1, n as i64);
    let pow4 = Rational::from_int(BigInt::from(4).pow(n as u32));
    let pow2_odd = &pow4 * r(2); // 2^{1+2n}
    let poly = |coeffs: &[i64]| -> Rational {
        // Horner, highest degree first
        coeffs.iter().fold(Rational::zero(), |acc, &c| acc * &nn + r(c))
    };
    let e1 = poly(&[2, -1]); // 2n-1
    let e3 = poly(&[2, -3]); // 2n-3
    let e5 = poly(&[2, -5]); // 2n-5
    let q = poly(&[4, 0, -1]); // 4n²-1
    let sq = |x: &Rational| x * x;

    match (id.family, id.t) {
        (1, 0) => (r(2) * &h2 - &h) / (r(2) * &e1) - r(4) * &nn / sq(&e1),
        (1, 1) => {
            &nn * (&h - r(2) * &h2) / (&e1 * &e3)
                + &nn * poly(&[20, -24, -1]) / (sq(&e1) * sq(&e3))
        }
        (1, 2) => {
            &nn * poly(&[2, 1]) * (r(2) * &h2 - &h) / (&e1 * &e3 * &e5)
                - &nn * poly(&[96, -280, 60, 182, -13]) / (sq(&e1) * sq(&e3) * sq(&e5))
        }
        (2, 0) => (r(2) * &h21 - &h) / (r(2) * &q) - poly(&[4, 8, 7, -2]) / sq(&q),
        (2, 1) => {
            r(2) * &nn * (&h - r(2) * &h21) / (&q * &e3)
                + r(2) * &nn * poly(&[8, 20, -2, -53, 8]) / (sq(&q) * sq(&e3))
        }
        (2, 2) => {
            r(2) * &nn * poly(&[4, -1]) * (r(2) * &h21 - &h) / (&q * &e3 * &e5)
                - r(2) * &nn * poly(&[32, 160, -544, -560, 1482, -382, -17])
                    / (sq(&q) * sq(&e3) * sq(&e5))
        }
        (3, 0) => &c2 / &pow2_odd * (r(3) * &h - r(4) * &h2),
        (3, 1) => {
            let one_m = poly(&[-2, 1]); // 1-2n
            &nn / (&one_m * &pow2_odd) * &c2 * (r(3) * &h - r(4) * &h2 - poly(&[4, 2]) / &one_m)
        }
        (3, 2) => {
            let pre = &c2 / (&pow4 * &e1 * &e3);
            &pre * sq(&nn) * (Rational::frac(3, 2) * &h - r(2) * &h2)
                + &pre * &nn * poly(&[8, -4, -10, 3]) / (&e1 * &e3)
        }
        (4, 0) => {
            let o = poly(&[2, 1]); // 1+2n
            &c21 / (&pow2_odd * &o) * (poly(&[8, 8]) / &o + r(3) * &h - r(4) * &h21)
                - r(1) / poly(&[1, 1])
        }
        (4, 1) => {
            let m = poly(&[-4, 0, 1]); // 1-4n²
            let pre = &c21 / (&pow2_odd * &m);
            &pre * r(3) * &nn * (r(3) * &h - r(4) * &h21 - r(16) * &nn / &m)
                - &pre * poly(&[-14, 2])
                + r(1) / poly(&[1, 1])
        }
        _ => {
            let m = poly(&[-4, 0, 1]); // 1-4n²
            let t3 = poly(&[-2, 3]); // 3-2n
            let pre = &c21 / (&t3 * &m * &pow4);
            &pre * r(3) * &nn * poly(&[-3, 2])
                * (r(2) * &h21 - Rational::frac(3, 2) * &h - poly(&[-12, -8, 3]) / &m)
                + &pre * poly(&[6, -25, 3, 9]) / &t3
                - r(1) / poly(&[1, 1])
        }
    }
}

pub fn theorem_verify(id: TheoremId, n: u64) -> VerificationRecord {
    let started = Instant::now();
    let param = RecordParam::N(n);
    match family_lhs(id.family, id.t, n) {
        Ok(lhs) => {
            let rhs = theorem_rhs(id, n);
            VerificationRecord::compare(CheckKind::Theorem, id.to_string(), param, &lhs, &rhs, started)
        }
        Err(e) => VerificationRecord::from_error::<Rational>(
            CheckKind::Theorem,
            id.to_string(),
            param,
            None,
            &e,
            started,
        ),
    }
}

/// The bridge relations converting half-integer binomials and offset
/// harmonic sums into central binomials and even/odd harmonic numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `C(n-1/2, n-k) = 4^{k-n} C(n,k) C(2n,n)/C(2k,k)`
    RelA,
    /// `H_k/2 + (1/2) sum_{i<=k} 1/(i-1/2) = H_{2k}`
    RelB,
    /// `(1+k) C(n+1/2, n-k) = (1+n) 4^{k-n} C(n,k) C(1+2n,n)/C(1+2k,k)`
    RelC,
    /// `H_k/2 + (1/2) sum_{i<=k} 1/(i+1/2) = H_{1+2k} - 1`
    RelD,
    /// `C(k-1/2, k) = 4^{-k} C(2k,k)`
    RelE,
    /// `C(k+1/2, k)/(1+k) = 4^{-k} C(1+2k,k)`
    RelF,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::RelA,
        Relation::RelB,
        Relation::RelC,
        Relation::RelD,
        Relation::RelE,
        Relation::RelF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::RelA => "RelA",
            Relation::RelB => "RelB",
            Relation::RelC => "RelC",
            Relation::RelD => "RelD",
            Relation::RelE => "RelE",
            Relation::RelF => "RelF",
        }
    }

    /// Whether the relation depends on `n` as well as `k`.
    pub fn uses_n(self) -> bool {
        matches!(self, Relation::RelA | Relation::RelC)
    }
}

fn pow4(e: i64) -> Rational {
    Rational::from_int(4).pow(e).expect("4 is invertible")
}

/// Both sides of relation `rel` at `(k, n)`; `n` is ignored by the relations
/// that depend on `k` alone.
pub fn relation_sides(rel: Relation, k: u64, n: u64) -> Result<(Rational, Rational)> {
    if rel.uses_n() && k > n {
        return Err(Error::Precondition(format!("{}: k = {k} exceeds n = {n}", rel.name())));
    }
    let half = Rational::frac(1, 2);
    let ki = k as i64;
    let kr = Rational::from_int(k);
    let nr = Rational::from_int(n);
    let sides = match rel {
        Relation::RelA => (
            gen_binom(&(&nr - &half), n - k),
            pow4(ki - n as i64) * binom(n, ki) * binom(2 * n, n as i64) / binom(2 * k, ki),
        ),
        Relation::RelB => (
            &half * harmonic(k) + &half * harmonic_offset(k, &-&half)?,
            harmonic(2 * k),
        ),
        Relation::RelC => (
            (Rational::one() + &kr) * gen_binom(&(&nr + &half), n - k),
            (Rational::one() + &nr) * pow4(ki - n as i64) * binom(n, ki)
                * binom(2 * n + 1, n as i64)
                / binom(2 * k + 1, ki),
        ),
        Relation::RelD => (
            &half * harmonic(k) + &half * harmonic_offset(k, &half)?,
            harmonic(2 * k + 1) - Rational::one(),
        ),
        Relation::RelE => (gen_binom(&(&kr - &half), k), pow4(-ki) * binom(2 * k, ki)),
        Relation::RelF => (
            gen_binom(&(&kr + &half), k) / (Rational::one() + &kr),
            pow4(-ki) * binom(2 * k + 1, ki),
        ),
    };
    Ok(sides)
}

pub fn relation_check(rel: Relation, k: u64, n: u64) -> Result<VerificationRecord> {
    let started = Instant::now();
    let (lhs, rhs) = relation_sides(rel, k, n)?;
    let param = if rel.uses_n() {
        RecordParam::Summary(format!("k={k};n={n}"))
    } else {
        RecordParam::Summary(format!("k={k}"))
    };
    Ok(VerificationRecord::compare(CheckKind::Relation, rel.name(), param, &lhs, &rhs, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> TheoremId {
        s.parse().unwrap()
    }

    #[test]
    fn ids_and_labels() {
        let all: Vec<_> = TheoremId::all().collect();
        assert_eq!(all.len(), 12);
        assert_eq!(all[0].to_string(), "f1t0");
        assert_eq!(all[0].label(), "thm-a");
        assert_eq!(all[11].label(), "thm-l");
        for t in &all {
            assert_eq!(t.label().parse::<TheoremId>().unwrap(), *t);
            assert_eq!(t.to_string().parse::<TheoremId>().unwrap(), *t);
        }
        assert!("f5t0".parse::<TheoremId>().is_err());
        assert!("f1t3".parse::<TheoremId>().is_err());
        assert!("thm-m".parse::<TheoremId>().is_err());
    }

    #[test]
    fn family_lhs_examples() {
        assert_eq!(family_lhs(1, 0, 1).unwrap(), Rational::from_int(-3));
        for f in 1..=4 {
            assert_eq!(family_lhs(f, 1, 0).unwrap(), Rational::zero());
        }
        assert_eq!(family_lhs(3, 0, 2).unwrap(), Rational::frac(-23, 32));
    }

    #[test]
    fn theorem_rhs_examples() {
        assert_eq!(theorem_rhs(id("thm-a"), 1), Rational::from_int(-3));
        assert_eq!(theorem_rhs(id("thm-d"), 0), Rational::from_int(1));
        assert_eq!(theorem_rhs(id("thm-e"), 1), Rational::frac(-22, 9));
        assert_eq!(theorem_rhs(id("thm-l"), 0), Rational::zero());
        assert_eq!(theorem_rhs(id("thm-k"), 1), Rational::frac(-11, 8));
    }

    #[test]
    fn theorem_verify_examples() {
        let r = theorem_verify(id("thm-g"), 2);
        assert!(r.passed());
        assert_eq!(r.lhs.to_string(), "-23/32");
        let r = theorem_verify(id("thm-j"), 0);
        assert!(r.passed());
        assert_eq!(r.lhs.to_string(), "1/1");
        let r = theorem_verify(id("thm-b"), 0);
        assert!(r.passed());
        assert_eq!(r.rhs.to_string(), "0/1");
    }

    #[test]
    fn relation_examples() {
        let (l, r) = relation_sides(Relation::RelB, 1, 0).unwrap();
        assert_eq!((l.clone(), r), (Rational::frac(3, 2), Rational::frac(3, 2)));
        let (l, r) = relation_sides(Relation::RelE, 0, 0).unwrap();
        assert_eq!((l, r), (Rational::one(), Rational::one()));
        let (l, r) = relation_sides(Relation::RelA, 1, 2).unwrap();
        assert_eq!((l, r), (Rational::frac(3, 2), Rational::frac(3, 2)));
        assert!(matches!(
            relation_check(Relation::RelC, 3, 2),
            Err(Error::Precondition(_))
        ));
        // RelB ignores n entirely
        assert!(relation_check(Relation::RelB, 5, 0).unwrap().passed());
    }

    #[test]
    fn small_sweep() {
        for t in TheoremId::all() {
            for n in 0..=25 {
                assert!(theorem_verify(t, n).passed(), "{t} n={n}");
            }
        }
    }
}
