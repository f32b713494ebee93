//! Mechanical replay of the theorem proofs.
//!
//! Each family specializes the kernel parameters `(a, b)` to affine
//! functions of `x`, evaluates the kernel identity over [`Dual`] at
//! `x = 0`, and reads the derivative identity off the slope parts. The
//! per-term check then confirms that every summand's slope equals its
//! rewrite in central binomials and even/odd harmonic numbers.

use std::fmt;
use std::time::Instant;

use crate::dual::{affine, Dual};
use crate::error::{Error, Result};
use crate::harmonic::{binom, harmonic};
use crate::kernels::{kernel_lhs, kernel_rhs, KernelParams, WeightKind};
use crate::rational::Rational;
use crate::record::{elapsed_micros, CheckKind, RecordParam, Status, VerificationRecord};
use crate::scalar::{gen_binom, Scalar};
use crate::theorems::{theorem_verify, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecializationId {
    /// `a = x/2`, `b = (-x-1)/2`
    S2,
    /// `a = x/2`, `b = (1-x)/2`
    S3,
    /// `a = (x-1)/2`, `b = -x/2`
    S4,
    /// `a = (x+1)/2`, `b = -x/2`
    S5,
}

impl SpecializationId {
    pub const ALL: [SpecializationId; 4] = [
        SpecializationId::S2,
        SpecializationId::S3,
        SpecializationId::S4,
        SpecializationId::S5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecializationId::S2 => "S2",
            SpecializationId::S3 => "S3",
            SpecializationId::S4 => "S4",
            SpecializationId::S5 => "S5",
        }
    }

    /// The dual parameters `(a, b)` at `x = 0`.
    pub fn params(self) -> (Dual, Dual) {
        let q = Rational::frac;
        match self {
            SpecializationId::S2 => (affine(q(0, 1), q(1, 2)), affine(q(-1, 2), q(-1, 2))),
            SpecializationId::S3 => (affine(q(0, 1), q(1, 2)), affine(q(1, 2), q(-1, 2))),
            SpecializationId::S4 => (affine(q(-1, 2), q(1, 2)), affine(q(0, 1), q(-1, 2))),
            SpecializationId::S5 => (affine(q(1, 2), q(1, 2)), affine(q(0, 1), q(-1, 2))),
        }
    }

    /// Kernels used with this specialization, indexed by the power `t`.
    pub fn kinds(self) -> [WeightKind; 3] {
        use WeightKind::*;
        match self {
            SpecializationId::S2 | SpecializationId::S4 => [W1, Wk, Wk2],
            SpecializationId::S3 => [W1pk, Wk1pk, Wk21pk],
            SpecializationId::S5 => [Winv1pk, Wkinv1pk, Wk2inv1pk],
        }
    }

    /// The kernel whose per-term rewrite is stated directly; other kinds
    /// scale it by `w(k) / w_base(k)`.
    fn base_kind(self) -> WeightKind {
        self.kinds()[0]
    }

    pub fn for_family(family: u8) -> SpecializationId {
        match family {
            1 => SpecializationId::S2,
            2 => SpecializationId::S3,
            3 => SpecializationId::S4,
            _ => SpecializationId::S5,
        }
    }
}

impl fmt::Display for SpecializationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `(kind, specialization)` pair whose derivative yields theorem `id`.
pub fn pairing(id: TheoremId) -> (WeightKind, SpecializationId) {
    let spec = SpecializationId::for_family(id.family());
    (spec.kinds()[id.t() as usize], spec)
}

fn pair_id(spec: SpecializationId, kind: WeightKind) -> String {
    format!("{spec}/{kind}")
}

/// Kernel identity with dual parameters; equality covers both the value
/// and the slope (derivative) parts.
pub fn dual_identity_check(kind: WeightKind, spec: SpecializationId, n: u64) -> VerificationRecord {
    let started = Instant::now();
    let (a, b) = spec.params();
    let p = KernelParams::new(a, b, n);
    let id = pair_id(spec, kind);
    let lhs = kernel_lhs(kind, &p);
    match kernel_rhs(kind, &p) {
        Ok(rhs) => {
            VerificationRecord::compare(CheckKind::Derivation, id, RecordParam::N(n), &lhs, &rhs, started)
        }
        Err(e) => VerificationRecord::from_error(
            CheckKind::Derivation,
            id,
            RecordParam::N(n),
            Some(&lhs),
            &e,
            started,
        ),
    }
}

/// The `k`-th summand `(-1)^k w(k) C(a+k, k) C(b+n, n-k)` over duals.
pub fn dual_summand(kind: WeightKind, spec: SpecializationId, n: u64, k: u64) -> Dual {
    let (a, b) = spec.params();
    let kk = Dual::from_int(k as i64);
    let nn = Dual::from_int(n as i64);
    let mut coeff = kind.weight(k);
    if k % 2 == 1 {
        coeff = -coeff;
    }
    (gen_binom(&(a + &kk), k) * gen_binom(&(b + &nn), n - k)).scale(&coeff)
}

/// Harmonic-form rewrite of the summand slope for the specialization's
/// base kernel.
fn base_rewrite(spec: SpecializationId, n: u64, k: u64) -> Rational {
    let ki = k as i64;
    let ni = n as i64;
    let sign = if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let pow4 = |e: i64| Rational::from_int(4).pow(e).expect("4 is invertible");
    let half_hn = harmonic(n) * Rational::frac(1, 2);
    let c_nk = binom(n, ki);
    match spec {
        SpecializationId::S2 => {
            sign * pow4(ki - ni) * c_nk * binom(2 * n, ni) / binom(2 * k, ki)
                * (harmonic(2 * k) - harmonic(2 * n) + half_hn)
        }
        SpecializationId::S3 => {
            sign * Rational::from_int(n + 1) * pow4(ki - ni) * c_nk * binom(2 * n + 1, ni)
                / binom(2 * k + 1, ki)
                * (harmonic(2 * k + 1) - harmonic(2 * n + 1) + half_hn)
        }
        SpecializationId::S4 => {
            sign * c_nk * pow4(-ki) * binom(2 * k, ki) * (harmonic(2 * k) - half_hn)
        }
        SpecializationId::S5 => {
            sign * c_nk * pow4(-ki) * binom(2 * k + 1, ki)
                * (harmonic(2 * k + 1) - Rational::one() - half_hn)
        }
    }
}

/// Harmonic-form rewrite of the slope of the `k`-th summand of `kind`.
pub fn term_rewrite(spec: SpecializationId, kind: WeightKind, n: u64, k: u64) -> Result<Rational> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let base_w = spec.base_kind().weight(k);
    let w = kind.weight(k);
    let rewrite = base_rewrite(spec, n, k);
    if w == base_w {
        return Ok(rewrite);
    }
    Ok(rewrite * w / base_w)
}

pub fn term_rewrite_check(
    spec: SpecializationId,
    kind: WeightKind,
    n: u64,
    k: u64,
) -> Result<VerificationRecord> {
    let started = Instant::now();
    let rewrite = term_rewrite(spec, kind, n, k)?;
    let slope = dual_summand(kind, spec, n, k).slope;
    Ok(VerificationRecord::compare(
        CheckKind::Derivation,
        format!("{}/term", pair_id(spec, kind)),
        RecordParam::Summary(format!("n={n};k={k}")),
        &slope,
        &rewrite,
        started,
    ))
}

/// Everything [`derivation_verify`] ran, kept for inspection.
#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub id: TheoremId,
    pub n: u64,
    pub dual: VerificationRecord,
    pub terms: Vec<VerificationRecord>,
    pub theorem: VerificationRecord,
    micros: u64,
}

impl DerivationReport {
    pub fn parts(&self) -> impl Iterator<Item = &VerificationRecord> {
        std::iter::once(&self.dual)
            .chain(self.terms.iter())
            .chain(std::iter::once(&self.theorem))
    }

    /// Composite record: equal iff every part passed. Sides are the
    /// theorem's sides.
    pub fn composite(&self) -> VerificationRecord {
        let status = self
            .parts()
            .map(|r| r.status)
            .find(|s| *s != Status::Ok)
            .unwrap_or(Status::Ok);
        VerificationRecord {
            check: CheckKind::Derivation,
            id: self.id.to_string(),
            n: RecordParam::N(self.n),
            lhs: self.theorem.lhs.clone(),
            rhs: self.theorem.rhs.clone(),
            equal: self.parts().all(VerificationRecord::passed),
            status,
            micros: self.micros,
            note: self.parts().find_map(|r| r.note.clone()),
        }
    }
}

pub fn derivation_report(id: TheoremId, n: u64) -> DerivationReport {
    let started = Instant::now();
    let (kind, spec) = pairing(id);
    let dual = dual_identity_check(kind, spec, n);
    let terms = (0..=n)
        .map(|k| term_rewrite_check(spec, kind, n, k).expect("k <= n"))
        .collect();
    let theorem = theorem_verify(id, n);
    DerivationReport {
        id,
        n,
        dual,
        terms,
        theorem,
        micros: elapsed_micros(started),
    }
}

/// Composite check: dual identity, every per-term rewrite, and the
/// closed form.
pub fn derivation_verify(id: TheoremId, n: u64) -> VerificationRecord {
    derivation_report(id, n).composite()
}
