//! One verification outcome and its serialized shape.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Theorem,
    Kernel,
    Relation,
    Derivation,
    CvBase,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Theorem => "theorem",
            CheckKind::Kernel => "kernel",
            CheckKind::Relation => "relation",
            CheckKind::Derivation => "derivation",
            CheckKind::CvBase => "cv-base",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    PoleSkipped,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::PoleSkipped => "pole-skipped",
            Status::Error => "error",
        }
    }
}

/// A serialized scalar: `"p/q"` for rationals, `{value, slope}` for duals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Rational(String),
    Dual { value: String, slope: String },
    /// Nothing was computed for this side (pole or failure).
    Missing,
}

impl fmt::Display for ReportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportValue::Rational(s) => f.write_str(s),
            ReportValue::Dual { value, slope } => write!(f, "({value}, {slope})"),
            ReportValue::Missing => f.write_str("-"),
        }
    }
}

/// The `n` column: a plain size, or a parameter summary for checks keyed
/// by more than one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RecordParam {
    N(u64),
    Summary(String),
}

impl fmt::Display for RecordParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordParam::N(n) => write!(f, "{n}"),
            RecordParam::Summary(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub check: CheckKind,
    pub id: String,
    pub n: RecordParam,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub equal: bool,
    pub status: Status,
    pub micros: u64,
    /// Diagnostic for pole-skipped or error records; not serialized.
    #[serde(skip)]
    pub note: Option<String>,
}

impl VerificationRecord {
    /// Compares two exact values. Equality is decided on the values, and
    /// the canonical serialization makes equal values byte-identical.
    pub fn compare<S: Scalar>(
        check: CheckKind,
        id: impl Into<String>,
        n: RecordParam,
        lhs: &S,
        rhs: &S,
        started: Instant,
    ) -> Self {
        VerificationRecord {
            check,
            id: id.into(),
            n,
            lhs: lhs.to_report(),
            rhs: rhs.to_report(),
            equal: lhs == rhs,
            status: Status::Ok,
            micros: elapsed_micros(started),
            note: None,
        }
    }

    /// Record for a check whose right side could not be evaluated.
    /// Pole parameters become `pole-skipped`; anything else is an `error`.
    pub fn from_error<S: Scalar>(
        check: CheckKind,
        id: impl Into<String>,
        n: RecordParam,
        lhs: Option<&S>,
        err: &Error,
        started: Instant,
    ) -> Self {
        let status = match err {
            Error::PoleParameter(_) => Status::PoleSkipped,
            _ => Status::Error,
        };
        VerificationRecord {
            check,
            id: id.into(),
            n,
            lhs: lhs.map_or(ReportValue::Missing, Scalar::to_report),
            rhs: ReportValue::Missing,
            equal: false,
            status,
            micros: elapsed_micros(started),
            note: Some(err.to_string()),
        }
    }

    /// A failed equality under `ok` status; what the exit code keys on.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Ok && !self.equal
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Ok && self.equal
    }
}

pub(crate) fn elapsed_micros(started: Instant) -> u64 {
    u64::try_from(started.elapsed().as_micros()).unwrap_or(u64::MAX)
}
