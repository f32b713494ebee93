//! Exact verification of harmonic-number summation formulas built on
//! weighted Chu–Vandermonde convolutions.
//!
//! Values are exact rationals ([`Rational`]); derivatives at zero are carried
//! by exact dual numbers ([`Dual`]). The kernel identities are generic over
//! [`Scalar`], so the same code checks an identity at rational parameters and
//! replays its derivative at dual parameters.

pub mod cli;
pub mod derivation;
pub mod dual;
pub mod error;
pub mod harmonic;
pub mod kernels;
pub mod rational;
pub mod record;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod theorems;

pub use dual::{affine, dual_div, Dual};
pub use error::{Error, Result};
pub use harmonic::{binom, harmonic, harmonic_offset};
pub use kernels::{kernel_lhs, kernel_rhs, kernel_verify, KernelParams, WeightKind};
pub use rational::Rational;
pub use record::{CheckKind, Status, VerificationRecord};
pub use scalar::{gen_binom, pow_scalar, Scalar};
pub use theorems::{family_lhs, theorem_rhs, theorem_verify, TheoremId};
