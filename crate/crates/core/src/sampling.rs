//! Seeded random parameters for the kernel and convolution property sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernels::KernelParams;
use crate::rational::Rational;

pub const DEFAULT_SEED: u64 = 42;

/// Numerators are drawn from `[-numerator, numerator]`, denominators from
/// `[1, denominator]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub numerator: i64,
    pub denominator: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            numerator: 10,
            denominator: 10,
        }
    }
}

pub struct ParamSampler {
    rng: ChaCha8Rng,
    bounds: Bounds,
}

impl ParamSampler {
    pub fn new(seed: u64, bounds: Bounds) -> Self {
        assert!(bounds.numerator >= 0 && bounds.denominator >= 1, "invalid bounds {bounds:?}");
        ParamSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
        }
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-self.bounds.numerator..=self.bounds.numerator);
        let q = self.rng.gen_range(1..=self.bounds.denominator);
        Rational::frac(p, q)
    }

    pub fn size(&mut self, n_max: u64) -> u64 {
        self.rng.gen_range(0..=n_max)
    }

    pub fn kernel_params(&mut self, n_max: u64) -> KernelParams<Rational> {
        let a = self.rational();
        let b = self.rational();
        KernelParams::new(a, b, self.size(n_max))
    }
}
