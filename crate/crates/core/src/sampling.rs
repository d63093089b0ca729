//! Seeded pseudorandom rationals for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const SEED_ENV: &str = "CARTANLAB_SEED";

/// `CARTANLAB_SEED` if set and parseable, else [`DEFAULT_SEED`].
pub fn configured_seed() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Rationals `p/q` with `p ∈ [−9, 9]`, `q ∈ [1, 9]`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn from_env() -> Self {
        Sampler::new(configured_seed())
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn rational(&mut self) -> Scalar {
        let p = self.int(-9, 9);
        let q = self.int(1, 9);
        Scalar::frac(p, q)
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let r = self.rational();
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    pub fn rationals(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.rational()).collect()
    }

    /// Coordinates of a nonzero vector.
    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Scalar> {
        loop {
            let v = self.rationals(n);
            if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                return v;
            }
        }
    }

    /// A vector with about `num/den` of its entries nonzero, never all zero.
    pub fn sparse_vector(&mut self, n: usize, num: u32, den: u32) -> Vec<Scalar> {
        loop {
            let v: Vec<Scalar> = (0..n)
                .map(|_| {
                    if self.rng.random_ratio(num, den) {
                        self.nonzero_rational()
                    } else {
                        Scalar::from(0)
                    }
                })
                .collect();
            if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                return v;
            }
        }
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.random_ratio(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_seed() {
        let a = Sampler::new(7).rationals(20);
        let b = Sampler::new(7).rationals(20);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(8).rationals(20));
    }

    #[test]
    fn ranges() {
        let mut s = Sampler::new(1);
        for _ in 0..500 {
            let r = s.rational();
            assert!(r.is_real());
            assert!(r.re().denom() <= &9.into());
            assert!(r.re().numer().magnitude() <= &9u32.into());
        }
    }
}
