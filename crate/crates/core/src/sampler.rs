use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Rational;

pub const DEFAULT_TRIALS: usize = 25;
pub const DEFAULT_COEFF_BOUND: u64 = 1_000_000;

/// Source of "generic" integer coefficients.
///
/// Coefficients are uniform on `[-coeff_bound, coeff_bound]`; the stream is a
/// pure function of `seed`. The sampler is owned by its caller and is never
/// shared between threads.
#[derive(Clone, Debug)]
pub struct GenericSampler {
    seed: u64,
    coeff_bound: u64,
    trials: usize,
    rng: ChaCha8Rng,
}

impl GenericSampler {
    pub fn new(seed: u64, coeff_bound: u64, trials: usize) -> Self {
        assert!(coeff_bound > 0, "coeff_bound must be positive");
        assert!(trials > 0, "trials must be positive");
        GenericSampler {
            seed,
            coeff_bound,
            trials,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn with_seed(seed: u64) -> Self {
        Self::new(seed, DEFAULT_COEFF_BOUND, DEFAULT_TRIALS)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn coeff_bound(&self) -> u64 {
        self.coeff_bound
    }

    pub fn trials(&self) -> usize {
        self.trials
    }

    pub fn coeff_int(&mut self) -> i64 {
        let b = self.coeff_bound.min(i64::MAX as u64) as i64;
        self.rng.gen_range(-b..=b)
    }

    pub fn coeff(&mut self) -> Rational {
        Rational::from_integer(BigInt::from(self.coeff_int()))
    }

    pub fn coeffs(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.coeff()).collect()
    }

    /// A sampler with an independent stream, for nested randomized steps.
    pub fn fork(&mut self) -> GenericSampler {
        let seed = self.rng.gen();
        GenericSampler::new(seed, self.coeff_bound, self.trials)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_bounded() {
        let mut a = GenericSampler::new(7, 3, 1);
        let mut b = GenericSampler::new(7, 3, 1);
        let xs: Vec<i64> = (0..200).map(|_| a.coeff_int()).collect();
        let ys: Vec<i64> = (0..200).map(|_| b.coeff_int()).collect();
        assert_eq!(xs, ys);
        assert!(xs.iter().all(|x| x.abs() <= 3));
        assert!(xs.contains(&-3) && xs.contains(&3));
    }
}
