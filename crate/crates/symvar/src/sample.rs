//! Deterministic sampling of small exact scalars.
//!
//! Numerators and denominators are drawn from a small range so that cubic
//! and quartic polynomial evaluation stays fast in exact arithmetic.

use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
    pub max_num: i64,
    pub max_den: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_num: 4, max_den: 3 }
    }

    pub fn rational(&mut self) -> Scalar {
        let num = self.rng.gen_range(-self.max_num..=self.max_num);
        let den = self.rng.gen_range(1..=self.max_den);
        Scalar::from_frac(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let s = self.rational();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Generic element of the full field (all four components).
    pub fn scalar(&mut self) -> Scalar {
        let mut parts = Vec::with_capacity(4);
        for _ in 0..4 {
            let num = self.rng.gen_range(-self.max_num..=self.max_num);
            let den = self.rng.gen_range(1..=self.max_den);
            parts.push(Scalar::from_frac(num, den));
        }
        let i = Scalar::i();
        let r2 = Scalar::sqrt2();
        let ir2 = Scalar::sqrt_minus2();
        parts[0].clone()
            + parts[1].clone() * i
            + parts[2].clone() * r2
            + parts[3].clone() * ir2
    }

    pub fn rational_vec(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.rational()).collect()
    }
}
