//! Seeded sampling of rational test matrices. Every case derives its own
//! generator from `(seed, case key)` so parallel runs stay reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Scalar};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for one named case; FNV-1a of the key mixed into the seed.
pub fn case_rng(seed: u64, key: &str) -> SampleRng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in key.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h.rotate_left(17))
}

/// Numerator in `-9..=9`, denominator in `1..=5`.
pub fn random_scalar(rng: &mut SampleRng) -> Scalar {
    Scalar::ratio(rng.random_range(-9..=9), rng.random_range(1..=5))
}

pub fn random_nonzero_scalar(rng: &mut SampleRng) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_matrix(rng: &mut SampleRng, n: usize) -> Matrix<Scalar> {
    Matrix::from_fn(n, |_, _| random_scalar(rng))
}
