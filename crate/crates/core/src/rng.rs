//! Deterministic random sampling.
//!
//! All stochastic pieces of the library (focal-point sampling, curvature
//! scans, Cartan-Munzner residual checks) draw from a ChaCha stream seeded
//! explicitly, so identical configuration yields identical output on every
//! platform. Subtask seeds are derived as `base ^ stable_hash(label, index)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

/// FNV-1a over the label bytes followed by the little-endian index bytes.
pub fn stable_hash(label: &str, index: u64) -> u64 {
    const OFFSET: u64 = 0xcbf29ce484222325;
    const PRIME: u64 = 0x100000001b3;
    let mut h = OFFSET;
    for b in label.bytes().chain(index.to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(PRIME);
    }
    h
}

pub fn derive_seed(base: u64, label: &str, index: u64) -> u64 {
    base ^ stable_hash(label, index)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard Gaussian via Box-Muller; generated in f64 and converted, so the
/// stream is identical for every scalar type.
pub fn gaussian<S: Scalar>(rng: &mut ChaCha8Rng) -> S {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen::<f64>();
    let z = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
    S::of(z)
}

pub fn gaussian_vector<S: Scalar>(rng: &mut ChaCha8Rng, n: usize) -> Vec<S> {
    (0..n).map(|_| gaussian(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_derivation_is_stable_and_label_sensitive() {
        let a = derive_seed(7, "scan", 3);
        let b = derive_seed(7, "scan", 3);
        assert_eq!(a, b);
        assert_ne!(a, derive_seed(7, "scan", 4));
        assert_ne!(a, derive_seed(7, "sample", 3));
    }

    #[test]
    fn gaussian_stream_matches_across_scalar_types() {
        let mut r1 = rng_from_seed(11);
        let mut r2 = rng_from_seed(11);
        for _ in 0..32 {
            let x: f64 = gaussian(&mut r1);
            let y: f32 = gaussian(&mut r2);
            assert!((x as f32 - y).abs() < 1e-6);
        }
    }
}
