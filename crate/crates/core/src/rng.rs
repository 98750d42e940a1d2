//! Seeded, splittable randomness for the parameter sweeps.
//!
//! Draw `i` of a sweep with seed `S` uses its own SplitMix64 stream whose
//! state starts at `S + (i + 1) * 0xD1B54A32D192ED03` (wrapping). Bounded
//! integers are `next_u64() % n`. Streams are independent of thread count
//! and evaluation order.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{rat, Rational};

const STREAM_STRIDE: u64 = 0xD1B5_4A32_D192_ED03;

/// Independent stream for draw `index`.
pub fn stream(seed: u64, index: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(STREAM_STRIDE)))
}

/// Uniform integer in `0..n`.
pub fn below(rng: &mut SplitMix64, n: u64) -> u64 {
    rng.next_u64() % n
}

/// Uniform double in `[0, 1)` from the top 53 bits.
pub fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform double in `[lo, hi)`.
pub fn uniform(rng: &mut SplitMix64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * unit(rng)
}

/// Nonzero rational `±p/q` with `1 <= p, q <= 7`: sign first, then `p`,
/// then `q`.
pub fn small_rational(rng: &mut SplitMix64) -> Rational {
    let sign = if below(rng, 2) == 0 { 1 } else { -1 };
    let p = 1 + below(rng, 7) as i64;
    let q = 1 + below(rng, 7) as i64;
    rat(sign * p, q)
}
