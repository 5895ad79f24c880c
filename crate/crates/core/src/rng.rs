//! Seeded, splittable randomness for reproducible instances.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`). A run seed `s`
//! is expanded to a 256-bit key with `SeedableRng::seed_from_u64`, and the
//! attempt index selects the ChaCha stream, so `(seed, attempt)` names an
//! independent stream. Uniform field elements are drawn with
//! `Rng::gen_range`, which rejects out-of-range samples instead of reducing
//! modulo the field size.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type InstanceRng = ChaCha8Rng;

/// Stream for attempt `attempt` of the run seeded with `seed`.
pub fn stream(seed: u64, attempt: u64) -> InstanceRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    rng
}
