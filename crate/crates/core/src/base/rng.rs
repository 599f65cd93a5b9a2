use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random stream used by every stochastic step of a run.
///
/// Backed by ChaCha8 (`rand_chacha`), seeded through `SeedableRng::seed_from_u64`.
/// All draws go through fixed-width integer paths so the sequence is the same
/// on every platform. Each run owns exactly one stream.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    /// Uniform draw in `[0, 1)` with 53 bits of precision.
    pub fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform index in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        self.rng.gen_range(0..n as u64) as usize
    }

    pub fn coin(&mut self, probability: f64) -> bool {
        self.uniform() < probability
    }
}
