use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; mixes a root seed with a path of tags.
pub fn derive_seed(root: u64, tags: &[u64]) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    tags.iter().fold(mix(root), |acc, &t| mix(acc ^ mix(t)))
}

/// Deterministic random source. Child streams are derived from the seed, not
/// from the current state, so forked work is schedule-independent.
#[derive(Clone, Debug)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn fork(&self, tag: u64) -> Self {
        Self::new(derive_seed(self.seed, &[tag]))
    }

    pub fn fork_path(&self, tags: &[u64]) -> Self {
        Self::new(derive_seed(self.seed, tags))
    }

    /// Uniform integer in `[-height, height]`.
    pub fn int_in(&mut self, height: u64) -> i64 {
        let h = height as i64;
        self.inner.gen_range(-h..=h)
    }

    /// Uniform index in `0..bound`.
    pub fn index(&mut self, bound: usize) -> usize {
        self.inner.gen_range(0..bound)
    }
}
