//! Seeded, splittable randomness. Every stochastic piece of a run
//! (initialization, sampling, dropout) draws from a stream split off one
//! root seed by label, so runs are reproducible and streams are independent
//! of each other's consumption order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use sha2::{Digest, Sha256};

use crate::elem::Element;

#[derive(Debug, Clone)]
pub struct RunRng {
    key: [u8; 32],
}

impl RunRng {
    pub fn from_seed(seed: u64) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(b"tensor-core.rng.v1");
        hasher.update(seed.to_le_bytes());
        RunRng { key: hasher.finalize().into() }
    }

    /// Derives an independent child generator. The same (seed, label path)
    /// always yields the same stream.
    pub fn split(&self, label: &str) -> RunRng {
        let mut hasher = Sha256::new();
        hasher.update(self.key);
        hasher.update([0x01]);
        hasher.update(label.as_bytes());
        RunRng { key: hasher.finalize().into() }
    }

    pub fn stream(&self) -> ChaCha8Rng {
        ChaCha8Rng::from_seed(self.key)
    }
}

/// Samples `n` values from Normal(0, std). Draws are made in `f64` and then
/// narrowed, so f32 and f64 runs see the same underlying stream.
pub fn normal_vec<E: Element>(rng: &mut ChaCha8Rng, std: f64, n: usize) -> Vec<E> {
    if std == 0.0 {
        return vec![E::zero(); n];
    }
    let dist = Normal::new(0.0, std).expect("std is finite and positive");
    (0..n).map(|_| E::from_f64(dist.sample(rng))).collect()
}
