//! Monte Carlo frame-error estimates under exhaustive ML decoding, the
//! reference every upper bound must dominate.
//!
//! The all-zero codeword is sent as the all-(+1) vector. With `y = 1 + σ·w`,
//! a nonzero codeword `c` is at least as close to `y` as the transmitted
//! point iff `Σ_{t ∈ supp c} y_t <= 0`, so decoding reduces to finding a
//! codeword whose support sums to a nonpositive value. Ties count as errors.
//!
//! Trial `i` draws its noise from the ChaCha8 stream `(seed, i)`, so the
//! error count does not depend on how trials are split across workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::GeneratorMatrix;

/// Largest dimension simulated with brute-force ML decoding.
pub const MAX_SIMULATION_DIMENSION: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("brute-force ML decoding supports k <= {max}, got k = {k}")]
    DimensionTooLarge { k: usize, max: usize },
    #[error("noise level sigma = {0} must be finite and > 0")]
    InvalidSigma(f64),
    #[error("at least one trial is required")]
    NoTrials,
    #[error("could not build worker pool: {0}")]
    WorkerPool(String),
}

/// Simulated frame-error rate with a normal-approximation 95% interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub fer: f64,
    pub trials: u64,
    pub errors: u64,
    #[serde(rename = "ci95")]
    pub ci95_half_width: f64,
    pub seed: u64,
}

impl MCEstimate {
    pub fn from_counts(errors: u64, trials: u64, seed: u64) -> Self {
        let fer = errors as f64 / trials as f64;
        Self {
            fer,
            trials,
            errors,
            ci95_half_width: 1.96 * (fer * (1.0 - fer) / trials as f64).sqrt(),
            seed,
        }
    }

    /// `fer - 3·ci95`, the value an upper bound must not fall below.
    pub fn lower_check(&self) -> f64 {
        self.fer - 3.0 * self.ci95_half_width
    }
}

/// Precomputed codeword table for repeated simulations of one code.
#[derive(Debug, Clone)]
pub struct Simulator {
    n: usize,
    d_min: usize,
    chunks: usize,
    /// Nonzero codewords as byte chunks, lightest first.
    codewords: Vec<u8>,
}

struct Scratch {
    noisy: Vec<f64>,
    sorted: Vec<f64>,
    tables: Vec<[f64; 256]>,
}

impl Simulator {
    pub fn new(g: &GeneratorMatrix) -> Result<Self, SimError> {
        if g.k() > MAX_SIMULATION_DIMENSION {
            return Err(SimError::DimensionTooLarge {
                k: g.k(),
                max: MAX_SIMULATION_DIMENSION,
            });
        }
        let n = g.n();
        let chunks = n.div_ceil(8);
        let mut words: Vec<(u32, Vec<u8>)> = Vec::with_capacity(1 << g.k());
        g.for_each_codeword(|cw| {
            let weight: u32 = cw.iter().map(|w| w.count_ones()).sum();
            if weight > 0 {
                let bytes = (0..chunks)
                    .map(|j| (cw[j / 8] >> (8 * (j % 8)) & 0xff) as u8)
                    .collect();
                words.push((weight, bytes));
            }
        })
        .expect("k within the enumeration budget");
        words.sort_by_key(|(w, _)| *w);
        let d_min = words.first().map_or(n, |(w, _)| *w as usize);
        Ok(Self {
            n,
            d_min,
            chunks,
            codewords: words.into_iter().flat_map(|(_, b)| b).collect(),
        })
    }

    fn scratch(&self) -> Scratch {
        Scratch {
            noisy: vec![0.0; self.n],
            sorted: vec![0.0; self.n],
            tables: vec![[0.0; 256]; self.chunks],
        }
    }

    /// Whether trial `index` ends in a decoding error.
    fn trial(&self, prototype: &ChaCha8Rng, sigma: f64, index: u64, s: &mut Scratch) -> bool {
        let mut rng = prototype.clone();
        rng.set_stream(index);
        for y in s.noisy.iter_mut() {
            let w: f64 = rng.sample(StandardNormal);
            *y = 1.0 + sigma * w;
        }
        self.decide(s)
    }

    /// Whether ML decoding of the received vector `y` (all-zero codeword
    /// sent as all +1) picks, or ties with, a nonzero codeword.
    pub fn decodes_in_error(&self, y: &[f64]) -> bool {
        assert_eq!(y.len(), self.n, "received vector length");
        let mut s = self.scratch();
        s.noisy.copy_from_slice(y);
        self.decide(&mut s)
    }

    fn decide(&self, s: &mut Scratch) -> bool {
        // Any nonzero codeword covers at least d_min coordinates, so its
        // support sum is at least the d_min smallest entries plus every other
        // negative entry.
        s.sorted.copy_from_slice(&s.noisy);
        s.sorted.sort_unstable_by(f64::total_cmp);
        let floor: f64 = s.sorted[..self.d_min].iter().sum::<f64>()
            + s.sorted[self.d_min..]
                .iter()
                .filter(|&&y| y < 0.0)
                .sum::<f64>();
        if floor > 0.0 {
            return false;
        }

        for (j, table) in s.tables.iter_mut().enumerate() {
            table[0] = 0.0;
            for b in 1..256usize {
                let low = b.trailing_zeros() as usize;
                let t = 8 * j + low;
                let y = if t < self.n { s.noisy[t] } else { 0.0 };
                table[b] = table[b & (b - 1)] + y;
            }
        }
        self.codewords.chunks_exact(self.chunks).any(|cw| {
            let metric: f64 = cw
                .iter()
                .zip(&s.tables)
                .map(|(&byte, table)| table[byte as usize])
                .sum();
            metric <= 0.0
        })
    }

    fn count_errors(&self, sigma: f64, trials: u64, seed: u64) -> u64 {
        let prototype = ChaCha8Rng::seed_from_u64(seed);
        (0..trials as usize)
            .into_par_iter()
            .with_min_len(1024)
            .map_init(
                || self.scratch(),
                |scratch, i| self.trial(&prototype, sigma, i as u64, scratch) as u64,
            )
            .sum()
    }

    /// Runs `trials` frames at noise level `sigma` on `workers` threads
    /// (`None` uses the global pool).
    pub fn simulate(
        &self,
        sigma: f64,
        trials: u64,
        seed: u64,
        workers: Option<usize>,
    ) -> Result<MCEstimate, SimError> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(SimError::InvalidSigma(sigma));
        }
        if trials == 0 {
            return Err(SimError::NoTrials);
        }
        let errors = match workers {
            None => self.count_errors(sigma, trials, seed),
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| SimError::WorkerPool(e.to_string()))?
                .install(|| self.count_errors(sigma, trials, seed)),
        };
        Ok(MCEstimate::from_counts(errors, trials, seed))
    }
}

/// One-shot simulation; see [`Simulator::simulate`].
pub fn simulate_fer(
    g: &GeneratorMatrix,
    sigma: f64,
    trials: u64,
    seed: u64,
) -> Result<MCEstimate, SimError> {
    Simulator::new(g)?.simulate(sigma, trials, seed, None)
}
