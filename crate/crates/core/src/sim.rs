//! Seeded channel simulation: random codewords through random bursts into a
//! decoder.
//!
//! The generator is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`.
//! Every draw takes one `next_u64` word `u` and maps it to `0..range` as
//! `(u * range) >> 64`. Per trial the draws are: codeword index, burst start,
//! inserted word. Keeping this sequence fixed makes runs replay exactly
//! across versions.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::channel::{apply_burst, BurstSpec};
use crate::codes::{BurstCode, Codebook};
use crate::error::{Error, Result};
use crate::verify::Witness;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub family: &'static str,
    pub n: usize,
    pub t: usize,
    pub s: usize,
    pub seed: u64,
    pub codebook_size: usize,
    pub trials: u64,
    pub successes: u64,
    /// The first trial that did not decode, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Witness>,
}

impl SimReport {
    pub fn all_succeeded(&self) -> bool {
        self.successes == self.trials
    }
}

struct Draws(ChaCha8Rng);

impl Draws {
    fn below(&mut self, range: u64) -> u64 {
        ((u128::from(self.0.next_u64()) * u128::from(range)) >> 64) as u64
    }
}

/// Run `config.trials` random bursts of `decoder`'s type over members of
/// `codebook`.
pub fn simulate(
    codebook: &Codebook,
    decoder: &dyn BurstCode,
    config: SimConfig,
) -> Result<SimReport> {
    if codebook.members.is_empty() {
        return Err(Error::InvalidParams(
            "cannot simulate an empty codebook".into(),
        ));
    }
    let n = codebook.n();
    let (t, s) = decoder.burst();
    if n < t || decoder.n() != n {
        return Err(Error::InvalidParams(format!(
            "decoder for n={} does not fit codebook of length {n}",
            decoder.n()
        )));
    }
    let mut draws = Draws(ChaCha8Rng::seed_from_u64(config.seed));
    let mut successes = 0;
    let mut first_failure = None;
    for _ in 0..config.trials {
        let x = codebook.members[draws.below(codebook.size() as u64) as usize];
        let start = 1 + draws.below((n - t + 1) as u64) as usize;
        let inserted = Word::from_value(u128::from(draws.below(1u64 << s)), s)?;
        let spec = BurstSpec::new(t, s, start, inserted);
        let y = apply_burst(&x, &spec)?;
        match decoder.decode(&y) {
            Ok(got) if got == x => successes += 1,
            got => {
                if first_failure.is_none() {
                    first_failure = Some(Witness::Decode {
                        codeword: x,
                        burst: spec,
                        received: y,
                        decoded: got.as_ref().ok().copied(),
                        error: got.err().map(|e| e.to_string()),
                    });
                }
            }
        }
    }
    Ok(SimReport {
        family: codebook.params.family(),
        n,
        t,
        s,
        seed: config.seed,
        codebook_size: codebook.size(),
        trials: config.trials,
        successes,
        first_failure,
    })
}
