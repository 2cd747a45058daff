//! The (2,1)-burst shifted VT code `SVT(n;c,d,P) = {x : VT(x) ≡ c
//! (mod 2P−1), wt(x) ≡ d (mod 4)}`. It corrects a (2,1)-burst whose start
//! is known to lie in a window of at most `P` coordinates.

use serde::Serialize;

use super::{check_residue, expect_len, residue, unique_survivor};
use crate::error::{Error, Result};
use crate::word::{vt_syndrome, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Svt21Code {
    pub n: usize,
    pub c: u64,
    pub d: u64,
    pub p: usize,
}

impl Svt21Code {
    /// `p` may exceed `n`; the window is then the whole word.
    pub fn new(n: usize, c: u64, d: u64, p: usize) -> Result<Svt21Code> {
        if n == 0 || p == 0 {
            return Err(Error::InvalidParams("n and P must be positive".into()));
        }
        check_residue("c", c, 2 * p as u64 - 1)?;
        check_residue("d", d, 4)?;
        Ok(Svt21Code { n, c, d, p })
    }

    pub fn vt_modulus(&self) -> u64 {
        2 * self.p as u64 - 1
    }

    /// The `(c, d)` that put `x` in the code for window bound `p`.
    pub fn residues_of(x: &Word, p: usize) -> (u64, u64) {
        (
            residue(vt_syndrome(x), 2 * p as u64 - 1),
            x.weight() as u64 % 4,
        )
    }

    pub fn of(x: &Word, p: usize) -> Result<Svt21Code> {
        let (c, d) = Svt21Code::residues_of(x, p);
        Svt21Code::new(x.len(), c, d, p)
    }

    pub fn contains(&self, x: &Word) -> bool {
        x.len() == self.n
            && residue(vt_syndrome(x), self.vt_modulus()) == self.c
            && x.weight() as u64 % 4 == self.d
    }

    /// Undo a (2,1)-burst or a single deletion whose start lies in the
    /// 1-based inclusive `window`.
    pub fn decode(&self, y: &Word, window: (usize, usize)) -> Result<Word> {
        expect_len(y, self.n - 1)?;
        let (lo, hi) = window;
        if lo == 0 || lo > hi || hi > self.n {
            return Err(Error::InvalidParams(format!(
                "window [{lo},{hi}] is not inside [1,{}]",
                self.n
            )));
        }
        if hi - lo + 1 > self.p {
            return Err(Error::WindowTooLong { lo, hi, p: self.p });
        }
        let bursts = (lo..=hi.min(self.n - 1)).flat_map(|j| {
            (0..4u128).map(move |v| y.splice(j - 1, 1, &Word::from_value_unchecked(v, 2)))
        });
        let deletions = (lo..=hi).flat_map(|j| {
            (0..2u128).map(move |v| y.splice(j - 1, 0, &Word::from_value_unchecked(v, 1)))
        });
        unique_survivor(bursts.chain(deletions), |c| self.contains(c))
    }
}
