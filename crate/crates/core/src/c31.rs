//! The (3,1)-burst code `C_{3,1}(n;a,b,c,d)`:
//! `Rsyn(0‖x) ≡ a (mod 4n)`, odd-coordinate sum `≡ b (mod 4)`,
//! even-coordinate sum `≡ c (mod 4)` and run count `≡ d (mod 5)`.
//!
//! The two parity sums tell the decoder whether the burst acted as a burst
//! of two deletions or as one of the four patterns `000→1`, `010→1`,
//! `111→0`, `101→0`; the candidates of that class are then filtered by all
//! four congruences.

use serde::Serialize;

use crate::codes::search::{check_guard, search_by, SearchResult};
use crate::codes::{burst_preimages, check_residue, BurstCode, Classification, CodeParams};
use crate::error::{Error, Result};
use crate::word::{rsyn0_unchecked, weights, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct C31Params {
    pub n: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

fn check_even(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!(
            "length must be even and positive, got {n}"
        )));
    }
    Ok(())
}

impl C31Params {
    pub fn new(n: usize, a: u64, b: u64, c: u64, d: u64) -> Result<C31Params> {
        check_even(n)?;
        check_residue("a", a, 4 * n as u64)?;
        check_residue("b", b, 4)?;
        check_residue("c", c, 4)?;
        check_residue("d", d, 5)?;
        Ok(C31Params { n, a, b, c, d })
    }

    /// The parameters that put `x` in the code.
    pub fn of(x: &Word) -> Result<C31Params> {
        check_even(x.len())?;
        Ok(C31Params::of_unchecked(x))
    }

    fn of_unchecked(x: &Word) -> C31Params {
        let n = x.len();
        let w = weights(x);
        C31Params {
            n,
            a: rsyn0_unchecked(x) % (4 * n as u64),
            b: w.odd as u64 % 4,
            c: w.even as u64 % 4,
            d: x.run_count() as u64 % 5,
        }
    }

    /// `(Δ_odd, Δ_even)` of a received word.
    pub fn parity_deltas(&self, y: &Word) -> (u8, u8) {
        let w = weights(y);
        (
            ((self.b + 4 - w.odd as u64 % 4) % 4) as u8,
            ((self.c + 4 - w.even as u64 % 4) % 4) as u8,
        )
    }

    /// `Δ_r = (d − r(y)) mod 5`.
    pub fn run_delta(&self, y: &Word) -> u8 {
        ((self.d + 5 - y.run_count() as u64 % 5) % 5) as u8
    }

    /// Which kind of burst turned a codeword into `y`.
    pub fn classify(&self, y: &Word) -> Result<Classification> {
        if y.len() + 2 != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n - 2,
                got: y.len(),
            });
        }
        let (odd, even) = self.parity_deltas(y);
        classify_deltas(odd, even)
    }

    fn congruent_without_runs(&self, x: &Word) -> bool {
        let w = weights(x);
        x.len() == self.n
            && rsyn0_unchecked(x) % (4 * self.n as u64) == self.a
            && w.odd as u64 % 4 == self.b
            && w.even as u64 % 4 == self.c
    }

    /// Decode and keep the intermediate results.
    pub fn decode_traced(&self, y: &Word) -> Result<(Word, C31Trace)> {
        let classification = self.classify(y)?;
        let mut three: Vec<Word> = candidates(y, classification)
            .filter(|x| self.congruent_without_runs(x))
            .collect();
        three.sort_unstable();
        three.dedup();
        let survivors: Vec<Word> = three
            .iter()
            .copied()
            .filter(|x| x.run_count() as u64 % 5 == self.d)
            .collect();
        let (delta_odd, delta_even) = self.parity_deltas(y);
        let trace = C31Trace {
            delta_odd,
            delta_even,
            delta_r: self.run_delta(y),
            classification,
            survivors: survivors.len(),
            survivors_without_run_count: three.len(),
            run_count_decided: three.len() > 1 && survivors.len() == 1,
        };
        match survivors.len() {
            0 => Err(Error::DecodeFailure),
            1 => Ok((survivors[0], trace)),
            count => Err(Error::Ambiguous { count }),
        }
    }
}

/// The table mapping `(Δ_odd, Δ_even)` to an error class.
pub fn classify_deltas(odd: u8, even: u8) -> Result<Classification> {
    Ok(match (odd, even) {
        (3, 0) | (0, 3) => Classification::Pattern000To1,
        (3, 1) | (1, 3) => Classification::Pattern010To1,
        (2, 1) | (1, 2) => Classification::Pattern111To0,
        (2, 0) | (0, 2) => Classification::Pattern101To0,
        (0 | 1, 0 | 1) => Classification::TwoBurstDeletion,
        _ => return Err(Error::Unclassifiable { odd, even }),
    })
}

/// The class a `(3,1)`-burst deleting `deleted` and inserting `inserted`
/// belongs to.
pub fn true_class(deleted: &Word, inserted: &Word) -> Classification {
    match (deleted.to_string().as_str(), inserted.to_string().as_str()) {
        ("000", "1") => Classification::Pattern000To1,
        ("010", "1") => Classification::Pattern010To1,
        ("111", "0") => Classification::Pattern111To0,
        ("101", "0") => Classification::Pattern101To0,
        _ => Classification::TwoBurstDeletion,
    }
}

/// Preimages of `y` under errors of one class.
fn candidates(y: &Word, class: Classification) -> Box<dyn Iterator<Item = Word> + '_> {
    let expand = |from: u8, to: &'static str| -> Box<dyn Iterator<Item = Word> + '_> {
        let to: Word = to.parse().expect("literal pattern");
        Box::new(
            (0..y.len())
                .filter(move |&j| y.bit(j) == from)
                .map(move |j| y.splice(j, 1, &to)),
        )
    };
    match class {
        Classification::Pattern000To1 => expand(1, "000"),
        Classification::Pattern010To1 => expand(1, "010"),
        Classification::Pattern111To0 => expand(0, "111"),
        Classification::Pattern101To0 => expand(0, "101"),
        _ => Box::new(burst_preimages(y, 2, 0)),
    }
}

/// Intermediate results of one decode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct C31Trace {
    pub delta_odd: u8,
    pub delta_even: u8,
    pub delta_r: u8,
    pub classification: Classification,
    /// Distinct candidates meeting all four congruences.
    pub survivors: usize,
    /// Distinct candidates meeting the first three.
    pub survivors_without_run_count: usize,
    /// The run-count congruence was needed to reach a unique survivor.
    pub run_count_decided: bool,
}

impl BurstCode for C31Params {
    fn n(&self) -> usize {
        self.n
    }

    fn burst(&self) -> (usize, usize) {
        (3, 1)
    }

    fn contains(&self, x: &Word) -> bool {
        self.congruent_without_runs(x) && x.run_count() as u64 % 5 == self.d
    }

    fn decode(&self, y: &Word) -> Result<Word> {
        Ok(self.decode_traced(y)?.0)
    }
}

impl From<C31Params> for CodeParams {
    fn from(c: C31Params) -> CodeParams {
        CodeParams::C31(c)
    }
}

pub fn c31_param_search(n: usize, guard: usize) -> Result<SearchResult> {
    check_even(n)?;
    check_guard(n, guard)?;
    search_by(n, guard, |_| true, C31Params::of_unchecked)
}
