//! The (2,1)-burst code `C_{2,1}(n;a,b) = {x : VT(x) ≡ a (mod 2n−1),
//! wt(x) ≡ b (mod 4)}` and its run-length-limited subcode.

use serde::Serialize;

use super::rll::rll_member;
use super::{
    burst_preimages, check_residue, expect_len, residue, unique_survivor, BurstCode,
    Classification, DecodeOutcome,
};
use crate::error::{Error, Result};
use crate::word::{vt_syndrome, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct C21Code {
    pub n: usize,
    pub a: u64,
    pub b: u64,
}

impl C21Code {
    pub fn new(n: usize, a: u64, b: u64) -> Result<C21Code> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        check_residue("a", a, 2 * n as u64 - 1)?;
        check_residue("b", b, 4)?;
        Ok(C21Code { n, a, b })
    }

    pub fn vt_modulus(&self) -> u64 {
        2 * self.n as u64 - 1
    }

    /// The parameters that put `x` in the code.
    pub fn of(x: &Word) -> Result<C21Code> {
        if x.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = x.len();
        Ok(C21Code {
            n,
            a: residue(vt_syndrome(x), 2 * n as u64 - 1),
            b: x.weight() as u64 % 4,
        })
    }

    /// Weight change `(b − wt(y)) mod 4`; 3 means `00→1`, 2 means `11→0`.
    pub fn weight_delta(&self, y: &Word) -> u64 {
        (self.b + 4 - y.weight() as u64 % 4) % 4
    }

    /// Undo a (2,1)-burst and report how it acted.
    pub fn decode_outcome(&self, y: &Word) -> Result<DecodeOutcome> {
        self.decode_filtered(y, |_| true)
    }

    pub(crate) fn decode_filtered(
        &self,
        y: &Word,
        extra: impl Fn(&Word) -> bool,
    ) -> Result<DecodeOutcome> {
        expect_len(y, self.n - 1)?;
        let codeword = unique_survivor(burst_preimages(y, 2, 1), |c| self.contains(c) && extra(c))?;
        Ok(describe(&codeword, y, self.weight_delta(y)))
    }
}

/// Classify the (2,1)-burst taking `x` to `y` from the weight change and
/// locate it in `x`'s coordinates.
fn describe(x: &Word, y: &Word, delta: u64) -> DecodeOutcome {
    let (classification, window) = match delta {
        3 => (Classification::Merge00To1, merge_window(x, y, 0)),
        2 => (Classification::Merge11To0, merge_window(x, y, 1)),
        _ => (Classification::SingleDeletion, deletion_window(x, y)),
    };
    DecodeOutcome {
        codeword: *x,
        classification,
        location_window: window,
    }
}

/// Start of the `aa → 1−a` merge; the merged symbol sits at the same
/// coordinate of `y`.
fn merge_window(x: &Word, y: &Word, a: u8) -> (usize, usize) {
    let merged = Word::from_value_unchecked(u128::from(1 - a), 1);
    let starts: Vec<usize> = (0..x.len() - 1)
        .filter(|&j| x.bit(j) == a && x.bit(j + 1) == a && x.splice(j, 2, &merged) == *y)
        .map(|j| j + 1)
        .collect();
    (starts[0], starts[starts.len() - 1])
}

/// The run of `x` from which a single deletion yields `y`.
fn deletion_window(x: &Word, y: &Word) -> (usize, usize) {
    let spots: Vec<usize> = (0..x.len())
        .filter(|&j| x.splice(j, 1, &Word::EMPTY) == *y)
        .map(|j| j + 1)
        .collect();
    (spots[0], spots[spots.len() - 1])
}

impl BurstCode for C21Code {
    fn n(&self) -> usize {
        self.n
    }

    fn burst(&self) -> (usize, usize) {
        (2, 1)
    }

    fn contains(&self, x: &Word) -> bool {
        x.len() == self.n
            && residue(vt_syndrome(x), self.vt_modulus()) == self.a
            && x.weight() as u64 % 4 == self.b
    }

    fn decode(&self, y: &Word) -> Result<Word> {
        Ok(self.decode_outcome(y)?.codeword)
    }
}

/// `C_{2,1}(n;a,b) ∩ S_n(f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct C21RllCode {
    #[serde(flatten)]
    pub code: C21Code,
    pub f: usize,
}

impl C21RllCode {
    pub fn new(n: usize, a: u64, b: u64, f: usize) -> Result<C21RllCode> {
        if f == 0 {
            return Err(Error::InvalidParams("run bound f must be positive".into()));
        }
        Ok(C21RllCode {
            code: C21Code::new(n, a, b)?,
            f,
        })
    }

    pub fn decode_outcome(&self, y: &Word) -> Result<DecodeOutcome> {
        self.code.decode_filtered(y, |c| rll_member(c, self.f))
    }
}

impl BurstCode for C21RllCode {
    fn n(&self) -> usize {
        self.code.n
    }

    fn burst(&self) -> (usize, usize) {
        (2, 1)
    }

    fn contains(&self, x: &Word) -> bool {
        self.code.contains(x) && rll_member(x, self.f)
    }

    fn decode(&self, y: &Word) -> Result<Word> {
        Ok(self.decode_outcome(y)?.codeword)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::burst_outcomes;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn merge_example() {
        let x = w("10011");
        let code = C21Code::of(&x).unwrap();
        assert_eq!(code, C21Code { n: 5, a: 1, b: 3 });
        let out = code.decode_outcome(&w("1111")).unwrap();
        assert_eq!(out.codeword, x);
        assert_eq!(out.classification, Classification::Merge00To1);
        assert_eq!(out.location_window, (2, 2));
    }

    #[test]
    fn deletion_window_spans_the_run() {
        let x = w("10001101");
        let code = C21Code::of(&x).unwrap();
        let out = code.decode_outcome(&w("1001101")).unwrap();
        assert_eq!(out.codeword, x);
        assert_eq!(out.classification, Classification::SingleDeletion);
        assert_eq!(out.location_window, (2, 4));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(C21Code::new(5, 9, 0).is_err());
        assert!(C21Code::new(5, 8, 4).is_err());
        assert!(C21RllCode::new(5, 0, 0, 0).is_err());
    }

    #[test]
    fn every_burst_round_trips_and_merges_are_identified() {
        for n in 2..=10 {
            for x in Word::all(n).unwrap() {
                let code = C21Code::of(&x).unwrap();
                for (spec, y) in burst_outcomes(&x, 2, 1).unwrap() {
                    let out = code.decode_outcome(&y).unwrap();
                    assert_eq!(out.codeword, x);
                    let deleted = x.slice(spec.start - 1, spec.start + 1);
                    let merged = match (deleted.value(), spec.inserted.value()) {
                        (0b00, 1) => Some(Classification::Merge00To1),
                        (0b11, 0) => Some(Classification::Merge11To0),
                        _ => None,
                    };
                    match merged {
                        Some(class) => {
                            assert_eq!(out.classification, class);
                            assert_eq!(out.location_window, (spec.start, spec.start));
                        }
                        None => {
                            assert_eq!(out.classification, Classification::SingleDeletion);
                            let (c1, c2) = out.location_window;
                            // a non-merge burst deletes x_start or x_{start+1}
                            assert!(c1 <= spec.start + 1 && spec.start <= c2, "{x} {spec:?}");
                            assert!((c1..=c2).all(|j| x.bit(j - 1) == x.bit(c1 - 1)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rll_subcode_decodes_its_members() {
        let n = 9;
        for x in Word::all(n).unwrap().filter(|x| rll_member(x, 3)) {
            let base = C21Code::of(&x).unwrap();
            let code = C21RllCode { code: base, f: 3 };
            assert!(code.contains(&x));
            for (_, y) in burst_outcomes(&x, 2, 1).unwrap() {
                assert_eq!(code.decode(&y).unwrap(), x);
            }
        }
    }
}
