//! The (t,s)-burst channel.
//!
//! A (t,s)-burst deletes `t` consecutive symbols of a word and inserts an
//! arbitrary word of length `s` in their place. This module applies single
//! bursts, enumerates the ball of all outcomes around a center, enumerates
//! the refined balls `B'_{k,ℓ}` the full ball decomposes into, and evaluates
//! the closed forms for their sizes.
//!
//! The headline fact is that `|B_{t,s}(x)| = (n − t + 2)·2^{s−1}` for every
//! center `x`, which turns into a sphere-packing bound on code size.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{interleave, Word};

/// One channel event on a length-`n` word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BurstSpec {
    pub t: usize,
    pub s: usize,
    /// 1-based coordinate of the first deleted symbol.
    pub start: usize,
    pub inserted: Word,
}

impl BurstSpec {
    pub fn new(t: usize, s: usize, start: usize, inserted: Word) -> BurstSpec {
        BurstSpec {
            t,
            s,
            start,
            inserted,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.t > n {
            return Err(Error::BurstTooLong { t: self.t, n });
        }
        let max = n - self.t + 1;
        if self.start < 1 || self.start > max {
            return Err(Error::StartOutOfRange {
                start: self.start,
                max,
                n,
                t: self.t,
            });
        }
        if self.inserted.len() != self.s {
            return Err(Error::InsertedLength {
                expected: self.s,
                got: self.inserted.len(),
            });
        }
        if n - self.t + self.s > Word::MAX_LEN {
            return Err(Error::TooLong {
                len: n - self.t + self.s,
                max: Word::MAX_LEN,
            });
        }
        Ok(())
    }
}

pub fn apply_burst(x: &Word, spec: &BurstSpec) -> Result<Word> {
    spec.validate(x.len())?;
    Ok(x.splice(spec.start - 1, spec.t, &spec.inserted))
}

fn check_ball_args(n: usize, t: usize, s: usize) -> Result<()> {
    if t > n {
        return Err(Error::BurstTooLong { t, n });
    }
    if s > 63 {
        return Err(Error::TooLong { len: s, max: 63 });
    }
    if n - t + s > Word::MAX_LEN {
        return Err(Error::TooLong {
            len: n - t + s,
            max: Word::MAX_LEN,
        });
    }
    Ok(())
}

/// Every burst of a center in generation order: start ascending, then the
/// inserted word in lexicographic order. Outcomes repeat.
pub struct BurstOutcomes {
    x: Word,
    t: usize,
    s: usize,
    start: usize,
    ins: u128,
}

impl Iterator for BurstOutcomes {
    type Item = (BurstSpec, Word);

    fn next(&mut self) -> Option<(BurstSpec, Word)> {
        if self.start > self.x.len() - self.t + 1 {
            return None;
        }
        let inserted = Word::from_value_unchecked(self.ins, self.s);
        let spec = BurstSpec::new(self.t, self.s, self.start, inserted);
        let out = self.x.splice(self.start - 1, self.t, &inserted);
        self.ins += 1;
        if self.ins == 1u128 << self.s {
            self.ins = 0;
            self.start += 1;
        }
        Some((spec, out))
    }
}

pub fn burst_outcomes(x: &Word, t: usize, s: usize) -> Result<BurstOutcomes> {
    check_ball_args(x.len(), t, s)?;
    Ok(BurstOutcomes {
        x: *x,
        t,
        s,
        start: 1,
        ins: 0,
    })
}

/// The deduplicated set of words reachable from `center` by one (t,s)-burst.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ball {
    pub center: Word,
    pub t: usize,
    pub s: usize,
    pub size: usize,
    /// Sorted, no duplicates.
    pub members: Vec<Word>,
}

impl Ball {
    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

pub fn ball(x: &Word, t: usize, s: usize) -> Result<Ball> {
    let members = ball_members(x, t, s)?;
    Ok(Ball {
        center: *x,
        t,
        s,
        size: members.len(),
        members,
    })
}

pub(crate) fn ball_members(x: &Word, t: usize, s: usize) -> Result<Vec<Word>> {
    let mut members: Vec<Word> = burst_outcomes(x, t, s)?.map(|(_, w)| w).collect();
    members.sort_unstable();
    members.dedup();
    Ok(members)
}

/// `B'_{k,ℓ}(x)`: (k,ℓ)-burst outcomes whose first and last inserted symbols
/// differ from the first and last deleted ones.
///
/// With `k = 0` or `ℓ = 0` there is nothing to compare and the set is the
/// plain burst-insertion or burst-deletion ball. `k = n` is allowed and only
/// has the start coordinate 1.
pub fn refined_ball(x: &Word, k: usize, l: usize) -> Result<BTreeSet<Word>> {
    let n = x.len();
    check_ball_args(n, k, l)?;
    let constrained = k >= 1 && l >= 1;
    let mut out = BTreeSet::new();
    for i in 0..=(n - k) {
        for v in 0..(1u128 << l) {
            let ins = Word::from_value_unchecked(v, l);
            if constrained && (x.bit(i) == ins.bit(0) || x.bit(i + k - 1) == ins.bit(l - 1)) {
                continue;
            }
            out.insert(x.splice(i, k, &ins));
        }
    }
    Ok(out)
}

/// Closed-form `|B'_{k,ℓ}(x)|`.
///
/// * `ℓ = 0`: `1 + Σ (r(A_k(x)_i) − 1)`, needs `k | n` (`k = 0` gives 1).
/// * `ℓ = 1`: `n − Σ r(A_{k−1}(x)_i)`, needs `(k−1) | n` (`k = 1` gives `n`).
/// * `k ≥ 1, ℓ ≥ 2`: `(n − k + 1)·2^{ℓ−2}`.
/// * `k = 0, ℓ ≥ 1`: `n·2^{ℓ−1} + 2^ℓ`.
///
/// Returns [`Error::NotDivisible`] when the array form is needed and the row
/// count does not divide `n`; callers that want a number anyway should
/// enumerate with [`refined_ball`].
pub fn refined_ball_size(x: &Word, k: usize, l: usize) -> Result<u128> {
    let n = x.len();
    if k > n {
        return Err(Error::BurstTooLong { t: k, n });
    }
    if l > 100 {
        return Err(Error::Overflow(format!("2^{l} does not fit")));
    }
    let n128 = n as u128;
    Ok(match (k, l) {
        (0, 0) => 1,
        (_, 0) => {
            let a = interleave(x, k)?;
            1 + a
                .rows()
                .iter()
                .map(|r| r.run_count() as u128 - 1)
                .sum::<u128>()
        }
        (0, _) => n128 * (1u128 << (l - 1)) + (1u128 << l),
        (1, 1) => n128,
        (_, 1) => {
            let a = interleave(x, k - 1)?;
            n128 - a.rows().iter().map(|r| r.run_count() as u128).sum::<u128>()
        }
        (_, _) => (n128 - k as u128 + 1) * (1u128 << (l - 2)),
    })
}

/// `(n − t + 2)·2^{s−1}`, the size of every (t,s)-burst ball.
pub fn ball_size_formula(n: usize, t: usize, s: usize) -> Result<u128> {
    if s == 0 {
        return Err(Error::InvalidParams(
            "the ball-size law needs s >= 1".into(),
        ));
    }
    if n < t.max(s) {
        return Err(Error::InvalidParams(format!(
            "n = {n} is below max(t, s) = {}",
            t.max(s)
        )));
    }
    let scale = 1u128
        .checked_shl((s - 1) as u32)
        .filter(|_| s <= 100)
        .ok_or_else(|| Error::Overflow(format!("2^{}", s - 1)))?;
    (n as u128 - t as u128 + 2)
        .checked_mul(scale)
        .ok_or_else(|| Error::Overflow("ball size".into()))
}

fn bound_with(n: usize, m: usize) -> Result<u128> {
    let e = n - m + 1;
    if e >= 128 {
        return Err(Error::Overflow(format!("2^{e}")));
    }
    Ok((1u128 << e) / (n - m + 2) as u128)
}

fn check_bound_args(n: usize, t: usize, s: usize) -> Result<()> {
    if t == 0 || s == 0 {
        return Err(Error::InvalidParams(
            "the sphere-packing bound needs t, s >= 1".into(),
        ));
    }
    if n < t.max(s) {
        return Err(Error::InvalidParams(format!(
            "n = {n} is below max(t, s) = {}",
            t.max(s)
        )));
    }
    Ok(())
}

/// `⌊2^{n−m+1} / (n−m+2)⌋` with `m = max(t, s)`.
///
/// (t,s)- and (s,t)-burst correcting codes coincide, so the larger of the two
/// burst lengths gives the tighter bound.
pub fn sphere_packing_bound(n: usize, t: usize, s: usize) -> Result<u128> {
    check_bound_args(n, t, s)?;
    bound_with(n, t.max(s))
}

/// The bound with `m = t` as the counting argument gives it directly.
pub fn sphere_packing_bound_raw(n: usize, t: usize, s: usize) -> Result<u128> {
    check_bound_args(n, t, s)?;
    bound_with(n, t)
}

/// Least redundancy a (t,s)-burst correcting code of length `n` can have:
/// `log2(n − m + 2) + m − 1` with `m = max(t, s)`.
pub fn min_redundancy(n: usize, t: usize, s: usize) -> Result<f64> {
    check_bound_args(n, t, s)?;
    let m = t.max(s);
    Ok(((n - m + 2) as f64).log2() + (m - 1) as f64)
}
