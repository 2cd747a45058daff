//! Binary words and the sequence statistics the codes are built from.
//!
//! A [`Word`] is a packed binary sequence of at most [`Word::MAX_LEN`]
//! symbols. It is `Copy`, hashes cheaply, and orders first by length and then
//! lexicographically, so sorted collections of words print in the natural
//! order.
//!
//! Indexing on `Word` itself is 0-based like a slice. Every quantity that
//! talks about coordinates (VT syndromes, burst starts, windows) is 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite binary sequence.
///
/// Coordinate 1 is stored in the most significant of the `len` low bits, so
/// [`Word::value`] is the integer the word spells in binary.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    len: u8,
    bits: u128,
}

#[inline]
fn mask(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

impl Word {
    pub const MAX_LEN: usize = 128;

    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    fn check_len(len: usize) -> Result<()> {
        if len > Self::MAX_LEN {
            Err(Error::TooLong {
                len,
                max: Self::MAX_LEN,
            })
        } else {
            Ok(())
        }
    }

    pub fn zeros(len: usize) -> Result<Word> {
        Self::check_len(len)?;
        Ok(Word {
            len: len as u8,
            bits: 0,
        })
    }

    pub fn ones(len: usize) -> Result<Word> {
        Self::check_len(len)?;
        Ok(Word {
            len: len as u8,
            bits: mask(len),
        })
    }

    /// The word of length `len` spelling `value` in binary (high bits dropped).
    pub fn from_value(value: u128, len: usize) -> Result<Word> {
        Self::check_len(len)?;
        Ok(Word::from_value_unchecked(value, len))
    }

    #[inline]
    pub(crate) fn from_value_unchecked(value: u128, len: usize) -> Word {
        debug_assert!(len <= Self::MAX_LEN);
        Word {
            len: len as u8,
            bits: value & mask(len),
        }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Word> {
        Self::check_len(bits.len())?;
        let mut w = Word::EMPTY;
        for &b in bits {
            if b > 1 {
                return Err(Error::InvalidSymbol(
                    char::from_digit(u32::from(b), 10).unwrap_or('?'),
                ));
            }
            w = w.pushed(b);
        }
        Ok(w)
    }

    /// All `2^len` words of the given length, in lexicographic order.
    pub fn all(len: usize) -> Result<impl Iterator<Item = Word>> {
        if len > 63 {
            return Err(Error::TooLong { len, max: 63 });
        }
        Ok((0..1u128 << len).map(move |v| Word::from_value_unchecked(v, len)))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn value(&self) -> u128 {
        self.bits
    }

    /// Symbol at 0-based index `i`.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    /// Copy of the word with 0-based index `i` set to `b`.
    #[inline]
    pub fn with_bit(&self, i: usize, b: u8) -> Word {
        let shift = self.len() - 1 - i;
        let bits = (self.bits & !(1u128 << shift)) | (u128::from(b & 1) << shift);
        Word {
            len: self.len,
            bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.iter().collect()
    }

    /// Symbols `start..end` (0-based, half-open).
    #[inline]
    pub fn slice(&self, start: usize, end: usize) -> Word {
        debug_assert!(start <= end && end <= self.len());
        let width = end - start;
        let shift = self.len() - end;
        Word {
            len: width as u8,
            bits: (self.bits.checked_shr(shift as u32).unwrap_or(0)) & mask(width),
        }
    }

    #[inline]
    pub(crate) fn concat_unchecked(&self, other: &Word) -> Word {
        debug_assert!(self.len() + other.len() <= Self::MAX_LEN);
        Word {
            len: self.len + other.len,
            bits: self.bits.checked_shl(other.len as u32).unwrap_or(0) | other.bits,
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        Self::check_len(self.len() + other.len())?;
        Ok(self.concat_unchecked(other))
    }

    #[inline]
    pub(crate) fn pushed(&self, b: u8) -> Word {
        Word {
            len: self.len + 1,
            bits: (self.bits << 1) | u128::from(b & 1),
        }
    }

    /// Replace the `del` symbols starting at 0-based `start` by `ins`.
    #[inline]
    pub(crate) fn splice(&self, start: usize, del: usize, ins: &Word) -> Word {
        let head = self.slice(0, start);
        let tail = self.slice(start + del, self.len());
        head.concat_unchecked(ins).concat_unchecked(&tail)
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Maximal runs as `(symbol, length)` pairs, left to right.
    pub fn runs(&self) -> Runs<'_> {
        Runs { word: self, pos: 0 }
    }

    pub fn run_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        // adjacent unequal pairs
        let n = self.len();
        let diff = (self.bits ^ (self.bits >> 1)) & mask(n - 1);
        1 + diff.count_ones() as usize
    }

    pub fn max_run(&self) -> usize {
        self.runs().map(|(_, l)| l).max().unwrap_or(0)
    }
}

pub struct Runs<'a> {
    word: &'a Word,
    pos: usize,
}

impl Iterator for Runs<'_> {
    type Item = (u8, usize);

    fn next(&mut self) -> Option<(u8, usize)> {
        let n = self.word.len();
        if self.pos >= n {
            return None;
        }
        let sym = self.word.bit(self.pos);
        let start = self.pos;
        while self.pos < n && self.word.bit(self.pos) == sym {
            self.pos += 1;
        }
        Some((sym, self.pos - start))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        Self::check_len(s.chars().count())?;
        let mut w = Word::EMPTY;
        for c in s.chars() {
            match c {
                '0' => w = w.pushed(0),
                '1' => w = w.pushed(1),
                other => return Err(Error::InvalidSymbol(other)),
            }
        }
        Ok(w)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Run sequence `R(x)`, run count `r(x)` and `Rsyn(x)` of a non-empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunProfile {
    /// Run index of each coordinate, counted from zero.
    pub run_sequence: Vec<usize>,
    pub run_count: usize,
    /// Sum of the run indices.
    pub rsyn: u64,
}

pub fn run_profile(x: &Word) -> Result<RunProfile> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut run_sequence = Vec::with_capacity(x.len());
    let mut idx = 0usize;
    let mut prev = x.bit(0);
    for b in x.iter() {
        if b != prev {
            idx += 1;
            prev = b;
        }
        run_sequence.push(idx);
    }
    let rsyn = run_sequence.iter().map(|&r| r as u64).sum();
    Ok(RunProfile {
        run_sequence,
        run_count: idx + 1,
        rsyn,
    })
}

/// `Rsyn` without materialising the run sequence.
pub(crate) fn rsyn(x: &Word) -> u64 {
    x.runs()
        .enumerate()
        .map(|(idx, (_, len))| idx as u64 * len as u64)
        .sum()
}

/// `Rsyn(0‖x)`, the statistic behind the two-deletion burst code.
///
/// Prepending a 0 leaves the run indices of `x` alone when `x` starts with 0
/// and shifts every one of them up by one when it starts with 1.
pub fn rsyn0(x: &Word) -> Result<u64> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(rsyn0_unchecked(x))
}

#[inline]
pub(crate) fn rsyn0_unchecked(x: &Word) -> u64 {
    if x.is_empty() {
        return 0;
    }
    rsyn(x) + u64::from(x.bit(0)) * x.len() as u64
}

/// `VT(x) = Σ i·x_i` over 1-based coordinates.
pub fn vt_syndrome(x: &Word) -> u64 {
    x.iter()
        .enumerate()
        .filter(|&(_, b)| b == 1)
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Weights {
    pub total: usize,
    /// Weight on odd 1-based coordinates.
    pub odd: usize,
    /// Weight on even 1-based coordinates.
    pub even: usize,
}

pub fn weights(x: &Word) -> Weights {
    let mut odd = 0;
    let mut even = 0;
    for (i, b) in x.iter().enumerate() {
        if b == 1 {
            if i % 2 == 0 {
                odd += 1;
            } else {
                even += 1;
            }
        }
    }
    Weights {
        total: odd + even,
        odd,
        even,
    }
}

/// Column-major `k × n/k` array view of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayView {
    rows: Vec<Word>,
}

impl ArrayView {
    pub fn from_rows(rows: Vec<Word>) -> Result<ArrayView> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidParams("array needs at least one row".into()));
        };
        let width = first.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::LengthMismatch {
                expected: width,
                got: bad.len(),
            });
        }
        Word::check_len(width * rows.len())?;
        Ok(ArrayView { rows })
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &Word {
        &self.rows[i - 1]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn into_rows(self) -> Vec<Word> {
        self.rows
    }
}

impl fmt::Display for ArrayView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Split `x` into `k` rows; row `i`, column `j` holds `x_{(j-1)k+i}`.
pub fn interleave(x: &Word, k: usize) -> Result<ArrayView> {
    let n = x.len();
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::NotDivisible { n, k });
    }
    let mut rows = vec![Word::EMPTY; k];
    for (p, b) in x.iter().enumerate() {
        let r = &mut rows[p % k];
        *r = r.pushed(b);
    }
    Ok(ArrayView { rows })
}

pub fn deinterleave(a: &ArrayView) -> Word {
    let k = a.row_count();
    let width = a.width();
    let mut w = Word::EMPTY;
    for j in 0..width {
        for i in 0..k {
            w = w.pushed(a.rows[i].bit(j));
        }
    }
    w
}
