//! Building-block codes and their decoders.
//!
//! Every decoder here works the same way: enumerate all preimages of the
//! received word under the error type the code is designed for, keep those
//! that satisfy the code's congruences, and require exactly one survivor.
//! Zero survivors is [`Error::DecodeFailure`]; more than one is
//! [`Error::Ambiguous`], which means the code does not actually correct the
//! error and is treated as a bug, not a fallback.

pub mod c21;
pub mod lev2;
pub mod rll;
pub mod search;
pub mod svt21;
pub mod vt;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::c31::C31Params;
use crate::cts::CtsParams;
use crate::error::{Error, Result};
use crate::word::Word;

pub use c21::{C21Code, C21RllCode};
pub use lev2::Lev2Code;
pub use rll::{default_run_bound, rll_max_run, rll_member, run_limited_count};
pub use search::{pigeonhole_search, Family, SearchResult, DEFAULT_GUARD};
pub use svt21::Svt21Code;
pub use vt::VtCode;

/// What a decoder concluded about the error it undid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    NoError,
    SingleDeletion,
    TwoBurstDeletion,
    Merge00To1,
    Merge11To0,
    Pattern000To1,
    Pattern010To1,
    Pattern111To0,
    Pattern101To0,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::NoError => "no-error",
            Classification::SingleDeletion => "single-deletion",
            Classification::TwoBurstDeletion => "two-burst-deletion",
            Classification::Merge00To1 => "merge-00->1",
            Classification::Merge11To0 => "merge-11->0",
            Classification::Pattern000To1 => "pattern-000->1",
            Classification::Pattern010To1 => "pattern-010->1",
            Classification::Pattern111To0 => "pattern-111->0",
            Classification::Pattern101To0 => "pattern-101->0",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// A decoded codeword together with what happened to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecodeOutcome {
    pub codeword: Word,
    pub classification: Classification,
    /// 1-based inclusive interval of received-word coordinates where the
    /// error sits: the coordinate holding the merged symbol for a merge, the
    /// run the deleted symbol came from for a deletion.
    pub location_window: (usize, usize),
}

/// A code for one burst type, with a membership test and a decoder.
pub trait BurstCode {
    fn n(&self) -> usize;

    /// `(t, s)` of the burst the code corrects.
    fn burst(&self) -> (usize, usize);

    fn contains(&self, x: &Word) -> bool;

    fn decode(&self, y: &Word) -> Result<Word>;
}

/// Every `x` with `y ∈ B_{t,s}(x)`, in generation order, possibly repeated.
pub(crate) fn burst_preimages(y: &Word, t: usize, s: usize) -> impl Iterator<Item = Word> + '_ {
    let m = y.len();
    let starts = if m >= s { m - s + 1 } else { 0 };
    (0..starts).flat_map(move |j| {
        (0..1u128 << t).map(move |v| y.splice(j, s, &Word::from_value_unchecked(v, t)))
    })
}

/// The single survivor among `candidates` passing `keep`.
pub(crate) fn unique_survivor(
    candidates: impl IntoIterator<Item = Word>,
    keep: impl Fn(&Word) -> bool,
) -> Result<Word> {
    let mut found: Vec<Word> = candidates.into_iter().filter(|c| keep(c)).collect();
    found.sort_unstable();
    found.dedup();
    match found.len() {
        0 => Err(Error::DecodeFailure),
        1 => Ok(found[0]),
        count => Err(Error::Ambiguous { count }),
    }
}

pub(crate) fn expect_len(y: &Word, expected: usize) -> Result<()> {
    if y.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            got: y.len(),
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn residue(value: u64, modulus: u64) -> u64 {
    value % modulus
}

pub(crate) fn check_residue(name: &str, value: u64, modulus: u64) -> Result<()> {
    if value >= modulus {
        return Err(Error::InvalidParams(format!(
            "{name} = {value} is not in Z_{modulus}"
        )));
    }
    Ok(())
}

/// `⌈log2 n⌉`, with `⌈log2 1⌉ = 0`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1, "ceil_log2 of zero");
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// The residue tuple defining a member of one code family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeParams {
    Vt(VtCode),
    Lev2(Lev2Code),
    C21(C21Code),
    C21Rll(C21RllCode),
    Svt21(Svt21Code),
    Cts(CtsParams),
    C31(C31Params),
}

impl CodeParams {
    pub fn family(&self) -> &'static str {
        match self {
            CodeParams::Vt(_) => "vt",
            CodeParams::Lev2(_) => "lev2",
            CodeParams::C21(_) => "c21",
            CodeParams::C21Rll(_) => "c21rll",
            CodeParams::Svt21(_) => "svt21",
            CodeParams::Cts(_) => "cts",
            CodeParams::C31(_) => "c31",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CodeParams::Vt(c) => c.n,
            CodeParams::Lev2(c) => c.n,
            CodeParams::C21(c) => c.n,
            CodeParams::C21Rll(c) => c.code.n,
            CodeParams::Svt21(c) => c.n,
            CodeParams::Cts(c) => c.n,
            CodeParams::C31(c) => c.n,
        }
    }

    pub fn contains(&self, x: &Word) -> bool {
        match self {
            CodeParams::Vt(c) => c.contains(x),
            CodeParams::Lev2(c) => c.contains(x),
            CodeParams::C21(c) => c.contains(x),
            CodeParams::C21Rll(c) => c.contains(x),
            CodeParams::Svt21(c) => c.contains(x),
            CodeParams::Cts(c) => c.contains(x),
            CodeParams::C31(c) => c.contains(x),
        }
    }

    /// The decodable view of these parameters; the SVT code has no
    /// stand-alone decoder because it needs a location window.
    pub fn as_burst_code(&self) -> Option<&dyn BurstCode> {
        match self {
            CodeParams::Vt(c) => Some(c),
            CodeParams::Lev2(c) => Some(c),
            CodeParams::C21(c) => Some(c),
            CodeParams::C21Rll(c) => Some(c),
            CodeParams::Svt21(_) => None,
            CodeParams::Cts(c) => Some(c),
            CodeParams::C31(c) => Some(c),
        }
    }
}

impl Serialize for CodeParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CodeParams::Vt(c) => c.serialize(serializer),
            CodeParams::Lev2(c) => c.serialize(serializer),
            CodeParams::C21(c) => c.serialize(serializer),
            CodeParams::C21Rll(c) => c.serialize(serializer),
            CodeParams::Svt21(c) => c.serialize(serializer),
            CodeParams::Cts(c) => c.serialize(serializer),
            CodeParams::C31(c) => c.serialize(serializer),
        }
    }
}

/// An explicit codebook: the members of one parameterised code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    pub params: CodeParams,
    /// Sorted.
    pub members: Vec<Word>,
}

/// Codebooks larger than this serialize without their member list.
pub const MEMBER_LISTING_LIMIT: usize = 4096;

impl Codebook {
    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `n − log2 |C|`; infinite for an empty codebook.
    pub fn redundancy(&self) -> f64 {
        if self.members.is_empty() {
            f64::INFINITY
        } else {
            self.n() as f64 - (self.size() as f64).log2()
        }
    }
}

#[derive(Serialize)]
struct CodebookJson<'a> {
    family: &'static str,
    n: usize,
    params: &'a CodeParams,
    size: usize,
    redundancy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<&'a [Word]>,
}

impl Serialize for Codebook {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CodebookJson {
            family: self.params.family(),
            n: self.n(),
            params: &self.params,
            size: self.size(),
            redundancy: (self.redundancy() * 1e4).round() / 1e4,
            members: (self.size() <= MEMBER_LISTING_LIMIT).then_some(&self.members[..]),
        }
        .serialize(serializer)
    }
}
