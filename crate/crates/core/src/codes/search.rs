//! Pigeonhole search: bucket every word of length `n` by the residues that
//! would make it a codeword and keep the largest bucket.

use std::collections::BTreeMap;

use serde::Serialize;

use super::rll::{default_run_bound, rll_member};
use super::{C21Code, C21RllCode, CodeParams, Codebook, Lev2Code, Svt21Code, VtCode};
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest `n` searched unless a caller raises the limit.
pub const DEFAULT_GUARD: usize = 24;

/// Which code family to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Vt,
    Lev2,
    C21,
    /// `f = None` uses `⌈log2 n⌉ + 3`.
    C21Rll {
        f: Option<usize>,
    },
    Svt21 {
        p: usize,
    },
    Cts {
        t: usize,
        s: usize,
    },
    C31,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub codebook: Codebook,
    /// Words that passed the family's side constraint (all `2^n` unless the
    /// family is run-length limited).
    pub ambient: u64,
    /// Non-empty buckets.
    pub buckets: usize,
}

pub fn pigeonhole_search(family: Family, n: usize) -> Result<SearchResult> {
    pigeonhole_search_guarded(family, n, DEFAULT_GUARD)
}

pub fn pigeonhole_search_guarded(family: Family, n: usize, guard: usize) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    match family {
        Family::Vt => search_by(
            n,
            guard,
            |_| true,
            |x| VtCode {
                n,
                a: VtCode::syndrome_of(x),
            },
        ),
        Family::Lev2 => search_by(
            n,
            guard,
            |_| true,
            |x| Lev2Code {
                n,
                a: Lev2Code::syndrome_of(x),
            },
        ),
        Family::C21 => search_by(n, guard, |_| true, |x| C21Code::of(x).expect("non-empty")),
        Family::C21Rll { f } => {
            let f = f.unwrap_or_else(|| default_run_bound(n));
            if f == 0 {
                return Err(Error::InvalidParams("run bound f must be positive".into()));
            }
            search_by(
                n,
                guard,
                |x| rll_member(x, f),
                |x| C21RllCode {
                    code: C21Code::of(x).expect("non-empty"),
                    f,
                },
            )
        }
        Family::Svt21 { p } => {
            if p == 0 {
                return Err(Error::InvalidParams("P must be positive".into()));
            }
            search_by(
                n,
                guard,
                |_| true,
                |x| {
                    let (c, d) = Svt21Code::residues_of(x, p);
                    Svt21Code { n, c, d, p }
                },
            )
        }
        Family::Cts { t, s } => crate::cts::cts_param_search(n, t, s, guard),
        Family::C31 => crate::c31::c31_param_search(n, guard),
    }
}

pub(crate) fn check_guard(n: usize, guard: usize) -> Result<()> {
    if n > guard || n > 63 {
        return Err(Error::Guard {
            n,
            limit: guard.min(63),
        });
    }
    Ok(())
}

/// Two passes over `F_2^n`: count bucket sizes, then collect the winner.
/// Ties go to the smallest key.
pub(crate) fn search_by<K>(
    n: usize,
    guard: usize,
    keep: impl Fn(&Word) -> bool,
    key: impl Fn(&Word) -> K,
) -> Result<SearchResult>
where
    K: Ord + Clone + Into<CodeParams>,
{
    check_guard(n, guard)?;
    let mut sizes: BTreeMap<K, u64> = BTreeMap::new();
    let mut ambient = 0u64;
    for x in Word::all(n)?.filter(|x| keep(x)) {
        ambient += 1;
        *sizes.entry(key(&x)).or_insert(0) += 1;
    }
    let mut best: Option<(&K, u64)> = None;
    for (k, &size) in &sizes {
        if best.is_none_or(|(_, top)| size > top) {
            best = Some((k, size));
        }
    }
    let Some((best_key, _)) = best else {
        return Err(Error::InvalidParams(format!(
            "no word of length {n} passes the constraint"
        )));
    };
    let members: Vec<Word> = Word::all(n)?
        .filter(|x| keep(x) && key(x) == *best_key)
        .collect();
    Ok(SearchResult {
        codebook: Codebook {
            params: best_key.clone().into(),
            members,
        },
        ambient,
        buckets: sizes.len(),
    })
}

impl From<VtCode> for CodeParams {
    fn from(c: VtCode) -> CodeParams {
        CodeParams::Vt(c)
    }
}

impl From<Lev2Code> for CodeParams {
    fn from(c: Lev2Code) -> CodeParams {
        CodeParams::Lev2(c)
    }
}

impl From<C21Code> for CodeParams {
    fn from(c: C21Code) -> CodeParams {
        CodeParams::C21(c)
    }
}

impl From<C21RllCode> for CodeParams {
    fn from(c: C21RllCode) -> CodeParams {
        CodeParams::C21Rll(c)
    }
}

impl From<Svt21Code> for CodeParams {
    fn from(c: Svt21Code) -> CodeParams {
        CodeParams::Svt21(c)
    }
}
