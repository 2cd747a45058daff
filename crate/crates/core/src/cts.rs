//! The array construction `C_{t,s}` for `t ≥ 2s`.
//!
//! A codeword is read as a `(t−s) × m` array (column-major, `m = n/(t−s)`).
//! A (t,s)-burst costs every row exactly one symbol: each row suffers either
//! a single deletion or a (2,1)-burst, and the damaged columns of all rows
//! are close together. Row 1 is taken from a run-length-limited (2,1)-burst
//! code; decoding it locates the error to within a short column window, and
//! rows `2..t−s` are taken from the windowed SVT code, which only needs that
//! window.

use serde::Serialize;

use crate::codes::search::{check_guard, search_by, SearchResult};
use crate::codes::{
    ceil_log2, check_residue, BurstCode, C21Code, C21RllCode, Classification, CodeParams,
    DecodeOutcome, Svt21Code,
};
use crate::error::{Error, Result};
use crate::word::{deinterleave, interleave, ArrayView, Word};

/// Residues of one SVT row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RowResidues {
    pub c: u64,
    pub d: u64,
}

/// Parameters of one `C_{t,s}` code. Field order makes the derived ordering
/// lexicographic in `(a, b, rows)` among codes of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CtsParams {
    pub n: usize,
    pub t: usize,
    pub s: usize,
    /// Row length `n/(t−s)`.
    pub m: usize,
    /// Run bound of row 1, `⌈log2 m⌉ + 3`.
    pub f: usize,
    /// SVT window bound; see [`window_bound`].
    pub p: usize,
    pub a: u64,
    pub b: u64,
    /// Residues of rows `2..=t−s`.
    pub rows: Vec<RowResidues>,
}

/// Shape of the array for `(n, t, s)`: `(rows, m, f, P)`.
pub fn shape(n: usize, t: usize, s: usize) -> Result<(usize, usize, usize, usize)> {
    if s == 0 || t < 2 * s {
        return Err(Error::InvalidParams(format!(
            "need t ≥ 2s ≥ 2, got t={t}, s={s}"
        )));
    }
    let k = t - s;
    if !n.is_multiple_of(k) {
        return Err(Error::NotDivisible { n, k });
    }
    let m = n / k;
    if m < 2 {
        return Err(Error::InvalidParams(format!(
            "rows of length {m} are too short"
        )));
    }
    let f = ceil_log2(m) + 3;
    Ok((k, m, f, window_bound(f, s)))
}

/// `f + 1` covers the row-1 deletion window `[c1−1, c2]` when `s = 1`.
/// With `s ≥ 2` a row that precedes row 1 inside the burst can start one
/// column further left, so the window is `[c1−2, c2]` and the bound `f + 2`.
pub fn window_bound(f: usize, s: usize) -> usize {
    if s >= 2 {
        f + 2
    } else {
        f + 1
    }
}

impl CtsParams {
    pub fn new(
        n: usize,
        t: usize,
        s: usize,
        a: u64,
        b: u64,
        rows: Vec<RowResidues>,
    ) -> Result<Self> {
        let (k, m, f, p) = shape(n, t, s)?;
        check_residue("a", a, 2 * m as u64 - 1)?;
        check_residue("b", b, 4)?;
        if rows.len() != k - 1 {
            return Err(Error::InvalidParams(format!(
                "expected {} row residue pairs, got {}",
                k - 1,
                rows.len()
            )));
        }
        for r in &rows {
            check_residue("c", r.c, 2 * p as u64 - 1)?;
            check_residue("d", r.d, 4)?;
        }
        Ok(CtsParams {
            n,
            t,
            s,
            m,
            f,
            p,
            a,
            b,
            rows,
        })
    }

    /// The parameters that put `x` in the code, ignoring the run constraint.
    pub fn of(x: &Word, t: usize, s: usize) -> Result<CtsParams> {
        let (_, _, f, p) = shape(x.len(), t, s)?;
        let array = interleave(x, t - s)?;
        Ok(CtsParams::of_array(&array, t, s, f, p))
    }

    fn of_array(array: &ArrayView, t: usize, s: usize, f: usize, p: usize) -> CtsParams {
        let first = C21Code::of(array.row(1)).expect("rows are non-empty");
        let rows = array.rows()[1..]
            .iter()
            .map(|row| {
                let (c, d) = Svt21Code::residues_of(row, p);
                RowResidues { c, d }
            })
            .collect();
        CtsParams {
            n: array.width() * array.row_count(),
            t,
            s,
            m: array.width(),
            f,
            p,
            a: first.a,
            b: first.b,
            rows,
        }
    }

    pub fn row_count(&self) -> usize {
        self.t - self.s
    }

    pub fn first_row_code(&self) -> C21RllCode {
        C21RllCode {
            code: C21Code {
                n: self.m,
                a: self.a,
                b: self.b,
            },
            f: self.f,
        }
    }

    /// Code of row `i ∈ 2..=t−s`.
    pub fn row_code(&self, i: usize) -> Svt21Code {
        let r = self.rows[i - 2];
        Svt21Code {
            n: self.m,
            c: r.c,
            d: r.d,
            p: self.p,
        }
    }

    /// Decode and keep the intermediate results.
    pub fn decode_traced(&self, y: &Word) -> Result<(Word, CtsTrace)> {
        let k = self.row_count();
        let expected = self.n - k;
        if y.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: y.len(),
            });
        }
        let received = interleave(y, k)?.into_rows();
        let first = self
            .first_row_code()
            .decode_outcome(&received[0])
            .map_err(|e| Error::RowDecode {
                row: 1,
                source: Box::new(e),
            })?;
        let window = column_window(&first, self.s, self.m);
        let mut decoded = Vec::with_capacity(k);
        decoded.push(first.codeword);
        for (i, row) in received.iter().enumerate().skip(1) {
            let x_row = self
                .row_code(i + 1)
                .decode(row, window)
                .map_err(|e| Error::RowDecode {
                    row: i + 1,
                    source: Box::new(e),
                })?;
            decoded.push(x_row);
        }
        let x = deinterleave(&ArrayView::from_rows(decoded.clone())?);
        Ok((
            x,
            CtsTrace {
                received_rows: received,
                first_row: first,
                window,
                decoded_rows: decoded,
            },
        ))
    }
}

/// Column window for rows `2..` given how row 1 was hit.
pub fn column_window(first: &DecodeOutcome, s: usize, m: usize) -> (usize, usize) {
    let (c1, c2) = first.location_window;
    let (lo, hi) = match first.classification {
        Classification::Merge00To1 | Classification::Merge11To0 => (c1.saturating_sub(1), c1 + 1),
        _ => (c1.saturating_sub(if s >= 2 { 2 } else { 1 }), c2),
    };
    (lo.max(1), hi.min(m))
}

/// Intermediate results of one array decode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtsTrace {
    pub received_rows: Vec<Word>,
    pub first_row: DecodeOutcome,
    /// 1-based inclusive column interval handed to rows `2..`.
    pub window: (usize, usize),
    pub decoded_rows: Vec<Word>,
}

impl BurstCode for CtsParams {
    fn n(&self) -> usize {
        self.n
    }

    fn burst(&self) -> (usize, usize) {
        (self.t, self.s)
    }

    fn contains(&self, x: &Word) -> bool {
        if x.len() != self.n {
            return false;
        }
        let Ok(array) = interleave(x, self.row_count()) else {
            return false;
        };
        self.first_row_code().contains(array.row(1))
            && (2..=self.row_count()).all(|i| self.row_code(i).contains(array.row(i)))
    }

    fn decode(&self, y: &Word) -> Result<Word> {
        Ok(self.decode_traced(y)?.0)
    }
}

impl From<CtsParams> for CodeParams {
    fn from(c: CtsParams) -> CodeParams {
        CodeParams::Cts(c)
    }
}

/// For each row, the first column the burst starting at `start` touches.
/// Positions `start..start+k` cover every row once.
pub fn row_error_columns(start: usize, k: usize) -> Vec<usize> {
    let mut cols = vec![0; k];
    for p in start..start + k {
        cols[(p - 1) % k] = (p - 1) / k + 1;
    }
    cols
}

/// Best `C_{t,s}` codebook over all residue tuples; the ambient set is the
/// words whose row 1 meets the run constraint.
pub fn cts_param_search(n: usize, t: usize, s: usize, guard: usize) -> Result<SearchResult> {
    let (k, _, f, p) = shape(n, t, s)?;
    check_guard(n, guard)?;
    search_by(
        n,
        guard,
        |x| interleave(x, k).is_ok_and(|a| a.row(1).max_run() <= f),
        |x| CtsParams::of_array(&interleave(x, k).expect("shape checked"), t, s, f, p),
    )
}
