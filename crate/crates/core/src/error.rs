use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Variants fall into four families, see [`ErrorKind`]: malformed input or
/// violated preconditions, refused work (enumeration guards), failed
/// decoding, and ambiguity. Ambiguity is kept apart from failure because it
/// can only happen when a code does not correct the errors it claims to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?} in word (expected '0' or '1')")]
    InvalidSymbol(char),
    #[error("word of length {len} exceeds the supported maximum of {max}")]
    TooLong { len: usize, max: usize },
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("row count {k} does not divide length {n}")]
    NotDivisible { n: usize, k: usize },
    #[error("burst start {start} out of range 1..={max} for length {n} and t = {t}")]
    StartOutOfRange {
        start: usize,
        max: usize,
        n: usize,
        t: usize,
    },
    #[error("inserted word has length {got}, expected s = {expected}")]
    InsertedLength { expected: usize, got: usize },
    #[error("cannot delete {t} symbols from a word of length {n}")]
    BurstTooLong { t: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("window [{lo}, {hi}] is longer than P = {p}")]
    WindowTooLong { lo: usize, hi: usize, p: usize },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("enumeration over 2^{n} words refused (guard is n <= {limit})")]
    Guard { n: usize, limit: usize },
    #[error("no codeword is consistent with the received word")]
    DecodeFailure,
    #[error("row {row} failed to decode: {source}")]
    RowDecode {
        row: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("{count} distinct codewords are consistent with the received word")]
    Ambiguous { count: usize },
    #[error("parity deltas ({odd}, {even}) match no (3,1)-burst class")]
    Unclassifiable { odd: u8, even: u8 },
}

/// Coarse grouping used for exit codes and reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Resource,
    Decode,
    Ambiguity,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Guard { .. } => ErrorKind::Resource,
            Error::DecodeFailure | Error::Unclassifiable { .. } => ErrorKind::Decode,
            Error::RowDecode { source, .. } => source.kind(),
            Error::Ambiguous { .. } => ErrorKind::Ambiguity,
            _ => ErrorKind::Domain,
        }
    }
}
