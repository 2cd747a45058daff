//! Codes that correct a single t-deletion s-insertion burst.
//!
//! A (t,s)-burst deletes `t` consecutive symbols of a binary word and inserts
//! an arbitrary word of length `s` at the same coordinate. The crate provides
//!
//! * the channel itself and exact error-ball combinatorics ([`channel`]),
//! * the building-block codes and their decoders ([`codes`]),
//! * the array construction `C_{t,s}` for `t ≥ 2s` ([`cts`]),
//! * the `C_{3,1}` construction with redundancy at most `log n + 9` ([`c31`]),
//! * exhaustive verification of ball laws and codebooks ([`verify`]),
//! * a seeded channel simulator ([`sim`]).

pub mod c31;
pub mod channel;
pub mod codes;
pub mod cts;
pub mod error;
pub mod sim;
pub mod verify;
pub mod word;

pub use error::{Error, ErrorKind, Result};
pub use word::Word;
