//! The code against a burst of at most two deletions,
//! `L_a(n) = {x : Rsyn(0‖x) ≡ a (mod 2n)}`.

use serde::Serialize;

use super::{burst_preimages, check_residue, residue, unique_survivor, BurstCode};
use crate::error::{Error, Result};
use crate::word::{rsyn0_unchecked, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Lev2Code {
    pub n: usize,
    pub a: u64,
}

impl Lev2Code {
    pub fn new(n: usize, a: u64) -> Result<Lev2Code> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        check_residue("a", a, 2 * n as u64)?;
        Ok(Lev2Code { n, a })
    }

    pub fn modulus(&self) -> u64 {
        2 * self.n as u64
    }

    pub fn syndrome_of(x: &Word) -> u64 {
        residue(rsyn0_unchecked(x), 2 * x.len() as u64)
    }

    /// Undo a burst of zero, one or two deletions; the burst length is read
    /// off `n − |y|`.
    pub fn decode_any(&self, y: &Word) -> Result<Word> {
        let keep = |c: &Word| self.contains(c);
        match self.n.checked_sub(y.len()) {
            Some(0) if keep(y) => Ok(*y),
            Some(0) => Err(Error::DecodeFailure),
            Some(b @ (1 | 2)) => unique_survivor(burst_preimages(y, b, 0), keep),
            _ => Err(Error::LengthMismatch {
                expected: self.n,
                got: y.len(),
            }),
        }
    }
}

impl BurstCode for Lev2Code {
    fn n(&self) -> usize {
        self.n
    }

    fn burst(&self) -> (usize, usize) {
        (2, 0)
    }

    fn contains(&self, x: &Word) -> bool {
        x.len() == self.n && residue(rsyn0_unchecked(x), self.modulus()) == self.a
    }

    fn decode(&self, y: &Word) -> Result<Word> {
        self.decode_any(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::ball;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        // 0‖0101 = 00101 has run indices 0,0,1,2,3
        assert_eq!(Lev2Code::syndrome_of(&w("0101")), 6);
        let code = Lev2Code::new(4, 6).unwrap();
        assert_eq!(code.decode(&w("01")).unwrap(), w("0101"));
        assert_eq!(code.decode(&w("0101")).unwrap(), w("0101"));
        let zero = Lev2Code::new(4, 0).unwrap();
        assert_eq!(zero.decode(&w("000")).unwrap(), w("0000"));
        assert_eq!(
            zero.decode(&w("0")),
            Err(Error::LengthMismatch {
                expected: 4,
                got: 1
            })
        );
        assert_eq!(zero.decode(&w("0101")), Err(Error::DecodeFailure));
    }

    #[test]
    fn corrects_bursts_of_up_to_two_deletions() {
        for n in 2..=11 {
            for x in Word::all(n).unwrap() {
                let code = Lev2Code::new(n, Lev2Code::syndrome_of(&x)).unwrap();
                for b in 1..=2 {
                    for y in ball(&x, b, 0).unwrap().members {
                        assert_eq!(code.decode(&y).unwrap(), x, "{x} {y}");
                    }
                }
            }
        }
    }
}
