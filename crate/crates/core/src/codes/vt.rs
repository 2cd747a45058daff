//! Varshamov–Tenengolts code `VT_a(n) = {x : VT(x) ≡ a (mod n+1)}`.

use serde::Serialize;

use super::{burst_preimages, check_residue, expect_len, residue, unique_survivor, BurstCode};
use crate::error::Result;
use crate::word::{vt_syndrome, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VtCode {
    pub n: usize,
    pub a: u64,
}

impl VtCode {
    pub fn new(n: usize, a: u64) -> Result<VtCode> {
        check_residue("a", a, n as u64 + 1)?;
        Ok(VtCode { n, a })
    }

    pub fn modulus(&self) -> u64 {
        self.n as u64 + 1
    }

    /// The `a` this word would need.
    pub fn syndrome_of(x: &Word) -> u64 {
        residue(vt_syndrome(x), x.len() as u64 + 1)
    }
}

impl BurstCode for VtCode {
    fn n(&self) -> usize {
        self.n
    }

    fn burst(&self) -> (usize, usize) {
        (1, 0)
    }

    fn contains(&self, x: &Word) -> bool {
        x.len() == self.n && residue(vt_syndrome(x), self.modulus()) == self.a
    }

    /// Undo one deletion.
    fn decode(&self, y: &Word) -> Result<Word> {
        expect_len(y, self.n.saturating_sub(1))?;
        unique_survivor(burst_preimages(y, 1, 0), |c| self.contains(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::ball;
    use crate::error::Error;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(VtCode::new(4, 0).unwrap().contains(&w("0000")));
        // VT(101) = 4 ≡ 0 (mod 4)
        assert_eq!(VtCode::syndrome_of(&w("101")), 0);
        assert!(VtCode::new(3, 0).unwrap().contains(&w("101")));
        assert!(VtCode::new(5, 6).is_err());
    }

    #[test]
    fn recovers_1011_from_101() {
        // VT(1011) = 1 + 3 + 4 = 8 ≡ 3 (mod 5)
        let x = w("1011");
        assert_eq!(VtCode::syndrome_of(&x), 3);
        let code = VtCode::new(4, 3).unwrap();
        assert_eq!(code.decode(&w("101")).unwrap(), x);
        assert_eq!(
            code.decode(&w("10")),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn every_single_deletion_round_trips() {
        for n in 1..=10 {
            for x in Word::all(n).unwrap() {
                let code = VtCode::new(n, VtCode::syndrome_of(&x)).unwrap();
                for y in ball(&x, 1, 0).unwrap().members {
                    assert_eq!(code.decode(&y).unwrap(), x);
                }
            }
        }
    }
}
