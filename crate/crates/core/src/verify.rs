//! Exhaustive checks that produce machine-readable reports.
//!
//! Every failing report carries a witness that can be replayed on its own:
//! an overlapping pair with a shared ball member, a corruption that did not
//! decode, or a word whose ball breaks a counting law.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::channel::{
    ball, ball_members, ball_size_formula, burst_outcomes, min_redundancy, refined_ball,
    refined_ball_size, sphere_packing_bound, BurstSpec,
};
use crate::codes::{BurstCode, Codebook};
use crate::error::{Error, Result};
use crate::word::Word;

/// Version of the report JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n` swept by [`verify_ball_laws`] unless raised.
pub const BALL_LAW_GUARD: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A concrete, replayable reason for a failing verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `shared` lies in the balls of both codewords.
    Overlap {
        first: Word,
        second: Word,
        shared: Word,
    },
    /// Decoding `received` did not give back `codeword`.
    Decode {
        codeword: Word,
        burst: BurstSpec,
        received: Word,
        decoded: Option<Word>,
        error: Option<String>,
    },
    /// One of the ball counting laws failed at `center`.
    BallLaw {
        center: Word,
        t: usize,
        s: usize,
        law: String,
        detail: String,
    },
    /// The codebook is larger than the sphere-packing bound.
    Bound { size: u64, bound: u64 },
    /// The two burst directions disagree.
    Equivalence {
        forward: Verdict,
        backward: Verdict,
        witness: Option<Box<Witness>>,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub codewords: u64,
    pub corruptions: u64,
}

/// Measured redundancy against the sphere-packing floor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RedundancyReport {
    pub size: u64,
    pub redundancy: f64,
    pub sphere_packing_bound: u64,
    pub min_redundancy: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub redundancy: Option<RedundancyReport>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    fn new(
        check: &str,
        params: Value,
        witness: Option<Witness>,
        counts: Counts,
        start: Instant,
    ) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            check: check.to_string(),
            params,
            verdict: if witness.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness,
            counts,
            redundancy: None,
            wall_time_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Common length of a codebook's members.
fn common_length(members: &[Word]) -> Result<Option<usize>> {
    let Some(first) = members.first() else {
        return Ok(None);
    };
    for w in members {
        if w.len() != first.len() {
            return Err(Error::LengthMismatch {
                expected: first.len(),
                got: w.len(),
            });
        }
    }
    Ok(Some(first.len()))
}

fn check_burst_fits(n: usize, t: usize, s: usize) -> Result<()> {
    if t == 0 && s == 0 {
        return Err(Error::InvalidParams("t and s cannot both be zero".into()));
    }
    if n < t {
        return Err(Error::BurstTooLong { t, n });
    }
    Ok(())
}

/// First overlap among the balls of `members`, scanning codewords in order.
fn first_overlap(members: &[Word], t: usize, s: usize) -> Result<(Option<Witness>, u64)> {
    let mut owner: HashMap<Word, usize> = HashMap::new();
    let mut corruptions = 0u64;
    for (i, x) in members.iter().enumerate() {
        let outcomes = ball_members(x, t, s)?;
        corruptions += outcomes.len() as u64;
        for z in outcomes {
            match owner.get(&z) {
                Some(&j) if j != i => {
                    let shared = first_shared(&members[j], x, t, s)?;
                    let witness = Witness::Overlap {
                        first: members[j],
                        second: *x,
                        shared,
                    };
                    return Ok((Some(witness), corruptions));
                }
                Some(_) => {}
                None => {
                    owner.insert(z, i);
                }
            }
        }
    }
    Ok((None, corruptions))
}

/// The first outcome of `first`'s bursts, in generation order (start
/// ascending, then inserted word ascending), that also lies in `second`'s
/// ball.
fn first_shared(first: &Word, second: &Word, t: usize, s: usize) -> Result<Word> {
    let other = ball(second, t, s)?;
    for (_, z) in burst_outcomes(first, t, s)? {
        if other.contains(&z) {
            return Ok(z);
        }
    }
    unreachable!("caller found a shared member")
}

/// Pairwise disjointness of the `(t,s)` balls around every member.
pub fn verify_disjoint(members: &[Word], t: usize, s: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = common_length(members)?;
    if let Some(n) = n {
        check_burst_fits(n, t, s)?;
    }
    let (witness, corruptions) = first_overlap(members, t, s)?;
    let counts = Counts {
        codewords: members.len() as u64,
        corruptions,
    };
    let params = json!({ "n": n, "t": t, "s": s });
    Ok(VerificationReport::new(
        "disjoint", params, witness, counts, start,
    ))
}

/// Re-check an overlap witness from scratch.
pub fn replay_overlap(
    first: &Word,
    second: &Word,
    shared: &Word,
    t: usize,
    s: usize,
) -> Result<bool> {
    Ok(first != second
        && ball(first, t, s)?.contains(shared)
        && ball(second, t, s)?.contains(shared))
}

/// Decode every `(t,s)`-burst of every codeword and compare.
///
/// `decoder` must be built for the same `n` and burst type; a decoder with
/// different residues is allowed and simply fails.
pub fn verify_roundtrip(
    codebook: &Codebook,
    t: usize,
    s: usize,
    decoder: &dyn BurstCode,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = codebook.n();
    if decoder.burst() != (t, s) || decoder.n() != n {
        let (dt, ds) = decoder.burst();
        return Err(Error::InvalidParams(format!(
            "decoder is for n={}, ({dt},{ds})-bursts but the check is n={n}, ({t},{s})",
            decoder.n()
        )));
    }
    check_burst_fits(n, t, s)?;
    let mut counts = Counts {
        codewords: codebook.size() as u64,
        corruptions: 0,
    };
    let mut witness = None;
    'outer: for x in &codebook.members {
        for (spec, y) in burst_outcomes(x, t, s)? {
            counts.corruptions += 1;
            let got = decoder.decode(&y);
            if got.as_ref() != Ok(x) {
                witness = Some(Witness::Decode {
                    codeword: *x,
                    burst: spec,
                    received: y,
                    decoded: got.as_ref().ok().copied(),
                    error: got.err().map(|e| e.to_string()),
                });
                break 'outer;
            }
        }
    }
    let params = json!({
        "n": n, "t": t, "s": s,
        "family": codebook.params.family(),
        "code": serde_json::to_value(&codebook.params).expect("params serialize"),
    });
    Ok(VerificationReport::new(
        "roundtrip",
        params,
        witness,
        counts,
        start,
    ))
}

/// Disjointness under `(t,s)` must agree with disjointness under `(s,t)`.
pub fn verify_equivalence(members: &[Word], t: usize, s: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = common_length(members)?;
    if let Some(n) = n {
        check_burst_fits(n, t.max(s), t.min(s))?;
    }
    let (fw, fc) = first_overlap(members, t, s)?;
    let (bw, bc) = first_overlap(members, s, t)?;
    let verdict = |w: &Option<Witness>| {
        if w.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    };
    let (forward, backward) = (verdict(&fw), verdict(&bw));
    let witness = (forward != backward).then(|| Witness::Equivalence {
        forward,
        backward,
        witness: fw.clone().or(bw.clone()).map(Box::new),
    });
    let counts = Counts {
        codewords: members.len() as u64,
        corruptions: fc + bc,
    };
    let params = json!({
        "n": n, "t": t, "s": s,
        "forward": forward, "backward": backward,
        "forward_witness": fw, "backward_witness": bw,
    });
    Ok(VerificationReport::new(
        "equivalence",
        params,
        witness,
        counts,
        start,
    ))
}

/// The refined balls whose disjoint union is `B_{t,s}(x)`.
pub fn partition_indices(t: usize, s: usize) -> Vec<(usize, usize)> {
    if t >= s {
        (0..=s).map(|l| (t - s + l, l)).collect()
    } else {
        (0..=t).map(|k| (k, s - t + k)).collect()
    }
}

/// Check one word against the size law, the partition and the refined
/// closed forms; `None` when everything holds.
pub fn check_ball_laws(x: &Word, t: usize, s: usize) -> Result<Option<Witness>> {
    let n = x.len();
    let law = |name: &str, detail: String| {
        Some(Witness::BallLaw {
            center: *x,
            t,
            s,
            law: name.to_string(),
            detail,
        })
    };
    let members = ball_members(x, t, s)?;
    let expected = ball_size_formula(n, t, s)?;
    if members.len() as u128 != expected {
        return Ok(law(
            "size",
            format!("enumerated {} members, formula {expected}", members.len()),
        ));
    }
    let whole: BTreeSet<Word> = members.into_iter().collect();
    let mut seen: HashMap<Word, (usize, usize)> = HashMap::new();
    for (k, l) in partition_indices(t, s) {
        let part = refined_ball(x, k, l)?;
        match refined_ball_size(x, k, l) {
            Ok(size) if size != part.len() as u128 => {
                return Ok(law(
                    "refined-size",
                    format!(
                        "B'_{{{k},{l}}} has {} members, closed form {size}",
                        part.len()
                    ),
                ));
            }
            Ok(_) | Err(Error::NotDivisible { .. }) => {}
            Err(e) => return Err(e),
        }
        for z in part {
            if !whole.contains(&z) {
                return Ok(law(
                    "partition-extra",
                    format!("{z} in B'_{{{k},{l}}} but not in the ball"),
                ));
            }
            if let Some((k0, l0)) = seen.insert(z, (k, l)) {
                return Ok(law(
                    "partition-overlap",
                    format!("{z} in both B'_{{{k0},{l0}}} and B'_{{{k},{l}}}"),
                ));
            }
        }
    }
    if let Some(z) = whole.iter().find(|z| !seen.contains_key(z)) {
        return Ok(law(
            "partition-omission",
            format!("{z} is in no refined ball"),
        ));
    }
    Ok(None)
}

/// Sweep every word of length `n_min..=n_max` and every `1 ≤ t ≤ t_max`,
/// `1 ≤ s ≤ s_max` with `max(t,s) ≤ n`.
pub fn verify_ball_laws(
    n_min: usize,
    n_max: usize,
    t_max: usize,
    s_max: usize,
    guard: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if n_max > guard {
        return Err(Error::Guard {
            n: n_max,
            limit: guard,
        });
    }
    let mut counts = Counts::default();
    let mut witness = None;
    'outer: for n in n_min.max(1)..=n_max {
        for x in Word::all(n)? {
            counts.codewords += 1;
            for t in 1..=t_max.min(n) {
                for s in 1..=s_max.min(n) {
                    counts.corruptions += 1;
                    if let Some(w) = check_ball_laws(&x, t, s)? {
                        witness = Some(w);
                        break 'outer;
                    }
                }
            }
        }
    }
    let params = json!({ "n_min": n_min, "n_max": n_max, "t_max": t_max, "s_max": s_max });
    Ok(VerificationReport::new(
        "ball-laws",
        params,
        witness,
        counts,
        start,
    ))
}

/// Size of `codebook` against the sphere-packing bound for `(t,s)`.
pub fn bound_report(codebook: &Codebook, t: usize, s: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = codebook.n();
    let bound = sphere_packing_bound(n, t, s)? as u64;
    let size = codebook.size() as u64;
    let floor = min_redundancy(n, t, s)?;
    let redundancy = codebook.redundancy();
    let witness = (size > bound).then_some(Witness::Bound { size, bound });
    let params = json!({ "n": n, "t": t, "s": s, "family": codebook.params.family() });
    let counts = Counts {
        codewords: size,
        corruptions: 0,
    };
    let mut report = VerificationReport::new("bound", params, witness, counts, start);
    report.redundancy = Some(RedundancyReport {
        size,
        redundancy: round4(redundancy),
        sphere_packing_bound: bound,
        min_redundancy: round4(floor),
        gap: round4(redundancy - floor),
    });
    Ok(report)
}

/// Round to 4 decimal places for stable output.
pub fn round4(v: f64) -> f64 {
    if v.is_finite() {
        (v * 1e4).round() / 1e4
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{C21Code, CodeParams, VtCode};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn counterexample_witnesses() {
        let r = verify_disjoint(&[w("00100"), w("11111")], 2, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(
            r.witness,
            Some(Witness::Overlap {
                first: w("00100"),
                second: w("11111"),
                shared: w("11100")
            })
        );
        let r = verify_disjoint(&[w("11111"), w("01010")], 3, 1).unwrap();
        let Some(Witness::Overlap {
            first,
            second,
            shared,
        }) = r.witness
        else {
            panic!()
        };
        assert_eq!(shared, w("011"));
        assert!(replay_overlap(&first, &second, &shared, 3, 1).unwrap());
    }

    #[test]
    fn disjoint_edge_cases() {
        assert!(verify_disjoint(&[w("0101")], 2, 1).unwrap().passed());
        assert!(verify_disjoint(&[], 2, 1).unwrap().passed());
        assert!(matches!(
            verify_disjoint(&[w("01"), w("011")], 1, 1),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn equivalence_examples() {
        let r = verify_equivalence(&[w("11111"), w("01010")], 3, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.params["forward"], "fail");
        assert_eq!(r.params["backward"], "fail");
        let vt: Vec<Word> = Word::all(6)
            .unwrap()
            .filter(|x| VtCode { n: 6, a: 0 }.contains(x))
            .collect();
        let r = verify_equivalence(&vt, 2, 2).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn roundtrip_and_negative_control() {
        let code = C21Code { n: 7, a: 3, b: 1 };
        let members: Vec<Word> = Word::all(7).unwrap().filter(|x| code.contains(x)).collect();
        let book = Codebook {
            params: CodeParams::C21(code),
            members,
        };
        assert!(verify_roundtrip(&book, 2, 1, &code).unwrap().passed());
        assert!(verify_disjoint(&book.members, 2, 1).unwrap().passed());
        let wrong = C21Code { n: 7, a: 4, b: 1 };
        let r = verify_roundtrip(&book, 2, 1, &wrong).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.counts.corruptions, 1);
        assert!(matches!(r.witness, Some(Witness::Decode { .. })));
        let vt = VtCode { n: 7, a: 0 };
        assert!(verify_roundtrip(&book, 2, 1, &vt).is_err());
    }

    #[test]
    fn ball_laws_hold_at_small_n() {
        let r = verify_ball_laws(1, 8, 4, 4, BALL_LAW_GUARD).unwrap();
        assert!(r.passed(), "{:?}", r.witness);
        assert_eq!(
            verify_ball_laws(1, 15, 4, 4, BALL_LAW_GUARD).unwrap_err(),
            Error::Guard { n: 15, limit: 14 }
        );
    }

    #[test]
    fn partition_indices_both_directions() {
        assert_eq!(partition_indices(4, 1), vec![(3, 0), (4, 1)]);
        assert_eq!(partition_indices(1, 3), vec![(0, 2), (1, 3)]);
        assert_eq!(partition_indices(2, 2), vec![(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn bound_examples() {
        let code = C21Code { n: 8, a: 0, b: 0 };
        let members: Vec<Word> = Word::all(8).unwrap().filter(|x| code.contains(x)).collect();
        let book = Codebook {
            params: CodeParams::C21(code),
            members,
        };
        let r = bound_report(&book, 2, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.redundancy.unwrap().sphere_packing_bound, 16);
        let empty = Codebook {
            params: CodeParams::C21(code),
            members: vec![],
        };
        assert!(bound_report(&empty, 2, 1).unwrap().passed());
    }

    #[test]
    fn report_is_one_json_line() {
        let r = verify_disjoint(&[w("0101")], 2, 1).unwrap();
        let line = r.to_json_line();
        assert!(!line.contains('\n'));
        let v: Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["verdict"], "pass");
    }
}
