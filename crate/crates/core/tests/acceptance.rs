//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Pass criterion numbers as arguments to run a subset, e.g.
//! `cargo test --test acceptance -- 4 11`.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::Instant;

use tsburst::channel::{ball, ball_size_formula, burst_outcomes, refined_ball, refined_ball_size};
use tsburst::codes::{
    pigeonhole_search, run_limited_count, BurstCode, Classification, CodeParams, Codebook, Family,
    Svt21Code,
};
use tsburst::cts::CtsParams;
use tsburst::verify::{verify_disjoint, verify_equivalence, verify_roundtrip, Witness};
use tsburst::word::interleave;
use tsburst::{Error, Word};

/// Floating point slack for redundancy comparisons.
const EPS: f64 = 1e-9;
/// Allowed excess of the (2,1) code over `log2 n + 3`.
const C21_SLACK: f64 = 1.0;
/// Additive constant in the (3,1) redundancy bound `log2 n + 9`.
const C31_OFFSET: f64 = 9.0;
/// Bucket count factor of the (3,1) search, `320 n`.
const C31_BUCKETS_PER_N: u64 = 320;
const SIM_TRIALS: &str = "10000";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("ball-size law", ball_size_law),
        ("partition into refined balls", partition),
        ("refined-size closed forms", refined_sizes),
        ("worked examples", worked_examples),
        ("(2,1)-burst code", c21_code),
        ("(2,1)-burst SVT code", svt_code),
        ("run-length limited count", rll_count),
        ("array construction C_{t,s}", cts_code),
        ("C_{3,1} construction", c31_code),
        ("(t,s)/(s,t) equivalence", equivalence),
        ("simulator determinism", determinism),
    ];
    let wanted: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {name}: {detail} [{ms} ms]"),
            Err(reason) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name}: {reason} [{ms} ms]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}

fn check(cond: bool, reason: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn all_words(n: usize) -> impl Iterator<Item = Word> {
    Word::all(n).expect("small n")
}

/// `(n, t, s)` with `4 ≤ n ≤ 12`, `1 ≤ t, s ≤ 4` and `max(t, s) ≤ n`.
fn sweep() -> impl Iterator<Item = (usize, usize, usize)> {
    (4..=12).flat_map(|n| (1..=4).flat_map(move |t| (1..=4).map(move |s| (n, t, s))))
}

fn bits(x: &Word) -> Vec<u8> {
    x.to_vec()
}

fn inserts(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u32 << len).map(move |v| (0..len).map(|j| (v >> (len - 1 - j) & 1) as u8).collect())
}

/// Ball by direct splicing on byte vectors.
fn oracle_ball(x: &[u8], t: usize, s: usize) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for i in 0..=x.len() - t {
        for ins in inserts(s) {
            let mut y = x[..i].to_vec();
            y.extend(&ins);
            y.extend(&x[i + t..]);
            out.insert(y);
        }
    }
    out
}

/// `B'_{k,l}`: outcomes whose first and last inserted symbols differ from
/// the first and last deleted ones.
fn oracle_refined(x: &[u8], k: usize, l: usize) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for i in 0..=x.len() - k {
        for ins in inserts(l) {
            if k > 0 && l > 0 && (x[i] == ins[0] || x[i + k - 1] == ins[l - 1]) {
                continue;
            }
            let mut y = x[..i].to_vec();
            y.extend(&ins);
            y.extend(&x[i + k..]);
            out.insert(y);
        }
    }
    out
}

fn parts(t: usize, s: usize) -> Vec<(usize, usize)> {
    let m = t.min(s);
    (0..=m).map(|j| (t - m + j, s - m + j)).collect()
}

fn as_bytes(set: &[Word]) -> BTreeSet<Vec<u8>> {
    set.iter().map(bits).collect()
}

fn ball_size_law() -> Outcome {
    let mut checked = 0u64;
    for (n, t, s) in sweep() {
        if t.max(s) > n {
            continue;
        }
        let law = ((n - t + 2) as u128) << (s - 1);
        check(ball_size_formula(n, t, s) == Ok(law), || {
            format!("closed form disagrees at n={n} t={t} s={s}")
        })?;
        for x in all_words(n) {
            let b = ball(&x, t, s).map_err(|e| e.to_string())?;
            let oracle = oracle_ball(&bits(&x), t, s);
            check(b.size as u128 == law && oracle.len() as u128 == law, || {
                format!(
                    "x={x} t={t} s={s}: |ball|={} oracle={} law={law}",
                    b.size,
                    oracle.len()
                )
            })?;
            check(as_bytes(&b.members) == oracle, || {
                format!("x={x} t={t} s={s}: members differ from direct splicing")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (x,t,s) triples, |B| = (n-t+2)*2^(s-1) everywhere"
    ))
}

fn partition() -> Outcome {
    let mut checked = 0u64;
    for (n, t, s) in sweep() {
        if t.max(s) > n {
            continue;
        }
        let idx = parts(t, s);
        for x in all_words(n) {
            let b = oracle_ball(&bits(&x), t, s);
            let mut union = BTreeSet::new();
            let mut total = 0;
            for &(k, l) in &idx {
                let part = refined_ball(&x, k, l).map_err(|e| e.to_string())?;
                total += part.len();
                for y in &part {
                    check(union.insert(bits(y)), || {
                        format!("x={x} t={t} s={s}: {y} lies in two refined balls")
                    })?;
                }
            }
            if let Some(missing) = b.difference(&union).next() {
                return Err(format!(
                    "x={x} t={t} s={s}: {missing:?} is in no refined ball"
                ));
            }
            check(union.len() == b.len() && total == b.len(), || {
                format!(
                    "x={x} t={t} s={s}: union has {} words, ball {}",
                    union.len(),
                    b.len()
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (x,t,s) triples, disjoint union equals the ball"
    ))
}

fn refined_sizes() -> Outcome {
    let pairs: BTreeSet<(usize, usize)> = (1..=4)
        .flat_map(|t| (1..=4).flat_map(move |s| parts(t, s)))
        .collect();
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut covered = BTreeSet::new();
    for n in 4..=12 {
        for x in all_words(n) {
            let xb = bits(&x);
            for &(k, l) in &pairs {
                if k > n || l > n {
                    continue;
                }
                let enumerated = oracle_refined(&xb, k, l);
                let library = refined_ball(&x, k, l).map_err(|e| e.to_string())?;
                check(
                    as_bytes(&library.into_iter().collect::<Vec<_>>()) == enumerated,
                    || format!("x={x} k={k} l={l}: refined ball differs from direct splicing"),
                )?;
                match refined_ball_size(&x, k, l) {
                    Ok(size) => {
                        check(size == enumerated.len() as u128, || {
                            format!(
                                "x={x} k={k} l={l}: formula {size}, enumeration {}",
                                enumerated.len()
                            )
                        })?;
                        checked += 1;
                        covered.insert((k, l));
                    }
                    Err(Error::NotDivisible { .. }) => skipped += 1,
                    Err(e) => return Err(format!("x={x} k={k} l={l}: {e}")),
                }
            }
        }
    }
    check(covered == pairs, || {
        format!(
            "index pairs never checked: {:?}",
            pairs.difference(&covered).collect::<Vec<_>>()
        )
    })?;
    Ok(format!(
        "{checked} formula evaluations over {} (k,l) pairs, {skipped} skipped for divisibility",
        pairs.len()
    ))
}

/// `key = value` lines, `#` comments.
fn golden(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (k, v) = l.split_once('=').expect("key = value");
            (k.trim().to_string(), v.trim().to_string())
        })
        .collect()
}

fn words(v: &str) -> Vec<Word> {
    v.split_whitespace().map(w).collect()
}

fn num(v: &str) -> usize {
    v.parse().expect("number")
}

fn pair(v: &str) -> (usize, usize) {
    let p: Vec<usize> = v.split_whitespace().map(num).collect();
    (p[0], p[1])
}

fn sorted(mut v: Vec<Word>) -> Vec<Word> {
    v.sort();
    v
}

fn ball_listing() -> Result<(), String> {
    let g = golden(include_str!("golden/ball_listing.txt"));
    let (x, t, s) = (w(&g["center"]), num(&g["t"]), num(&g["s"]));
    let b = ball(&x, t, s).map_err(|e| e.to_string())?;
    check(b.members == sorted(words(&g["members"])), || {
        format!("ball is {:?}", b.members)
    })
}

fn refined_split() -> Result<(), String> {
    let g = golden(include_str!("golden/refined_split.txt"));
    let (x, t, s) = (w(&g["center"]), num(&g["t"]), num(&g["s"]));
    let rows = interleave(&x, t - s)
        .map_err(|e| e.to_string())?
        .into_rows();
    check(rows == words(&g["array_rows"]), || {
        format!("array rows {rows:?}")
    })?;
    let mut total = 0;
    for (k, l) in parts(t, s) {
        let got: Vec<Word> = refined_ball(&x, k, l)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let want = sorted(words(&g[&format!("refined_{k}_{l}")]));
        check(got == want, || format!("B'_{{{k},{l}}} is {got:?}"))?;
        let size = refined_ball_size(&x, k, l).map_err(|e| e.to_string())?;
        check(size as usize == want.len(), || {
            format!("|B'_{{{k},{l}}}| formula gives {size}")
        })?;
        total += got.len();
    }
    check(
        total == num(&g["total"]) && total == ball(&x, t, s).unwrap().size,
        || format!("refined split totals {total}"),
    )
}

fn array_decode() -> Result<(), String> {
    let g = golden(include_str!("golden/array_decode.txt"));
    let (x, t, s) = (w(&g["codeword"]), num(&g["t"]), num(&g["s"]));
    let params = CtsParams::of(&x, t, s).map_err(|e| e.to_string())?;
    let y = w(&g["received"]);
    check(
        burst_outcomes(&x, t, s).unwrap().any(|(_, z)| z == y),
        || "received word is not a burst of the codeword".into(),
    )?;
    let (got, trace) = params.decode_traced(&y).map_err(|e| e.to_string())?;
    check(trace.received_rows == words(&g["received_rows"]), || {
        format!("received rows {:?}", trace.received_rows)
    })?;
    check(trace.first_row.codeword == w(&g["first_row"]), || {
        format!("first row decoded to {}", trace.first_row.codeword)
    })?;
    check(
        trace.first_row.classification.label() == g["first_row_class"],
        || format!("first row class {}", trace.first_row.classification),
    )?;
    check(
        trace.first_row.location_window == pair(&g["first_row_window"]),
        || format!("first row window {:?}", trace.first_row.location_window),
    )?;
    check(trace.window == pair(&g["row_window"]), || {
        format!("row window {:?}", trace.window)
    })?;
    check(trace.decoded_rows == words(&g["decoded_rows"]), || {
        format!("decoded rows {:?}", trace.decoded_rows)
    })?;
    check(got == w(&g["decoded"]) && got == x, || {
        format!("decoded {got}")
    })
}

fn pair_overlap(pair: &[Word], t: usize, s: usize) -> Result<Option<Word>, String> {
    let r = verify_disjoint(pair, t, s).map_err(|e| e.to_string())?;
    Ok(match r.witness {
        Some(Witness::Overlap { shared, .. }) => Some(shared),
        _ => None,
    })
}

fn separating_pairs() -> Result<(), String> {
    let g = golden(include_str!("golden/separating_pairs.txt"));
    let (x, y, z) = (w(&g["x"]), w(&g["y"]), w(&g["z"]));
    let xy_22 = pair_overlap(&[x, y], 2, 2)?;
    let yz_31 = pair_overlap(&[y, z], 3, 1)?;
    check(xy_22 == Some(w(&g["shared_xy_2_2"])), || {
        format!("(2,2) witness {xy_22:?}")
    })?;
    check(yz_31 == Some(w(&g["shared_yz_3_1"])), || {
        format!("(3,1) witness {yz_31:?}")
    })?;
    check(pair_overlap(&[x, y], 3, 1)?.is_none(), || {
        "x, y overlap under (3,1)".into()
    })?;
    check(pair_overlap(&[y, z], 2, 2)?.is_none(), || {
        "y, z overlap under (2,2)".into()
    })?;
    for (u, v) in [("1", "0"), ("01", ""), ("", "110"), ("0110", "01")] {
        let wrap = |c: &str| w(&format!("{u}{c}{v}"));
        let (xu, yu, zu) = (wrap(&g["x"]), wrap(&g["y"]), wrap(&g["z"]));
        let s22 = wrap(&g["shared_xy_2_2"]);
        let s31 = wrap(&g["shared_yz_3_1"]);
        check(
            ball(&xu, 2, 2).unwrap().contains(&s22) && ball(&yu, 2, 2).unwrap().contains(&s22),
            || format!("{s22} not shared with affixes {u:?}, {v:?}"),
        )?;
        check(
            ball(&yu, 3, 1).unwrap().contains(&s31) && ball(&zu, 3, 1).unwrap().contains(&s31),
            || format!("{s31} not shared with affixes {u:?}, {v:?}"),
        )?;
    }
    Ok(())
}

fn worked_examples() -> Outcome {
    ball_listing().map_err(|e| format!("ball listing: {e}"))?;
    refined_split().map_err(|e| format!("refined split: {e}"))?;
    array_decode().map_err(|e| format!("array decode: {e}"))?;
    separating_pairs().map_err(|e| format!("separating pairs: {e}"))?;
    Ok("ball, refined split, array decode and separating pairs match golden files".into())
}

fn redundancy(n: usize, size: usize) -> f64 {
    n as f64 - (size as f64).log2()
}

fn disjoint_and_roundtrip(
    book: &Codebook,
    code: &dyn BurstCode,
    t: usize,
    s: usize,
) -> Result<u64, String> {
    let d = verify_disjoint(&book.members, t, s).map_err(|e| e.to_string())?;
    check(d.passed(), || {
        format!("disjointness failed: {}", d.to_json_line())
    })?;
    let r = verify_roundtrip(book, t, s, code).map_err(|e| e.to_string())?;
    check(r.passed(), || {
        format!("round trip failed: {}", r.to_json_line())
    })?;
    Ok(r.counts.corruptions)
}

fn vt_value(x: &Word) -> u64 {
    x.iter()
        .enumerate()
        .map(|(i, b)| (i as u64 + 1) * u64::from(b))
        .sum()
}

fn c21_code() -> Outcome {
    let mut report = Vec::new();
    for n in 6..=12 {
        let found = pigeonhole_search(Family::C21, n).map_err(|e| e.to_string())?;
        let CodeParams::C21(code) = found.codebook.params else {
            return Err("search returned another family".into());
        };
        let mut buckets: BTreeMap<(u64, u64), usize> = BTreeMap::new();
        for x in all_words(n) {
            *buckets
                .entry((vt_value(&x) % (2 * n as u64 - 1), x.weight() as u64 % 4))
                .or_default() += 1;
        }
        let best = *buckets.values().max().unwrap();
        check(found.codebook.size() == best, || {
            format!(
                "n={n}: search size {} but largest bucket has {best}",
                found.codebook.size()
            )
        })?;
        disjoint_and_roundtrip(&found.codebook, &code, 2, 1).map_err(|e| format!("n={n}: {e}"))?;
        let r = redundancy(n, best);
        let limit = (n as f64).log2() + 3.0 + C21_SLACK;
        check(r <= limit + EPS, || {
            format!("n={n}: redundancy {r:.4} > {limit:.4}")
        })?;
        report.push(format!("n={n}:{r:.3}"));
    }
    Ok(format!("redundancy {}", report.join(" ")))
}

fn svt_code() -> Outcome {
    let mut decodes = 0u64;
    let mut worst: f64 = f64::NEG_INFINITY;
    for n in 6..=12 {
        for p in [3, 4, 6] {
            let found = pigeonhole_search(Family::Svt21 { p }, n).map_err(|e| e.to_string())?;
            let CodeParams::Svt21(best) = found.codebook.params else {
                return Err("search returned another family".into());
            };
            let r = redundancy(n, found.codebook.size());
            let limit = (p as f64).log2() + 3.0;
            check(r <= limit + EPS, || {
                format!("n={n} P={p}: redundancy {r:.4} > {limit:.4}")
            })?;
            worst = worst.max(r - limit);
            for x in all_words(n) {
                let (c, d) = (vt_value(&x) % (2 * p as u64 - 1), x.weight() as u64 % 4);
                check(best.contains(&x) == ((c, d) == (best.c, best.d)), || {
                    format!("n={n} P={p}: membership of {x} disagrees with its residues")
                })?;
                let code = Svt21Code::new(n, c, d, p).map_err(|e| e.to_string())?;
                for (spec, y) in burst_outcomes(&x, 2, 1).unwrap() {
                    let lo_min = spec.start.saturating_sub(p - 1).max(1);
                    let lo_max = spec.start.min(n + 1 - p);
                    for lo in lo_min..=lo_max {
                        let window = (lo, lo + p - 1);
                        let got = code.decode(&y, window);
                        check(got == Ok(x), || {
                            format!(
                                "n={n} P={p}: {x} start {} window {window:?} gave {got:?}",
                                spec.start
                            )
                        })?;
                        decodes += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{decodes} windowed decodes, largest best-bucket excess over log2 P + 3 is {worst:.3}"
    ))
}

fn max_run_of(v: u32, n: usize) -> usize {
    let (mut best, mut run) = (0, 0);
    for i in 0..n {
        run = if i > 0 && (v >> i & 1) == (v >> (i - 1) & 1) {
            run + 1
        } else {
            1
        };
        best = best.max(run);
    }
    best
}

fn rll_count() -> Outcome {
    let mut report = Vec::new();
    for n in 8..=16usize {
        let f = (usize::BITS - (n - 1).leading_zeros()) as usize + 3;
        let count = (0..1u32 << n).filter(|&v| max_run_of(v, n) <= f).count() as u128;
        check(run_limited_count(n, f) == count, || {
            format!(
                "n={n}: transfer count {} vs enumeration {count}",
                run_limited_count(n, f)
            )
        })?;
        check(count >= 1 << (n - 1), || {
            format!("n={n} f={f}: only {count} words")
        })?;
        report.push(format!("n={n}:{:.4}", count as f64 / (1u128 << n) as f64));
    }
    Ok(format!("fraction of words kept {}", report.join(" ")))
}

fn cts_code() -> Outcome {
    let mut report = Vec::new();
    for (n, t, s) in [(12, 4, 1), (15, 4, 1), (12, 3, 1), (12, 4, 2)] {
        let found = pigeonhole_search(Family::Cts { t, s }, n).map_err(|e| e.to_string())?;
        let CodeParams::Cts(params) = found.codebook.params.clone() else {
            return Err("search returned another family".into());
        };
        let tag = format!("({n},{t},{s})");
        check(found.codebook.size() > 0, || {
            format!("{tag}: empty codebook")
        })?;
        let corruptions = disjoint_and_roundtrip(&found.codebook, &params, t, s)
            .map_err(|e| format!("{tag}: {e}"))?;
        let k = t - s;
        for x in &found.codebook.members {
            let rows = interleave(x, k).unwrap().into_rows();
            for (spec, y) in burst_outcomes(x, t, s).unwrap() {
                let (_, trace) = params
                    .decode_traced(&y)
                    .map_err(|e| format!("{tag}: {e}"))?;
                for (i, (row, got)) in rows.iter().zip(&trace.received_rows).enumerate() {
                    check(oracle_ball(&bits(row), 2, 1).contains(&bits(got)), || {
                        format!("{tag}: {x} burst at {} breaks row {}", spec.start, i + 1)
                    })?;
                }
            }
        }
        report.push(format!(
            "{tag}: size {} redundancy {:.3} over {corruptions} bursts",
            found.codebook.size(),
            redundancy(n, found.codebook.size())
        ));
    }
    Ok(report.join("; "))
}

/// The class of a (3,1)-burst read off the deleted and inserted symbols.
fn oracle_class(deleted: &[u8], inserted: u8) -> Classification {
    if inserted == deleted[0] || inserted == deleted[2] {
        return Classification::TwoBurstDeletion;
    }
    match (deleted[1], inserted) {
        (0, 1) => Classification::Pattern000To1,
        (1, 1) => Classification::Pattern010To1,
        (1, 0) => Classification::Pattern111To0,
        _ => Classification::Pattern101To0,
    }
}

fn c31_code() -> Outcome {
    let mut report = Vec::new();
    for n in (8..=16).step_by(2) {
        let found = pigeonhole_search(Family::C31, n).map_err(|e| e.to_string())?;
        let CodeParams::C31(params) = found.codebook.params else {
            return Err("search returned another family".into());
        };
        let book = &found.codebook;
        disjoint_and_roundtrip(book, &params, 3, 1).map_err(|e| format!("n={n}: {e}"))?;
        let mut ambiguous = 0;
        for x in &book.members {
            let xb = bits(x);
            for (spec, y) in burst_outcomes(x, 3, 1).unwrap() {
                let want = oracle_class(&xb[spec.start - 1..spec.start + 2], spec.inserted.bit(0));
                let got = params.classify(&y).map_err(|e| format!("n={n}: {e}"))?;
                check(got == want, || {
                    format!(
                        "n={n}: {x} start {} ins {} classified {got}, truth {want}",
                        spec.start, spec.inserted
                    )
                })?;
                if let Err(Error::Ambiguous { .. }) = params.decode(&y) {
                    ambiguous += 1;
                }
            }
        }
        check(ambiguous == 0, || {
            format!("n={n}: {ambiguous} ambiguous decodes")
        })?;
        let size = book.size() as u64;
        let r = redundancy(n, book.size());
        let limit = (n as f64).log2() + C31_OFFSET;
        check(r <= limit + EPS, || {
            format!("n={n}: redundancy {r:.4} > {limit:.4}")
        })?;
        let floor = (1u64 << n).div_ceil(C31_BUCKETS_PER_N * n as u64);
        check(size >= floor, || {
            format!("n={n}: size {size} below {floor}")
        })?;
        let cap = (1u64 << (n - 2)) / (n as u64 - 1);
        check(size <= cap, || format!("n={n}: size {size} above {cap}"))?;
        report.push(format!("n={n}: size {size} redundancy {r:.3}"));
    }
    Ok(report.join("; "))
}

fn equivalence() -> Outcome {
    let mut books: Vec<(String, Codebook, usize, usize)> = Vec::new();
    for n in 6..=12 {
        books.push((
            format!("c21 n={n}"),
            pigeonhole_search(Family::C21, n).unwrap().codebook,
            2,
            1,
        ));
    }
    for (t, s) in [(4, 1), (3, 1), (4, 2)] {
        let found = pigeonhole_search(Family::Cts { t, s }, 12).unwrap();
        books.push((format!("cts ({t},{s}) n=12"), found.codebook, t, s));
    }
    for n in [8, 10, 12] {
        books.push((
            format!("c31 n={n}"),
            pigeonhole_search(Family::C31, n).unwrap().codebook,
            3,
            1,
        ));
    }
    for (name, book, t, s) in &books {
        let swapped = verify_disjoint(&book.members, *s, *t).map_err(|e| e.to_string())?;
        check(swapped.passed(), || {
            format!("{name} under ({s},{t}): {}", swapped.to_json_line())
        })?;
        let both = verify_equivalence(&book.members, *t, *s).map_err(|e| e.to_string())?;
        check(both.passed(), || format!("{name}: {}", both.to_json_line()))?;
    }
    let (x, y, z) = (w("00100"), w("11111"), w("01010"));
    let verdicts = [
        verify_disjoint(&[x, y], 3, 1),
        verify_disjoint(&[x, y], 2, 2),
        verify_disjoint(&[y, z], 2, 2),
        verify_disjoint(&[y, z], 3, 1),
    ]
    .map(|r| r.map(|r| r.passed()));
    check(
        verdicts == [Ok(true), Ok(false), Ok(true), Ok(false)],
        || format!("separating pairs gave {verdicts:?}"),
    )?;
    Ok(format!(
        "{} codebooks disjoint under the swapped ball; separating pairs split (3,1) from (2,2)",
        books.len()
    ))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_tsburst"))
            .args([
                "simulate", "c31", "--n", "12", "--trials", SIM_TRIALS, "--seed", "7",
            ])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    check(a.status.success() && b.status.success(), || {
        format!("simulate exited with {} and {}", a.status, b.status)
    })?;
    check(a.stdout == b.stdout, || {
        "the two runs printed different output".into()
    })?;
    let text = String::from_utf8_lossy(&a.stdout);
    let want = format!("success {SIM_TRIALS}/{SIM_TRIALS}");
    check(text.lines().any(|l| l.trim() == want), || {
        format!("no '{want}' line in:\n{text}")
    })?;
    Ok(format!("{} identical bytes, {want}", a.stdout.len()))
}
