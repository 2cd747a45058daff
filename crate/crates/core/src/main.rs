//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or decode failure, 2 usage or
//! domain error, 3 refused by a resource guard.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tsburst::c31::C31Params;
use tsburst::channel::{
    ball, ball_size_formula, min_redundancy, refined_ball, refined_ball_size, sphere_packing_bound,
    sphere_packing_bound_raw,
};
use tsburst::codes::search::pigeonhole_search_guarded;
use tsburst::codes::{
    default_run_bound, run_limited_count, C21Code, C21RllCode, CodeParams, Family, Lev2Code,
    Svt21Code, VtCode, DEFAULT_GUARD,
};
use tsburst::cts::{shape, CtsParams, RowResidues};
use tsburst::sim::{simulate, SimConfig};
use tsburst::verify::{
    bound_report, round4, verify_ball_laws, verify_disjoint, verify_equivalence, verify_roundtrip,
    VerificationReport, BALL_LAW_GUARD,
};
use tsburst::{Error, ErrorKind, Word};

#[derive(Parser)]
#[command(
    name = "tsburst",
    version,
    about = "Codes correcting a burst of t deletions and s insertions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the (t,s)-burst ball of a word, or one refined ball.
    Ball(BallArgs),
    /// Test membership in a code.
    Member(CodeArgs),
    /// Decode a received word.
    Decode(DecodeArgs),
    /// Find the largest code of a family by exhaustive bucketing.
    Search(SearchArgs),
    /// Run exhaustive checks; prints one JSON report per line.
    Verify(VerifyArgs),
    /// Tabulate the sphere-packing bound and construction redundancies.
    Bounds(BoundsArgs),
    /// Push random bursts of random codewords through a decoder.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Vt,
    Lev2,
    C21,
    C21rll,
    Svt21,
    Cts,
    C31,
}

#[derive(Args)]
struct BallArgs {
    /// Center word.
    x: Word,
    #[arg(long, required_unless_present = "refined")]
    t: Option<usize>,
    #[arg(long, required_unless_present = "refined")]
    s: Option<usize>,
    /// Show B'_{k,l} instead of the full ball.
    #[arg(long, num_args = 2, value_names = ["K", "L"], conflicts_with_all = ["t", "s"])]
    refined: Option<Vec<usize>>,
    #[arg(long)]
    json: bool,
}

/// Everything needed to pin down one code.
#[derive(Args)]
struct ParamArgs {
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Window bound of the SVT code.
    #[arg(long)]
    p: Option<usize>,
    /// Run bound of the RLL code; defaults to ⌈log2 n⌉ + 3.
    #[arg(long)]
    f: Option<usize>,
    /// Comma-separated residues: vt/lev2 `a`; c21/c21rll `a,b`; svt21 `c,d`;
    /// cts `a,b,c2,d2,...`; c31 `a,b,c,d`.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<u64>>,
    /// Take the residues from this word instead of `--params`.
    #[arg(long, conflicts_with = "params")]
    like: Option<Word>,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    code: ParamArgs,
    /// Words to test.
    words: Vec<Word>,
    /// Read words from a file, one per line.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    code: ParamArgs,
    /// Received words.
    words: Vec<Word>,
    #[arg(long)]
    file: Option<PathBuf>,
    /// SVT only: 1-based inclusive window `lo,hi`.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    window: Option<Vec<usize>>,
    /// Print the decoder's intermediate results.
    #[arg(long)]
    verbose: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    check: VerifyCommand,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Ball size, partition and refined-size laws over every word.
    BallLaws {
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        t_max: usize,
        #[arg(long, default_value_t = 4)]
        s_max: usize,
        #[arg(long, default_value_t = BALL_LAW_GUARD)]
        guard: usize,
    },
    /// Pairwise ball disjointness of the given words.
    Disjoint(WordSetArgs),
    /// Disjointness under (t,s) and (s,t) must agree.
    Equivalence(WordSetArgs),
    /// Search the best code of a family, then check disjointness,
    /// round-trip decoding, the swapped burst and the sphere-packing bound.
    Code {
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        f: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// |S_n(⌈log2 n⌉+3)| ≥ 2^(n−1) for every n in a range `lo..hi`.
    Rll {
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
    },
}

#[derive(Args)]
struct WordSetArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    s: usize,
    words: Vec<Word>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    s: usize,
    /// Inclusive range `lo..hi`.
    #[arg(long, value_parser = parse_range)]
    n: (usize, usize),
    /// Also search for the best construction codebook at each n.
    #[arg(long)]
    measured: bool,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Args)]
struct SimulateArgs {
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    #[arg(long)]
    json: bool,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Output and exit status of one command.
struct Outcome {
    stdout: String,
    stderr: String,
    failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            failed: false,
        }
    }
}

type CmdResult = Result<Outcome, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Ball(a) => cmd_ball(a),
        Command::Member(a) => cmd_member(a),
        Command::Decode(a) => cmd_decode(a),
        Command::Search(a) => cmd_search(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Simulate(a) => cmd_simulate(a),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Domain => 2,
                ErrorKind::Resource => 3,
                ErrorKind::Decode | ErrorKind::Ambiguity => 1,
            })
        }
    }
}

fn read_words(words: Vec<Word>, file: Option<PathBuf>) -> Result<Vec<Word>, Error> {
    let mut all = words;
    if let Some(path) = file {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))?;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            all.push(line.parse()?);
        }
    }
    Ok(all)
}

fn family_of(
    arg: FamilyArg,
    t: Option<usize>,
    s: Option<usize>,
    p: Option<usize>,
    f: Option<usize>,
) -> Result<Family, Error> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::InvalidParams(format!("--{name} is required for this family")))
    };
    Ok(match arg {
        FamilyArg::Vt => Family::Vt,
        FamilyArg::Lev2 => Family::Lev2,
        FamilyArg::C21 => Family::C21,
        FamilyArg::C21rll => Family::C21Rll { f },
        FamilyArg::Svt21 => Family::Svt21 { p: need(p, "p")? },
        FamilyArg::Cts => Family::Cts {
            t: need(t, "t")?,
            s: need(s, "s")?,
        },
        FamilyArg::C31 => Family::C31,
    })
}

fn build_params(a: &ParamArgs) -> Result<CodeParams, Error> {
    let family = family_of(a.family, a.t, a.s, a.p, a.f)?;
    if let Some(x) = &a.like {
        if a.n.is_some_and(|n| n != x.len()) {
            return Err(Error::LengthMismatch {
                expected: a.n.unwrap_or(0),
                got: x.len(),
            });
        }
        let n = x.len();
        return Ok(match family {
            Family::Vt => CodeParams::Vt(VtCode::new(n, VtCode::syndrome_of(x))?),
            Family::Lev2 => CodeParams::Lev2(Lev2Code::new(n, Lev2Code::syndrome_of(x))?),
            Family::C21 => CodeParams::C21(C21Code::of(x)?),
            Family::C21Rll { f } => {
                let c = C21Code::of(x)?;
                CodeParams::C21Rll(C21RllCode::new(
                    n,
                    c.a,
                    c.b,
                    f.unwrap_or_else(|| default_run_bound(n)),
                )?)
            }
            Family::Svt21 { p } => CodeParams::Svt21(Svt21Code::of(x, p)?),
            Family::Cts { t, s } => CodeParams::Cts(CtsParams::of(x, t, s)?),
            Family::C31 => CodeParams::C31(C31Params::of(x)?),
        });
    }
    let n =
        a.n.ok_or_else(|| Error::InvalidParams("give --n with --params, or --like".into()))?;
    let v = a
        .params
        .clone()
        .ok_or_else(|| Error::InvalidParams("give --params or --like".into()))?;
    let arity = |k: usize| {
        if v.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "expected {k} residues, got {}",
                v.len()
            )))
        }
    };
    Ok(match family {
        Family::Vt => {
            arity(1)?;
            CodeParams::Vt(VtCode::new(n, v[0])?)
        }
        Family::Lev2 => {
            arity(1)?;
            CodeParams::Lev2(Lev2Code::new(n, v[0])?)
        }
        Family::C21 => {
            arity(2)?;
            CodeParams::C21(C21Code::new(n, v[0], v[1])?)
        }
        Family::C21Rll { f } => {
            arity(2)?;
            CodeParams::C21Rll(C21RllCode::new(
                n,
                v[0],
                v[1],
                f.unwrap_or_else(|| default_run_bound(n)),
            )?)
        }
        Family::Svt21 { p } => {
            arity(2)?;
            CodeParams::Svt21(Svt21Code::new(n, v[0], v[1], p)?)
        }
        Family::Cts { t, s } => {
            let (k, ..) = shape(n, t, s)?;
            arity(2 * k)?;
            let rows = v[2..]
                .chunks(2)
                .map(|p| RowResidues { c: p[0], d: p[1] })
                .collect();
            CodeParams::Cts(CtsParams::new(n, t, s, v[0], v[1], rows)?)
        }
        Family::C31 => {
            arity(4)?;
            CodeParams::C31(C31Params::new(n, v[0], v[1], v[2], v[3])?)
        }
    })
}

fn cmd_ball(a: BallArgs) -> CmdResult {
    let mut out = String::new();
    if let Some(kl) = a.refined {
        let (k, l) = (kl[0], kl[1]);
        let members = refined_ball(&a.x, k, l)?;
        let formula = match refined_ball_size(&a.x, k, l) {
            Ok(v) => Some(v),
            Err(Error::NotDivisible { .. }) => None,
            Err(e) => return Err(e),
        };
        if a.json {
            let v = json!({ "center": a.x, "k": k, "l": l, "size": members.len(),
                            "formula": formula.map(|v| v as u64), "members": members });
            writeln!(out, "{v}").unwrap();
        } else {
            writeln!(out, "center {} n={} refined k={k} l={l}", a.x, a.x.len()).unwrap();
            writeln!(out, "size {}", members.len()).unwrap();
            match formula {
                Some(v) => writeln!(
                    out,
                    "formula {v} {}",
                    verdict_word(v == members.len() as u128)
                ),
                None => writeln!(out, "formula n/a (needs {k} | {})", a.x.len()),
            }
            .unwrap();
            for z in &members {
                writeln!(out, "{z}").unwrap();
            }
        }
        return Ok(Outcome::ok(out));
    }
    let (t, s) = (a.t.unwrap_or(0), a.s.unwrap_or(0));
    let b = ball(&a.x, t, s)?;
    let formula = if s >= 1 {
        Some(ball_size_formula(a.x.len(), t, s)?)
    } else {
        None
    };
    if a.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&b).expect("ball serializes")
        )
        .unwrap();
    } else {
        writeln!(out, "center {} n={} t={t} s={s}", a.x, a.x.len()).unwrap();
        writeln!(out, "size {}", b.size).unwrap();
        if let Some(v) = formula {
            writeln!(out, "formula {v} {}", verdict_word(v == b.size as u128)).unwrap();
        }
        for z in &b.members {
            writeln!(out, "{z}").unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

fn cmd_member(a: CodeArgs) -> CmdResult {
    let params = build_params(&a.code)?;
    let words = read_words(a.words, a.file)?;
    let mut out = String::new();
    for w in words {
        let member = params.contains(&w);
        if a.json {
            writeln!(out, "{}", json!({ "word": w, "member": member })).unwrap();
        } else {
            writeln!(out, "{w} {member}").unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

fn cmd_decode(a: DecodeArgs) -> CmdResult {
    let params = build_params(&a.code)?;
    let words = read_words(a.words, a.file)?;
    if words.is_empty() {
        return Err(Error::InvalidParams("no received word given".into()));
    }
    let mut out = String::new();
    for y in words {
        let (x, trace) = decode_one(&params, &y, a.window.as_deref())?;
        if a.json {
            let mut v = json!({ "received": y, "codeword": x });
            if a.verbose {
                v["trace"] = trace.0;
            }
            writeln!(out, "{v}").unwrap();
        } else {
            writeln!(out, "{x}").unwrap();
            if a.verbose {
                out.push_str(&trace.1);
            }
        }
    }
    Ok(Outcome::ok(out))
}

/// Decoded word with a JSON and a text rendering of the trace.
fn decode_one(
    params: &CodeParams,
    y: &Word,
    window: Option<&[usize]>,
) -> Result<(Word, (serde_json::Value, String)), Error> {
    let mut text = String::new();
    match params {
        CodeParams::Svt21(code) => {
            let w = match window {
                Some([lo, hi]) => (*lo, *hi),
                _ => return Err(Error::InvalidParams("svt21 needs --window lo,hi".into())),
            };
            let x = code.decode(y, w)?;
            writeln!(text, "window [{},{}] P={}", w.0, w.1, code.p).unwrap();
            Ok((x, (json!({ "window": w, "p": code.p }), text)))
        }
        CodeParams::C21(code) => {
            let o = code.decode_outcome(y)?;
            let (lo, hi) = o.location_window;
            writeln!(
                text,
                "classification {} window [{lo},{hi}]",
                o.classification
            )
            .unwrap();
            Ok((o.codeword, (json!(o), text)))
        }
        CodeParams::C21Rll(code) => {
            let o = code.decode_outcome(y)?;
            let (lo, hi) = o.location_window;
            writeln!(
                text,
                "classification {} window [{lo},{hi}]",
                o.classification
            )
            .unwrap();
            Ok((o.codeword, (json!(o), text)))
        }
        CodeParams::Cts(code) => {
            let (x, tr) = code.decode_traced(y)?;
            let join = |rows: &[Word]| {
                rows.iter()
                    .map(Word::to_string)
                    .collect::<Vec<_>>()
                    .join(" / ")
            };
            let (lo, hi) = tr.first_row.location_window;
            writeln!(text, "received rows {}", join(&tr.received_rows)).unwrap();
            writeln!(
                text,
                "row 1 -> {} classification {} window [{lo},{hi}]",
                tr.first_row.codeword, tr.first_row.classification
            )
            .unwrap();
            writeln!(
                text,
                "column window [{},{}] P={}",
                tr.window.0, tr.window.1, code.p
            )
            .unwrap();
            writeln!(text, "decoded rows {}", join(&tr.decoded_rows)).unwrap();
            Ok((x, (json!(tr), text)))
        }
        CodeParams::C31(code) => {
            let (x, tr) = code.decode_traced(y)?;
            writeln!(
                text,
                "delta_odd {} delta_even {} delta_r {} classification {} survivors {} (without run count {})",
                tr.delta_odd, tr.delta_even, tr.delta_r, tr.classification, tr.survivors, tr.survivors_without_run_count
            )
            .unwrap();
            Ok((x, (json!(tr), text)))
        }
        other => {
            let code = other.as_burst_code().expect("decodable family");
            Ok((code.decode(y)?, (json!(null), text)))
        }
    }
}

fn cmd_search(a: SearchArgs) -> CmdResult {
    let family = family_of(a.family, a.t, a.s, a.p, a.f)?;
    let found = pigeonhole_search_guarded(family, a.n, a.guard)?;
    Ok(Outcome::ok(format!(
        "{}\n",
        serde_json::to_string(&found.codebook).expect("codebook serializes")
    )))
}

fn reports_outcome(reports: &[VerificationReport]) -> Outcome {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut failed = false;
    for r in reports {
        writeln!(stdout, "{}", r.to_json_line()).unwrap();
        if !r.passed() {
            failed = true;
            let w = serde_json::to_string(&r.witness).expect("witness serializes");
            writeln!(stderr, "{} failed: {w}", r.check).unwrap();
        }
    }
    Outcome {
        stdout,
        stderr,
        failed,
    }
}

fn burst_of(family: Family) -> Result<(usize, usize), Error> {
    Ok(match family {
        Family::Vt => (1, 0),
        Family::Lev2 => (2, 0),
        Family::C21 | Family::C21Rll { .. } => (2, 1),
        Family::Cts { t, s } => (t, s),
        Family::C31 => (3, 1),
        Family::Svt21 { .. } => {
            return Err(Error::InvalidParams(
                "svt21 needs a window; it has no stand-alone check".into(),
            ))
        }
    })
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let reports = match a.check {
        VerifyCommand::BallLaws {
            n_min,
            n_max,
            t_max,
            s_max,
            guard,
        } => {
            vec![verify_ball_laws(n_min, n_max, t_max, s_max, guard)?]
        }
        VerifyCommand::Disjoint(w) => {
            vec![verify_disjoint(&read_words(w.words, w.file)?, w.t, w.s)?]
        }
        VerifyCommand::Equivalence(w) => {
            vec![verify_equivalence(&read_words(w.words, w.file)?, w.t, w.s)?]
        }
        VerifyCommand::Code {
            family,
            n,
            t,
            s,
            f,
            guard,
        } => {
            let family = family_of(family, t, s, None, f)?;
            let (t, s) = burst_of(family)?;
            let found = pigeonhole_search_guarded(family, n, guard)?;
            let book = &found.codebook;
            let decoder = book.params.as_burst_code().expect("decodable family");
            let mut reports = vec![
                verify_disjoint(&book.members, t, s)?,
                verify_roundtrip(book, t, s, decoder)?,
            ];
            if s >= 1 {
                reports.push(verify_equivalence(&book.members, t, s)?);
                reports.push(bound_report(book, t, s)?);
            }
            reports
        }
        VerifyCommand::Rll { n: (lo, hi) } => {
            let mut out = String::new();
            let mut failed = false;
            for n in lo.max(1)..=hi {
                let f = default_run_bound(n);
                let count = run_limited_count(n, f);
                let ok = count >= 1u128 << (n - 1);
                failed |= !ok;
                writeln!(
                    out,
                    "{}",
                    json!({ "check": "rll-size", "n": n, "f": f, "count": count as u64,
                    "floor": 1u64 << (n - 1), "verdict": if ok { "pass" } else { "fail" } })
                )
                .unwrap();
            }
            return Ok(Outcome {
                stdout: out,
                stderr: String::new(),
                failed,
            });
        }
    };
    Ok(reports_outcome(&reports))
}

/// Pigeonhole redundancy guaranteed by the construction for `(t,s)` at `n`.
fn construction_redundancy(n: usize, t: usize, s: usize) -> Option<f64> {
    let log = |v: f64| v.log2();
    if (t, s) == (3, 1) && n.is_multiple_of(2) {
        return Some(log(320.0 * n as f64));
    }
    let (k, m, _, p) = shape(n, t, s).ok()?;
    let first = 1.0 + log(4.0 * (2 * m - 1) as f64);
    Some(first + (k - 1) as f64 * log(4.0 * (2 * p - 1) as f64))
}

fn cmd_bounds(a: BoundsArgs) -> CmdResult {
    let (t, s) = (a.t, a.s);
    let mut out = String::new();
    let measured_col = if a.measured { "\tmeasured" } else { "" };
    writeln!(
        out,
        "n\tsphere_packing\tsphere_packing_t\tmin_redundancy\tconstruction{measured_col}"
    )
    .unwrap();
    for n in a.n.0..=a.n.1 {
        if n < t.max(s) {
            continue;
        }
        let bound = sphere_packing_bound(n, t, s)?;
        let raw = sphere_packing_bound_raw(n, t, s)?;
        let floor = min_redundancy(n, t, s)?;
        let cons = construction_redundancy(n, t, s).map_or("-".to_string(), |v| format!("{v:.4}"));
        write!(out, "{n}\t{bound}\t{raw}\t{floor:.4}\t{cons}").unwrap();
        if a.measured {
            let family = if (t, s) == (3, 1) && n % 2 == 0 {
                Some(Family::C31)
            } else if shape(n, t, s).is_ok() {
                Some(Family::Cts { t, s })
            } else {
                None
            };
            match family {
                Some(fam) => {
                    let found = pigeonhole_search_guarded(fam, n, a.guard)?;
                    write!(out, "\t{:.4}", round4(found.codebook.redundancy())).unwrap();
                }
                None => out.push_str("\t-"),
            }
        }
        out.push('\n');
    }
    Ok(Outcome::ok(out))
}

fn cmd_simulate(a: SimulateArgs) -> CmdResult {
    let family = family_of(a.family, a.t, a.s, None, a.f)?;
    burst_of(family)?;
    let found = pigeonhole_search_guarded(family, a.n, a.guard)?;
    let book = &found.codebook;
    let decoder = book.params.as_burst_code().expect("decodable family");
    let report = simulate(
        book,
        decoder,
        SimConfig {
            trials: a.trials,
            seed: a.seed,
        },
    )?;
    let mut out = String::new();
    if a.json {
        let v = json!({ "params": book.params, "report": report });
        writeln!(out, "{v}").unwrap();
    } else {
        writeln!(
            out,
            "simulate {} n={} t={} s={} seed={} trials={}",
            report.family, report.n, report.t, report.s, report.seed, report.trials
        )
        .unwrap();
        writeln!(
            out,
            "params {}",
            serde_json::to_string(&book.params).expect("params serialize")
        )
        .unwrap();
        writeln!(
            out,
            "codebook size {} redundancy {:.4}",
            book.size(),
            book.redundancy()
        )
        .unwrap();
        writeln!(out, "success {}/{}", report.successes, report.trials).unwrap();
    }
    let mut stderr = String::new();
    if let Some(w) = &report.first_failure {
        writeln!(
            stderr,
            "first failure: {}",
            serde_json::to_string(w).expect("witness serializes")
        )
        .unwrap();
    }
    Ok(Outcome {
        stdout: out,
        stderr,
        failed: !report.all_succeeded(),
    })
}
