use std::fmt::Write as _;

use clap::{Args, Subcommand};
use isoword::bench::measure;
use isoword::cube::{CubeCheckResult, CubeOracle, CubeWitness, DEFAULT_BUDGET};
use isoword::isometry::MAX_LEE_ALPHABET;
use isoword::{
    is_isometric, BorderEntry, BorderReport, Detector, IsometryVerdict, LceIndex, Metric, Word,
};
use serde_json::{json, Value};

use crate::input::{usage, AlphabetArgs, CliResult, Span, MAX_LEE_D};

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a word is Hamming- or Lee-isometric.
    ///
    /// Exit status: 0 isometric, 1 not isometric, 2 error.
    Check {
        word: String,
        #[command(flatten)]
        opts: AlphabetArgs,
    },
    /// List every border at distance exactly k.
    Border {
        word: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        opts: AlphabetArgs,
    },
    /// List all non-isometric words up to a length.
    Enumerate {
        #[arg(long)]
        maxlen: usize,
        /// Maximum number of words examined.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        opts: AlphabetArgs,
    },
    /// Compare the border-based verdict with exhaustive cube embeddings.
    ///
    /// Exit status: 0 agreement, 1 disagreement, 2 error or budget exceeded.
    Verify {
        word: String,
        /// Lengths of the cube vertices, `a..b` inclusive. Defaults to |f|..|f|+4.
        #[arg(long)]
        n: Option<Span>,
        /// Maximum number of cube vertices.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        opts: AlphabetArgs,
    },
    /// Time index construction and the k-error border scan on random binary words.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Exponents e of the sizes 2^e, `a..b` inclusive.
    #[arg(long, default_value = "16..20")]
    pub n: Span,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Repetitions per size; reported times are medians.
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
    #[arg(long)]
    pub json: bool,
}

impl Command {
    pub fn json(&self) -> bool {
        match self {
            Command::Check { opts, .. }
            | Command::Border { opts, .. }
            | Command::Enumerate { opts, .. }
            | Command::Verify { opts, .. } => opts.json,
            Command::Bench(args) => args.json,
        }
    }
}

/// What a command prints, in both forms, and its exit status.
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

pub fn run(command: Command) -> CliResult<Report> {
    match command {
        Command::Check { word, opts } => check(&word, &opts),
        Command::Border { word, k, opts } => border(&word, k, &opts),
        Command::Enumerate { maxlen, budget, opts } => enumerate(maxlen, budget, &opts),
        Command::Verify { word, n, budget, opts } => verify(&word, n, budget, &opts),
        Command::Bench(args) => bench(&args),
    }
}

fn entry_json(entry: &BorderEntry) -> Value {
    json!({
        "length": entry.length,
        "positions": entry.mismatch_positions,
        "distance": entry.distance,
    })
}

fn describe_entry(out: &mut String, word: &Word, entry: &BorderEntry) {
    let n = word.len();
    let _ = writeln!(
        out,
        "  length {}: distance {}, mismatches at {:?}",
        entry.length, entry.distance, entry.mismatch_positions
    );
    let _ = writeln!(out, "    prefix {}", word.render(0..entry.length));
    let _ = writeln!(out, "    suffix {}", word.render(n - entry.length..n));
}

fn verdict(word: &Word, metric: Metric, d: usize) -> CliResult<IsometryVerdict> {
    Ok(is_isometric(word, metric, d)?)
}

fn check(text: &str, opts: &AlphabetArgs) -> CliResult<Report> {
    let (word, d) = opts.word(text)?;
    let metric = opts.metric();
    opts.require_lee_d(d, MAX_LEE_ALPHABET)?;
    let v = verdict(&word, metric, d)?;

    let mut json = json!({
        "word": word.to_string(),
        "metric": metric.name(),
        "isometric": v.isometric,
    });
    let mut out = format!(
        "{word}: {} ({metric})\n",
        if v.isometric { "isometric" } else { "not isometric" }
    );
    if let Some(w) = &v.witness {
        json["witness"] = entry_json(w);
        out.push_str("witness 2-error border:\n");
        describe_entry(&mut out, &word, w);
    }
    Ok(Report {
        code: if v.isometric { 0 } else { 1 },
        text: out,
        json,
    })
}

fn border(text: &str, k: usize, opts: &AlphabetArgs) -> CliResult<Report> {
    let (word, d) = opts.word(text)?;
    opts.require_lee_d(d, MAX_LEE_D)?;
    let index = LceIndex::build(&word)?;
    let report: BorderReport = match opts.metric() {
        Metric::Hamming => Detector::hamming(&index).all(k, &mut ()),
        Metric::Lee => Detector::lee(&index, d)?.all(k, &mut ()),
    };
    let json = json!({
        "word": word.to_string(),
        "k": k,
        "metric": report.metric.name(),
        "borders": report.borders.iter().map(entry_json).collect::<Vec<_>>(),
    });
    let mut out = format!(
        "{word}: {} border(s) at {} distance {k}\n",
        report.borders.len(),
        report.metric
    );
    for entry in &report.borders {
        describe_entry(&mut out, &word, entry);
    }
    Ok(Report { code: 0, text: out, json })
}

fn enumerate(maxlen: usize, budget: u64, opts: &AlphabetArgs) -> CliResult<Report> {
    let (alphabet, d) = opts.resolve()?;
    let metric = opts.metric();
    opts.require_lee_d(d, MAX_LEE_ALPHABET)?;
    if d > alphabet.len() {
        return Err(usage(format!(
            "--d {d} exceeds the {} symbols of the alphabet",
            alphabet.len()
        )));
    }
    let total: u128 = (1..=maxlen).map(|len| (d as u128).saturating_pow(len as u32)).sum();
    if total > budget as u128 {
        return Err(Box::new(isoword::Error::BudgetExceeded { vertices: total, budget }));
    }

    let mut words = Vec::new();
    let mut counts = Vec::new();
    let mut out = String::new();
    for len in 1..=maxlen {
        let mut count = 0usize;
        let mut codes = vec![0u8; len];
        loop {
            let w = Word::from_codes(codes.clone(), &alphabet)?;
            if !verdict(&w, metric, d)?.isometric {
                count += 1;
                words.push(w.to_string());
            }
            if !next_codes(&mut codes, d) {
                break;
            }
        }
        counts.push(json!({ "length": len, "count": count }));
        let _ = writeln!(out, "length {len}: {count} non-isometric");
    }
    for w in &words {
        let _ = writeln!(out, "{w}");
    }
    let json = json!({
        "alphabet": alphabet.symbols().iter().collect::<String>(),
        "metric": metric.name(),
        "d": d,
        "maxlen": maxlen,
        "counts": counts,
        "words": words,
    });
    Ok(Report { code: 0, text: out, json })
}

/// Lexicographic successor over `Z_d`; false after the last word.
fn next_codes(codes: &mut [u8], d: usize) -> bool {
    for slot in codes.iter_mut().rev() {
        if (*slot as usize) + 1 < d {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

fn witness_json(w: &CubeWitness) -> Value {
    json!({
        "u": w.u.to_string(),
        "v": w.v.to_string(),
        "host_distance": w.host_distance,
        "subgraph_distance": w.subgraph_distance,
    })
}

fn verify(text: &str, span: Option<Span>, budget: u64, opts: &AlphabetArgs) -> CliResult<Report> {
    let (word, d) = opts.word(text)?;
    let metric = opts.metric();
    opts.require_lee_d(d, MAX_LEE_D)?;
    let span = span.unwrap_or(Span {
        start: word.len(),
        end: word.len() + 4,
    });
    let expected = match metric {
        Metric::Lee if d > MAX_LEE_ALPHABET => None,
        _ => Some(verdict(&word, metric, d)?),
    };

    let oracle = CubeOracle::with_budget(budget);
    let results: Vec<CubeCheckResult> = oracle.sweep(&word, d, metric, span.range())?;
    let first_failure = results.iter().find(|r| !r.isometric).map(|r| r.n);
    let agrees = match &expected {
        Some(v) if v.isometric => first_failure.is_none(),
        _ => true,
    };

    let mut out = String::new();
    match &expected {
        Some(v) => {
            let _ = writeln!(
                out,
                "{word}: characterization says {} ({metric}, d = {d})",
                if v.isometric { "isometric" } else { "not isometric" }
            );
        }
        None => {
            let _ = writeln!(out, "{word}: no characterization for Lee with d = {d}; oracle only");
        }
    }
    let mut rows = Vec::new();
    for r in &results {
        let mut row = json!({ "n": r.n, "isometric": r.isometric });
        match &r.witness {
            None => {
                let _ = writeln!(out, "  n = {}: isometric", r.n);
            }
            Some(w) => {
                row["witness"] = witness_json(w);
                let sub = w
                    .subgraph_distance
                    .map_or_else(|| "unreachable".to_string(), |s| s.to_string());
                let _ = writeln!(
                    out,
                    "  n = {}: not isometric ({} / {}: host distance {}, subgraph distance {sub})",
                    r.n, w.u, w.v, w.host_distance
                );
            }
        }
        rows.push(row);
    }
    match (&expected, first_failure) {
        (Some(v), None) if !v.isometric => {
            let _ = writeln!(out, "no failure found up to n = {}", span.end);
        }
        _ => {}
    }
    let _ = writeln!(out, "{}", if agrees { "agrees" } else { "DISAGREES" });

    let json = json!({
        "word": word.to_string(),
        "metric": metric.name(),
        "results": rows,
        "agrees": agrees,
    });
    Ok(Report {
        code: if agrees { 0 } else { 1 },
        text: out,
        json,
    })
}

fn bench(args: &BenchArgs) -> CliResult<Report> {
    if args.n.end > 28 {
        return Err(usage("bench sizes are limited to 2^28"));
    }
    let mut rows = Vec::new();
    let mut out = format!("seed {} k {} runs {}\n", args.seed, args.k, args.runs);
    let _ = writeln!(
        out,
        "{:>10} {:>10} {:>10} {:>12} {:>7}",
        "n", "build_ms", "scan_ms", "lce_queries", "ratio"
    );
    let mut previous: Option<f64> = None;
    for e in args.n.range() {
        let row = measure(1 << e, args.k, args.seed, args.runs)?;
        let ratio = previous.map_or_else(|| "-".to_string(), |p| format!("{:.2}", row.scan_ms / p));
        let _ = writeln!(
            out,
            "{:>10} {:>10.3} {:>10.3} {:>12} {:>7}",
            row.n, row.build_ms, row.scan_ms, row.lce_queries, ratio
        );
        previous = Some(row.scan_ms);
        rows.push(json!({
            "n": row.n,
            "build_ms": micros(row.build_ms),
            "scan_ms": micros(row.scan_ms),
            "lce_queries": row.lce_queries,
        }));
    }
    let json = json!({ "seed": args.seed, "rows": rows });
    Ok(Report { code: 0, text: out, json })
}

/// Milliseconds rounded to whole microseconds.
fn micros(ms: f64) -> f64 {
    (ms * 1000.0).round() / 1000.0
}
