//! Resolution of `--alphabet`, `--d` and `--metric` into library values.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use isoword::{Alphabet, Metric, Word};

/// Largest `d` accepted with `--metric lee` outside of `check`.
pub const MAX_LEE_D: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Hamming,
    Lee,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Hamming => Metric::Hamming,
            MetricArg::Lee => Metric::Lee,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct AlphabetArgs {
    /// Symbols of the alphabet; the i-th symbol has code i. Defaults to the
    /// digits of Z_d when --d is given, otherwise to "01".
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Alphabet size d used by the Lee metric and the cube oracle.
    /// Defaults to the number of alphabet symbols.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_enum, default_value_t = MetricArg::Hamming)]
    pub metric: MetricArg,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

pub fn usage(msg: impl Into<String>) -> Box<dyn std::error::Error> {
    Box::new(UsageError(msg.into()))
}

impl AlphabetArgs {
    pub fn metric(&self) -> Metric {
        self.metric.into()
    }

    /// The alphabet and the size `d`.
    pub fn resolve(&self) -> CliResult<(Alphabet, usize)> {
        let alphabet = match (&self.alphabet, self.d) {
            (Some(symbols), _) => Alphabet::new(symbols)?,
            (None, Some(d)) => Alphabet::numeric(d)?,
            (None, None) => Alphabet::new("01")?,
        };
        let d = self.d.unwrap_or(alphabet.len());
        if d == 0 || d > isoword::word::MAX_ALPHABET {
            return Err(usage(format!("--d must be in 1..=256, got {d}")));
        }
        Ok((alphabet, d))
    }

    /// Parses `text` and checks that its codes fit in `Z_d`.
    pub fn word(&self, text: &str) -> CliResult<(Word, usize)> {
        let (alphabet, d) = self.resolve()?;
        let word = Word::parse(text, &alphabet)?;
        if word.is_empty() {
            return Err(usage("the word must not be empty"));
        }
        word.check_codes(d)?;
        Ok((word, d))
    }

    pub fn require_lee_d(&self, d: usize, max: usize) -> CliResult<()> {
        if self.metric == MetricArg::Lee && d > max {
            return Err(usage(format!("--metric lee supports d <= {max} here, got {d}")));
        }
        Ok(())
    }
}

/// Inclusive range written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn range(self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { start, end })
    }
}
