//! Timing of index construction and border scans on seeded random words.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::border::{Detector, QueryCounter};
use crate::error::Result;
use crate::lce::LceIndex;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub build_ms: f64,
    pub scan_ms: f64,
    /// LCE queries issued by one scan.
    pub lce_queries: u64,
    /// Largest number of queries spent on a single offset.
    pub max_queries_per_offset: usize,
}

/// Uniform random word over `Z_d`. The stream for a given `(seed, n, d)` is
/// ChaCha8 seeded with `seed`, one `gen_range(0..d)` per letter.
pub fn random_word(n: usize, d: usize, seed: u64) -> Result<Word> {
    let alphabet = Alphabet::numeric(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let codes = (0..n).map(|_| rng.gen_range(0..d) as u8).collect();
    Word::from_codes(codes, &alphabet)
}

/// Builds the index for a random binary word of length `n` and runs the
/// first-hit Hamming scan for `k`, `runs` times; timings are medians.
pub fn measure(n: usize, k: usize, seed: u64, runs: usize) -> Result<BenchRow> {
    let word = random_word(n, 2, seed)?;
    let mut builds = Vec::with_capacity(runs);
    let mut scans = Vec::with_capacity(runs);
    let mut index = None;
    for _ in 0..runs.max(1) {
        let start = Instant::now();
        let built = LceIndex::build(&word)?;
        builds.push(start.elapsed().as_secs_f64() * 1e3);
        let start = Instant::now();
        std::hint::black_box(Detector::hamming(&built).first(k, &mut ()));
        scans.push(start.elapsed().as_secs_f64() * 1e3);
        index = Some(built);
    }
    let index = index.expect("at least one run");
    let mut counter = QueryCounter::default();
    Detector::hamming(&index).first(k, &mut counter);
    Ok(BenchRow {
        n,
        build_ms: median(&mut builds),
        scan_ms: median(&mut scans),
        lce_queries: counter.total,
        max_queries_per_offset: counter.max_per_offset,
    })
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}
