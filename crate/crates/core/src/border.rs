//! Detection of borders with exactly `k` errors.
//!
//! For every offset `i` the suffix starting at `i` is aligned with the prefix
//! of the same length and the alignment is walked with the kangaroo method:
//! one LCE query skips the whole run of matching letters, the mismatch is
//! charged, and the walk jumps over it. Each offset costs at most `k + 1`
//! queries, so a scan is `O(kn)` after the linear-time index build.

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::word::{letter_distance, Metric, Word, MAX_ALPHABET};

/// One border: the prefix and suffix of `length` letters are `distance` apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderEntry {
    pub length: usize,
    /// Positions `p < length` with `u[p] != u[n - length + p]`, increasing.
    pub mismatch_positions: Vec<usize>,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderReport {
    pub k: usize,
    pub metric: Metric,
    /// Decreasing border length.
    pub borders: Vec<BorderEntry>,
}

impl BorderReport {
    pub fn lengths(&self) -> Vec<usize> {
        self.borders.iter().map(|b| b.length).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.borders.is_empty()
    }
}

/// Observer for the LCE queries issued by a scan.
pub trait LceProbe {
    /// `offset` is the suffix start being aligned; the query compared the
    /// suffixes at `lhs` and `rhs` and returned `value`.
    fn record(&mut self, offset: usize, lhs: usize, rhs: usize, value: usize);
}

impl LceProbe for () {
    #[inline]
    fn record(&mut self, _: usize, _: usize, _: usize, _: usize) {}
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LceCall {
    pub offset: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub value: usize,
}

/// Records every query in order.
#[derive(Debug, Default, Clone)]
pub struct QueryLog {
    pub calls: Vec<LceCall>,
}

impl QueryLog {
    pub fn for_offset(&self, offset: usize) -> Vec<LceCall> {
        self.calls.iter().copied().filter(|c| c.offset == offset).collect()
    }
}

impl LceProbe for QueryLog {
    fn record(&mut self, offset: usize, lhs: usize, rhs: usize, value: usize) {
        self.calls.push(LceCall {
            offset,
            lhs,
            rhs,
            value,
        });
    }
}

/// Counts queries in total and the largest number issued for a single offset.
#[derive(Debug, Default, Clone)]
pub struct QueryCounter {
    pub total: u64,
    pub max_per_offset: usize,
    current_offset: usize,
    current: usize,
}

impl LceProbe for QueryCounter {
    #[inline]
    fn record(&mut self, offset: usize, _: usize, _: usize, _: usize) {
        if offset != self.current_offset {
            self.current_offset = offset;
            self.current = 0;
        }
        self.current += 1;
        self.total += 1;
        self.max_per_offset = self.max_per_offset.max(self.current);
    }
}

/// A kangaroo scanner bound to one index and one metric.
#[derive(Debug, Clone, Copy)]
pub struct Detector<'a> {
    index: &'a LceIndex,
    metric: Metric,
    d: usize,
}

impl<'a> Detector<'a> {
    pub fn hamming(index: &'a LceIndex) -> Self {
        Detector {
            index,
            metric: Metric::Hamming,
            d: index.word().alphabet().len(),
        }
    }

    pub fn lee(index: &'a LceIndex, d: usize) -> Result<Self> {
        if d == 0 || d > MAX_ALPHABET {
            return Err(Error::AlphabetSize(d));
        }
        index.word().check_codes(d)?;
        Ok(Detector {
            index,
            metric: Metric::Lee,
            d,
        })
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    /// The longest border at distance exactly `k`, if any.
    pub fn first<P: LceProbe>(&self, k: usize, probe: &mut P) -> Option<BorderEntry> {
        let n = self.index.len();
        let mut mismatches = Vec::with_capacity(k + 1);
        (1..n).find_map(|i| {
            self.align(i, k, &mut mismatches, probe).map(|distance| BorderEntry {
                length: n - i,
                mismatch_positions: mismatches.clone(),
                distance,
            })
        })
    }

    /// Every border at distance exactly `k`, longest first.
    pub fn all<P: LceProbe>(&self, k: usize, probe: &mut P) -> BorderReport {
        let n = self.index.len();
        let mut mismatches = Vec::with_capacity(k + 1);
        let borders = (1..n)
            .filter_map(|i| {
                self.align(i, k, &mut mismatches, probe).map(|distance| BorderEntry {
                    length: n - i,
                    mismatch_positions: mismatches.clone(),
                    distance,
                })
            })
            .collect();
        BorderReport {
            k,
            metric: self.metric,
            borders,
        }
    }

    /// Walks the alignment of suffix `i` against the prefix of length `n - i`.
    /// Returns the distance (always `k`) when it is exactly `k`.
    #[inline]
    fn align<P: LceProbe>(
        &self,
        i: usize,
        k: usize,
        mismatches: &mut Vec<usize>,
        probe: &mut P,
    ) -> Option<usize> {
        let codes = self.index.word().codes();
        let m = self.index.len() - i;
        let (mut l, mut dist) = (0usize, 0usize);
        mismatches.clear();
        while dist <= k {
            let ext = self.index.lce_unchecked(l, i + l);
            probe.record(i, l, i + l, ext);
            l += ext;
            if l == m {
                return (dist == k).then_some(dist);
            }
            if dist >= k {
                return None;
            }
            // a single Lee step may cost up to d/2 and overshoot k
            dist += letter_distance(self.metric, codes[l], codes[i + l], self.d);
            mismatches.push(l);
            l += 1;
        }
        None
    }
}

fn check_input(u: &Word, index: &LceIndex) -> Result<()> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if index.word().codes() != u.codes() {
        return Err(Error::IndexMismatch);
    }
    Ok(())
}

pub fn has_k_error_border(u: &Word, k: usize, index: &LceIndex) -> Result<bool> {
    Ok(first_k_error_border(u, k, index)?.is_some())
}

pub fn first_k_error_border(u: &Word, k: usize, index: &LceIndex) -> Result<Option<BorderEntry>> {
    check_input(u, index)?;
    Ok(Detector::hamming(index).first(k, &mut ()))
}

pub fn find_k_error_borders(u: &Word, k: usize, index: &LceIndex) -> Result<BorderReport> {
    check_input(u, index)?;
    Ok(Detector::hamming(index).all(k, &mut ()))
}

pub fn has_k_lee_error_border(u: &Word, k: usize, d: usize, index: &LceIndex) -> Result<bool> {
    Ok(first_k_lee_error_border(u, k, d, index)?.is_some())
}

pub fn first_k_lee_error_border(
    u: &Word,
    k: usize,
    d: usize,
    index: &LceIndex,
) -> Result<Option<BorderEntry>> {
    check_input(u, index)?;
    Ok(Detector::lee(index, d)?.first(k, &mut ()))
}

pub fn find_k_lee_error_borders(u: &Word, k: usize, d: usize, index: &LceIndex) -> Result<BorderReport> {
    check_input(u, index)?;
    Ok(Detector::lee(index, d)?.all(k, &mut ()))
}

/// Quadratic reference: compares every suffix with the prefix of equal length.
pub fn naive_border_scan(u: &Word, k: usize) -> Result<BorderReport> {
    naive_scan(u, k, Metric::Hamming, u.alphabet().len())
}

pub fn naive_lee_border_scan(u: &Word, k: usize, d: usize) -> Result<BorderReport> {
    if d == 0 || d > MAX_ALPHABET {
        return Err(Error::AlphabetSize(d));
    }
    u.check_codes(d)?;
    naive_scan(u, k, Metric::Lee, d)
}

fn naive_scan(u: &Word, k: usize, metric: Metric, d: usize) -> Result<BorderReport> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let codes = u.codes();
    let n = codes.len();
    let mut borders = Vec::new();
    for length in (1..n).rev() {
        let suffix = &codes[n - length..];
        let mut distance = 0;
        let mut mismatch_positions = Vec::new();
        for (p, (&a, &b)) in codes[..length].iter().zip(suffix).enumerate() {
            let cost = letter_distance(metric, a, b, d);
            if cost > 0 {
                distance += cost;
                mismatch_positions.push(p);
            }
        }
        if distance == k {
            borders.push(BorderEntry {
                length,
                mismatch_positions,
                distance,
            });
        }
    }
    Ok(BorderReport { k, metric, borders })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn word(text: &str, symbols: &str) -> Word {
        Word::parse(text, &Alphabet::new(symbols).unwrap()).unwrap()
    }

    fn hamming(text: &str, k: usize) -> BorderReport {
        let u = word(text, "01");
        let index = LceIndex::build(&u).unwrap();
        find_k_error_borders(&u, k, &index).unwrap()
    }

    fn lee(text: &str, k: usize) -> BorderReport {
        let u = word(text, "0123");
        let index = LceIndex::build(&u).unwrap();
        find_k_lee_error_borders(&u, k, 4, &index).unwrap()
    }

    #[test]
    fn hamming_examples() {
        let report = hamming("1010011", 2);
        assert_eq!(report.lengths(), vec![4, 3]);
        assert_eq!(report.borders[1].mismatch_positions, vec![0, 1]);
        assert_eq!(hamming("1111", 0).lengths(), vec![3, 2, 1]);
        assert!(hamming("01", 2).is_empty());
        assert_eq!(hamming("1100", 2).lengths(), vec![2]);
        assert!(hamming("1111", 2).is_empty());
    }

    #[test]
    fn first_hit_is_longest() {
        let u = word("1010011", "01");
        let index = LceIndex::build(&u).unwrap();
        let first = first_k_error_border(&u, 2, &index).unwrap().unwrap();
        assert_eq!(first.length, 4);
        assert!(has_k_error_border(&u, 2, &index).unwrap());
    }

    #[test]
    fn lee_examples() {
        let report = lee("0301", 2);
        assert_eq!(report.lengths(), vec![2]);
        assert_eq!(report.borders[0].mismatch_positions, vec![1]);
        assert_eq!(lee("0301", 1).lengths(), vec![1]);
        assert_eq!(lee("02", 2).lengths(), vec![1]);
        assert!(lee("0000", 2).is_empty());
        assert!(lee("3333", 1).is_empty());
    }

    #[test]
    fn naive_examples() {
        let u = word("1010011", "01");
        assert_eq!(naive_border_scan(&u, 2).unwrap().lengths(), vec![4, 3]);
        assert!(naive_border_scan(&word("11", "01"), 2).unwrap().is_empty());
        assert!(naive_border_scan(&word("0", "01"), 1).unwrap().is_empty());
        assert_eq!(naive_lee_border_scan(&word("0301", "0123"), 2, 4).unwrap().lengths(), vec![2]);
        let exact = naive_lee_border_scan(&word("010010", "0123"), 0, 4).unwrap();
        assert_eq!(exact.lengths(), vec![3, 1]);
    }

    #[test]
    fn errors() {
        let empty = word("", "01");
        assert_eq!(naive_border_scan(&empty, 1), Err(Error::EmptyWord));
        let u = word("0110", "01");
        let other = LceIndex::build(&word("0111", "01")).unwrap();
        assert_eq!(has_k_error_border(&u, 2, &other), Err(Error::IndexMismatch));
        let z4 = word("0301", "0123");
        let index = LceIndex::build(&z4).unwrap();
        assert_eq!(
            has_k_lee_error_border(&z4, 2, 3, &index),
            Err(Error::CodeOutOfRange { code: 3, size: 3 })
        );
    }

    #[test]
    fn query_budget_per_offset() {
        let u = word("10110100111010001011", "01");
        let index = LceIndex::build(&u).unwrap();
        for k in 0..5 {
            let mut counter = QueryCounter::default();
            Detector::hamming(&index).all(k, &mut counter);
            assert!(counter.max_per_offset <= k + 1);
            assert!(counter.total <= ((k + 1) * (u.len() - 1)) as u64);
        }
    }

    #[test]
    fn lee_overshoot_breaks_the_walk() {
        // "02": the only mismatch costs 2, overshooting k = 1
        let u = word("02", "0123");
        let index = LceIndex::build(&u).unwrap();
        let mut log = QueryLog::default();
        let report = Detector::lee(&index, 4).unwrap().all(1, &mut log);
        assert!(report.is_empty());
        assert_eq!(log.calls.len(), 1);
    }
}
