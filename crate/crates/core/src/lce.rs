//! Longest-common-extension queries between two suffixes of one word.
//!
//! The index is the usual enhanced suffix array: a suffix array built by
//! induced sorting (SA-IS), its inverse, Kasai's LCP array and a sparse table
//! for range minima. The sparse table takes `O(n log n)` words of memory; a
//! succinct RMQ would bring that down to `O(n)` but is not implemented.

use crate::error::{Error, Result};
use crate::word::Word;

/// Characters compared directly before falling back to the range-minimum
/// lookup. Short extensions dominate on most inputs and the direct compare
/// touches only memory next to the query positions.
const DIRECT_SCAN: usize = 8;

#[derive(Debug, Clone)]
pub struct LceIndex {
    word: Word,
    suffix_array: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
    rmq: SparseTable,
}

impl LceIndex {
    pub fn build(word: &Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let codes: Vec<usize> = word.codes().iter().map(|&c| c as usize).collect();
        let upper = codes.iter().copied().max().unwrap_or(0);
        let suffix_array: Vec<u32> = sa_is(&codes, upper).into_iter().map(|p| p as u32).collect();
        let mut rank = vec![0u32; codes.len()];
        for (t, &p) in suffix_array.iter().enumerate() {
            rank[p as usize] = t as u32;
        }
        let lcp = kasai(word.codes(), &suffix_array, &rank);
        let rmq = SparseTable::new(&lcp);
        Ok(LceIndex {
            word: word.clone(),
            suffix_array,
            rank,
            lcp,
            rmq,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.suffix_array.len()
    }

    pub fn is_empty(&self) -> bool {
        self.suffix_array.is_empty()
    }

    pub fn suffix_array(&self) -> &[u32] {
        &self.suffix_array
    }

    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Minimum of `lcp[lo..=hi]`.
    pub fn rmq(&self, lo: usize, hi: usize) -> Option<u32> {
        (lo <= hi && hi < self.lcp.len()).then(|| self.rmq.min(lo, hi))
    }

    /// Length of the longest common prefix of the suffixes starting at `i`
    /// and `j`. Position `n` denotes the empty suffix.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        let len = self.len();
        for position in [i, j] {
            if position > len {
                return Err(Error::PositionOutOfRange { position, len });
            }
        }
        Ok(self.lce_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn lce_unchecked(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if i == j {
            return n - i;
        }
        let room = n - i.max(j);
        let codes = self.word.codes();
        let limit = room.min(DIRECT_SCAN);
        let mut l = 0;
        while l < limit && codes[i + l] == codes[j + l] {
            l += 1;
        }
        if l < DIRECT_SCAN {
            return l;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo, hi - 1) as usize
    }
}

#[derive(Debug, Clone)]
struct SparseTable {
    // levels[j][i] = min(values[i..i + 2^j])
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    fn new(values: &[u32]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=values.len() - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    #[inline]
    fn min(&self, lo: usize, hi: usize) -> u32 {
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }
}

/// Kasai et al.: `lcp[t]` is the common prefix length of the suffixes at ranks
/// `t` and `t + 1`.
fn kasai(s: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n.saturating_sub(1)];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r + 1 == n {
            h = 0;
            continue;
        }
        let j = sa[r + 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

const NONE: usize = usize::MAX;

/// Suffix array by induced sorting (Nong, Zhang and Chan). Symbols are in
/// `0..=upper`; no sentinel is required and none appears in the output.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return vec![],
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // ls[i]: suffix i is S-type (smaller than suffix i + 1)
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] { ls[i + 1] } else { s[i] < s[i + 1] };
    }
    let mut sum_l = vec![0usize; upper + 1];
    let mut sum_s = vec![0usize; upper + 1];
    for i in 0..n {
        if ls[i] {
            sum_l[s[i] + 1] += 1;
        } else {
            sum_s[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let mut sa = vec![NONE; n];
    let induce = |sa: &mut [usize], lms: &[usize]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &p in lms {
            sa[buf[s[p]]] = p;
            buf[s[p]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for t in 0..n {
            let v = sa[t];
            if v != NONE && v >= 1 && !ls[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for t in (0..n).rev() {
            let v = sa[t];
            if v != NONE && v >= 1 && ls[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();

    induce(&mut sa, &lms);

    if m > 0 {
        let mut sorted_lms: Vec<usize> = sa.iter().copied().filter(|&v| lms_map[v] != NONE).collect();
        let mut rec_s = vec![0usize; m];
        let mut rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for t in 1..m {
            let (mut l, mut r) = (sorted_lms[t - 1], sorted_lms[t]);
            let end_l = if lms_map[l] + 1 < m { lms[lms_map[l] + 1] } else { n };
            let end_r = if lms_map[r] + 1 < m { lms[lms_map[r] + 1] } else { n };
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l && s[l] == s[r] {
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[t]]] = rec_upper;
        }
        let rec_sa = sa_is(&rec_s, rec_upper);
        for (slot, &r) in sorted_lms.iter_mut().zip(&rec_sa) {
            *slot = lms[r];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}
