//! Brute-force ground truth over `d`-ary `n`-cubes.
//!
//! Vertices are all words of length `n` over `Z_d`, identified with their
//! rank in lexicographic order (position 0 is the most significant digit).
//! Two edge sets are available:
//!
//! * [`Metric::Lee`]: words differing by `±1 mod d` at one position, the
//!   `d`-ary `n`-cube proper. Graph distance is the Lee distance.
//! * [`Metric::Hamming`]: words differing at one position by any
//!   substitution. Graph distance is the Hamming distance.
//!
//! The subgraph induced by the `f`-free words is isometric iff for every pair
//! `u != v` of `f`-free words, `u` has an `f`-free neighbour one step closer
//! to `v` (first step of a shortest path one way, induction on the host
//! distance the other). [`CubeOracle::check_isometric_embedding`] decides that
//! local condition directly; [`CubeOracle::check_isometric_embedding_bfs`]
//! compares all-pairs BFS distances with the host metric and serves as the
//! independent second route.

use std::collections::{HashSet, VecDeque};
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::word::{letter_distance, Alphabet, Metric, Word, MAX_ALPHABET};

pub const DEFAULT_BUDGET: u64 = 1 << 22;

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeWitness {
    pub u: Word,
    pub v: Word,
    pub host_distance: usize,
    /// `None` when `v` is unreachable from `u` inside the subgraph.
    pub subgraph_distance: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeCheckResult {
    pub isometric: bool,
    pub n: usize,
    pub d: usize,
    pub metric: Metric,
    pub witness: Option<CubeWitness>,
}

/// Enumeration and embedding checks bounded by a vertex budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeOracle {
    budget: u64,
}

impl Default for CubeOracle {
    fn default() -> Self {
        CubeOracle {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl CubeOracle {
    pub fn with_budget(budget: u64) -> Self {
        CubeOracle { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// All `f`-free words of length `n` over `Z_d`, in lexicographic order.
    pub fn enumerate_f_free(&self, f: &Word, n: usize, d: usize) -> Result<Vec<Word>> {
        let space = Space::new(f, n, d, self.budget)?;
        Ok((0..space.total)
            .filter(|&x| space.free[x])
            .map(|x| space.word(x))
            .collect())
    }

    /// Decides whether the `f`-free subgraph is isometric in the host cube.
    ///
    /// The witness, if any, is the lexicographically least pair `(u, v)` for
    /// which every neighbour of `u` one step closer to `v` contains `f`.
    /// Its subgraph distance comes from a BFS started at `u`.
    pub fn check_isometric_embedding(
        &self,
        f: &Word,
        n: usize,
        d: usize,
        metric: Metric,
    ) -> Result<CubeCheckResult> {
        let space = Space::new(f, n, d, self.budget)?;
        let witness = space.first_local_failure(metric).map(|(u, v)| {
            let mut dist = vec![UNSEEN; space.total];
            space.bfs(u, metric, &mut dist);
            space.witness(u, v, metric, &dist)
        });
        Ok(space.result(metric, witness))
    }

    /// Same decision by BFS from every `f`-free vertex. The witness is the
    /// lexicographically least pair whose subgraph distance exceeds the host
    /// distance. Quadratic in the vertex count.
    pub fn check_isometric_embedding_bfs(
        &self,
        f: &Word,
        n: usize,
        d: usize,
        metric: Metric,
    ) -> Result<CubeCheckResult> {
        let space = Space::new(f, n, d, self.budget)?;
        let mut dist = vec![UNSEEN; space.total];
        let mut witness = None;
        for u in (0..space.total).filter(|&x| space.free[x]) {
            space.bfs(u, metric, &mut dist);
            let bad = (0..space.total).find(|&v| {
                space.free[v]
                    && (dist[v] == UNSEEN || dist[v] as usize != space.host_distance(u, v, metric))
            });
            if let Some(v) = bad {
                witness = Some(space.witness(u, v, metric, &dist));
                break;
            }
        }
        Ok(space.result(metric, witness))
    }

    /// Runs [`check_isometric_embedding`](Self::check_isometric_embedding)
    /// for every `n` in `ns`.
    pub fn sweep(
        &self,
        f: &Word,
        d: usize,
        metric: Metric,
        ns: RangeInclusive<usize>,
    ) -> Result<Vec<CubeCheckResult>> {
        ns.map(|n| self.check_isometric_embedding(f, n, d, metric))
            .collect()
    }
}

pub fn enumerate_f_free(f: &Word, n: usize, d: usize) -> Result<Vec<Word>> {
    CubeOracle::default().enumerate_f_free(f, n, d)
}

pub fn check_isometric_embedding(f: &Word, n: usize, d: usize, metric: Metric) -> Result<CubeCheckResult> {
    CubeOracle::default().check_isometric_embedding(f, n, d, metric)
}

pub fn contains_factor(word: &[u8], f: &[u8]) -> bool {
    !f.is_empty() && word.len() >= f.len() && word.windows(f.len()).any(|w| w == f)
}

/// Whether `u` can be turned into `v` along a shortest host path whose words
/// all avoid `f`.
///
/// Hamming: each step rewrites one mismatched position to `v`'s letter; the
/// search runs over subsets of already-rewritten positions. Lee: each step
/// moves one position by `±1 mod d` towards `v`.
pub fn f_free_transformation_exists(u: &Word, v: &Word, f: &Word, metric: Metric, d: usize) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    if d == 0 || d > MAX_ALPHABET {
        return Err(Error::AlphabetSize(d));
    }
    u.check_codes(d)?;
    v.check_codes(d)?;
    for w in [u, v] {
        if contains_factor(w.codes(), f.codes()) {
            return Err(Error::NotFFree(w.to_string()));
        }
    }
    let (u, v, f) = (u.codes(), v.codes(), f.codes());
    match metric {
        Metric::Hamming => hamming_transformation(u, v, f),
        Metric::Lee => Ok(lee_transformation(u, v, f, d)),
    }
}

fn hamming_transformation(u: &[u8], v: &[u8], f: &[u8]) -> Result<bool> {
    let diff: Vec<usize> = (0..u.len()).filter(|&p| u[p] != v[p]).collect();
    let states = 1u128 << diff.len().min(127);
    if diff.len() >= 64 || states > DEFAULT_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            vertices: states,
            budget: DEFAULT_BUDGET,
        });
    }
    let full = (1usize << diff.len()) - 1;
    let mut reached = vec![false; full + 1];
    reached[0] = true;
    let mut word = u.to_vec();
    // masks in increasing order visit every predecessor before its successors
    for mask in 0..=full {
        if !reached[mask] {
            continue;
        }
        for bit in 0..diff.len() {
            let next = mask | (1 << bit);
            if next == mask || reached[next] {
                continue;
            }
            for (b, &q) in diff.iter().enumerate() {
                word[q] = if next & (1 << b) != 0 { v[q] } else { u[q] };
            }
            reached[next] = !contains_factor(&word, f);
        }
    }
    Ok(reached[full])
}

fn lee_transformation(u: &[u8], v: &[u8], f: &[u8], d: usize) -> bool {
    let lee = |a: &[u8], b: &[u8]| -> usize {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| letter_distance(Metric::Lee, x, y, d))
            .sum()
    };
    let mut seen = HashSet::new();
    let mut stack = vec![u.to_vec()];
    seen.insert(u.to_vec());
    while let Some(w) = stack.pop() {
        if w == v {
            return true;
        }
        let here = lee(&w, v);
        for p in 0..w.len() {
            for step in [1, d - 1] {
                let mut next = w.clone();
                next[p] = ((w[p] as usize + step) % d) as u8;
                if next == w || lee(&next, v) + 1 != here || contains_factor(&next, f) {
                    continue;
                }
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    false
}

/// The full host cube with an `f`-free mask.
struct Space {
    n: usize,
    d: usize,
    total: usize,
    /// `digits[x * n + p]` is letter `p` of vertex `x`.
    digits: Vec<u8>,
    free: Vec<bool>,
    /// Weight of position `p` in the vertex rank.
    weight: Vec<usize>,
    alphabet: Alphabet,
}

impl Space {
    fn new(f: &Word, n: usize, d: usize, budget: u64) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyWord);
        }
        if d == 0 || d > MAX_ALPHABET {
            return Err(Error::AlphabetSize(d));
        }
        f.check_codes(d)?;
        let vertices = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if vertices > budget as u128 {
            return Err(Error::BudgetExceeded { vertices, budget });
        }
        let total = vertices as usize;
        let mut weight = vec![1usize; n];
        for p in (0..n.saturating_sub(1)).rev() {
            weight[p] = weight[p + 1] * d;
        }
        let mut digits = vec![0u8; total * n];
        for x in 0..total {
            let mut rest = x;
            for p in (0..n).rev() {
                digits[x * n + p] = (rest % d) as u8;
                rest /= d;
            }
        }
        let free = (0..total)
            .map(|x| !contains_factor(&digits[x * n..(x + 1) * n], f.codes()))
            .collect();
        let alphabet = if f.alphabet().len() == d {
            f.alphabet().clone()
        } else {
            Alphabet::numeric(d)?
        };
        Ok(Space {
            n,
            d,
            total,
            digits,
            free,
            weight,
            alphabet,
        })
    }

    fn letters(&self, x: usize) -> &[u8] {
        &self.digits[x * self.n..(x + 1) * self.n]
    }

    fn word(&self, x: usize) -> Word {
        Word::from_codes(self.letters(x).to_vec(), &self.alphabet).expect("codes below d")
    }

    /// Vertex obtained from `x` by writing `letter` at position `p`.
    #[inline]
    fn relabel(&self, x: usize, p: usize, letter: u8) -> usize {
        let old = self.digits[x * self.n + p] as usize;
        x + letter as usize * self.weight[p] - old * self.weight[p]
    }

    /// Letters reachable in one edge from `a`.
    fn steps(&self, a: u8, metric: Metric) -> Vec<u8> {
        let d = self.d;
        match metric {
            Metric::Hamming => (0..d as u8).filter(|&b| b != a).collect(),
            Metric::Lee => {
                let mut out = Vec::with_capacity(2);
                for step in [1, d - 1] {
                    let b = ((a as usize + step) % d) as u8;
                    if b != a && !out.contains(&b) {
                        out.push(b);
                    }
                }
                out
            }
        }
    }

    fn host_distance(&self, x: usize, y: usize, metric: Metric) -> usize {
        self.letters(x)
            .iter()
            .zip(self.letters(y))
            .map(|(&a, &b)| letter_distance(metric, a, b, self.d))
            .sum()
    }

    fn bfs(&self, source: usize, metric: Metric, dist: &mut [u32]) {
        dist.fill(UNSEEN);
        let steps: Vec<Vec<u8>> = (0..self.d as u8).map(|a| self.steps(a, metric)).collect();
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for p in 0..self.n {
                let a = self.digits[x * self.n + p];
                for &b in &steps[a as usize] {
                    let y = self.relabel(x, p, b);
                    if self.free[y] && dist[y] == UNSEEN {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
    }

    /// Lexicographically least `(u, v)` such that no `f`-free neighbour of
    /// `u` is closer to `v`.
    fn first_local_failure(&self, metric: Metric) -> Option<(usize, usize)> {
        let (n, d) = (self.n, self.d);
        let steps: Vec<Vec<u8>> = (0..d as u8).map(|a| self.steps(a, metric)).collect();
        // blocked[p * d + b]: writing b at p leaves the f-free set
        let mut blocked = vec![false; n * d];
        let mut options: Vec<Vec<u8>> = vec![Vec::new(); n];
        for u in (0..self.total).filter(|&x| self.free[x]) {
            let letters = self.letters(u);
            let mut any_blocked = false;
            for p in 0..n {
                for &b in &steps[letters[p] as usize] {
                    let hit = !self.free[self.relabel(u, p, b)];
                    blocked[p * d + b as usize] = hit;
                    any_blocked |= hit;
                }
            }
            if !any_blocked {
                continue;
            }
            // letters v[p] for which every step at p towards v[p] is blocked
            for p in 0..n {
                let a = letters[p];
                options[p].clear();
                for t in 0..d as u8 {
                    let closer = |b: &u8| {
                        letter_distance(metric, *b, t, d) < letter_distance(metric, a, t, d)
                    };
                    if t == a
                        || steps[a as usize]
                            .iter()
                            .filter(|b| closer(b))
                            .all(|&b| blocked[p * d + b as usize])
                    {
                        options[p].push(t);
                    }
                }
            }
            if let Some(v) = self.first_free_in_product(u, &options) {
                return Some((u, v));
            }
        }
        None
    }

    /// Least free vertex other than `u` whose letter at each `p` is in `options[p]`.
    fn first_free_in_product(&self, u: usize, options: &[Vec<u8>]) -> Option<usize> {
        let n = self.n;
        let mut choice = vec![0usize; n];
        loop {
            let v = (0..n).fold(0usize, |acc, p| acc * self.d + options[p][choice[p]] as usize);
            if v != u && self.free[v] {
                return Some(v);
            }
            // odometer, last position fastest, keeps lexicographic order
            let mut p = n;
            loop {
                if p == 0 {
                    return None;
                }
                p -= 1;
                choice[p] += 1;
                if choice[p] < options[p].len() {
                    break;
                }
                choice[p] = 0;
            }
        }
    }

    fn witness(&self, u: usize, v: usize, metric: Metric, dist: &[u32]) -> CubeWitness {
        CubeWitness {
            u: self.word(u),
            v: self.word(v),
            host_distance: self.host_distance(u, v, metric),
            subgraph_distance: (dist[v] != UNSEEN).then_some(dist[v] as usize),
        }
    }

    fn result(&self, metric: Metric, witness: Option<CubeWitness>) -> CubeCheckResult {
        CubeCheckResult {
            isometric: witness.is_none(),
            n: self.n,
            d: self.d,
            metric,
            witness,
        }
    }
}
