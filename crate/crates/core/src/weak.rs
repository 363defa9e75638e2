//! The weak order on permutations.
//!
//! An Ungar move picks a set of descents and reverses each maximal block of
//! consecutive chosen descents. The full solver labels all of `S_n` in a
//! flat table indexed by lexicographic rank, one inversion level at a time:
//! every nontrivial move strictly lowers the inversion number, so a level
//! only reads finished levels and can be labelled in parallel.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::lattice::{FiniteLattice, WinLabel};
use crate::par::Exec;

pub const MAX_SOLVE_N: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("position {0} is not a descent")]
    NotADescent(usize),
    #[error("pattern of length {pattern} is longer than the word of length {word}")]
    PatternLongerThanWord { pattern: usize, word: usize },
    #[error("n = {n} exceeds the limit {limit}")]
    SizeLimit { n: usize, limit: usize },
}

/// One-line notation with values `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || v > 255 || seen[v] {
                return Err(PermError::NotAPermutation(values));
            }
            seen[v] = true;
        }
        Ok(Permutation(values.iter().map(|&v| v as u8).collect()))
    }

    pub(crate) fn from_bytes(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.iter().map(|&v| v as usize).collect()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// The longest element `n ... 2 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    /// Comma-separated values, or a bare digit string when every value is
    /// a single digit.
    pub fn parse(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().ok()).collect()
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let values = values.ok_or_else(|| PermError::Parse(s.to_string()))?;
        Self::new(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.0
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// Digits run together, for `n <= 9`.
    pub fn compact(&self) -> String {
        self.0.iter().map(|v| v.to_string()).collect()
    }

    /// 1-indexed positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.0)
    }

    /// Lexicographic rank among permutations of the same length.
    pub fn rank(&self) -> usize {
        rank(&self.0)
    }

    pub fn unrank(n: usize, r: usize) -> Self {
        let mut buf = vec![0u8; n];
        unrank_into(r, &mut buf);
        Permutation(buf)
    }

    pub fn standardize(values: &[usize]) -> Self {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by_key(|&i| values[i]);
        let mut out = vec![0u8; values.len()];
        for (r, &i) in idx.iter().enumerate() {
            out[i] = (r + 1) as u8;
        }
        Permutation(out)
    }

    pub fn is_312_avoiding(&self) -> bool {
        let w = &self.0;
        let n = w.len();
        // For each middle-low position j, look for i < j with w(i) > w(k) > w(j), k > j.
        for j in 1..n {
            let max_before = w[..j].iter().copied().max().unwrap_or(0);
            if w[j + 1..].iter().any(|&v| v > w[j] && v < max_before) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, PermError> {
        Permutation::parse(s)
    }
}

fn inversions(w: &[u8]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn rank(w: &[u8]) -> usize {
    let n = w.len();
    let mut r = 0;
    for i in 0..n {
        let smaller_after = w[i + 1..].iter().filter(|&&v| v < w[i]).count();
        r = r * (n - i) + smaller_after;
    }
    r
}

fn unrank_into(mut r: usize, out: &mut [u8]) {
    let n = out.len();
    assert!(n <= 20, "unranking supports n <= 20");
    let mut digits = [0usize; 20];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut avail = [0u8; 20];
    for (k, a) in avail.iter_mut().enumerate().take(n) {
        *a = k as u8 + 1;
    }
    let mut left = n;
    for i in 0..n {
        let d = digits[i];
        out[i] = avail[d];
        avail.copy_within(d + 1..left, d);
        left -= 1;
    }
}

/// Applies the move for a descent mask (bit `i` is the descent between
/// 0-indexed positions `i` and `i + 1`).
fn apply_mask(w: &[u8], mask: u32, out: &mut [u8]) {
    out.copy_from_slice(w);
    let n = w.len();
    let mut i = 0;
    while i + 1 < n {
        if mask >> i & 1 == 1 {
            let mut j = i;
            while j + 1 < n && mask >> j & 1 == 1 {
                j += 1;
            }
            out[i..=j].reverse();
            i = j;
        } else {
            i += 1;
        }
    }
}

fn descent_mask(w: &[u8]) -> u32 {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .fold(0, |m, i| m | 1 << i)
}

fn nonzero_submasks(m: u32) -> impl Iterator<Item = u32> {
    let mut cur = m;
    std::iter::from_fn(move || {
        if cur == 0 {
            return None;
        }
        let out = cur;
        cur = (cur - 1) & m;
        Some(out)
    })
}

/// The Ungar move that reverses the maximal blocks of the chosen descents
/// (1-indexed positions).
pub fn ungar_move_perm(w: &Permutation, descents: &[usize]) -> Result<Permutation, PermError> {
    let des = descent_mask(&w.0);
    let mut mask = 0u32;
    for &d in descents {
        if d == 0 || d >= w.len() || des >> (d - 1) & 1 == 0 {
            return Err(PermError::NotADescent(d));
        }
        mask |= 1 << (d - 1);
    }
    let mut out = vec![0u8; w.len()];
    apply_mask(&w.0, mask, &mut out);
    Ok(Permutation(out))
}

/// Nontrivial Ungar images of `w`, ascending.
pub fn weak_moves(w: &Permutation) -> Vec<Permutation> {
    let mut buf = vec![0u8; w.len()];
    let mut out: Vec<Permutation> = nonzero_submasks(descent_mask(&w.0))
        .map(|m| {
            apply_mask(&w.0, m, &mut buf);
            Permutation(buf.clone())
        })
        .collect();
    out.sort();
    out
}

/// Labels of all of `S_n`, indexed by lexicographic rank.
#[derive(Clone, Debug)]
pub struct SnTable {
    n: usize,
    eeta: Vec<bool>,
}

impl SnTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, w: &Permutation) -> WinLabel {
        assert_eq!(w.len(), self.n);
        WinLabel::from_eeta(self.eeta[w.rank()])
    }

    pub fn label_by_rank(&self, r: usize) -> WinLabel {
        WinLabel::from_eeta(self.eeta[r])
    }

    pub fn count_eeta(&self) -> usize {
        self.eeta.iter().filter(|&&e| e).count()
    }

    pub fn eeta_ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.eeta.iter().enumerate().filter(|(_, &e)| e).map(|(r, _)| r)
    }
}

pub fn solve_sn(n: usize, exec: Exec) -> Result<SnTable, PermError> {
    solve_sn_with_limit(n, MAX_SOLVE_N, exec)
}

pub fn solve_sn_with_limit(n: usize, limit: usize, exec: Exec) -> Result<SnTable, PermError> {
    if n > limit || n > 12 {
        return Err(PermError::SizeLimit { n, limit });
    }
    let total = factorial(n);
    let max_inv = n * n.saturating_sub(1) / 2;
    let inv: Vec<u8> = exec.map_range(0..total, |r| {
        let mut buf = [0u8; 12];
        unrank_into(r, &mut buf[..n]);
        inversions(&buf[..n]) as u8
    });
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); max_inv + 1];
    for (r, &k) in inv.iter().enumerate() {
        levels[k as usize].push(r as u32);
    }
    drop(inv);
    let mut eeta = vec![false; total];
    for level in &levels {
        let table = &eeta;
        let labels = exec.map(level, |&r| {
            let mut w = [0u8; 12];
            let mut y = [0u8; 12];
            unrank_into(r as usize, &mut w[..n]);
            let des = descent_mask(&w[..n]);
            !nonzero_submasks(des).any(|m| {
                apply_mask(&w[..n], m, &mut y[..n]);
                table[rank(&y[..n])]
            })
        });
        for (&r, e) in level.iter().zip(labels) {
            eeta[r as usize] = e;
        }
    }
    Ok(SnTable { n, eeta })
}

pub fn count_eeta_sn(n: usize, exec: Exec) -> Result<usize, PermError> {
    Ok(solve_sn(n, exec)?.count_eeta())
}

/// Memoized labels for individual permutations of any length.
#[derive(Default)]
pub struct WeakLabeler {
    memo: HashMap<Vec<u8>, bool>,
}

impl WeakLabeler {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn label(&mut self, w: &Permutation) -> WinLabel {
        WinLabel::from_eeta(self.eeta(&w.0))
    }

    fn eeta(&mut self, w: &[u8]) -> bool {
        if let Some(&e) = self.memo.get(w) {
            return e;
        }
        let mut buf = vec![0u8; w.len()];
        let mut e = true;
        for m in nonzero_submasks(descent_mask(w)) {
            apply_mask(w, m, &mut buf);
            if self.eeta(&buf) {
                e = false;
                break;
            }
        }
        self.memo.insert(w.to_vec(), e);
        e
    }
}

/// Whether some window of `w` standardizes to `v`.
pub fn consecutively_contains(w: &Permutation, v: &Permutation) -> Result<bool, PermError> {
    let k = v.len();
    if k > w.len() {
        return Err(PermError::PatternLongerThanWord {
            pattern: k,
            word: w.len(),
        });
    }
    Ok((0..=w.len() - k).any(|i| {
        let window: Vec<usize> = w.0[i..i + k].iter().map(|&x| x as usize).collect();
        Permutation::standardize(&window) == *v
    }))
}

/// The pattern `1 (m-1) (m-2) ... 2 m`.
pub fn b_pattern(m: usize) -> Permutation {
    let mut v = vec![1];
    v.extend((2..m).rev());
    v.push(m);
    Permutation::new(v).expect("valid pattern")
}

#[derive(Clone, Debug, Default)]
pub struct BLemmaReport {
    pub n: usize,
    pub eeta: usize,
    pub avoiders_1324: usize,
    /// Eeta wins containing some `1 (m-1) ... 2 m` pattern.
    pub violations: Vec<Permutation>,
}

impl BLemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.eeta <= self.avoiders_1324
    }
}

/// Checks that every Eeta win of `S_n` consecutively avoids every
/// `1 (m-1) ... 2 m` with `4 <= m <= n`.
pub fn b_lemma_check(table: &SnTable, exec: Exec) -> BLemmaReport {
    let n = table.n();
    let patterns: Vec<Permutation> = (4..=n).map(b_pattern).collect();
    let p1324 = b_pattern(4);
    let total = factorial(n);
    let rows = exec.map_range(0..total, |r| {
        let w = Permutation::unrank(n, r);
        let avoid = n < 4 || !consecutively_contains(&w, &p1324).unwrap();
        let eeta = table.label_by_rank(r).is_eeta();
        let bad = eeta && patterns.iter().any(|p| consecutively_contains(&w, p).unwrap());
        (avoid, eeta, bad.then_some(w))
    });
    let mut rep = BLemmaReport {
        n,
        ..Default::default()
    };
    for (avoid, eeta, bad) in rows {
        rep.avoiders_1324 += avoid as usize;
        rep.eeta += eeta as usize;
        rep.violations.extend(bad);
    }
    rep
}

/// Projection onto 312-avoiders by allowable swaps, leftmost first.
pub fn pi_down(w: &Permutation) -> Permutation {
    let mut v = w.0.clone();
    while let Some(i) = allowable_swaps(&v).first().copied() {
        v.swap(i, i + 1);
    }
    Permutation(v)
}

/// Projection using allowable swaps chosen at random.
pub fn pi_down_random<R: Rng>(w: &Permutation, rng: &mut R) -> Permutation {
    let mut v = w.0.clone();
    loop {
        let s = allowable_swaps(&v);
        if s.is_empty() {
            return Permutation(v);
        }
        let i = s[rng.random_range(0..s.len())];
        v.swap(i, i + 1);
    }
}

/// 0-indexed `i` such that some `j > i + 1` has `w(i+1) < w(j) < w(i)`.
fn allowable_swaps(w: &[u8]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i + 2..].iter().any(|&x| w[i + 1] < x && x < w[i]))
        .collect()
}

/// The weak order on `S_n` as an explicit lattice; element `r` is the
/// permutation of rank `r`.
pub fn weak_order_lattice(n: usize) -> Result<FiniteLattice, crate::LatticeError> {
    let total = factorial(n);
    let mut covers = Vec::new();
    let mut labels = Vec::with_capacity(total);
    for r in 0..total {
        let w = Permutation::unrank(n, r);
        labels.push(w.to_string());
        for i in 0..n.saturating_sub(1) {
            if w.0[i] < w.0[i + 1] {
                let mut up = w.0.clone();
                up.swap(i, i + 1);
                covers.push((r, rank(&up)));
            }
        }
    }
    FiniteLattice::with_limit(total, &covers, Some(labels), usize::MAX)
}
