//! Partitions, boundary paths and the Eeta predicate on Young's lattice.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::Rng;
use thiserror::Error;

use crate::ideal::{FinitePoset, IdealGame, PosetError};
use crate::lattice::WinLabel;
use crate::par::Exec;
use crate::series::{BivariateSeries, SeriesError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YoungError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("path is not the boundary of a partition: {0}")]
    MalformedPath(String),
    #[error("interval [{mu}, {lam}] is outside the characterized family")]
    OutOfTheoremScope { lam: String, mu: String },
    #[error("{mu} is not contained in {lam}")]
    NotContained { lam: String, mu: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts before validating.
    pub fn from_parts_lenient(mut parts: Vec<usize>) -> Result<Self, YoungError> {
        parts.retain(|&p| p > 0);
        Self::new(parts)
    }

    /// Comma-separated parts such as `5,4,2,2`; the empty string is `∅`.
    pub fn parse(s: &str) -> Result<Self, YoungError> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| YoungError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn staircase(n: usize) -> Self {
        Partition((1..=n).rev().collect())
    }

    /// `a` rows of length `b`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if b == 0 {
            Partition::empty()
        } else {
            Partition(vec![b; a])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i` (1-indexed); zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn transpose(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Removable boxes `(row, col)`, top row first.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| (i, self.row(i)))
            .collect()
    }

    /// Rows where a box can be added, top row first.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&i| self.row(i) < self.row(i - 1))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Self {
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition::new(parts).expect("added box at an addable row")
    }

    /// Removes the given boxes; `None` unless each is a corner.
    pub fn without_corners(&self, boxes: &[(usize, usize)]) -> Option<Self> {
        let corners = self.corners();
        let mut parts = self.0.clone();
        for b in boxes {
            if !corners.contains(b) {
                return None;
            }
            parts[b.0 - 1] -= 1;
        }
        Partition::from_parts_lenient(parts).ok()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = YoungError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, in
/// lexicographic order of parts.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of size at most `total`.
pub fn partitions_up_to(total: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        for p in 1..=max.min(left) {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    N,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LatticePath(pub Vec<Step>);

impl LatticePath {
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                'E' => Some(Step::E),
                'N' => Some(Step::N),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(LatticePath)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Maximal runs of equal steps, as `(step, length)`.
    pub fn blocks(&self) -> Vec<(Step, usize)> {
        let mut out: Vec<(Step, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((t, k)) if *t == s => *k += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    pub fn concat(&self, other: &LatticePath) -> LatticePath {
        LatticePath(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::E => "E",
                Step::N => "N",
            })?;
        }
        Ok(())
    }
}

/// Southeast boundary of `lam`, read from the bottom row upwards.
pub fn path_of(lam: &Partition) -> LatticePath {
    let mut steps = Vec::new();
    for i in (1..=lam.len()).rev() {
        let run = lam.row(i) - lam.row(i + 1);
        steps.extend(std::iter::repeat_n(Step::E, run));
        steps.push(Step::N);
    }
    LatticePath(steps)
}

/// Inverse of [`path_of`].
pub fn partition_of_path(p: &LatticePath) -> Result<Partition, YoungError> {
    maximal_lpaths(p)?;
    let mut rows = Vec::new();
    let mut width = 0;
    for &s in &p.0 {
        match s {
            Step::E => width += 1,
            Step::N => rows.push(width),
        }
    }
    rows.reverse();
    Partition::new(rows)
}

/// Factors a boundary path into maximal `E^a N^b` pieces, returned as `(a, b)`.
pub fn maximal_lpaths(p: &LatticePath) -> Result<Vec<(usize, usize)>, YoungError> {
    let blocks = p.blocks();
    if blocks.len() % 2 == 1 || blocks.first().is_some_and(|b| b.0 != Step::E) {
        return Err(YoungError::MalformedPath(p.to_string()));
    }
    Ok(blocks.chunks(2).map(|c| (c[0].1, c[1].1)).collect())
}

/// Whether no maximal piece has both exponents odd.
pub fn no_odd_odd(lpaths: &[(usize, usize)]) -> bool {
    !lpaths.iter().any(|&(a, b)| a % 2 == 1 && b % 2 == 1)
}

/// Smallest `n` with `mu ⊆ δ_n`.
pub fn min_staircase(mu: &Partition) -> usize {
    (1..=mu.len()).map(|i| mu.row(i) + i - 1).max().unwrap_or(0)
}

/// Whether the interval `[mu, lam]` lies in the family the predicate covers.
pub fn in_scope(mu: &Partition, lam: &Partition) -> bool {
    lam.contains(mu) && (mu.is_empty() || lam.contains(&Partition::staircase(min_staircase(mu) + 1)))
}

/// Label of the game on `[mu, lam]`, read off the boundary path of `lam`.
/// With `mu = ∅` every `lam` is covered; otherwise `lam` must contain the
/// staircase one step beyond the smallest staircase containing `mu`.
pub fn eeta_predicate_interval(mu: &Partition, lam: &Partition) -> Result<WinLabel, YoungError> {
    if !lam.contains(mu) {
        return Err(YoungError::NotContained {
            lam: lam.to_string(),
            mu: mu.to_string(),
        });
    }
    if !in_scope(mu, lam) {
        return Err(YoungError::OutOfTheoremScope {
            lam: lam.to_string(),
            mu: mu.to_string(),
        });
    }
    let lp = maximal_lpaths(&path_of(lam)).expect("partition boundaries are well formed");
    Ok(WinLabel::from_eeta(no_odd_odd(&lp)))
}

/// Brute-force label of `[mu, lam]` via the ideal game on the skew shape.
pub fn oracle_label(mu: &Partition, lam: &Partition) -> Result<WinLabel, YoungError> {
    let poset = FinitePoset::skew(lam, mu)?;
    Ok(IdealGame::new(&poset).label(poset.full())?)
}

/// Number of `lam ⊆ ρ_{a×b}` that are Eeta wins, by the boundary predicate.
pub fn count_eeta_rectangle(a: usize, b: usize) -> u64 {
    partitions_in_box(a, b)
        .iter()
        .filter(|lam| eeta_predicate_interval(&Partition::empty(), lam).unwrap().is_eeta())
        .count() as u64
}

/// Brute-force `|E(J(ρ_{a×b}))|`.
pub fn count_eeta_rectangle_oracle(a: usize, b: usize, exec: Exec) -> Result<u64, YoungError> {
    let poset = FinitePoset::rectangle(a, b)?;
    Ok(crate::ideal::count_eeta_ideals(&poset, exec)? as u64)
}

/// `(1+x)(1+y) / (1 - (1+x)y^2 - (1+y)x^2)` through `x^max_b y^max_a`;
/// `coeff(a, b)` multiplies `x^b y^a`.
pub fn rectangle_gf(max_a: usize, max_b: usize) -> Result<BivariateSeries, SeriesError> {
    let num = BivariateSeries::from_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], max_a, max_b);
    let den = BivariateSeries::from_terms(
        &[(0, 0, 1), (0, 2, -1), (1, 2, -1), (2, 0, -1), (2, 1, -1)],
        max_a,
        max_b,
    );
    Ok(num.mul(&den.reciprocal()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleMismatch {
    pub a: usize,
    pub b: usize,
    pub series: BigInt,
    pub count: u64,
}

/// Compares every series coefficient with the predicate count; returns
/// the disagreeing cells.
pub fn rectangle_gf_check(max_a: usize, max_b: usize, exec: Exec) -> Result<Vec<RectangleMismatch>, YoungError> {
    let gf = rectangle_gf(max_a, max_b)?;
    let cells: Vec<(usize, usize)> = (0..=max_a).flat_map(|a| (0..=max_b).map(move |b| (a, b))).collect();
    let counts = exec.map(&cells, |&(a, b)| count_eeta_rectangle(a, b));
    let mut out = Vec::new();
    for (&(a, b), count) in cells.iter().zip(counts) {
        let c = gf.coeff(a, b);
        if !c.is_integer() || c.to_integer() != BigInt::from(count) {
            out.push(RectangleMismatch {
                a,
                b,
                series: c.to_integer(),
                count,
            });
        }
    }
    Ok(out)
}

/// Random `(mu, lam)` in the characterized family with `|lam| <= max_size`
/// and `mu` nonempty whenever possible.
pub fn sample_in_scope<R: Rng>(rng: &mut R, max_size: usize) -> (Partition, Partition) {
    // Largest k with |δ_{k+1}| <= max_size bounds min_staircase(mu).
    let mut kmax = 0;
    while (kmax + 2) * (kmax + 3) / 2 <= max_size {
        kmax += 1;
    }
    let k = rng.random_range(0..=kmax);
    let mut mu = Partition::empty();
    let steps = rng.random_range(0..=k * (k + 1) / 2);
    for _ in 0..steps {
        let rows: Vec<usize> = mu.addable_rows().into_iter().filter(|&r| mu.row(r) + r <= k).collect();
        if rows.is_empty() {
            break;
        }
        mu = mu.with_box_added(rows[rng.random_range(0..rows.len())]);
    }
    let n = min_staircase(&mu);
    let mut lam = if mu.is_empty() {
        Partition::empty()
    } else {
        Partition::staircase(n + 1)
    };
    let target = rng.random_range(lam.size()..=max_size);
    while lam.size() < target {
        let rows = lam.addable_rows();
        lam = lam.with_box_added(rows[rng.random_range(0..rows.len())]);
    }
    (mu, lam)
}
