//! Explicit finite lattices and the generic retrograde game solver.
//!
//! Elements are `0..n`. Internally every element also has a position in a
//! fixed linear extension (bottom first), and each principal down-set is a
//! bit-set over those positions. Meets are then bit-set intersections whose
//! highest set bit names the greatest lower bound.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_SIZE_LIMIT: usize = 20_000;
pub const MAX_COVERS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WinLabel {
    Atniss,
    Eeta,
}

impl WinLabel {
    pub fn opposite(self) -> Self {
        match self {
            WinLabel::Atniss => WinLabel::Eeta,
            WinLabel::Eeta => WinLabel::Atniss,
        }
    }

    pub fn from_eeta(eeta: bool) -> Self {
        if eeta {
            WinLabel::Eeta
        } else {
            WinLabel::Atniss
        }
    }

    pub fn is_eeta(self) -> bool {
        self == WinLabel::Eeta
    }
}

impl fmt::Display for WinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WinLabel::Atniss => "Atniss",
            WinLabel::Eeta => "Eeta",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice has no elements")]
    Empty,
    #[error("{n} elements exceeds the limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("cover ({child}, {parent}) references an element >= {n}")]
    IndexOutOfRange { child: usize, parent: usize, n: usize },
    #[error("cover relation has a cycle through elements {elements:?}")]
    CycleDetected { elements: Vec<usize> },
    #[error("cover ({child}, {parent}) is repeated or implied by other covers")]
    RedundantCover { child: usize, parent: usize },
    #[error("several minimal elements: {elements:?}")]
    MultipleBottoms { elements: Vec<usize> },
    #[error("several maximal elements: {elements:?}")]
    MultipleTops { elements: Vec<usize> },
    #[error("element {element} covers {count} elements (limit {limit})")]
    CoverLimit { element: usize, count: usize, limit: usize },
    #[error("elements {x} and {y} have maximal common lower bounds {maximal:?}")]
    NotALattice { x: usize, y: usize, maximal: Vec<usize> },
    #[error("{labels} labels given for {n} elements")]
    LabelCount { labels: usize, n: usize },
}

/// On-disk form of a lattice: `{"n": .., "covers": [[child, parent], ..], "labels": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    n: usize,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// Linear extension, bottom first.
    order: Vec<usize>,
    pos: Vec<usize>,
    words: usize,
    /// Row `x` is the down-set of `x` over positions in `order`.
    down: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl FiniteLattice {
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        Self::with_limit(n, covers, None, DEFAULT_SIZE_LIMIT)
    }

    pub fn from_file(file: &LatticeFile) -> Result<Self, LatticeError> {
        Self::with_limit(file.n, &file.covers, file.labels.clone(), DEFAULT_SIZE_LIMIT)
    }

    pub fn with_limit(
        n: usize,
        covers: &[(usize, usize)],
        labels: Option<Vec<String>>,
        limit: usize,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > limit {
            return Err(LatticeError::SizeLimit { n, limit });
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(LatticeError::LabelCount { labels: l.len(), n });
            }
        }
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(child, parent) in covers {
            if child >= n || parent >= n {
                return Err(LatticeError::IndexOutOfRange { child, parent, n });
            }
            if child == parent {
                return Err(LatticeError::CycleDetected { elements: vec![child] });
            }
            if !seen.insert((child, parent)) {
                return Err(LatticeError::RedundantCover { child, parent });
            }
            lower[parent].push(child);
            upper[child].push(parent);
        }
        for l in lower.iter_mut().chain(upper.iter_mut()) {
            l.sort_unstable();
        }

        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &p in &upper[x] {
                indeg[p] -= 1;
                if indeg[p] == 0 {
                    queue.push_back(p);
                }
            }
        }
        if order.len() < n {
            let elements = (0..n).filter(|&x| indeg[x] > 0).collect();
            return Err(LatticeError::CycleDetected { elements });
        }

        let bottoms: Vec<usize> = (0..n).filter(|&x| lower[x].is_empty()).collect();
        if bottoms.len() > 1 {
            return Err(LatticeError::MultipleBottoms { elements: bottoms });
        }
        let tops: Vec<usize> = (0..n).filter(|&x| upper[x].is_empty()).collect();
        if tops.len() > 1 {
            return Err(LatticeError::MultipleTops { elements: tops });
        }
        if let Some(x) = (0..n).find(|&x| lower[x].len() > MAX_COVERS) {
            return Err(LatticeError::CoverLimit {
                element: x,
                count: lower[x].len(),
                limit: MAX_COVERS,
            });
        }

        let mut pos = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        let words = n.div_ceil(64);
        let mut down = vec![0u64; n * words];
        for &x in &order {
            let mut row = vec![0u64; words];
            row[pos[x] / 64] |= 1 << (pos[x] % 64);
            for &c in &lower[x] {
                for (w, v) in row.iter_mut().zip(&down[c * words..(c + 1) * words]) {
                    *w |= v;
                }
            }
            down[x * words..(x + 1) * words].copy_from_slice(&row);
        }

        let lat = FiniteLattice {
            n,
            lower,
            upper,
            order,
            pos,
            words,
            down,
            labels,
        };
        for p in 0..n {
            for &c in &lat.lower[p] {
                if lat.lower[p].iter().any(|&o| o != c && lat.leq(c, o)) {
                    return Err(LatticeError::RedundantCover { child: c, parent: p });
                }
            }
        }
        lat.check_meets()?;
        Ok(lat)
    }

    fn check_meets(&self) -> Result<(), LatticeError> {
        let mut buf = vec![0u64; self.words];
        for x in 0..self.n {
            for y in x + 1..self.n {
                self.intersect_into(&mut buf, x, y);
                let m = self.top_of(&buf);
                if self.row(m) != buf.as_slice() {
                    let maximal = (0..self.n)
                        .filter(|&z| self.has(&buf, z) && !self.upper[z].iter().any(|&u| self.has(&buf, u)))
                        .collect();
                    return Err(LatticeError::NotALattice { x, y, maximal });
                }
            }
        }
        Ok(())
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.down[x * self.words..(x + 1) * self.words]
    }

    fn has(&self, set: &[u64], x: usize) -> bool {
        let p = self.pos[x];
        set[p / 64] >> (p % 64) & 1 == 1
    }

    fn intersect_into(&self, buf: &mut [u64], x: usize, y: usize) {
        for ((b, a), c) in buf.iter_mut().zip(self.row(x)).zip(self.row(y)) {
            *b = a & c;
        }
    }

    /// Element at the highest set position; the set always contains the bottom.
    fn top_of(&self, set: &[u64]) -> usize {
        for (i, &w) in set.iter().enumerate().rev() {
            if w != 0 {
                return self.order[i * 64 + 63 - w.leading_zeros() as usize];
            }
        }
        unreachable!("down-set intersections always contain the bottom")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.order[0]
    }

    pub fn top(&self) -> usize {
        self.order[self.n - 1]
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|p| self.lower[p].iter().map(move |&c| (c, p)))
            .collect()
    }

    /// A linear extension, bottom first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == label),
            None => label.parse().ok().filter(|&x| x < self.n),
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.has(self.row(y), x)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        let mut buf = vec![0u64; self.words];
        self.intersect_into(&mut buf, x, y);
        self.top_of(&buf)
    }

    pub fn meet_all(&self, x: usize, others: &[usize]) -> usize {
        let mut buf = self.row(x).to_vec();
        for &o in others {
            for (b, v) in buf.iter_mut().zip(self.row(o)) {
                *b &= v;
            }
        }
        self.top_of(&buf)
    }

    /// Calls `visit` on the meet of `{x} ∪ T` for every nonempty `T ⊆ cov(x)`
    /// until it returns `true`. Returns whether some call did.
    fn any_nontrivial_move(&self, x: usize, visit: &mut dyn FnMut(usize) -> bool) -> bool {
        fn rec(
            lat: &FiniteLattice,
            covers: &[usize],
            acc: &[u64],
            nonempty: bool,
            visit: &mut dyn FnMut(usize) -> bool,
        ) -> bool {
            let Some((&c, rest)) = covers.split_first() else {
                return nonempty && visit(lat.top_of(acc));
            };
            if rec(lat, rest, acc, nonempty, visit) {
                return true;
            }
            let with: Vec<u64> = acc.iter().zip(lat.row(c)).map(|(a, b)| a & b).collect();
            rec(lat, rest, &with, true, visit)
        }
        rec(self, &self.lower[x], self.row(x), false, visit)
    }

    /// All Ungar images of `x`, including `x` itself.
    pub fn ungar_moves(&self, x: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::from([x]);
        self.any_nontrivial_move(x, &mut |y| {
            out.insert(y);
            false
        });
        out
    }

    /// Image of the move that uses every cover at once.
    pub fn maximal_move(&self, x: usize) -> usize {
        self.meet_all(x, &self.lower[x])
    }

    /// Labels every element as a starting position, bottom up.
    pub fn solve(&self) -> Vec<WinLabel> {
        let mut eeta = vec![false; self.n];
        for &x in &self.order {
            eeta[x] = !self.any_nontrivial_move(x, &mut |y| eeta[y]);
        }
        eeta.into_iter().map(WinLabel::from_eeta).collect()
    }

    pub fn eeta_set(&self) -> BTreeSet<usize> {
        self.solve()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_eeta())
            .map(|(x, _)| x)
            .collect()
    }

    /// Sublattice `[bottom, x]`, with elements renumbered; returns it with
    /// the map from new to old indices.
    pub fn principal_ideal(&self, x: usize) -> (FiniteLattice, Vec<usize>) {
        let old: Vec<usize> = self.order.iter().copied().filter(|&z| self.leq(z, x)).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &z) in old.iter().enumerate() {
            new_of[z] = i;
        }
        let covers: Vec<(usize, usize)> = old
            .iter()
            .flat_map(|&p| self.lower[p].iter().map(move |&c| (c, p)))
            .map(|(c, p)| (new_of[c], new_of[p]))
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| old.iter().map(|&z| l[z].clone()).collect());
        let sub = FiniteLattice::with_limit(old.len(), &covers, labels, usize::MAX)
            .expect("principal ideals of lattices are lattices");
        (sub, old)
    }

    pub fn to_file(&self) -> LatticeFile {
        LatticeFile {
            n: self.n,
            covers: self.covers(),
            labels: self.labels.clone(),
        }
    }
}

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> FiniteLattice {
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    FiniteLattice::new(n, &covers).expect("chains are lattices")
}

/// Cartesian product; element `(i, j)` has index `i * |b| + j`.
pub fn product(a: &FiniteLattice, b: &FiniteLattice, limit: usize) -> Result<FiniteLattice, LatticeError> {
    let (na, nb) = (a.len(), b.len());
    let n = na.saturating_mul(nb);
    if n > limit {
        return Err(LatticeError::SizeLimit { n, limit });
    }
    let mut covers = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            for &c in a.lower_covers(i) {
                covers.push((c * nb + j, i * nb + j));
            }
            for &c in b.lower_covers(j) {
                covers.push((i * nb + c, i * nb + j));
            }
        }
    }
    FiniteLattice::with_limit(n, &covers, None, limit)
}

/// Adds a new element covering the old top.
pub fn append_top(l: &FiniteLattice) -> FiniteLattice {
    let n = l.len();
    let mut covers = l.covers();
    covers.push((l.top(), n));
    let labels = l.labels().map(|ls| {
        let mut ls = ls.to_vec();
        ls.push("top".to_string());
        ls
    });
    FiniteLattice::with_limit(n + 1, &covers, labels, usize::MAX).expect("appending a top keeps a lattice")
}

/// Samples a lattice with at most `max_elems` elements from random graded
/// posets with a bottom and top added, rejecting non-lattices. Returns the
/// lattice and the number of rejected samples.
pub fn random_lattice<R: Rng>(rng: &mut R, max_elems: usize) -> (FiniteLattice, usize) {
    assert!(max_elems >= 1);
    let mut rejected = 0;
    loop {
        if max_elems < 3 {
            return (chain(rng.random_range(1..=max_elems)), rejected);
        }
        let middle = rng.random_range(1..=max_elems - 2);
        let levels = rng.random_range(1..=middle.min(4));
        // Split `middle` into `levels` nonempty level sizes.
        let mut cuts: Vec<usize> = (1..middle).collect();
        let mut sizes = Vec::new();
        let mut chosen = BTreeSet::new();
        while chosen.len() < levels - 1 {
            let k = rng.random_range(0..cuts.len());
            chosen.insert(cuts.swap_remove(k));
        }
        let mut prev = 0;
        for c in chosen.into_iter().chain(std::iter::once(middle)) {
            sizes.push(c - prev);
            prev = c;
        }

        let n = middle + 2;
        let top = n - 1;
        let mut covers = Vec::new();
        let mut has_upper = vec![false; n];
        let mut level_start = 1;
        let mut prev_level: Vec<usize> = vec![0];
        for &s in &sizes {
            let level: Vec<usize> = (level_start..level_start + s).collect();
            for &x in &level {
                if prev_level == [0] {
                    covers.push((0, x));
                } else {
                    let mut any = false;
                    for &p in &prev_level {
                        if rng.random_bool(0.5) {
                            covers.push((p, x));
                            has_upper[p] = true;
                            any = true;
                        }
                    }
                    if !any {
                        let p = prev_level[rng.random_range(0..prev_level.len())];
                        covers.push((p, x));
                        has_upper[p] = true;
                    }
                }
            }
            level_start += s;
            prev_level = level;
        }
        for x in 1..top {
            if !has_upper[x] {
                covers.push((x, top));
            }
        }
        match FiniteLattice::new(n, &covers) {
            Ok(l) => return (l, rejected),
            Err(_) => rejected += 1,
        }
    }
}
