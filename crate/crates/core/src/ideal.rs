//! Finite posets, their lattices of order ideals, and the ideal game.
//!
//! In `J(P)` an Ungar move removes a nonempty set of maximal elements from
//! the current ideal, so states are bit-sets and no explicit lattice is ever
//! built. Posets hold at most 128 elements, relabelled so that every element
//! comes after the elements it covers.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use thiserror::Error;

use crate::lattice::{FiniteLattice, LatticeError, WinLabel};
use crate::par::Exec;
use crate::young::Partition;

pub const MAX_POSET: usize = 128;
pub const DEFAULT_STATE_LIMIT: usize = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset has {0} elements; at most 128 are supported")]
    TooLarge(usize),
    #[error("cover ({0}, {1}) references a missing element")]
    IndexOutOfRange(usize, usize),
    #[error("cover relation has a cycle")]
    CycleDetected,
    #[error("cover ({child}, {parent}) is repeated or implied by other covers")]
    RedundantCover { child: usize, parent: usize },
    #[error("inner shape {mu} is not contained in {lam}")]
    InvalidShape { lam: String, mu: String },
    #[error("memo exceeded {0} states")]
    StateLimit(usize),
    #[error("set is not an order ideal")]
    NotAnIdeal,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// An order ideal as a bit-set over element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IdealState(pub u128);

impl IdealState {
    pub const EMPTY: IdealState = IdealState(0);

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn is_subset(self, other: IdealState) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..128).filter(move |&i| bits >> i & 1 == 1)
    }
}

fn bit(x: usize) -> u128 {
    1u128 << x
}

#[derive(Clone, Debug)]
pub struct FinitePoset {
    n: usize,
    /// Mask of elements covered by each element.
    lower: Vec<u128>,
    upper: Vec<u128>,
    /// Principal down-set, inclusive.
    down: Vec<u128>,
    /// `(row, col)`, 1-indexed, for posets built from diagrams.
    cells: Option<Vec<(usize, usize)>>,
}

impl FinitePoset {
    /// Builds a poset from Hasse pairs `(child, parent)`. Elements are
    /// renumbered into a linear extension; the returned vector maps new
    /// indices to the caller's.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<(Self, Vec<usize>), PosetError> {
        if n > MAX_POSET {
            return Err(PosetError::TooLarge(n));
        }
        let mut lower = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut upper = vec![Vec::new(); n];
        for &(c, p) in covers {
            if c >= n || p >= n {
                return Err(PosetError::IndexOutOfRange(c, p));
            }
            if lower[p].contains(&c) {
                return Err(PosetError::RedundantCover { child: c, parent: p });
            }
            lower[p].push(c);
            upper[c].push(p);
            indeg[p] += 1;
        }
        let mut stack: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = stack.pop() {
            order.push(x);
            for &p in upper[x].iter().rev() {
                indeg[p] -= 1;
                if indeg[p] == 0 {
                    stack.push(p);
                }
            }
        }
        if order.len() < n {
            return Err(PosetError::CycleDetected);
        }
        let mut new_of = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            new_of[x] = i;
        }
        let relabelled: Vec<(usize, usize)> = covers.iter().map(|&(c, p)| (new_of[c], new_of[p])).collect();
        let poset = Self::from_sorted(n, &relabelled, None)?;
        Ok((poset, order))
    }

    /// Covers must already respect index order (`child < parent`).
    fn from_sorted(
        n: usize,
        covers: &[(usize, usize)],
        cells: Option<Vec<(usize, usize)>>,
    ) -> Result<Self, PosetError> {
        if n > MAX_POSET {
            return Err(PosetError::TooLarge(n));
        }
        let mut lower = vec![0u128; n];
        let mut upper = vec![0u128; n];
        for &(c, p) in covers {
            debug_assert!(c < p);
            lower[p] |= bit(c);
            upper[c] |= bit(p);
        }
        let mut down = vec![0u128; n];
        for x in 0..n {
            let mut d = bit(x);
            for c in IdealState(lower[x]).elements() {
                d |= down[c];
            }
            down[x] = d;
        }
        for p in 0..n {
            for c in IdealState(lower[p]).elements() {
                let others = lower[p] & !bit(c);
                if IdealState(others).elements().any(|o| down[o] & bit(c) != 0) {
                    return Err(PosetError::RedundantCover { child: c, parent: p });
                }
            }
        }
        Ok(Self {
            n,
            lower,
            upper,
            down,
            cells,
        })
    }

    fn from_cells(cells: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut covers = Vec::new();
        for (i, &(r, c)) in cells.iter().enumerate() {
            for nb in [(r.wrapping_sub(1), c), (r, c.wrapping_sub(1))] {
                if let Some(&j) = index.get(&nb) {
                    covers.push((j, i));
                }
            }
        }
        Self::from_sorted(cells.len(), &covers, Some(cells))
    }

    /// Boxes of `lam` not in `mu`, ordered northwest below southeast.
    pub fn skew(lam: &Partition, mu: &Partition) -> Result<Self, PosetError> {
        if !lam.contains(mu) {
            return Err(PosetError::InvalidShape {
                lam: lam.to_string(),
                mu: mu.to_string(),
            });
        }
        if lam.size() - mu.size() > MAX_POSET {
            return Err(PosetError::TooLarge(lam.size() - mu.size()));
        }
        let mut cells = Vec::new();
        for r in 1..=lam.len() {
            for c in mu.row(r) + 1..=lam.row(r) {
                cells.push((r, c));
            }
        }
        Self::from_cells(cells)
    }

    pub fn shape(lam: &Partition) -> Result<Self, PosetError> {
        Self::skew(lam, &Partition::empty())
    }

    /// `a` rows of length `b`.
    pub fn rectangle(a: usize, b: usize) -> Result<Self, PosetError> {
        Self::shape(&Partition::rectangle(a, b))
    }

    pub fn staircase(n: usize) -> Result<Self, PosetError> {
        Self::shape(&Partition::staircase(n))
    }

    /// Positive roots of type `A_n`, as the square of side `n` minus the
    /// staircase of side `n - 1`.
    pub fn type_a_root(n: usize) -> Result<Self, PosetError> {
        Self::skew(&Partition::rectangle(n, n), &Partition::staircase(n.saturating_sub(1)))
    }

    /// Cells `(i, j)` with `1 <= i <= j <= n`.
    pub fn shifted_staircase(n: usize) -> Result<Self, PosetError> {
        let mut cells = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                cells.push((i, j));
            }
        }
        Self::from_cells(cells)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn cells(&self) -> Option<&[(usize, usize)]> {
        self.cells.as_deref()
    }

    pub fn cell_index(&self, cell: (usize, usize)) -> Option<usize> {
        self.cells.as_ref()?.iter().position(|&c| c == cell)
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|p| IdealState(self.lower[p]).elements().map(move |c| (c, p)))
            .collect()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y] & bit(x) != 0
    }

    pub fn full(&self) -> IdealState {
        IdealState(if self.n == 128 { u128::MAX } else { bit(self.n) - 1 })
    }

    pub fn is_ideal(&self, i: IdealState) -> bool {
        i.is_subset(self.full()) && i.elements().all(|x| self.lower[x] & !i.0 == 0)
    }

    /// Smallest ideal containing the given elements.
    pub fn down_closure(&self, set: u128) -> IdealState {
        IdealState(IdealState(set).elements().fold(0, |acc, x| acc | self.down[x]))
    }

    /// Maximal elements of an ideal.
    pub fn maximal(&self, i: IdealState) -> u128 {
        i.elements()
            .filter(|&x| self.upper[x] & i.0 == 0)
            .fold(0, |acc, x| acc | bit(x))
    }

    /// All `I \ T` for `T ⊆ max(I)`, ascending; includes `I` itself.
    pub fn ideal_moves(&self, i: IdealState) -> Vec<IdealState> {
        let m = self.maximal(i);
        let mut out: Vec<IdealState> = submasks(m).map(|t| IdealState(i.0 & !t)).collect();
        out.sort_unstable();
        out
    }

    /// Every ideal of the poset, ascending as bit-sets.
    pub fn ideals(&self, limit: usize) -> Result<Vec<IdealState>, PosetError> {
        self.ideals_between(IdealState::EMPTY, self.full(), limit)
    }

    /// Ideals `J` with `floor ⊆ J ⊆ ceil`, ascending.
    pub fn ideals_between(
        &self,
        floor: IdealState,
        ceil: IdealState,
        limit: usize,
    ) -> Result<Vec<IdealState>, PosetError> {
        let mut seen = HashSet::from([ceil]);
        let mut stack = vec![ceil];
        while let Some(i) = stack.pop() {
            for x in IdealState(self.maximal(i) & !floor.0).elements() {
                let j = IdealState(i.0 & !bit(x));
                if seen.insert(j) {
                    if seen.len() > limit {
                        return Err(PosetError::StateLimit(limit));
                    }
                    stack.push(j);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Explicit lattice of ideals between `floor` and `ceil`, with the
    /// ideal at each lattice index.
    pub fn ideal_lattice(
        &self,
        floor: IdealState,
        ceil: IdealState,
        limit: usize,
    ) -> Result<(FiniteLattice, Vec<IdealState>), PosetError> {
        let ideals = self.ideals_between(floor, ceil, limit)?;
        let index: HashMap<IdealState, usize> = ideals.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut covers = Vec::new();
        for (k, &i) in ideals.iter().enumerate() {
            for x in IdealState(self.maximal(i) & !floor.0).elements() {
                covers.push((index[&IdealState(i.0 & !bit(x))], k));
            }
        }
        let lat = FiniteLattice::with_limit(ideals.len(), &covers, None, limit.max(1))?;
        Ok((lat, ideals))
    }
}

/// Nonempty-or-empty submasks of `m`, largest first, ending with 0.
fn submasks(m: u128) -> impl Iterator<Item = u128> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Memoized solver for the game on the interval `[floor, I]` of `J(P)`.
pub struct IdealGame<'a> {
    poset: &'a FinitePoset,
    floor: IdealState,
    memo: HashMap<u128, bool>,
    limit: usize,
}

impl<'a> IdealGame<'a> {
    pub fn new(poset: &'a FinitePoset) -> Self {
        Self::with_floor(poset, IdealState::EMPTY)
    }

    pub fn with_floor(poset: &'a FinitePoset, floor: IdealState) -> Self {
        Self {
            poset,
            floor,
            memo: HashMap::new(),
            limit: DEFAULT_STATE_LIMIT,
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn poset(&self) -> &FinitePoset {
        self.poset
    }

    pub fn floor(&self) -> IdealState {
        self.floor
    }

    pub fn states_visited(&self) -> usize {
        self.memo.len()
    }

    /// Removable elements at `i`: maximal and above the floor.
    pub fn movable(&self, i: IdealState) -> u128 {
        self.poset.maximal(i) & !self.floor.0
    }

    /// Nontrivial moves from `i`, ascending.
    pub fn moves(&self, i: IdealState) -> Vec<IdealState> {
        let m = self.movable(i);
        let mut out: Vec<_> = submasks(m).filter(|&t| t != 0).map(|t| IdealState(i.0 & !t)).collect();
        out.sort_unstable();
        out
    }

    pub fn label(&mut self, i: IdealState) -> Result<WinLabel, PosetError> {
        Ok(WinLabel::from_eeta(self.eeta(i)?))
    }

    fn eeta(&mut self, i: IdealState) -> Result<bool, PosetError> {
        if let Some(&e) = self.memo.get(&i.0) {
            return Ok(e);
        }
        let m = self.movable(i);
        let mut eeta = true;
        for t in submasks(m).filter(|&t| t != 0) {
            if self.eeta(IdealState(i.0 & !t))? {
                eeta = false;
                break;
            }
        }
        if self.memo.len() >= self.limit {
            return Err(PosetError::StateLimit(self.limit));
        }
        self.memo.insert(i.0, eeta);
        Ok(eeta)
    }
}

/// Labels of every ideal of `P` in ascending bit-set order. Ideals of equal
/// size are labelled together, so each level only reads finished levels.
pub fn solve_all_ideals(
    poset: &FinitePoset,
    exec: Exec,
    limit: usize,
) -> Result<Vec<(IdealState, WinLabel)>, PosetError> {
    let ideals = poset.ideals(limit)?;
    let mut levels: Vec<Vec<IdealState>> = vec![Vec::new(); poset.len() + 1];
    for &i in &ideals {
        levels[i.len() as usize].push(i);
    }
    let mut eeta: HashMap<u128, bool> = HashMap::with_capacity(ideals.len());
    for level in &levels {
        let labels = exec.map(level, |&i| {
            let m = poset.maximal(i);
            !submasks(m).filter(|&t| t != 0).any(|t| eeta[&(i.0 & !t)])
        });
        for (i, e) in level.iter().zip(labels) {
            eeta.insert(i.0, e);
        }
    }
    Ok(ideals
        .into_iter()
        .map(|i| (i, WinLabel::from_eeta(eeta[&i.0])))
        .collect())
}

/// `|E(J(P))|`.
pub fn count_eeta_ideals(poset: &FinitePoset, exec: Exec) -> Result<usize, PosetError> {
    Ok(solve_all_ideals(poset, exec, DEFAULT_STATE_LIMIT)?
        .iter()
        .filter(|(_, l)| l.is_eeta())
        .count())
}

/// Compares the game on `[mu, lam]` with the game on `[∅, lam]`, after
/// checking `mu ⊆ delta \ max(delta) ⊆ delta ⊆ lam` and that every
/// non-maximal element of `delta` lies below at least two maximal ones.
pub fn check_deep_poset(
    poset: &FinitePoset,
    delta: IdealState,
    lam: IdealState,
    mu: IdealState,
) -> Result<bool, PosetError> {
    for (name, i) in [("delta", delta), ("lambda", lam), ("mu", mu)] {
        if !poset.is_ideal(i) {
            return Err(PosetError::HypothesisViolated(format!("{name} is not an ideal")));
        }
    }
    let top = poset.maximal(delta);
    let inner = IdealState(delta.0 & !top);
    if !mu.is_subset(inner) {
        return Err(PosetError::HypothesisViolated(
            "mu meets the maximal elements of delta".into(),
        ));
    }
    if !delta.is_subset(lam) {
        return Err(PosetError::HypothesisViolated("delta is not inside lambda".into()));
    }
    for x in inner.elements() {
        let above = IdealState(top).elements().filter(|&t| poset.leq(x, t)).count();
        if above < 2 {
            return Err(PosetError::HypothesisViolated(format!(
                "element {x} lies below {above} maximal element(s) of delta"
            )));
        }
    }
    let with_floor = IdealGame::with_floor(poset, mu).label(lam)?;
    let plain = IdealGame::new(poset).label(lam)?;
    Ok(with_floor == plain)
}

/// A random instance of the deep-poset hypothesis.
#[derive(Clone, Debug)]
pub struct DeepInstance {
    pub poset: FinitePoset,
    pub delta: IdealState,
    pub lam: IdealState,
    pub mu: IdealState,
}

/// Random poset on `n` elements: each pair `i < j` is related with
/// probability `p`, then reduced to its Hasse diagram.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, p: f64) -> FinitePoset {
    let mut down = vec![0u128; n];
    for j in 0..n {
        down[j] = bit(j);
        for i in 0..j {
            if rng.random_bool(p) {
                down[j] |= down[i];
            }
        }
    }
    let mut covers = Vec::new();
    for j in 0..n {
        let strict = down[j] & !bit(j);
        for i in IdealState(strict).elements() {
            let implied = IdealState(strict & !bit(i)).elements().any(|k| down[k] & bit(i) != 0);
            if !implied {
                covers.push((i, j));
            }
        }
    }
    FinitePoset::from_sorted(n, &covers, None).expect("transitive reduction is reduced")
}

/// Samples an admissible instance with nonempty `mu`, by rejection.
/// Returns the instance and the number of rejected candidates.
pub fn sample_deep_instance<R: Rng>(rng: &mut R, max_elems: usize) -> (DeepInstance, usize) {
    let mut rejected = 0;
    loop {
        let n = rng.random_range(4..=max_elems.max(4));
        let poset = random_poset(rng, n, 0.35);
        let seeds: u128 = (0..n).filter(|_| rng.random_bool(0.4)).fold(0, |a, x| a | bit(x));
        let delta = poset.down_closure(seeds);
        let top = poset.maximal(delta);
        let inner = IdealState(delta.0 & !top);
        let ok = !inner.is_empty()
            && inner
                .elements()
                .all(|x| IdealState(top).elements().filter(|&t| poset.leq(x, t)).count() >= 2);
        if !ok {
            rejected += 1;
            continue;
        }
        let mu_seed: u128 = inner
            .elements()
            .filter(|_| rng.random_bool(0.5))
            .fold(0, |a, x| a | bit(x));
        let mu = poset.down_closure(if mu_seed == 0 { inner.0 } else { mu_seed });
        let extra: u128 = (0..n).filter(|_| rng.random_bool(0.3)).fold(0, |a, x| a | bit(x));
        let lam = IdealState(poset.down_closure(extra).0 | delta.0);
        return (DeepInstance { poset, delta, lam, mu }, rejected);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn constructors() {
        let r = FinitePoset::rectangle(2, 2).unwrap();
        assert_eq!((r.len(), r.covers().len()), (4, 4));
        let a2 = FinitePoset::type_a_root(2).unwrap();
        assert_eq!(a2.len(), 3);
        let top = 2;
        assert_eq!(a2.covers(), vec![(0, top), (1, top)]);
        assert_eq!(FinitePoset::skew(&part("5,4,2,2"), &part("3,1")).unwrap().len(), 9);
        assert!(matches!(
            FinitePoset::skew(&part("2"), &part("3")),
            Err(PosetError::InvalidShape { .. })
        ));
        assert_eq!(FinitePoset::shifted_staircase(3).unwrap().len(), 6);
    }

    #[test]
    fn moves_of_small_ideals() {
        let r = FinitePoset::rectangle(2, 2).unwrap();
        assert_eq!(r.ideal_moves(IdealState::EMPTY), vec![IdealState::EMPTY]);
        let one = IdealState(1);
        assert_eq!(r.ideal_moves(one), vec![IdealState::EMPTY, one]);
        assert_eq!(r.ideal_moves(r.full()).len(), 2);
    }

    #[test]
    fn small_games() {
        let box1 = FinitePoset::rectangle(1, 1).unwrap();
        assert_eq!(IdealGame::new(&box1).label(box1.full()).unwrap(), WinLabel::Atniss);
        let a2 = FinitePoset::type_a_root(2).unwrap();
        let mut g = IdealGame::new(&a2);
        assert_eq!(g.label(a2.full()).unwrap(), WinLabel::Eeta);
        assert_eq!(g.label(IdealState::EMPTY).unwrap(), WinLabel::Eeta);
        let r = FinitePoset::rectangle(2, 2).unwrap();
        assert_eq!(count_eeta_ideals(&r, Exec::Sequential).unwrap(), 4);
        assert_eq!(count_eeta_ideals(&a2, Exec::Parallel).unwrap(), 2);
        let empty = FinitePoset::rectangle(0, 0).unwrap();
        assert_eq!(count_eeta_ideals(&empty, Exec::Sequential).unwrap(), 1);
    }

    #[test]
    fn state_limit_is_reported() {
        let r = FinitePoset::rectangle(3, 3).unwrap();
        let err = IdealGame::new(&r).with_limit(5).label(r.full()).unwrap_err();
        assert_eq!(err, PosetError::StateLimit(5));
    }

    #[test]
    fn ideal_counts() {
        for n in 1..=12 {
            let ss = FinitePoset::shifted_staircase(n).unwrap();
            assert_eq!(ss.ideals(1 << 20).unwrap().len(), 1 << n);
        }
        for n in 1..=8 {
            let a = FinitePoset::type_a_root(n).unwrap();
            assert_eq!(a.ideals(1 << 20).unwrap().len() as u64, crate::catalan(n as u32 + 1));
        }
    }

    #[test]
    fn generic_covers_are_relabelled() {
        let (p, order) = FinitePoset::from_covers(3, &[(2, 0), (1, 0)]).unwrap();
        assert_eq!(order, vec![1, 2, 0]);
        assert_eq!(p.covers(), vec![(0, 2), (1, 2)]);
        assert_eq!(
            FinitePoset::from_covers(2, &[(0, 1), (1, 0)]).unwrap_err(),
            PosetError::CycleDetected
        );
        assert!(matches!(
            FinitePoset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(PosetError::RedundantCover { .. })
        ));
    }

    #[test]
    fn deep_poset_hypothesis_is_validated() {
        // Chain 0 < 1 < 2: delta = {0, 1} has one maximal element.
        let (chain3, _) = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let err = check_deep_poset(&chain3, IdealState(0b011), IdealState(0b111), IdealState(0b001));
        assert!(matches!(err, Err(PosetError::HypothesisViolated(_))));
        let one = IdealState(0b001);
        assert!(check_deep_poset(&chain3, one, chain3.full(), IdealState::EMPTY).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ideal_game_matches_lattice_oracle(seed in any::<u64>(), n in 1usize..=8) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_poset(&mut rng, n, 0.3);
            let (lat, ideals) = p.ideal_lattice(IdealState::EMPTY, p.full(), 2000).unwrap();
            let labels = lat.solve();
            let mut game = IdealGame::new(&p);
            for (k, &i) in ideals.iter().enumerate() {
                prop_assert!(p.is_ideal(i));
                prop_assert_eq!(game.label(i).unwrap(), labels[k]);
                let via_lattice: Vec<IdealState> = lat.ungar_moves(k).iter().map(|&y| ideals[y]).collect();
                prop_assert_eq!(p.ideal_moves(i), via_lattice);
            }
            let levels = solve_all_ideals(&p, Exec::Parallel, 1 << 20).unwrap();
            for (i, l) in levels {
                prop_assert_eq!(l, game.label(i).unwrap());
            }
        }

        #[test]
        fn deep_poset_instances(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (inst, _) = sample_deep_instance(&mut rng, 10);
            prop_assert!(check_deep_poset(&inst.poset, inst.delta, inst.lam, inst.mu).unwrap());
        }
    }
}
