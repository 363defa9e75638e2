//! Tamari lattices as 312-avoiding permutations under the weak order.
//!
//! Moves are computed by the component recursion rather than by searching
//! the lattice: a direct sum moves componentwise, and an indecomposable
//! `w' ⊖ 1` either keeps its final 1 or slides it in front of the last
//! component of `w'`. Eeta wins are characterized by the even-districted
//! predicate, which is cross-checked against a brute-force retrograde pass.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{FiniteLattice, LatticeError, WinLabel};
use crate::par::Exec;
use crate::series::{
    asymptotic_gamma, bisect_root, fixpoint_solve, poly_eval_series, AsymptoticFit, RootEstimate, SeriesError,
    TruncatedSeries,
};
use crate::weak::{pi_down, weak_moves, PermError, Permutation};

/// Largest `n` for the structural enumeration of `Tam_n`.
pub const MAX_ENUM_N: usize = 14;
/// Largest `n` for which the explicit lattice is built.
pub const MAX_LATTICE_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TamariError {
    #[error("{0} contains the pattern 312")]
    Cre312Violation(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("n = {n} exceeds the limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A 312-avoiding permutation, an element of `Tam_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm312(Vec<u8>);

impl Perm312 {
    pub fn new(w: Permutation) -> Result<Self, TamariError> {
        if !w.is_312_avoiding() {
            return Err(TamariError::Cre312Violation(w.compact()));
        }
        Ok(Perm312(w.bytes().to_vec()))
    }

    pub fn parse(s: &str) -> Result<Self, TamariError> {
        Self::new(Permutation::parse(s)?)
    }

    pub fn one() -> Self {
        Perm312(vec![1])
    }

    pub fn identity(n: usize) -> Self {
        Perm312((1..=n as u8).collect())
    }

    /// The top of `Tam_n`.
    pub fn top(n: usize) -> Self {
        Perm312((1..=n as u8).rev().collect())
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

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_bytes(self.0.clone())
    }

    pub fn compact(&self) -> String {
        self.to_permutation().compact()
    }

    pub fn inversions(&self) -> usize {
        self.to_permutation().inversions()
    }

    pub fn components(&self) -> Vec<Perm312> {
        split_components(&self.0).into_iter().map(Perm312).collect()
    }

    pub fn component_count(&self) -> usize {
        component_bounds(&self.0).len()
    }

    /// A nonempty 312-avoider is indecomposable iff it ends in 1.
    pub fn is_indecomposable(&self) -> bool {
        self.0.last() == Some(&1)
    }

    pub fn direct_sum(&self, other: &Perm312) -> Perm312 {
        Perm312(dsum(&self.0, &other.0))
    }

    pub fn skew_sum(&self, other: &Perm312) -> Result<Perm312, TamariError> {
        let w = Permutation::from_bytes(ssum(&self.0, &other.0));
        Perm312::new(w)
    }

    /// `self ⊖ 1`.
    pub fn skew_one(&self) -> Perm312 {
        Perm312(skew_one(&self.0))
    }

    /// Weak-order comparison; the Tamari order is its restriction.
    pub fn leq(&self, other: &Perm312) -> bool {
        self.len() == other.len() && inversion_mask(&self.0) & !inversion_mask(&other.0) == 0
    }
}

impl fmt::Display for Perm312 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_permutation().fmt(f)
    }
}

fn dsum(u: &[u8], v: &[u8]) -> Vec<u8> {
    let m = u.len() as u8;
    u.iter().copied().chain(v.iter().map(|&x| x + m)).collect()
}

fn ssum(u: &[u8], v: &[u8]) -> Vec<u8> {
    let m = v.len() as u8;
    u.iter().map(|&x| x + m).chain(v.iter().copied()).collect()
}

fn skew_one(u: &[u8]) -> Vec<u8> {
    u.iter().map(|&x| x + 1).chain(std::iter::once(1)).collect()
}

/// Half-open index ranges of the components.
fn component_bounds(w: &[u8]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut max = 0u8;
    for (i, &x) in w.iter().enumerate() {
        max = max.max(x);
        if max as usize == i + 1 {
            out.push((start, i + 1));
            start = i + 1;
        }
    }
    out
}

fn split_components(w: &[u8]) -> Vec<Vec<u8>> {
    component_bounds(w)
        .into_iter()
        .map(|(a, b)| w[a..b].iter().map(|&x| x - a as u8).collect())
        .collect()
}

fn standardize(w: &[u8]) -> Vec<u8> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| w[i]);
    let mut out = vec![0u8; w.len()];
    for (r, i) in idx.into_iter().enumerate() {
        out[i] = r as u8 + 1;
    }
    out
}

/// Bit `(a-1)*n + (b-1)` is set when values `a < b` appear as `b ... a`;
/// needs `n <= 11`.
fn inversion_mask(w: &[u8]) -> u128 {
    let n = w.len();
    let mut m = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            if w[i] > w[j] {
                m |= 1u128 << ((w[j] as usize - 1) * n + w[i] as usize - 1);
            }
        }
    }
    m
}

/// All direct sums `a_1 ⊕ … ⊕ a_k` with `a_i` drawn from `sets[i]`.
fn sum_product(sets: &[Vec<Vec<u8>>]) -> Vec<Vec<u8>> {
    let mut acc: Vec<Vec<u8>> = vec![Vec::new()];
    for s in sets {
        acc = acc.iter().flat_map(|a| s.iter().map(move |b| dsum(a, b))).collect();
    }
    acc
}

/// Memoized move sets keyed by the one-line word.
#[derive(Default)]
pub struct TamariMoves {
    memo: HashMap<Vec<u8>, Vec<Vec<u8>>>,
}

impl TamariMoves {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Ung(w)` in lexicographic order, including `w` itself.
    pub fn moves(&mut self, w: &Perm312) -> Vec<Perm312> {
        self.raw(&w.0).into_iter().map(Perm312).collect()
    }

    fn raw(&mut self, w: &[u8]) -> Vec<Vec<u8>> {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let out = if w.len() <= 1 {
            vec![w.to_vec()]
        } else if w.last() != Some(&1) {
            let parts: Vec<_> = split_components(w).iter().map(|c| self.raw(c)).collect();
            sum_product(&parts)
        } else {
            let inner: Vec<u8> = w[..w.len() - 1].iter().map(|&x| x - 1).collect();
            let parts: Vec<_> = split_components(&inner).iter().map(|c| self.raw(c)).collect();
            let k = parts.len();
            let mut out: Vec<Vec<u8>> = sum_product(&parts).iter().map(|x| skew_one(x)).collect();
            let heads: Vec<Vec<u8>> = sum_product(&parts[..k - 1]).iter().map(|x| skew_one(x)).collect();
            for h in &heads {
                for t in &parts[k - 1] {
                    out.push(dsum(h, t));
                }
            }
            out.sort();
            out.dedup();
            out
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }
}

/// `Ung(w)` in `Tam_n`, including `w`, in lexicographic order.
pub fn tam_ungar_moves(w: &Perm312) -> Vec<Perm312> {
    TamariMoves::new().moves(w)
}

/// Recursive characterization of indecomposable Eeta wins.
pub fn is_even_districted(w: &Perm312) -> bool {
    even_districted(&w.0)
}

/// Eeta iff every component is even-districted.
pub fn is_eeta_tam(w: &Perm312) -> bool {
    eeta(&w.0)
}

pub fn label_tam(w: &Perm312) -> WinLabel {
    WinLabel::from_eeta(eeta(&w.0))
}

fn eeta(w: &[u8]) -> bool {
    split_components(w).iter().all(|c| even_districted(c))
}

fn even_districted(w: &[u8]) -> bool {
    let n = w.len();
    if n == 1 {
        return true;
    }
    if n < 3 || w[n - 1] != 1 {
        return false;
    }
    let inner: Vec<u8> = w[..n - 1].iter().map(|&x| x - 1).collect();
    component_bounds(&inner).len().is_multiple_of(2) && eeta(&standardize(&w[..n - 2]))
}

/// Structural enumeration of `Tam_0..=Tam_n`; entry `k` is sorted.
pub fn enumerate_upto(n: usize) -> Result<Vec<Vec<Perm312>>, TamariError> {
    if n > MAX_ENUM_N {
        return Err(TamariError::SizeLimit { n, limit: MAX_ENUM_N });
    }
    let mut all: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new()]];
    let mut indec: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    for m in 1..=n {
        let ind: Vec<Vec<u8>> = all[m - 1].iter().map(|w| skew_one(w)).collect();
        indec.push(ind);
        let mut level = Vec::new();
        for first in 1..=m {
            for a in &indec[first] {
                for b in &all[m - first] {
                    level.push(dsum(a, b));
                }
            }
        }
        level.sort();
        all.push(level);
    }
    Ok(all
        .into_iter()
        .map(|lvl| lvl.into_iter().map(Perm312).collect())
        .collect())
}

/// `Tam_n`, sorted lexicographically.
pub fn enumerate(n: usize) -> Result<Vec<Perm312>, TamariError> {
    Ok(enumerate_upto(n)?.pop().unwrap_or_default())
}

/// Number of Eeta wins in `Tam_n` by the predicate.
pub fn count_eeta_tam(n: usize, exec: Exec) -> Result<u64, TamariError> {
    let elems = enumerate(n)?;
    Ok(exec.map(&elems, |w| eeta(&w.0) as u64).into_iter().sum())
}

/// Labels of `Tam_n` by the game recursion over [`tam_ungar_moves`],
/// in the order of [`enumerate`].
pub fn brute_force_labels(n: usize) -> Result<Vec<WinLabel>, TamariError> {
    if n > MAX_LATTICE_N {
        return Err(TamariError::SizeLimit {
            n,
            limit: MAX_LATTICE_N,
        });
    }
    let elems = enumerate(n)?;
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| elems[i].inversions());
    let mut moves = TamariMoves::new();
    let mut eeta: HashMap<Vec<u8>, bool> = HashMap::new();
    for &i in &order {
        let w = &elems[i];
        let succ = moves.raw(&w.0);
        let win = if succ.len() == 1 {
            true
        } else {
            !succ.iter().filter(|y| **y != w.0).any(|y| eeta[y])
        };
        eeta.insert(w.0.clone(), win);
    }
    Ok(elems.iter().map(|w| WinLabel::from_eeta(eeta[&w.0])).collect())
}

/// `Tam_n` as an explicit lattice, covers taken from the Hasse diagram of
/// inversion-set containment. Element `i` is `enumerate(n)[i]`.
pub fn tamari_lattice(n: usize) -> Result<(FiniteLattice, Vec<Perm312>), TamariError> {
    if n > MAX_LATTICE_N {
        return Err(TamariError::SizeLimit {
            n,
            limit: MAX_LATTICE_N,
        });
    }
    let elems = enumerate(n)?;
    let masks: Vec<u128> = elems.iter().map(|w| inversion_mask(&w.0)).collect();
    let below = |a: usize, b: usize| a != b && masks[a] & !masks[b] == 0;
    let mut covers = Vec::new();
    for hi in 0..elems.len() {
        let lows: Vec<usize> = (0..elems.len()).filter(|&lo| below(lo, hi)).collect();
        for &lo in &lows {
            if !lows.iter().any(|&mid| below(lo, mid)) {
                covers.push((lo, hi));
            }
        }
    }
    let labels = elems.iter().map(|w| w.to_string()).collect();
    let lattice = FiniteLattice::with_limit(elems.len(), &covers, Some(labels), usize::MAX)?;
    Ok((lattice, elems))
}

/// Compares the recursive move sets with the generic lattice moves on the
/// explicit `Tam_n`, and its lower covers with the maximal proper moves.
/// Returns the elements where they differ.
pub fn lattice_moves_agree(n: usize) -> Result<Vec<Perm312>, TamariError> {
    let (lat, elems) = tamari_lattice(n)?;
    let index: HashMap<&Perm312, usize> = elems.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut moves = TamariMoves::new();
    let mut bad = Vec::new();
    for (i, w) in elems.iter().enumerate() {
        let rec: BTreeSet<usize> = moves.moves(w).iter().map(|y| index[y]).collect();
        let generic = lat.ungar_moves(i);
        let proper: Vec<usize> = rec.iter().copied().filter(|&y| y != i).collect();
        let maximal: BTreeSet<usize> = proper
            .iter()
            .copied()
            .filter(|&y| !proper.iter().any(|&z| z != y && lat.leq(y, z)))
            .collect();
        let lower: BTreeSet<usize> = lat.lower_covers(i).iter().copied().collect();
        if rec != generic || maximal != lower {
            bad.push(w.clone());
        }
    }
    Ok(bad)
}

/// Checks `{π↓(y) : y ∈ Ung_{S_n}(w)} = Ung_{Tam_n}(w)` for every `w ∈ Tam_n`.
/// Returns the number of elements checked and the failures.
pub fn pi_down_compat(n: usize, exec: Exec) -> Result<(usize, Vec<Perm312>), TamariError> {
    if n > MAX_LATTICE_N {
        return Err(TamariError::SizeLimit {
            n,
            limit: MAX_LATTICE_N,
        });
    }
    let elems = enumerate(n)?;
    let bad = exec.filter_map(&elems, |w| {
        let p = w.to_permutation();
        let mut projected: BTreeSet<Vec<u8>> = weak_moves(&p).iter().map(|y| pi_down(y).bytes().to_vec()).collect();
        projected.insert(w.0.clone());
        let rec: BTreeSet<Vec<u8>> = tam_ungar_moves(w).into_iter().map(|y| y.0).collect();
        (projected != rec).then(|| w.clone())
    });
    Ok((elems.len(), bad))
}

/// The series `G` of even-districted elements and `F = G/(1-G)` of Eeta wins.
pub fn g_f_series(order: usize) -> Result<(TruncatedSeries, TruncatedSeries), TamariError> {
    let seed = [TruncatedSeries::zero(order)];
    let sol = fixpoint_solve(
        |x| {
            let g = &x[0];
            let n = g.order();
            let one = TruncatedSeries::one(n);
            let g2 = g * g;
            let denom = &one - &g2;
            let denom = &denom * &denom;
            let frac = (g + &g2).divide(&denom).expect("unit constant term");
            vec![&TruncatedSeries::z(n) + &frac.shift(2)]
        },
        &seed,
        order,
    )?;
    let g = sol.into_iter().next().expect("one component");
    let f = g.divide(&(&TruncatedSeries::one(order) - &g))?;
    Ok((g, f))
}

/// `g_1..=g_n` from the composition recurrence with weight `⌈r/2⌉`.
pub fn g_recurrence(n: usize) -> Vec<BigInt> {
    // powers[r][m] = [z^m] G^r for the part of G already known.
    let mut g = vec![BigInt::zero(); n + 1];
    if n >= 1 {
        g[1] = BigInt::one();
    }
    for m in 3..=n {
        let target = m - 2;
        // [z^target] G^r using only g_1..g_target, all already final.
        let mut pow = vec![BigInt::zero(); target + 1];
        pow[0] = BigInt::one();
        let mut total = BigInt::zero();
        for r in 1..=target {
            let mut next = vec![BigInt::zero(); target + 1];
            for (i, a) in pow.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 1..=target - i {
                    next[i + j] += a * &g[j];
                }
            }
            pow = next;
            total += &pow[target] * BigInt::from(r.div_ceil(2));
        }
        g[m] = total;
    }
    g.into_iter().skip(1).collect()
}

/// Coefficients of `Q(y, z)` in `y`, each a polynomial in `z`.
pub fn quartic_coefficients() -> [[i64; 3]; 5] {
    [[0, 1, 0], [-1, 3, 1], [-2, 2, 3], [0, 0, 3], [0, 0, 1]]
}

/// `Q(F(z), z)` through the order of `f`.
pub fn quartic_residual(f: &TruncatedSeries) -> TruncatedSeries {
    let order = f.order();
    let coeffs: Vec<TruncatedSeries> = quartic_coefficients()
        .iter()
        .map(|c| TruncatedSeries::from_ints(c, order))
        .collect();
    poly_eval_series(&coeffs, f)
}

/// `32z^7 - 32z^6 - 155z^5 - 20z^4 - 148z^3 + 60z^2 - 8z - 4`, constant first.
pub fn growth_poly() -> Vec<BigRational> {
    [-4i64, -8, 60, -148, -20, -155, -32, 32]
        .iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect()
}

/// Even polynomial of degree 14 with the leading constant as a root.
pub fn gamma_poly() -> Vec<BigRational> {
    let even: [i64; 8] = [
        11,
        4048,
        -516144,
        -33824320,
        -886278144,
        -6678731520,
        -11927404544,
        17348952064,
    ];
    let mut out = vec![BigRational::zero(); 15];
    for (k, &c) in even.iter().enumerate() {
        out[2 * k] = BigRational::from_integer(c.into());
    }
    out
}

/// The growth rate of the Eeta counts, bracketed on `[2, 4]`.
pub fn growth_root(tol: f64) -> Result<RootEstimate, TamariError> {
    Ok(bisect_root(&growth_poly(), 2.0, 4.0, tol)?)
}

/// Fits the leading constant from `F_1..=F_order`.
pub fn gamma_fit(order: usize, rho: f64) -> Result<AsymptoticFit, TamariError> {
    let (_, f) = g_f_series(order)?;
    let terms = f.integer_coeffs()?;
    Ok(asymptotic_gamma(&terms[1..], rho, 0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Perm312 {
        Perm312::parse(s).unwrap()
    }

    fn compacts(v: &[Perm312]) -> Vec<String> {
        v.iter().map(Perm312::compact).collect()
    }

    #[test]
    fn sums() {
        let w = p("21").direct_sum(&p("23541")).skew_one();
        assert_eq!(w.compact(), "32568741");
        assert_eq!(p("1").direct_sum(&p("1")).compact(), "12");
        assert_eq!(p("12").skew_one().compact(), "231");
        assert!(matches!(
            p("1").skew_sum(&p("12")),
            Err(TamariError::Cre312Violation(_))
        ));
        assert_eq!(p("12").skew_sum(&p("1")).unwrap().compact(), "231");
    }

    #[test]
    fn components_round_trip() {
        let w = p("231457896");
        let comps = w.components();
        assert_eq!(compacts(&comps), vec!["231", "1", "1", "2341"]);
        let back = comps.iter().skip(1).fold(comps[0].clone(), |a, b| a.direct_sum(b));
        assert_eq!(back, w);
    }

    #[test]
    fn rejects_312() {
        assert!(Perm312::parse("312").is_err());
        assert!(Perm312::parse("2413").is_err());
        assert!(Perm312::parse("2431").is_ok());
    }

    #[test]
    fn small_move_sets() {
        assert_eq!(compacts(&tam_ungar_moves(&p("231"))), vec!["213", "231"]);
        assert_eq!(compacts(&tam_ungar_moves(&p("321"))), vec!["123", "132", "231", "321"]);
        assert_eq!(compacts(&tam_ungar_moves(&p("1"))), vec!["1"]);
    }

    #[test]
    fn worked_move_set() {
        let moves = tam_ungar_moves(&p("32568741"));
        assert_eq!(moves.len(), 16);
        let indec = moves.iter().filter(|y| y.is_indecomposable()).count();
        assert_eq!(indec, 8);
    }

    #[test]
    fn predicate_examples() {
        assert!(is_even_districted(&p("1")));
        assert!(is_even_districted(&p("231")));
        assert!(!is_even_districted(&p("321")));
        assert!(is_eeta_tam(&p("231")));
        assert!(!is_eeta_tam(&p("321")));
        assert!(is_eeta_tam(&p("2431")));
        for n in 1..8 {
            assert!(is_eeta_tam(&Perm312::identity(n)));
        }
    }

    #[test]
    fn enumeration_is_catalan() {
        let levels = enumerate_upto(10).unwrap();
        for (n, lvl) in levels.iter().enumerate() {
            assert_eq!(lvl.len() as u64, crate::catalan(n as u32));
            assert!(lvl.iter().all(|w| w.to_permutation().is_312_avoiding()));
        }
    }

    #[test]
    fn small_counts() {
        let got: Vec<u64> = (1..=4).map(|n| count_eeta_tam(n, Exec::Sequential).unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 4]);
    }

    #[test]
    fn predicate_matches_brute_force() {
        for n in 1..=7 {
            let elems = enumerate(n).unwrap();
            let labels = brute_force_labels(n).unwrap();
            for (w, l) in elems.iter().zip(labels) {
                assert_eq!(label_tam(w), l, "{w}");
            }
        }
    }

    #[test]
    fn explicit_lattice_agrees() {
        for n in 1..=5 {
            assert!(lattice_moves_agree(n).unwrap().is_empty());
            let (lat, elems) = tamari_lattice(n).unwrap();
            for (w, l) in elems.iter().zip(lat.solve()) {
                assert_eq!(label_tam(w), l);
            }
        }
    }

    #[test]
    fn projection_compat_small() {
        for n in 1..=6 {
            let (checked, bad) = pi_down_compat(n, Exec::Sequential).unwrap();
            assert_eq!(checked as u64, crate::catalan(n as u32));
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn series_head() {
        let (g, f) = g_f_series(12).unwrap();
        let g: Vec<BigInt> = g.integer_coeffs().unwrap();
        let want: Vec<BigInt> = [0, 1, 0, 1, 1, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(&g[..6], &want[..]);
        let f = f.integer_coeffs().unwrap();
        let want: Vec<BigInt> = [0, 1, 1, 2, 4].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(&f[..5], &want[..]);
        assert_eq!(g_recurrence(12), g[1..].to_vec());
    }

    #[test]
    fn counts_match_series() {
        let (_, f) = g_f_series(10).unwrap();
        let f = f.integer_coeffs().unwrap();
        for n in 1..=10 {
            assert_eq!(BigInt::from(count_eeta_tam(n, Exec::Parallel).unwrap()), f[n], "n={n}");
        }
    }

    #[test]
    fn quartic_vanishes() {
        let (_, f) = g_f_series(40).unwrap();
        assert!(quartic_residual(&f).is_zero());
        let q0 = quartic_residual(&TruncatedSeries::zero(5));
        assert_eq!(q0, TruncatedSeries::z(5));
    }

    #[test]
    fn growth_root_value() {
        let r = growth_root(1e-9).unwrap();
        assert!((r.value - 2.90511).abs() < 1e-4, "{}", r.value);
    }

    proptest! {
        #[test]
        fn moves_are_below_and_avoiding(idx in 0usize..1430) {
            let elems = enumerate(8).unwrap();
            let w = &elems[idx % elems.len()];
            let moves = tam_ungar_moves(w);
            prop_assert!(moves.contains(w));
            for y in &moves {
                prop_assert!(y.to_permutation().is_312_avoiding());
                prop_assert!(y.leq(w));
            }
        }

        #[test]
        fn product_law(a in 0usize..42, b in 0usize..14) {
            let e5 = enumerate(5).unwrap();
            let e4 = enumerate(4).unwrap();
            let (u, v) = (&e5[a], &e4[b]);
            prop_assert_eq!(is_eeta_tam(&u.direct_sum(v)), is_eeta_tam(u) && is_eeta_tam(v));
        }
    }
}
