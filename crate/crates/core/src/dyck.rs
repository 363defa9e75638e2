//! Dyck paths, run classes, and the type-A root poset.
//!
//! An order ideal `lam \ δ_{n-1}` of the type-`A_n` root poset is encoded
//! as a Dyck path of semilength `n + 1`; it is an Eeta win exactly when that
//! path has no weird ascending run immediately followed by a weird
//! descending run. Counting such paths is done both by brute force and
//! through a system of five functional equations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::ideal::PosetError;
use crate::par::Exec;
use crate::series::{self, fixpoint_solve, SeriesError, TruncatedSeries};
use crate::young::{maximal_lpaths, no_odd_odd, partition_of_path, path_of, LatticePath, Partition, Step};

pub const MAX_SEMILENGTH: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DyckError {
    #[error("not a Dyck path: {0}")]
    NotDyck(String),
    #[error("semilength {0} exceeds the brute-force limit of 16")]
    SizeLimit(usize),
    #[error("{lam} is not between the staircase of side {n}-1 and the square of side {n}")]
    ShapeOutOfRange { lam: String, n: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A Dyck path; `true` is an up step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckPath(Vec<bool>);

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self, DyckError> {
        let mut h: i64 = 0;
        for &s in &steps {
            h += if s { 1 } else { -1 };
            if h < 0 {
                break;
            }
        }
        if h != 0 {
            return Err(DyckError::NotDyck(word(&steps)));
        }
        Ok(DyckPath(steps))
    }

    /// Parses a word over `U` and `D`; spaces and bars are ignored.
    pub fn parse(s: &str) -> Result<Self, DyckError> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '|')
            .map(|c| match c {
                'U' => Ok(true),
                'D' => Ok(false),
                _ => Err(DyckError::NotDyck(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[bool] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }
}

fn word(steps: &[bool]) -> String {
    steps.iter().map(|&s| if s { 'U' } else { 'D' }).collect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word(&self.0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunAnnotation {
    pub ascending: bool,
    /// Index of the first step.
    pub start: usize,
    pub len: usize,
    pub odd: bool,
    /// The run starts or ends at height 0.
    pub touches_axis: bool,
    /// The run contains the first or the last step of the path.
    pub boundary: bool,
    pub weird: bool,
    pub strange: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RunClass {
    Odd,
    Weird,
    Strange,
}

impl RunClass {
    fn holds(self, r: &RunAnnotation) -> bool {
        match self {
            RunClass::Odd => r.odd,
            RunClass::Weird => r.weird,
            RunClass::Strange => r.strange,
        }
    }
}

impl std::str::FromStr for RunClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "odd" => Ok(RunClass::Odd),
            "weird" => Ok(RunClass::Weird),
            "strange" => Ok(RunClass::Strange),
            _ => Err(format!("unknown run class {s:?}")),
        }
    }
}

fn annotate(steps: &[bool]) -> Vec<RunAnnotation> {
    let total = steps.len();
    let mut out = Vec::new();
    let mut i = 0;
    let mut h: i64 = 0;
    while i < total {
        let up = steps[i];
        let start_h = h;
        let mut j = i;
        while j < total && steps[j] == up {
            h += if up { 1 } else { -1 };
            j += 1;
        }
        let len = j - i;
        let odd = len % 2 == 1;
        let touches_axis = start_h == 0 || h == 0;
        let boundary = i == 0 || j == total;
        out.push(RunAnnotation {
            ascending: up,
            start: i,
            len,
            odd,
            touches_axis,
            boundary,
            weird: odd != touches_axis,
            strange: odd != boundary,
        });
        i = j;
    }
    out
}

pub fn classify_runs(p: &DyckPath) -> Vec<RunAnnotation> {
    annotate(&p.0)
}

fn avoids(steps: &[bool], asc: RunClass, desc: RunClass) -> bool {
    let runs = annotate(steps);
    !runs
        .windows(2)
        .any(|w| w[0].ascending && asc.holds(&w[0]) && desc.holds(&w[1]))
}

/// Whether `p` has no `asc` ascending run immediately followed by a `desc`
/// descending run.
pub fn is_avoiding(p: &DyckPath, asc: RunClass, desc: RunClass) -> bool {
    avoids(&p.0, asc, desc)
}

/// All Dyck paths of semilength `n`, in lexicographic order with `U < D`.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(2 * n);
    complete(n, &mut cur, &mut |s| out.push(DyckPath(s.to_vec())));
    out
}

fn complete(n: usize, cur: &mut Vec<bool>, f: &mut dyn FnMut(&[bool])) {
    if cur.len() == 2 * n {
        f(cur);
        return;
    }
    let ups = cur.iter().filter(|&&s| s).count();
    let h = 2 * ups - cur.len();
    if ups < n {
        cur.push(true);
        complete(n, cur, f);
        cur.pop();
    }
    if h > 0 {
        cur.push(false);
        complete(n, cur, f);
        cur.pop();
    }
}

/// Brute-force count of `(asc, desc)`-avoiding paths of semilength `n`.
pub fn count_avoiding(n: usize, asc: RunClass, desc: RunClass, exec: Exec) -> Result<u64, DyckError> {
    if n > MAX_SEMILENGTH {
        return Err(DyckError::SizeLimit(n));
    }
    // Fan out over valid prefixes; each worker completes its prefix.
    let split = (2 * n).min(12);
    let mut prefixes: Vec<Vec<bool>> = Vec::new();
    prefix_rec(n, split, &mut Vec::new(), &mut prefixes);
    let counts = exec.map(&prefixes, |prefix| {
        let mut cur = prefix.clone();
        let mut count = 0u64;
        complete(n, &mut cur, &mut |s| {
            if avoids(s, asc, desc) {
                count += 1;
            }
        });
        count
    });
    Ok(counts.iter().sum())
}

fn prefix_rec(n: usize, len: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let ups = cur.iter().filter(|&&s| s).count();
    let h = 2 * ups - cur.len();
    if ups < n {
        cur.push(true);
        prefix_rec(n, len, cur, out);
        cur.pop();
    }
    if h > 0 {
        cur.push(false);
        prefix_rec(n, len, cur, out);
        cur.pop();
    }
}

/// The five generating functions, indexed by avoided run-class pair.
#[derive(Clone, Debug)]
pub struct DyckSystem {
    /// (odd, odd)
    pub odd_odd: TruncatedSeries,
    /// (weird, weird)
    pub weird_weird: TruncatedSeries,
    /// (strange, strange)
    pub strange_strange: TruncatedSeries,
    /// (odd, strange)
    pub odd_strange: TruncatedSeries,
    /// (strange, odd)
    pub strange_odd: TruncatedSeries,
}

impl DyckSystem {
    pub fn by_class(&self, asc: RunClass, desc: RunClass) -> Option<&TruncatedSeries> {
        use RunClass::*;
        match (asc, desc) {
            (Odd, Odd) => Some(&self.odd_odd),
            (Weird, Weird) => Some(&self.weird_weird),
            (Strange, Strange) => Some(&self.strange_strange),
            (Odd, Strange) => Some(&self.odd_strange),
            (Strange, Odd) => Some(&self.strange_odd),
            _ => None,
        }
    }
}

/// Solves the first-return equations for the five avoidance classes.
///
/// With `F, Fw, Fs, G, H` the (odd,odd), (weird,weird), (strange,strange),
/// (odd,strange) and (strange,odd) series:
/// `Fw = 1 + z F Fw`, `F = 1 + z (Fs - 1) F`, `Fs = 1 + z F + z G (G - 1)`,
/// `G = 1 + z H + z (Fs - 1)(G - 1)` and `H = G`. The last equation is
/// applied to the freshly computed `G` so that the map stays contracting.
pub fn gf_system_series(order: usize) -> Result<DyckSystem, SeriesError> {
    let seed = vec![TruncatedSeries::one(0); 5];
    let sol = fixpoint_solve(
        |x| {
            let (f, fw, fs, g, h) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
            let n = f.order();
            let one = TruncatedSeries::one(n);
            let fs1 = fs - &one;
            let g1 = g - &one;
            let new_fw = &one + &(f * fw).shift(1);
            let new_f = &one + &(&fs1 * f).shift(1);
            let new_fs = &one + &(f + &(g * &g1)).shift(1);
            let new_g = &one + &(h + &(&fs1 * &g1)).shift(1);
            let new_h = new_g.clone();
            vec![new_f, new_fw, new_fs, new_g, new_h]
        },
        &seed,
        order,
    )?;
    let mut it = sol.into_iter();
    Ok(DyckSystem {
        odd_odd: it.next().unwrap(),
        weird_weird: it.next().unwrap(),
        strange_strange: it.next().unwrap(),
        odd_strange: it.next().unwrap(),
        strange_odd: it.next().unwrap(),
    })
}

/// `|E(J(Φ+(A_n)))|` for `n = 1..=max_n`, from the (weird,weird) series.
pub fn type_a_eeta_counts(max_n: usize) -> Result<Vec<BigInt>, SeriesError> {
    let sys = gf_system_series(max_n + 1)?;
    let c = sys.weird_weird.integer_coeffs()?;
    Ok(c[2..].to_vec())
}

pub fn type_a_eeta_count(n: usize) -> Result<BigInt, SeriesError> {
    Ok(type_a_eeta_counts(n)?[n - 1].clone())
}

/// Brute-force `|E(J(Φ+(A_n)))|`.
pub fn type_a_eeta_count_oracle(n: usize, exec: Exec) -> Result<u64, DyckError> {
    let poset = crate::ideal::FinitePoset::type_a_root(n)?;
    Ok(crate::ideal::count_eeta_ideals(&poset, exec)? as u64)
}

fn check_type_a_shape(lam: &Partition, n: usize) -> Result<(), DyckError> {
    let ok = n >= 1 && Partition::rectangle(n, n).contains(lam) && lam.contains(&Partition::staircase(n - 1));
    if ok {
        Ok(())
    } else {
        Err(DyckError::ShapeOutOfRange {
            lam: lam.to_string(),
            n,
        })
    }
}

/// `path(lam)` padded to run corner to corner of the `n × n` square.
pub fn padded_path(lam: &Partition, n: usize) -> Result<LatticePath, DyckError> {
    check_type_a_shape(lam, n)?;
    let p = path_of(lam);
    let north = p.steps().iter().filter(|&&s| s == Step::N).count();
    let east = p.steps().len() - north;
    let mut steps = vec![Step::N; n - north];
    steps.extend_from_slice(p.steps());
    steps.extend(std::iter::repeat_n(Step::E, n - east));
    Ok(LatticePath(steps))
}

/// `U path' D` with east steps read as up steps and north steps as down.
pub fn type_a_encode(lam: &Partition, n: usize) -> Result<DyckPath, DyckError> {
    let p = padded_path(lam, n)?;
    let mut steps = vec![true];
    steps.extend(p.steps().iter().map(|&s| s == Step::E));
    steps.push(false);
    DyckPath::new(steps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAPiece {
    pub path: LatticePath,
    pub shape: Partition,
    pub size: usize,
}

/// Splits the padded path at its diagonal steps (north from `(k, k)` or
/// east into `(k, k)`); each remaining piece is the boundary of a smaller
/// shape containing the staircase of its own side.
pub fn type_a_decompose(lam: &Partition, n: usize) -> Result<Vec<TypeAPiece>, DyckError> {
    let p = padded_path(lam, n)?;
    let mut pieces = Vec::new();
    let mut cur = Vec::new();
    let (mut x, mut y) = (0usize, 0usize);
    for &s in p.steps() {
        let diagonal = match s {
            Step::N => x == y,
            Step::E => y == x + 1,
        };
        if diagonal {
            if !cur.is_empty() {
                pieces.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(s);
        }
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
        }
    }
    if !cur.is_empty() {
        pieces.push(cur);
    }
    pieces
        .into_iter()
        .map(|steps| {
            let path = LatticePath(steps);
            let shape = partition_of_path(&path).expect("pieces are partition boundaries");
            let size = shape.len();
            Ok(TypeAPiece { path, shape, size })
        })
        .collect()
}

/// Label of `lam \ δ_{n-1}` from its pieces: Eeta iff no piece has an
/// (odd, odd) corner.
pub fn type_a_label_by_pieces(lam: &Partition, n: usize) -> Result<crate::WinLabel, DyckError> {
    let pieces = type_a_decompose(lam, n)?;
    let eeta = pieces
        .iter()
        .all(|pc| no_odd_odd(&maximal_lpaths(&pc.path).expect("pieces are partition boundaries")));
    Ok(crate::WinLabel::from_eeta(eeta))
}

/// Diagnostic for the closed form printed for the type-A series.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub order: usize,
    /// `|E(J(Φ+(A_n)))|` for `n = 1..`.
    pub counts: Vec<BigInt>,
    /// First nonzero coefficient of the squared-out residual, if any.
    pub first_nonzero: Option<(usize, BigInt)>,
    pub residual_prefix: Vec<BigInt>,
    pub growth_estimate: Option<f64>,
}

impl fmt::Display for RadicalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.counts.iter().take(10).map(ToString::to_string).collect();
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "W = sum |E_n| z^n begins: {}", head.join(", "))?;
        let res: Vec<String> = self.residual_prefix.iter().map(ToString::to_string).collect();
        writeln!(f, "residual coefficients (z^0..): {}", res.join(", "))?;
        match &self.first_nonzero {
            Some((k, c)) => writeln!(f, "first nonzero residual coefficient: {c} at z^{k}")?,
            None => writeln!(f, "residual vanishes through z^{}", self.order)?,
        }
        if let Some(g) = self.growth_estimate {
            writeln!(f, "coefficient growth estimate: {g:.5}")?;
        }
        Ok(())
    }
}

/// Substitutes `W` into `((2zW + 1 + 2z)^2 - (z^2 - 4z + 2))^2 - 4(1 - 4z + 4z^2 - 4z^3)`,
/// which vanishes identically if `W` equals the printed nested radical
/// under any choice of branches.
pub fn radical_report(order: usize) -> Result<RadicalReport, SeriesError> {
    let sys = gf_system_series(order + 1)?;
    let fw = sys.weird_weird.integer_coeffs()?;
    let counts: Vec<BigInt> = fw[2..].to_vec();
    let mut wc = vec![BigInt::zero()];
    wc.extend(counts.iter().cloned());
    let w = TruncatedSeries::from_rationals(
        wc.into_iter().map(num_rational::BigRational::from_integer).collect(),
        order,
    );
    let inner = &(&w.shift(1).scale(&num_rational::BigRational::from_integer(2.into()))
        + &TruncatedSeries::from_ints(&[1, 2], order))
        .pow(2)
        - &TruncatedSeries::from_ints(&[2, -4, 1], order);
    let residual = &inner.pow(2) - &TruncatedSeries::from_ints(&[4, -16, 16, -16], order);
    let rc = residual.integer_coeffs()?;
    let first_nonzero = rc
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()));
    let growth_estimate = series::growth_rate(&counts[..order.min(counts.len())]).ok();
    Ok(RadicalReport {
        order,
        residual_prefix: rc.iter().take(8).cloned().collect(),
        counts,
        first_nonzero,
        growth_estimate,
    })
}

/// `1 - 4z + 4z^2 - 4z^3`, whose smallest positive root is the reciprocal
/// growth rate of the type-A counts.
pub fn type_a_singularity_poly() -> Vec<num_rational::BigRational> {
    [1, -4, 4, -4]
        .iter()
        .map(|&c| num_rational::BigRational::from_integer(c.into()))
        .collect()
}

/// Counts as `u64`, for small tables.
pub fn to_u64(v: &[BigInt]) -> Vec<u64> {
    v.iter().map(|c| c.to_u64().expect("fits in u64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::WinLabel;
    use proptest::prelude::*;

    #[test]
    fn run_classification_example() {
        let p = DyckPath::parse("U|D|UU|D|U|DD|UUUU|DDDD").unwrap();
        let runs = classify_runs(&p);
        let weird: Vec<usize> = runs
            .iter()
            .enumerate()
            .filter(|(_, r)| r.weird)
            .map(|(i, _)| i)
            .collect();
        let strange: Vec<usize> = runs
            .iter()
            .enumerate()
            .filter(|(_, r)| r.strange)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(weird, vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(strange, vec![1, 3, 4, 7]);

        let ud = classify_runs(&DyckPath::parse("UD").unwrap());
        assert!(ud.iter().all(|r| !r.weird && !r.strange));
        let uudd = classify_runs(&DyckPath::parse("UUDD").unwrap());
        assert!(uudd.iter().all(|r| r.weird && r.strange));
        assert!(DyckPath::parse("DU").is_err());
        assert!(DyckPath::parse("UUD").is_err());
    }

    #[test]
    fn brute_force_counts() {
        use RunClass::*;
        assert_eq!(count_avoiding(1, Odd, Odd, Exec::Sequential).unwrap(), 0);
        assert_eq!(count_avoiding(2, Odd, Odd, Exec::Sequential).unwrap(), 1);
        let ww: Vec<u64> = (0..=3)
            .map(|n| count_avoiding(n, Weird, Weird, Exec::Parallel).unwrap())
            .collect();
        assert_eq!(ww, vec![1, 1, 1, 2]);
        assert_eq!(
            count_avoiding(17, Odd, Odd, Exec::Sequential),
            Err(DyckError::SizeLimit(17))
        );
        assert_eq!(all_dyck_paths(5).len() as u64, crate::catalan(5));
    }

    #[test]
    fn system_matches_brute_force() {
        use RunClass::*;
        let sys = gf_system_series(10).unwrap();
        let pairs = [
            (Odd, Odd),
            (Weird, Weird),
            (Strange, Strange),
            (Odd, Strange),
            (Strange, Odd),
        ];
        for (a, d) in pairs {
            let s = to_u64(&sys.by_class(a, d).unwrap().integer_coeffs().unwrap());
            for n in 0..=10 {
                assert_eq!(
                    s[n],
                    count_avoiding(n, a, d, Exec::Parallel).unwrap(),
                    "{a:?},{d:?} n={n}"
                );
                assert!(s[n] <= crate::catalan(n as u32));
            }
        }
        let f = to_u64(&sys.odd_odd.integer_coeffs().unwrap());
        assert_eq!(&f[..4], &[1, 0, 1, 1]);
        let fw = to_u64(&sys.weird_weird.integer_coeffs().unwrap());
        assert_eq!(&fw[..4], &[1, 1, 1, 2]);
    }

    #[test]
    fn type_a_counts_small() {
        let c = to_u64(&type_a_eeta_counts(5).unwrap());
        for n in 1..=5 {
            assert_eq!(c[n - 1], type_a_eeta_count_oracle(n, Exec::Sequential).unwrap());
        }
        assert_eq!(&c[..2], &[1, 2]);
    }

    #[test]
    fn encoding_examples() {
        let lam = Partition::parse("11,11,11,10,10,6,6,4,3,3,3,1").unwrap();
        assert_eq!(padded_path(&lam, 12).unwrap().to_string(), "ENEENNNENEENNEEEENNENNNE");
        assert_eq!(
            type_a_encode(&lam, 12).unwrap().to_string(),
            "UUDUUDDDUDUUDDUUUUDDUDDDUD"
        );
        let pieces = type_a_decompose(&lam, 12).unwrap();
        let paths: Vec<String> = pieces.iter().map(|p| p.path.to_string()).collect();
        assert_eq!(paths, vec!["ENEENN", "EN", "EEENNENN"]);
        let shapes: Vec<String> = pieces.iter().map(|p| p.shape.to_string()).collect();
        assert_eq!(shapes, vec!["(3,3,1)", "(1)", "(4,4,3,3)"]);
        let sizes: Vec<usize> = pieces.iter().map(|p| p.size).collect();
        assert_eq!(sizes, vec![3, 1, 4]);
        assert_eq!(type_a_label_by_pieces(&lam, 12).unwrap(), WinLabel::Atniss);

        assert_eq!(
            type_a_encode(&Partition::parse("1").unwrap(), 1).unwrap().to_string(),
            "UUDD"
        );
        assert_eq!(type_a_encode(&Partition::empty(), 1).unwrap().to_string(), "UDUD");
        assert!(type_a_decompose(&Partition::staircase(3), 4).unwrap().is_empty());
        assert!(matches!(
            type_a_encode(&Partition::parse("1").unwrap(), 3),
            Err(DyckError::ShapeOutOfRange { .. })
        ));
    }

    #[test]
    fn encodings_agree_with_oracle() {
        use crate::ideal::{FinitePoset, IdealGame};
        for n in 1..=5 {
            let poset = FinitePoset::type_a_root(n).unwrap();
            let stair = Partition::staircase(n - 1);
            for lam in crate::young::partitions_in_box(n, n) {
                if !lam.contains(&stair) {
                    continue;
                }
                let sub = FinitePoset::skew(&lam, &stair).unwrap();
                let oracle = IdealGame::new(&sub).label(sub.full()).unwrap();
                let d = type_a_encode(&lam, n).unwrap();
                assert_eq!(d.semilength(), n + 1);
                let by_path = WinLabel::from_eeta(is_avoiding(&d, RunClass::Weird, RunClass::Weird));
                assert_eq!(by_path, oracle, "lam={lam} n={n}");
                assert_eq!(type_a_label_by_pieces(&lam, n).unwrap(), oracle);
                for pc in type_a_decompose(&lam, n).unwrap() {
                    assert!(pc.shape.contains(&Partition::staircase(pc.size)));
                }
                let _ = &poset;
            }
        }
    }

    #[test]
    fn radical_residual_is_reported() {
        let r = radical_report(30).unwrap();
        assert_eq!(to_u64(&r.counts[..2]), vec![1, 2]);
        assert_eq!(r.first_nonzero, Some((0, BigInt::from(-3))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn reversal_swaps_classes(n in 0usize..=9) {
            use RunClass::*;
            prop_assert_eq!(
                count_avoiding(n, Odd, Strange, Exec::Parallel).unwrap(),
                count_avoiding(n, Strange, Odd, Exec::Parallel).unwrap()
            );
        }
    }
}
