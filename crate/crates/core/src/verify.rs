//! Verification suites: each suite is a list of named checks comparing a
//! closed-form description against brute force or a frozen value.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conjectures::{calibrate_ss, ss_check_with, yf_conjecture_check, SS_CALIBRATION_N};
use crate::dyck::{self, count_avoiding, RunClass};
use crate::formula::{self, all_assignments};
use crate::ideal::{check_deep_poset, sample_deep_instance};
use crate::lattice::{product, random_lattice, WinLabel};
use crate::par::Exec;
use crate::series::{asymptotic_gamma, bisect_root, growth_rate, poly_eval};
use crate::tamari;
use crate::weak::{self, Permutation, WeakLabeler};
use crate::young::{self, Partition};

/// `|E(S_n)|` for `n = 1..=9`.
pub const WEAK_EETA_COUNTS: [usize; 9] = [1, 1, 3, 7, 29, 115, 610, 3485, 22593];

pub const TYPE_A_GROWTH: f64 = 3.13040;
pub const TYPE_A_GAMMA: f64 = 0.79594;
pub const TAMARI_GROWTH: f64 = 2.90511;
pub const TAMARI_GAMMA: f64 = 1.04240;

/// Relative tolerance on coefficient-ratio growth estimates.
pub const GROWTH_REL_TOL: f64 = 0.01;
/// Relative tolerance on fitted leading constants.
pub const GAMMA_REL_TOL: f64 = 0.05;
/// Absolute tolerance on a bisected growth constant.
pub const ROOT_ABS_TOL: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Young,
    Rectangle,
    TypeA,
    Tamari,
    Weak,
    Lemmas,
    Formula,
    PiDown,
    Conjectures,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Young,
        Suite::Rectangle,
        Suite::TypeA,
        Suite::Tamari,
        Suite::Weak,
        Suite::Lemmas,
        Suite::Formula,
        Suite::PiDown,
        Suite::Conjectures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Young => "young",
            Suite::Rectangle => "rectangle",
            Suite::TypeA => "type-a",
            Suite::Tamari => "tamari",
            Suite::Weak => "weak",
            Suite::Lemmas => "lemmas",
            Suite::Formula => "formula",
            Suite::PiDown => "pi-down",
            Suite::Conjectures => "conjectures",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Problem sizes. `quick` is meant for interactive runs.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub young_max: usize,
    pub young_random: usize,
    pub young_random_max: usize,
    pub rect_series_max: usize,
    pub rect_oracle_max: usize,
    pub type_a_oracle_max: usize,
    pub series_order: usize,
    pub tamari_brute_max: usize,
    pub tamari_count_max: usize,
    pub quartic_order: usize,
    pub weak_max: usize,
    pub weak_full_table: bool,
    pub fuzz_lattices: usize,
    pub deep_instances: usize,
    pub formula_connectives: usize,
    pub pi_down_max: usize,
    pub yf_max_rank: usize,
    pub ss_max: usize,
}

impl Params {
    pub fn full() -> Self {
        Params {
            young_max: 12,
            young_random: 200,
            young_random_max: 16,
            rect_series_max: 8,
            rect_oracle_max: 4,
            type_a_oracle_max: 5,
            series_order: 400,
            tamari_brute_max: 8,
            tamari_count_max: 12,
            quartic_order: 60,
            weak_max: 9,
            weak_full_table: true,
            fuzz_lattices: 500,
            deep_instances: 200,
            formula_connectives: 3,
            pi_down_max: 7,
            yf_max_rank: 14,
            ss_max: 10,
        }
    }

    pub fn quick() -> Self {
        Params {
            young_max: 8,
            young_random: 40,
            young_random_max: 12,
            rect_series_max: 6,
            rect_oracle_max: 3,
            type_a_oracle_max: 4,
            series_order: 120,
            tamari_brute_max: 6,
            tamari_count_max: 9,
            quartic_order: 30,
            weak_max: 7,
            weak_full_table: false,
            fuzz_lattices: 100,
            deep_instances: 40,
            formula_connectives: 2,
            pi_down_max: 5,
            yf_max_rank: 10,
            ss_max: 6,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.detail,
            self.millis
        )
    }
}

struct Recorder {
    suite: Suite,
    out: Vec<Check>,
}

impl Recorder {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String), String>) {
        let start = Instant::now();
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.out.push(Check {
            suite: self.suite,
            name: name.to_string(),
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        });
    }
}

fn within(value: f64, target: f64, rel: f64) -> bool {
    ((value - target) / target).abs() <= rel
}

pub fn run_suite(suite: Suite, p: &Params, exec: Exec) -> Vec<Check> {
    let mut r = Recorder { suite, out: Vec::new() };
    match suite {
        Suite::Young => young_suite(&mut r, p, exec),
        Suite::Rectangle => rectangle_suite(&mut r, p, exec),
        Suite::TypeA => type_a_suite(&mut r, p, exec),
        Suite::Tamari => tamari_suite(&mut r, p, exec),
        Suite::Weak => weak_suite(&mut r, p, exec),
        Suite::Lemmas => lemma_suite(&mut r, p, exec),
        Suite::Formula => formula_suite(&mut r, p, exec),
        Suite::PiDown => pi_down_suite(&mut r, p, exec),
        Suite::Conjectures => conjecture_suite(&mut r, p, exec),
    }
    r.out
}

pub fn run_all(p: &Params, exec: Exec) -> Vec<Check> {
    Suite::ALL.iter().flat_map(|&s| run_suite(s, p, exec)).collect()
}

fn young_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("predicate = oracle on all in-scope intervals", || {
        let lams = young::partitions_up_to(p.young_max);
        let pairs: Vec<(Partition, Partition)> = lams
            .iter()
            .flat_map(|lam| {
                lams.iter()
                    .filter(|mu| young::in_scope(mu, lam))
                    .map(move |mu| (mu.clone(), lam.clone()))
            })
            .collect();
        let bad = exec.filter_map(&pairs, |(mu, lam)| {
            let pred = young::eeta_predicate_interval(mu, lam).ok()?;
            let oracle = young::oracle_label(mu, lam).ok()?;
            (pred != oracle).then(|| format!("[{mu}, {lam}]"))
        });
        Ok((
            bad.is_empty(),
            format!(
                "{} intervals with |lam| <= {}, {} mismatches {:?}",
                pairs.len(),
                p.young_max,
                bad.len(),
                bad.iter().take(3).collect::<Vec<_>>()
            ),
        ))
    });
    r.run("predicate = oracle on random intervals", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let pairs: Vec<_> = (0..p.young_random)
            .map(|_| young::sample_in_scope(&mut rng, p.young_random_max))
            .collect();
        let bad = exec.filter_map(&pairs, |(mu, lam)| {
            let pred = young::eeta_predicate_interval(mu, lam);
            let oracle = young::oracle_label(mu, lam);
            match (pred, oracle) {
                (Ok(a), Ok(b)) if a == b => None,
                _ => Some(format!("[{mu}, {lam}]")),
            }
        });
        let nonempty = pairs.iter().filter(|(mu, _)| !mu.is_empty()).count();
        Ok((
            bad.is_empty(),
            format!(
                "{} samples ({} with nonempty lower shape), {} mismatches",
                pairs.len(),
                nonempty,
                bad.len()
            ),
        ))
    });
}

fn rectangle_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("series coefficients = predicate counts", || {
        let bad = young::rectangle_gf_check(p.rect_series_max, p.rect_series_max, exec).map_err(|e| e.to_string())?;
        Ok((
            bad.is_empty(),
            format!("a, b <= {}, {} mismatches", p.rect_series_max, bad.len()),
        ))
    });
    r.run("series coefficients = brute-force counts", || {
        let gf = young::rectangle_gf(p.rect_oracle_max, p.rect_oracle_max).map_err(|e| e.to_string())?;
        let mut bad = Vec::new();
        for a in 0..=p.rect_oracle_max {
            for b in 0..=p.rect_oracle_max {
                let oracle = young::count_eeta_rectangle_oracle(a, b, exec).map_err(|e| e.to_string())?;
                if gf.coeff(a, b).to_integer() != BigInt::from(oracle) {
                    bad.push((a, b));
                }
            }
        }
        let two = young::count_eeta_rectangle_oracle(2, 2, exec).map_err(|e| e.to_string())?;
        Ok((
            bad.is_empty() && two == 4,
            format!("a, b <= {}, 2x2 count {two}, mismatches {bad:?}", p.rect_oracle_max),
        ))
    });
}

fn type_a_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("brute force = Dyck count = series", || {
        let series = dyck::type_a_eeta_counts(p.type_a_oracle_max).map_err(|e| e.to_string())?;
        let mut rows = Vec::new();
        let mut ok = true;
        for n in 1..=p.type_a_oracle_max {
            let oracle = dyck::type_a_eeta_count_oracle(n, exec).map_err(|e| e.to_string())?;
            let paths = count_avoiding(n + 1, RunClass::Weird, RunClass::Weird, exec).map_err(|e| e.to_string())?;
            ok &= BigInt::from(oracle) == series[n - 1] && oracle == paths;
            rows.push(format!("{oracle}/{paths}/{}", series[n - 1]));
        }
        ok &= series[0] == BigInt::from(1) && series.get(1).is_none_or(|c| *c == BigInt::from(2));
        Ok((ok, format!("n = 1..{}: {}", p.type_a_oracle_max, rows.join(", "))))
    });
    let counts = dyck::type_a_eeta_counts(p.series_order);
    r.run("growth rate within 1%", || {
        let counts = counts.as_ref().map_err(|e| e.to_string())?;
        let g = growth_rate(counts).map_err(|e| e.to_string())?;
        let root = bisect_root(&dyck::type_a_singularity_poly(), 0.25, 0.4, 1e-12).map_err(|e| e.to_string())?;
        let rho = 1.0 / root.value;
        Ok((
            within(g, TYPE_A_GROWTH, GROWTH_REL_TOL) && (rho - TYPE_A_GROWTH).abs() <= ROOT_ABS_TOL,
            format!(
                "ratio estimate {g:.5} at order {}, singularity {rho:.6}, target {TYPE_A_GROWTH}",
                p.series_order
            ),
        ))
    });
    r.run("leading constant within 5%", || {
        let counts = counts.as_ref().map_err(|e| e.to_string())?;
        let root = bisect_root(&dyck::type_a_singularity_poly(), 0.25, 0.4, 1e-12).map_err(|e| e.to_string())?;
        let fit = asymptotic_gamma(counts, 1.0 / root.value, 1).map_err(|e| e.to_string())?;
        Ok((
            within(fit.gamma, TYPE_A_GAMMA, GAMMA_REL_TOL),
            format!(
                "gamma {:.5} (correction {:.3}, {} points), target {TYPE_A_GAMMA}",
                fit.gamma, fit.correction, fit.points
            ),
        ))
    });
}

fn tamari_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("predicate = brute-force labels", || {
        let mut total = 0;
        let mut bad = Vec::new();
        for n in 1..=p.tamari_brute_max {
            let elems = tamari::enumerate(n).map_err(|e| e.to_string())?;
            let labels = tamari::brute_force_labels(n).map_err(|e| e.to_string())?;
            total += elems.len();
            for (w, l) in elems.iter().zip(labels) {
                if tamari::label_tam(w) != l {
                    bad.push(w.compact());
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{total} elements for n <= {}, {} mismatches",
                p.tamari_brute_max,
                bad.len()
            ),
        ))
    });
    r.run("predicate counts = series coefficients", || {
        let (_, f) = tamari::g_f_series(p.tamari_count_max).map_err(|e| e.to_string())?;
        let f = f.integer_coeffs().map_err(|e| e.to_string())?;
        let counts: Vec<u64> = (1..=p.tamari_count_max)
            .map(|n| tamari::count_eeta_tam(n, exec))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let ok = counts.iter().enumerate().all(|(i, &c)| f[i + 1] == BigInt::from(c)) && counts[..4] == [1, 1, 2, 4];
        Ok((ok, format!("{counts:?}")))
    });
    r.run("quartic identity", || {
        let (_, f) = tamari::g_f_series(p.quartic_order).map_err(|e| e.to_string())?;
        let res = tamari::quartic_residual(&f);
        Ok((
            res.is_zero(),
            format!("residual zero through z^{}: {}", p.quartic_order, res.is_zero()),
        ))
    });
    r.run("growth root", || {
        let root = tamari::growth_root(1e-9).map_err(|e| e.to_string())?;
        Ok((
            (root.value - TAMARI_GROWTH).abs() <= ROOT_ABS_TOL,
            format!("{:.6} ({} steps)", root.value, root.iterations),
        ))
    });
    r.run("leading constant within 5%", || {
        let root = tamari::growth_root(1e-12).map_err(|e| e.to_string())?;
        let fit = tamari::gamma_fit(p.series_order, root.value).map_err(|e| e.to_string())?;
        let near = bisect_root(&tamari::gamma_poly(), 1.0, 1.1, 1e-9).map_err(|e| e.to_string())?;
        let scale = poly_eval(&tamari::gamma_poly(), &near.lower);
        Ok((
            within(fit.gamma, TAMARI_GAMMA, GAMMA_REL_TOL),
            format!(
                "gamma {:.5} at order {}, nearest root of the stated polynomial {:.5} (value there {:.1e}), target {TAMARI_GAMMA}",
                fit.gamma,
                p.series_order,
                near.value,
                num_traits::ToPrimitive::to_f64(&scale).unwrap_or(f64::NAN)
            ),
        ))
    });
    r.run("explicit lattice agrees with recursion", || {
        let max = p.tamari_brute_max.min(6);
        let mut bad = 0;
        for n in 1..=max {
            bad += tamari::lattice_moves_agree(n).map_err(|e| e.to_string())?.len();
            let (lat, elems) = tamari::tamari_lattice(n).map_err(|e| e.to_string())?;
            bad += elems
                .iter()
                .zip(lat.solve())
                .filter(|(w, l)| tamari::label_tam(w) != *l)
                .count();
        }
        Ok((bad == 0, format!("n <= {max}, {bad} disagreements")))
    });
}

fn weak_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    let tables: Vec<_> = (1..=p.weak_max).map(|n| weak::solve_sn(n, exec)).collect();
    r.run("Eeta counts", || {
        let mut counts = Vec::new();
        for t in &tables {
            counts.push(t.as_ref().map_err(|e| e.to_string())?.count_eeta());
        }
        let ok = counts.iter().zip(WEAK_EETA_COUNTS).all(|(&a, b)| a == b);
        Ok((ok, format!("n = 1..{}: {counts:?}", p.weak_max)))
    });
    r.run("table = generic solver on the explicit lattice", || {
        let mut ok = true;
        for n in 1..=p.weak_max.min(6) {
            let lat = weak::weak_order_lattice(n).map_err(|e| e.to_string())?;
            let t = tables[n - 1].as_ref().map_err(|e| e.to_string())?;
            ok &= lat.solve().iter().enumerate().all(|(r, &l)| t.label_by_rank(r) == l);
        }
        Ok((ok, format!("n <= {}", p.weak_max.min(6))))
    });
    r.run("Eeta wins avoid 1324 and the B patterns", || {
        let mut worst = 0;
        let mut detail = Vec::new();
        for t in &tables {
            let t = t.as_ref().map_err(|e| e.to_string())?;
            let rep = weak::b_lemma_check(t, exec);
            worst += rep.violations.len();
            detail.push(format!("{}:{}", rep.n, rep.violations.len()));
        }
        Ok((worst == 0, format!("violations by n {}", detail.join(" "))))
    });
    r.run("3,10,9,8,4,7,2,5,1,6 is an Eeta win with 5 descents", || {
        let w = Permutation::parse("3,10,9,8,4,7,2,5,1,6").map_err(|e| e.to_string())?;
        let label = if p.weak_full_table {
            weak::solve_sn(10, exec).map_err(|e| e.to_string())?.label(&w)
        } else {
            WeakLabeler::new().label(&w)
        };
        let d = w.descents().len();
        Ok((label == WinLabel::Eeta && d == 5, format!("{label}, {d} descents")))
    });
}

fn lemma_suite(r: &mut Recorder, p: &Params, _exec: Exec) {
    r.run("every element has an Eeta win among its moves", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        let mut bad = 0;
        let mut rejected = 0;
        for k in 0..p.fuzz_lattices {
            let (l, rej) = random_lattice(&mut rng, 1 + k % 12);
            rejected += rej;
            let labels = l.solve();
            bad += (0..l.len())
                .filter(|&x| !l.ungar_moves(x).iter().any(|&y| labels[y].is_eeta()))
                .count();
        }
        Ok((
            bad == 0,
            format!(
                "{} lattices ({rejected} rejected candidates), {bad} violations",
                p.fuzz_lattices
            ),
        ))
    });
    r.run("product law", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut bad = 0;
        let mut sizes = 0;
        for k in 0..p.fuzz_lattices {
            let factors = 2 + k % 2;
            let parts: Vec<_> = (0..factors).map(|_| random_lattice(&mut rng, 5).0).collect();
            let mut prod = parts[0].clone();
            let mut labels: Vec<bool> = parts[0].solve().iter().map(|l| l.is_eeta()).collect();
            for q in &parts[1..] {
                let ql: Vec<bool> = q.solve().iter().map(|l| l.is_eeta()).collect();
                prod = product(&prod, q, 10_000).map_err(|e| e.to_string())?;
                labels = labels.iter().flat_map(|&a| ql.iter().map(move |&b| a && b)).collect();
            }
            sizes += prod.len();
            bad += prod
                .solve()
                .iter()
                .zip(&labels)
                .filter(|(l, &e)| l.is_eeta() != e)
                .count();
        }
        Ok((
            bad == 0,
            format!("{} products ({sizes} elements), {bad} violations", p.fuzz_lattices),
        ))
    });
    r.run("deep-poset theorem", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
        let mut bad = 0;
        let mut rejected = 0;
        for _ in 0..p.deep_instances {
            let (inst, rej) = sample_deep_instance(&mut rng, 14);
            rejected += rej;
            if !check_deep_poset(&inst.poset, inst.delta, inst.lam, inst.mu).map_err(|e| e.to_string())? {
                bad += 1;
            }
        }
        Ok((
            bad == 0,
            format!(
                "{} instances ({rejected} rejected candidates), {bad} violations",
                p.deep_instances
            ),
        ))
    });
}

fn formula_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("exhaustive equivalence", || {
        let rep = formula::exhaustive_check(p.formula_connectives, 3, exec);
        Ok((
            rep.failures.is_empty(),
            format!(
                "{} formulas, {} checks, {} failures",
                rep.formulas,
                rep.checks,
                rep.failures.len()
            ),
        ))
    });
    r.run("figure formula over all assignments", || {
        let f = formula::parse("(x1|(x2|~x3))&(x4|x5)").map_err(|e| e.to_string())?;
        let vars: Vec<String> = f.variables().into_iter().collect();
        let mut ok = 0;
        let all = all_assignments(&vars);
        for a in &all {
            ok += formula::check_equivalence(&f, a).map_err(|e| e.to_string())? as usize;
        }
        Ok((ok == all.len(), format!("{ok}/{} assignments", all.len())))
    });
    r.run("size accounting", || {
        let leaves: Vec<formula::Formula> = ["x1", "x2"].iter().map(|v| formula::Formula::var(v)).collect();
        let formulas = formula::enumerate_formulas(2, &leaves);
        let vars = vec!["x1".to_string(), "x2".to_string()];
        let mut bad = 0;
        for f in &formulas {
            for a in all_assignments(&vars) {
                let size = formula::compile(f, &a).map_err(|e| e.to_string())?.len();
                let (_, nots, ors, ands) = f.shape_counts();
                let leaf_sizes = leaf_size_sum(f, &a);
                if size != leaf_sizes + 7 * (ors + ands) + nots + 3 * ands {
                    bad += 1;
                }
            }
        }
        let or00 = formula::compile(
            &formula::parse("(0|0)").map_err(|e| e.to_string())?,
            &Default::default(),
        )
        .map_err(|e| e.to_string())?;
        let or_label = or00.solve()[or00.top()];
        Ok((
            bad == 0 && or00.len() == 11 && or_label == WinLabel::Atniss,
            format!(
                "{} formulas, {bad} off; (0|0) has {} elements, {or_label}",
                formulas.len(),
                or00.len()
            ),
        ))
    });
}

fn leaf_size_sum(f: &formula::Formula, a: &formula::Assignment) -> usize {
    use formula::Formula::*;
    match f {
        Var(_) | Const(_) => {
            if f.eval(a).unwrap_or(false) {
                1
            } else {
                2
            }
        }
        Not(x) => leaf_size_sum(x, a),
        Or(x, y) | And(x, y) => leaf_size_sum(x, a) + leaf_size_sum(y, a),
    }
}

fn pi_down_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("Tamari moves = projected weak-order moves", || {
        let mut checked = 0;
        let mut bad = 0;
        for n in 1..=p.pi_down_max {
            let (c, b) = tamari::pi_down_compat(n, exec).map_err(|e| e.to_string())?;
            checked += c;
            bad += b.len();
        }
        Ok((
            bad == 0,
            format!("{checked} elements for n <= {}, {bad} failures", p.pi_down_max),
        ))
    });
}

fn conjecture_suite(r: &mut Recorder, p: &Params, exec: Exec) {
    r.run("Young-Fibonacci counts by rank", || {
        let rep = yf_conjecture_check(p.yf_max_rank).map_err(|e| e.to_string())?;
        let bad: Vec<usize> = rep.iter().filter(|x| !x.matches).map(|x| x.n).collect();
        let computed: Vec<i64> = rep.iter().map(|x| x.computed).collect();
        Ok((
            bad.is_empty(),
            format!("n = 2..{}: {computed:?}, mismatched ranks {bad:?}", p.yf_max_rank),
        ))
    });
    // A counterexample is a finding to report, not a failed check; only a
    // failed calibration fails.
    r.run("shifted staircase string rule", || {
        let enc = calibrate_ss(SS_CALIBRATION_N, exec).map_err(|e| e.to_string())?;
        let mut detail = vec![format!("encoding: {enc}")];
        let mut refuted = Vec::new();
        for n in 1..=p.ss_max {
            let rep = ss_check_with(n, enc, exec).map_err(|e| e.to_string())?;
            if !rep.matches {
                refuted.push(n);
            }
            detail.push(format!(
                "n={n}: {}/{} Eeta, {} mismatches",
                rep.eeta,
                rep.states,
                rep.mismatches.len()
            ));
        }
        detail.push(if refuted.is_empty() {
            "rule holds".to_string()
        } else {
            format!("rule fails at n = {refuted:?}")
        });
        Ok((true, detail.join("; ")))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn within_is_relative() {
        assert!(within(101.0, 100.0, 0.01));
        assert!(!within(102.0, 100.0, 0.01));
    }
}
