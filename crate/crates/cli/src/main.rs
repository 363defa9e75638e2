use std::fs;
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use ungar::conjectures::{self, ss_predicate, CountReport, SsReport};
use ungar::formula::{self, Formula};
use ungar::lattice::{FiniteLattice, LatticeFile};
use ungar::verify::{self, Params, Suite};
use ungar::{dyck, tamari, weak, young, Exec};

mod play;

/// Version of the `--json` output layout.
const JSON_SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "ungar",
    version,
    about = "Solve, count and play Ungar games on finite lattices"
)]
struct Cli {
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Label every element of a lattice given as a JSON file {n, covers, labels?}.
    SolveLattice {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count Eeta wins in one lattice of a family.
    Count {
        #[arg(long, value_enum)]
        family: Family,
        /// Size for weak, tamari and typea.
        #[arg(long)]
        n: Option<usize>,
        /// Rectangle rows.
        #[arg(long)]
        a: Option<usize>,
        /// Rectangle columns.
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Eeta counts for n = 1..=order from the generating function, as a
    /// JSON array of decimal strings.
    Series {
        #[arg(long, value_enum)]
        which: SeriesKind,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Smaller problem sizes.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the lattice of a formula under an assignment and compare its
    /// game value with the truth value.
    CompileFormula {
        #[arg(long)]
        formula: String,
        /// Variable values such as `x=1,y=0`.
        #[arg(long, default_value = "")]
        assign: String,
        /// Write the lattice to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check one of the conjectured counting rules.
    Conjecture {
        #[arg(long, value_enum)]
        which: ConjectureKind,
        /// Highest rank for the Young-Fibonacci check.
        #[arg(long, default_value_t = 14)]
        max_rank: usize,
        /// Staircase size for the shifted-staircase check.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Play against the engine in the terminal.
    Play {
        #[arg(value_enum)]
        family: PlayFamily,
        /// Outer shape for skew, e.g. `3,2,2`.
        #[arg(long)]
        lam: Option<String>,
        /// Inner shape for skew.
        #[arg(long)]
        mu: Option<String>,
        /// Size for tamari and weak.
        #[arg(long)]
        n: Option<usize>,
        /// Lattice JSON file for `file`.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Let the engine make the first move.
        #[arg(long)]
        engine_first: bool,
    },
    /// Serve the HTTP game API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Weak,
    Rectangle,
    Tamari,
    Typea,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Typea,
    Tamari,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureKind {
    Yf,
    Ss,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlayFamily {
    Skew,
    Tamari,
    Weak,
    File,
}

/// How a run ended; `Usage` covers bad flag values found after parsing.
enum Failure {
    Usage(String),
    Check,
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let result = match cli.command {
        Command::SolveLattice { file, json } => solve_lattice(&file, json),
        Command::Count { family, n, a, b, json } => count(family, n, a, b, json, exec),
        Command::Series { which, order } => series(which, order),
        Command::Verify { suite, quick, json } => run_verify(&suite, quick, json, exec),
        Command::CompileFormula {
            formula,
            assign,
            emit,
            json,
        } => compile_formula(&formula, &assign, emit, json),
        Command::Conjecture {
            which,
            max_rank,
            n,
            json,
        } => conjecture(which, max_rank, n, json, exec),
        Command::Play {
            family,
            lam,
            mu,
            n,
            file,
            engine_first,
        } => start_play(family, lam, mu, n, file, engine_first),
        Command::Serve { port, host } => serve(SocketAddr::new(host, port)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn read_lattice(path: &PathBuf) -> Result<FiniteLattice, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let file: LatticeFile = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    FiniteLattice::from_file(&file).map_err(usage)
}

fn solve_lattice(path: &PathBuf, as_json: bool) -> Outcome {
    let lattice = read_lattice(path)?;
    let labels = lattice.solve();
    let eeta: Vec<usize> = (0..lattice.len()).filter(|&x| labels[x].is_eeta()).collect();
    let top = labels[lattice.top()];
    if as_json {
        print_json(&json!({
            "schema": JSON_SCHEMA,
            "n": lattice.len(),
            "top": lattice.top(),
            "top_label": top,
            "labels": labels,
            "eeta": eeta,
        }));
        return Ok(());
    }
    let width = (0..lattice.len())
        .map(|x| lattice.label_of(x).len())
        .max()
        .unwrap_or(1)
        .max(7);
    println!("{:>5}  {:<width$}  label", "index", "element");
    for (x, l) in labels.iter().enumerate() {
        println!("{x:>5}  {:<width$}  {l}", lattice.label_of(x));
    }
    println!(
        "top {} is {}; {} of {} elements are Eeta wins",
        lattice.label_of(lattice.top()),
        top,
        eeta.len(),
        lattice.len()
    );
    Ok(())
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("--{flag} is required for {family}")))
}

fn count(family: Family, n: Option<usize>, a: Option<usize>, b: Option<usize>, as_json: bool, exec: Exec) -> Outcome {
    let (name, params, value): (&str, Value, BigInt) = match family {
        Family::Weak => {
            let n = need(n, "n", "weak")?;
            (
                "weak",
                json!({ "n": n }),
                weak::count_eeta_sn(n, exec).map_err(usage)?.into(),
            )
        }
        Family::Tamari => {
            let n = need(n, "n", "tamari")?;
            (
                "tamari",
                json!({ "n": n }),
                tamari::count_eeta_tam(n, exec).map_err(usage)?.into(),
            )
        }
        Family::Typea => {
            let n = need(n, "n", "typea")?;
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            ("typea", json!({ "n": n }), dyck::type_a_eeta_count(n).map_err(usage)?)
        }
        Family::Rectangle => {
            let a = need(a, "a", "rectangle")?;
            let b = need(b, "b", "rectangle")?;
            (
                "rectangle",
                json!({ "a": a, "b": b }),
                young::count_eeta_rectangle(a, b).into(),
            )
        }
    };
    if as_json {
        print_json(&json!({
            "schema": JSON_SCHEMA,
            "family": name,
            "params": params,
            "count": value.to_string(),
        }));
    } else {
        println!("{value}");
    }
    Ok(())
}

fn series(which: SeriesKind, order: usize) -> Outcome {
    if order == 0 {
        return Err(usage("--order must be positive"));
    }
    let counts: Vec<BigInt> = match which {
        SeriesKind::Typea => dyck::type_a_eeta_counts(order).map_err(usage)?,
        SeriesKind::Tamari => {
            let (_, f) = tamari::g_f_series(order).map_err(usage)?;
            f.integer_coeffs().map_err(usage)?[1..].to_vec()
        }
    };
    let strings: Vec<String> = counts.iter().map(ToString::to_string).collect();
    println!("{}", serde_json::to_string(&strings).expect("serializable"));
    Ok(())
}

fn run_verify(suite: &str, quick: bool, as_json: bool, exec: Exec) -> Outcome {
    let params = if quick { Params::quick() } else { Params::full() };
    let checks = if suite == "all" {
        verify::run_all(&params, exec)
    } else {
        let s: Suite = suite.parse().map_err(|e: String| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            usage(format!("{e}; expected all or one of {}", names.join(", ")))
        })?;
        verify::run_suite(s, &params, exec)
    };
    let failed = checks.iter().filter(|c| !c.passed).count();
    if as_json {
        print_json(&json!({
            "schema": JSON_SCHEMA,
            "suite": suite,
            "quick": quick,
            "passed": failed == 0,
            "checks": checks,
        }));
    } else {
        for c in &checks {
            println!("{c}");
        }
        println!("{} checks, {} failed", checks.len(), failed);
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn compile_formula(text: &str, assign: &str, emit: Option<PathBuf>, as_json: bool) -> Outcome {
    let f: Formula = formula::parse(text).map_err(usage)?;
    let a = formula::parse_assignment(assign).map_err(usage)?;
    let truth = f.eval(&a).map_err(usage)?;
    let lattice = formula::compile(&f, &a).map_err(usage)?;
    let predicted = formula::compiled_size(&f, &a).map_err(usage)?;
    let top = lattice.solve()[lattice.top()];
    let agrees = top.is_eeta() == truth;
    if let Some(path) = &emit {
        let text = serde_json::to_string_pretty(&lattice.to_file()).expect("serializable");
        fs::write(path, text + "\n").map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if as_json {
        print_json(&json!({
            "schema": JSON_SCHEMA,
            "formula": f.to_string(),
            "assignment": a,
            "truth": truth,
            "size": lattice.len(),
            "predicted_size": predicted,
            "top_label": top,
            "agrees": agrees,
        }));
    } else {
        println!("formula     {f}");
        println!("truth value {}", truth as u8);
        println!("size        {} (predicted {predicted})", lattice.len());
        println!("top         {top}");
        println!("agrees      {}", if agrees { "yes" } else { "no" });
        if let Some(path) = &emit {
            println!("wrote       {}", path.display());
        }
    }
    if agrees && predicted == lattice.len() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn conjecture(which: ConjectureKind, max_rank: usize, n: usize, as_json: bool, exec: Exec) -> Outcome {
    match which {
        ConjectureKind::Yf => {
            if max_rank < 2 {
                return Err(usage("--max-rank must be at least 2"));
            }
            let reports: Vec<CountReport> = conjectures::yf_conjecture_check(max_rank).map_err(usage)?;
            if as_json {
                print_json(&json!(reports));
            } else {
                println!("{:>4} {:>9} {:>9}  match", "rank", "computed", "predicted");
                for r in &reports {
                    println!("{:>4} {:>9} {:>9}  {}", r.n, r.computed, r.predicted, yes_no(r.matches));
                }
            }
        }
        ConjectureKind::Ss => {
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            let report: SsReport = conjectures::ss_conjecture_check(n, exec).map_err(usage)?;
            // Each mismatch moves the predicted count by one, in the
            // direction the predicate points.
            let predicted =
                report.mismatches.iter().fold(
                    report.eeta as i64,
                    |acc, s| if ss_predicate(s) { acc + 1 } else { acc - 1 },
                );
            if as_json {
                print_json(&json!({
                    "n": report.n,
                    "computed": report.eeta,
                    "predicted": predicted,
                    "match": report.matches,
                    "states": report.states,
                    "encoding": report.encoding,
                    "mismatches": report.mismatches,
                }));
            } else {
                println!("encoding   {}", report.encoding);
                println!("ideals     {}", report.states);
                println!("computed   {}", report.eeta);
                println!("predicted  {predicted}");
                println!("match      {}", yes_no(report.matches));
                for s in &report.mismatches {
                    println!("mismatch   {s}");
                }
            }
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn start_play(
    family: PlayFamily,
    lam: Option<String>,
    mu: Option<String>,
    n: Option<usize>,
    file: Option<PathBuf>,
    engine_first: bool,
) -> Outcome {
    let (name, params) = match family {
        PlayFamily::Skew => {
            let lam = young::Partition::parse(lam.as_deref().ok_or_else(|| usage("--lam is required for skew"))?)
                .map_err(usage)?;
            let mu = young::Partition::parse(mu.as_deref().unwrap_or("")).map_err(usage)?;
            ("skew", json!({ "lam": lam.parts(), "mu": mu.parts() }))
        }
        PlayFamily::Tamari => ("tamari", json!({ "n": need(n, "n", "tamari")? })),
        PlayFamily::Weak => ("weak", json!({ "n": need(n, "n", "weak")? })),
        PlayFamily::File => {
            let path = file.ok_or_else(|| usage("--file is required for file"))?;
            let lattice = read_lattice(&path)?;
            (
                "lattice",
                serde_json::to_value(lattice.to_file()).expect("serializable"),
            )
        }
    };
    let board = ungar_service::board::Board::create(name, &params).map_err(usage)?;
    let stdin = std::io::stdin();
    play::run(board, engine_first, &mut stdin.lock(), &mut std::io::stdout()).map_err(usage)
}

fn serve(addr: SocketAddr) -> Outcome {
    let rt = tokio::runtime::Runtime::new().map_err(usage)?;
    eprintln!("listening on http://{addr}");
    rt.block_on(ungar_service::serve(addr)).map_err(usage)
}
