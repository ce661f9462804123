use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use qschur::{PeriodicVec, Weight};
use qschur_cli::commands::{check_shape, cmd_canon, cmd_inner, cmd_inner_limit, cmd_mult, cmd_oracle_count};
use qschur_cli::io::{parse_matrix, parse_vec, parse_word, read_arg};
use qschur_cli::{run_suite, CliError, CliResult, Config, Context, SUITES};

/// Exact computations in affine q-Schur algebras and their stable limit.
///
/// Words are given as text (`E1^(2) F2 K(1,-1)`) or JSON (`{"word":[["E",1,2],["F",2,1]],"weight":[2,0]}`);
/// matrices as text (`diag(0,1) + 1*E^{1,3}`) or JSON (`{"n":2,"diag":[0,1],"offdiag":[[1,2,1]]}`).
/// Every argument that names an existing file is read from that file.
///
/// Exit codes: 0 pass, 1 verification failure, 2 usage, 3 budget exceeded.
#[derive(Parser)]
#[command(name = "qschur", version)]
struct Cli {
    /// Configuration file (TOML, or JSON with a .json extension).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply a word to the idempotent [𝐢_𝐚] and print the element.
    Mult {
        #[arg(short, long)]
        word: String,
        /// The weight 𝐚, e.g. `0,1`; overrides a weight given in the word file.
        #[arg(short = 'a', long)]
        idempotent: Option<String>,
    },
    /// The level-D form (x[𝐢_𝐚], y[𝐢_𝐛])_D.
    Inner {
        #[arg(short)]
        x: String,
        #[arg(short)]
        y: String,
        #[arg(long)]
        x_weight: Option<String>,
        #[arg(long)]
        y_weight: Option<String>,
    },
    /// The limit form ⟨x1_λ, y1_λ'⟩ and its v^{-1}-series.
    InnerLimit {
        #[arg(short)]
        x: String,
        #[arg(short)]
        y: String,
        #[arg(long)]
        x_weight: Option<String>,
        #[arg(long)]
        y_weight: Option<String>,
        /// Series order (default from the config, 20).
        #[arg(long)]
        order: Option<usize>,
    },
    /// The canonical basis element {A}: expansion, monomial presentation and checks.
    Canon {
        #[arg(long)]
        n: usize,
        #[arg(long = "D")]
        d: i64,
        #[arg(short = 'A', long = "matrix")]
        matrix: String,
        /// Also report the presentation once it agrees at D and D + n.
        #[arg(long)]
        stable: bool,
        /// On-disk cache; defaults to $QSCHUR_CACHE.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Finite-field point counts.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Run verification suites A1..A10 (all of them by default).
    Verify {
        suites: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        order: Option<usize>,
        /// Print full JSON reports instead of one line per suite.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// |X_A^L| for the standard chain L of weight r(A).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long = "D")]
        d: i64,
        #[arg(long)]
        q: u64,
        /// Window radius m; defaults to the smallest admissible one.
        #[arg(long)]
        window: Option<usize>,
        #[arg(short = 'A', long = "matrix")]
        matrix: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Writes a line to stdout; a closed pipe (`qschur … | head`) is not an error.
fn emit(s: &str) -> CliResult<()> {
    match writeln!(std::io::stdout().lock(), "{s}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io { path: "<stdout>".into(), source: e }),
        _ => Ok(()),
    }
}

fn print<T: Serialize>(x: &T) -> CliResult<()> {
    emit(&serde_json::to_string_pretty(x).map_err(|e| CliError::Usage(e.to_string()))?)
}

fn word_and_weight(arg: &str, weight: Option<&String>) -> CliResult<(qschur::GenWord, Vec<i64>)> {
    let (w, lam) = parse_word(&read_arg(arg)?)?;
    let lam = match weight {
        Some(s) => parse_vec(s)?,
        None => lam.ok_or_else(|| CliError::Usage(format!("no weight given for `{arg}`")))?,
    };
    Ok((w, lam))
}

fn run(cli: Cli) -> CliResult<bool> {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    }
    .with_env();
    match cli.cmd {
        Cmd::Mult { word, idempotent } => {
            let (w, a) = word_and_weight(&word, idempotent.as_ref())?;
            print(&cmd_mult(&w, &PeriodicVec(a))?)?;
        }
        Cmd::Inner { x, y, x_weight, y_weight } => {
            let (xw, a) = word_and_weight(&x, x_weight.as_ref())?;
            let (yw, b) = word_and_weight(&y, y_weight.as_ref())?;
            print(&cmd_inner(&xw, &PeriodicVec(a), &yw, &PeriodicVec(b))?)?;
        }
        Cmd::InnerLimit { x, y, x_weight, y_weight, order } => {
            let (xw, a) = word_and_weight(&x, x_weight.as_ref())?;
            let (yw, b) = word_and_weight(&y, y_weight.as_ref())?;
            let (la, lb) = (Weight::new(a)?, Weight::new(b)?);
            print(&cmd_inner_limit((&xw, &la), (&yw, &lb), order.unwrap_or(cfg.order))?)?;
        }
        Cmd::Canon { n, d, matrix, stable, cache_dir } => {
            let a = parse_matrix(&read_arg(&matrix)?)?;
            check_shape(&a, n, d)?;
            if cache_dir.is_some() {
                cfg.cache_dir = cache_dir;
            }
            print(&cmd_canon(&a, &cfg, stable)?)?;
        }
        Cmd::Oracle { cmd: OracleCmd::Count { n, d, q, window, matrix, budget } } => {
            let a = parse_matrix(&read_arg(&matrix)?)?;
            check_shape(&a, n, d)?;
            Config { primes: vec![q], ..Config::default() }.validate()?;
            print(&cmd_oracle_count(&a, q, window.or(cfg.window), budget.unwrap_or(cfg.budget))?)?;
        }
        Cmd::Verify { suites, seed, order, json } => {
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(o) = order {
                cfg.order = o;
            }
            let ids: Vec<String> = if suites.is_empty() || suites.iter().any(|s| s.eq_ignore_ascii_case("all")) {
                SUITES.iter().map(|(id, _)| id.to_string()).collect()
            } else {
                suites
            };
            let ctx = Context::new(cfg)?;
            let mut reports = Vec::new();
            for id in &ids {
                let r = run_suite(id, &ctx)?;
                if !json {
                    emit(&r.line())?;
                }
                reports.push(r);
            }
            if json {
                print(&reports)?;
            }
            return Ok(reports.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
