//! `lmrecon`: closed forms next to brute-force checks, and seeded
//! reconstruction trials, for limited-magnitude error channels.
//!
//! Exit status: 0 on success, 1 when a closed form disagrees with its
//! brute-force check or a decoder fails at or above its guaranteed read
//! count, 2 on parse or parameter errors (including a grid with no valid
//! point).
//!
//! Code arguments (`--code`):
//!
//! ```text
//! sum-mod:M            all-ones splitter over Z_M
//! splitter:SPEC        SPEC = "group=Z4xZ3; s=[(1,0),(0,2),(1,1)]"
//!                      (a single modulus also accepts "group=Z5; s=[1,2]")
//! explicit:@FILE       one codeword per line, comma-separated integers
//! simplex:@FILE        header line "m=2,r=3,delta=1", then one vector per line
//! ```
//!
//! Code files are UTF-8; `#` starts a comment and blank lines are ignored.
//!
//! Records (`--format records`) are one JSON object per line. Trial records
//! carry, in order: rng, seed, trial, params, algorithm, mode, delta, a, N,
//! tau, success, list_size, elapsed_ns. Other commands emit their table
//! columns in table order. Rationals are strings `"p/q"`.

mod codes;
mod commands;
mod grid;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lmrecon::channel::{Algorithm, ReadGenMode};
use lmrecon::combinatorics::DEFAULT_ENUMERATION_CAP;
use lmrecon::lattice::SplitterSpec;
use lmrecon::textfmt::{parse_vector, CodeSpec};
use lmrecon::IntegerVector;

use crate::codes::{load_simplex, CodeSource};
use crate::commands::{Excess, Point, RunOptions, SimplexSource, TandemOptions};
use crate::grid::{parse_range_u32, parse_range_usize};
use crate::report::{Format, Report};

#[derive(Parser)]
#[command(name = "lmrecon", version, about = "Reconstruction under limited-magnitude errors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Channel grid. Each flag takes `3`, `1..4` (inclusive) or `1,3..5`.
#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value = "1")]
    n: String,
    #[arg(long, default_value = "1")]
    t: String,
    #[arg(long, default_value = "1")]
    kp: String,
    #[arg(long, default_value = "0")]
    km: String,
}

impl GridArgs {
    fn points(&self) -> Result<Vec<Point>, String> {
        Ok(commands::grid(
            &parse_range_usize(&self.n)?,
            &parse_range_usize(&self.t)?,
            &parse_range_u32(&self.kp)?,
            &parse_range_u32(&self.km)?,
        ))
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Name the closed form behind each value.
    #[arg(long)]
    explain: bool,
    /// Largest enumeration any single step may perform.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u128,
}

#[derive(Args)]
struct RunArgs {
    /// Code: sum-mod:M, splitter:<spec>, explicit:@file. Defaults to Zⁿ.
    #[arg(long)]
    code: Option<String>,
    /// Decoding distance; defaults to min(code distance, t).
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, value_parser = parse_mode, default_value = "random")]
    reads: ReadGenMode,
    /// Read count; defaults to the guaranteed count for each grid point.
    #[arg(long = "N")]
    count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trials per grid point in random mode.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Transmitted codeword; defaults to zero or the smallest explicit word.
    #[arg(long)]
    x: Option<String>,
    /// Record wall-clock time per trial (records are then not reproducible).
    #[arg(long)]
    timing: bool,
}

fn parse_mode(s: &str) -> Result<ReadGenMode, String> {
    s.parse().map_err(|e: lmrecon::Error| e.to_string())
}

fn parse_algs(s: &str) -> Result<Vec<Algorithm>, String> {
    s.split(',')
        .map(|a| a.trim().parse::<Algorithm>().map_err(|e| e.to_string()))
        .collect()
}

#[derive(Subcommand)]
enum Command {
    /// Error-ball sizes.
    Ball {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Largest intersection of two error balls, or the bounds at distance delta.
    Intersect {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Limited-magnitude distance between two vectors.
    Distance {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 1)]
        kp: u32,
        #[arg(long, default_value_t = 0)]
        km: u32,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Partial splitting and lattice reconstruction conditions.
    CheckSplitting {
        /// sum-mod:M or splitter:<spec>.
        #[arg(long)]
        code: String,
        /// Length for sum-mod codes.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "1")]
        t: String,
        #[arg(long, default_value = "1")]
        kp: String,
        #[arg(long, default_value = "0")]
        km: String,
        /// Half-width of the brute-force window; defaults to k+ + k-.
        #[arg(long)]
        window: Option<u64>,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Unique reconstruction trials (min, majority).
    Reconstruct {
        #[arg(long, default_value = "min")]
        alg: String,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List reconstruction trials (list-min, list-majority, sauer).
    List {
        #[arg(long, default_value = "list-min")]
        alg: String,
        #[command(flatten)]
        grid: GridArgs,
        /// List exponent a.
        #[arg(long, default_value = "0")]
        a: String,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Success rates over a grid for one or more algorithms.
    Simulate {
        /// Comma-separated algorithms.
        #[arg(long, default_value = "min")]
        alg: String,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "0")]
        a: String,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Min-based reconstruction over the simplex.
    Tandem {
        /// simplex:@file; defaults to a greedy code on the simplex (m, r).
        #[arg(long)]
        code: Option<String>,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        r: u64,
        #[arg(long, default_value = "1")]
        t: String,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, value_enum, default_value_t = Excess::Exact)]
        excess: Excess,
        #[arg(long, value_parser = parse_mode, default_value = "exhaustive")]
        reads: ReadGenMode,
        #[arg(long = "N")]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn run_options(algs: Vec<Algorithm>, a: &str, run: &RunArgs, cap: u128, show_rate: bool) -> Result<RunOptions, String> {
    Ok(RunOptions {
        algs,
        code: CodeSource::load(run.code.as_deref())?,
        deltas: run.delta.as_deref().map(parse_range_usize).transpose()?,
        list_exponents: parse_range_usize(a)?,
        mode: run.reads,
        reads: run.count,
        seed: run.seed,
        trials: run.trials,
        x: run
            .x
            .as_deref()
            .map(parse_vector)
            .transpose()
            .map_err(|e| e.to_string())?,
        timing: run.timing,
        cap,
        show_rate,
    })
}

fn restrict(algs: Vec<Algorithm>, list: bool) -> Result<Vec<Algorithm>, String> {
    match algs.iter().find(|a| a.is_list() != list) {
        Some(a) if list => Err(format!("'{a}' is a unique decoder; use the reconstruct command")),
        Some(a) => Err(format!("'{a}' is a list decoder; use the list command")),
        None => Ok(algs),
    }
}

fn splitter_for(code: &str, n: Option<usize>) -> Result<SplitterSpec, String> {
    match code.parse::<CodeSpec>().map_err(|e| e.to_string())? {
        CodeSpec::SumMod(m) => {
            let n = n.ok_or("sum-mod codes need --n")?;
            SplitterSpec::all_ones(n, m).map_err(|e| e.to_string())
        }
        CodeSpec::Splitter(s) => match n {
            Some(n) if n != s.n() => Err(format!("--n {n} differs from the splitter length {}", s.n())),
            _ => Ok(s),
        },
        _ => Err("check-splitting needs a sum-mod or splitter code".into()),
    }
}

fn vector(s: &str) -> Result<IntegerVector, String> {
    parse_vector(s).map_err(|e| e.to_string())
}

fn execute(command: Command) -> Result<(Report, OutputArgs), String> {
    Ok(match command {
        Command::Ball { grid, oracle, output } => {
            let report = commands::ball(&grid.points()?, oracle, output.cap, output.explain);
            (report, output)
        }
        Command::Intersect {
            grid,
            delta,
            oracle,
            output,
        } => {
            let deltas = delta.as_deref().map(parse_range_usize).transpose()?;
            let report = commands::intersect(&grid.points()?, deltas.as_deref(), oracle, output.cap, output.explain);
            (report, output)
        }
        Command::Distance {
            x,
            y,
            kp,
            km,
            oracle,
            output,
        } => {
            let report = commands::distance(&vector(&x)?, &vector(&y)?, kp, km, oracle, output.cap, output.explain)?;
            (report, output)
        }
        Command::CheckSplitting {
            code,
            n,
            t,
            kp,
            km,
            window,
            oracle,
            output,
        } => {
            let spec = splitter_for(&code, n)?;
            let report = commands::check_splitting(
                &spec,
                &parse_range_usize(&t)?,
                &parse_range_u32(&kp)?,
                &parse_range_u32(&km)?,
                window,
                oracle,
                output.cap,
                output.explain,
            );
            (report, output)
        }
        Command::Reconstruct { alg, grid, run, output } => {
            let algs = restrict(parse_algs(&alg)?, false)?;
            let opts = run_options(algs, "0", &run, output.cap, false)?;
            (commands::decode_grid(&grid.points()?, &opts, output.explain)?, output)
        }
        Command::List {
            alg,
            grid,
            a,
            run,
            output,
        } => {
            let algs = restrict(parse_algs(&alg)?, true)?;
            let opts = run_options(algs, &a, &run, output.cap, false)?;
            (commands::decode_grid(&grid.points()?, &opts, output.explain)?, output)
        }
        Command::Simulate {
            alg,
            grid,
            a,
            run,
            output,
        } => {
            let opts = run_options(parse_algs(&alg)?, &a, &run, output.cap, true)?;
            (commands::decode_grid(&grid.points()?, &opts, output.explain)?, output)
        }
        Command::Tandem {
            code,
            m,
            r,
            t,
            delta,
            excess,
            reads,
            count,
            seed,
            trials,
            oracle,
            output,
        } => {
            let source = match code {
                Some(c) => SimplexSource::File(load_simplex(&c)?),
                None => SimplexSource::Greedy { m, r },
            };
            let opts = TandemOptions {
                source,
                ts: parse_range_usize(&t)?,
                deltas: delta.as_deref().map(parse_range_usize).transpose()?,
                excess,
                mode: reads,
                reads: count,
                seed,
                trials,
                oracle,
                cap: output.cap,
            };
            (commands::tandem(&opts, output.explain)?, output)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, output) = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(output.format, output.explain);
    match &output.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.rows.is_empty() && !report.skipped.is_empty() {
        eprintln!("error: no grid point satisfies the preconditions");
        return ExitCode::from(2);
    }
    if report.mismatch {
        eprintln!("mismatch: see the check/status columns");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
