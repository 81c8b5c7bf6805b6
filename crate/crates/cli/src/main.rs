//! `diskcp`: exact, numeric and simulated convex-position probabilities.

mod reference;
mod verify;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diskcp::montecarlo::{estimate, parse_angle, EventSpec, DEFAULT_WORKERS};
use diskcp::quadrature::LnmTable;
use diskcp::recursion::LTable;
use diskcp::Error;

/// Environment variable holding the default simulation seed.
const SEED_VAR: &str = "DISKCP_SEED";
const FALLBACK_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(name = "diskcp", version, about = "Probability that random points in a disk are in convex position")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact function L_n.
    Ln {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print P_D^n exactly and as a decimal.
    Pdisk {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Print the probability that exactly m of n disk points are hull vertices.
    PdiskNm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Print B_n(θ), or B_{n,m}(θ) with --m.
    Bseg {
        #[arg(long)]
        n: usize,
        /// Angle in (0, 2π); accepts `pi` and `k*pi`.
        #[arg(long, value_parser = angle)]
        theta: f64,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Estimate an event by simulation, e.g. `DISK_CP(4)` or `BSEG_CPM(3, 1, pi)`.
    Mc {
        #[arg(long)]
        event: String,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        /// Defaults to $DISKCP_SEED.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_WORKERS)]
        workers: usize,
    },
    /// Cross-check exact, numeric, simulated and published values.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        /// Defaults to $DISKCP_SEED.
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the report; `.json` gives JSON, anything else CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn angle(s: &str) -> Result<f64, String> {
    parse_angle(s).ok_or_else(|| format!("not an angle: {s}"))
}

fn default_seed() -> Result<u64, Error> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{SEED_VAR}={s} is not an integer"))),
        Err(_) => Ok(FALLBACK_SEED),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let table = LTable::shared();
    match cli.command {
        Command::Ln { n, format } => {
            let l = table.get(n)?;
            let s = match format {
                Format::Text => l.to_text(),
                Format::Latex => l.to_latex(),
                Format::Json => l.to_json(),
            };
            writeln!(out, "{s}")?;
        }
        Command::Pdisk { n, digits } => {
            let p = table.p_disk_exact(n)?;
            let c = p.one_minus();
            if c.is_zero() {
                writeln!(out, "1")?;
            } else {
                writeln!(out, "1 - {c}")?;
            }
            writeln!(out, "{}", p.to_decimal(digits))?;
        }
        Command::PdiskNm { n, m } => {
            writeln!(out, "{:.12}", LnmTable::new().p_disk_nm(n, m)?)?;
        }
        Command::Bseg { n, theta, m } => {
            let v = match m {
                Some(m) => LnmTable::new().eval_b(n, m, theta)?,
                None => table.eval_b(n, theta)?,
            };
            writeln!(out, "{v:.12}")?;
        }
        Command::Mc { event, trials, seed, workers } => {
            let spec: EventSpec = event.parse()?;
            let seed = seed.map_or_else(default_seed, Ok)?;
            let e = estimate(&spec, trials, seed, workers)?;
            writeln!(
                out,
                "{spec}: {:.6} ± {:.6} (trials {}, seed {}, workers {})",
                e.mean, e.stderr, e.trials, e.seed, e.workers
            )?;
        }
        Command::Verify { max_n, trials, seed, out: path } => {
            let seed = seed.map_or_else(default_seed, Ok)?;
            let rows = verify::build(max_n, trials, seed);
            verify::print_table(&rows, out)?;
            if let Some(path) = path {
                let file = File::create(&path)?;
                if path.extension().is_some_and(|e| e == "json") {
                    serde_json::to_writer_pretty(file, &rows)?;
                } else {
                    verify::write_csv(&rows, file)?;
                }
            }
            let failed = rows.iter().filter(|r| r.status == verify::Status::Fail).count();
            writeln!(out, "{} rows, {failed} failed", rows.len())?;
            if failed > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
