//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage, I/O or parse errors, 2 when any
//! verdict is a violation.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};

use crate::arithmetic::{euler_phi, factor, multiplicative_order};
use crate::bound::{class_number_bound, BoundInput};
use crate::congruence::{check_theorem1, RankData};
use crate::datasets::{bundled_records, evaluate_class_value, parse_dataset, verify_records, Family};
use crate::error::{Error, Result};
use crate::towers::{descend, CyclicTower};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const FAILURE: ExitStatus = ExitStatus { code: 1 };
    pub const VIOLATION: ExitStatus = ExitStatus { code: 2 };
}

#[derive(Debug, Parser)]
#[command(name = "classnum", version, about = "Congruences on prime divisors of class numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor n, printing `p e` per prime.
    Factor {
        #[arg(value_parser = parse_natural)]
        n: BigUint,
    },
    /// Euler's totient of n.
    Phi {
        #[arg(value_parser = parse_natural)]
        n: BigUint,
    },
    /// Multiplicative order of p modulo q.
    Order {
        #[arg(value_parser = parse_natural)]
        p: BigUint,
        #[arg(value_parser = parse_natural)]
        q: BigUint,
    },
    /// Evaluate a factor expression such as `3.(2.29+1)` or `2^3.29+1`.
    Eval { expr: String },
    /// Upper bound H_F for the class number of a degree-m field with discriminant D.
    Hbound {
        #[arg(long)]
        degree: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_integer)]
        disc: BigInt,
        /// Print the integer ceiling instead of the real value.
        #[arg(long)]
        ceil: bool,
    },
    /// Coprimality check for a prime p with rank r and odd degree part N1.
    Check {
        #[arg(long, value_parser = parse_natural)]
        p: BigUint,
        #[arg(long)]
        rank: u32,
        #[arg(long, value_parser = parse_natural)]
        n1: BigUint,
        #[arg(long, value_parser = parse_natural)]
        subfield_h: Option<BigUint>,
    },
    /// Trace the descent through a cyclic tower `base:q1,q2,...`.
    Descend {
        #[arg(long)]
        tower: String,
        #[arg(long, value_parser = parse_natural)]
        p: BigUint,
        #[arg(long)]
        rank: u32,
    },
    /// Verify datasets, the bundled tables by default.
    Verify {
        #[arg(long = "dataset")]
        datasets: Vec<PathBuf>,
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

fn parse_natural(s: &str) -> std::result::Result<BigUint, String> {
    s.parse().map_err(|_| format!("not a nonnegative integer: {s:?}"))
}

fn parse_integer(s: &str) -> std::result::Result<BigInt, String> {
    s.parse().map_err(|_| format!("not an integer: {s:?}"))
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if to_stdout {
                let _ = write!(out, "{rendered}");
                return ExitStatus::SUCCESS;
            }
            let _ = write!(err, "{rendered}");
            return ExitStatus::FAILURE;
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::FAILURE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<ExitStatus> {
    match command {
        Command::Factor { n } => {
            for (p, e) in factor(&n)?.entries() {
                writeln!(out, "{p} {e}").map_err(io)?;
            }
        }
        Command::Phi { n } => writeln!(out, "{}", euler_phi(&n)?).map_err(io)?,
        Command::Order { p, q } => writeln!(out, "{}", multiplicative_order(&p, &q)?).map_err(io)?,
        Command::Eval { expr } => writeln!(out, "{}", evaluate_class_value(&expr)?).map_err(io)?,
        Command::Hbound { degree, disc, ceil } => {
            let bound = class_number_bound(&BoundInput::new(degree, disc)?);
            if ceil {
                writeln!(out, "{}", bound.integer_ceiling()).map_err(io)?;
            } else {
                writeln!(out, "{}", bound.real_value()).map_err(io)?;
            }
        }
        Command::Check { p, rank, n1, subfield_h } => {
            let rank = RankData::new(p, rank, Some(rank))?;
            let verdict = check_theorem1(&rank, &n1, subfield_h.as_ref())?;
            writeln!(out, "{verdict}").map_err(io)?;
            if verdict.is_violation() {
                return Ok(ExitStatus::VIOLATION);
            }
        }
        Command::Descend { tower, p, rank } => {
            let tower = CyclicTower::parse(&tower)?;
            let trace = descend(&tower, &p, rank)?;
            writeln!(out, "{trace}").map_err(io)?;
            if trace.final_verdict.is_violation() {
                return Ok(ExitStatus::VIOLATION);
            }
        }
        Command::Verify { datasets, family, format } => {
            let mut records = if datasets.is_empty() {
                bundled_records()?
            } else {
                let mut all = Vec::new();
                for path in &datasets {
                    let file = File::open(path).map_err(|e| {
                        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let parsed = parse_dataset(BufReader::new(file)).map_err(|e| {
                        Error::InvalidArgument(format!("{}: {e}", path.display()))
                    })?;
                    all.extend(parsed);
                }
                all
            };
            if let Some(family) = family {
                records.retain(|r| r.family() == family);
            }
            let report = verify_records(&records);
            let text = match format {
                Format::Tsv => report.to_tsv(),
                Format::Text => report.to_text(),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            if report.has_violation() {
                return Ok(ExitStatus::VIOLATION);
            }
        }
    }
    Ok(ExitStatus::SUCCESS)
}
