//! Command line front end over the library.
//!
//! Five subcommands: `gen` prints digits, `paircorr` and `discrepancy`
//! print certified statistics, `verify` runs the structural sweeps, and
//! `bound` prints lower-bound rows. All output is deterministic: the
//! same command line yields byte-identical bytes.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::combinatorics::{self, BoundReport};
use crate::constant::{ConstantSpec, DigitStream};
use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::stats;

#[derive(Parser)]
#[command(
    name = "necklace",
    version,
    about = "Binary digits from affine necklace constructions, with certified statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bin,
    Txt,
}

#[derive(Subcommand)]
enum Command {
    /// Print the leading digits of the constant
    Gen {
        /// Number of digits to emit
        #[arg(long)]
        len: u64,
        /// JSON file overriding block rotations and shifts
        #[arg(long)]
        spec: Option<PathBuf>,
        /// txt for one digit per character, bin for packed bytes
        #[arg(long, value_enum, default_value_t = Format::Txt)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certified pair correlation statistic F_N(s)
    Paircorr {
        /// Number of points, used with --s
        #[arg(long = "N", requires = "s", conflicts_with = "block_d")]
        n: Option<u64>,
        /// Threshold scale s, as a/b, an integer, or a decimal
        #[arg(long, requires = "n", conflicts_with = "block_d")]
        s: Option<Ratio>,
        /// Shorthand for the block-d instance: N = 2^(d+2^d+1), s = 2
        #[arg(long = "block-d")]
        block_d: Option<u32>,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Star discrepancy of the first N points, one row per N
    Discrepancy {
        /// Comma-separated list of point counts
        #[arg(long = "N-list", value_delimiter = ',', required = true)]
        n_list: Vec<u64>,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the structural verification sweeps
    Verify {
        /// Deepest block index to sweep (at most 3)
        #[arg(long = "d-max", default_value_t = 2)]
        d_max: u32,
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Lower-bound rows, optionally joined with empirical F
    Bound {
        /// Comma-separated list of block indices
        #[arg(long = "d-list", value_delimiter = ',', required = true)]
        d_list: Vec<u32>,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

/// Parses the process arguments, runs the command, and returns the exit
/// code: 0 on success, 1 on runtime or verification failure, 2 on usage
/// errors. Argument-shape errors exit through clap with code 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    match execute(cli.command, &mut stdout) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::DimensionMismatch { .. } => 2,
        _ => 1,
    }
}

fn load_stream(spec: &Option<PathBuf>) -> Result<DigitStream> {
    let spec = match spec {
        Some(path) => ConstantSpec::from_json(&fs::read_to_string(path)?)?,
        None => ConstantSpec::levin(),
    };
    DigitStream::new(spec)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg.into()))
    }
}

fn execute(command: Command, out: &mut impl Write) -> Result<i32> {
    match command {
        Command::Gen {
            len,
            spec,
            format,
            out: out_path,
        } => {
            require(
                matches!(format, Format::Txt | Format::Bin),
                "gen emits txt or bin",
            )?;
            let stream = load_stream(&spec)?;
            let digits = stream.prefix(len)?;
            let bytes = match format {
                Format::Bin => digits.to_packed_bytes(),
                _ => {
                    let mut s = digits.to_digit_string().into_bytes();
                    s.push(b'\n');
                    s
                }
            };
            match out_path {
                Some(path) => fs::write(path, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(0)
        }
        Command::Paircorr {
            n,
            s,
            block_d,
            spec,
            format,
        } => {
            require(format == Format::Json, "paircorr emits json")?;
            let stream = load_stream(&spec)?;
            let report = match (block_d, n, s) {
                (Some(d), None, None) => stats::block_pair_correlation(&stream, d)?,
                (None, Some(n), Some(s)) => stats::pair_correlation(&stream, n, s)?,
                _ => {
                    return Err(Error::InvalidArgument(
                        "pass either --N with --s, or --block-d".into(),
                    ))
                }
            };
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            Ok(0)
        }
        Command::Discrepancy {
            n_list,
            spec,
            format,
        } => {
            require(
                matches!(format, Format::Json | Format::Csv),
                "discrepancy emits json or csv",
            )?;
            let stream = load_stream(&spec)?;
            if format == Format::Csv {
                writeln!(out, "N,d_star_num,d_star_den_pow2,ratio")?;
            }
            for n in n_list {
                let report = stats::star_discrepancy(&stream, n)?;
                match format {
                    Format::Csv => writeln!(
                        out,
                        "{},{},{},{}",
                        report.n,
                        report.d_star_num,
                        report.d_star_den_pow2,
                        report.ratio.map(|r| r.to_string()).unwrap_or_default()
                    )?,
                    _ => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                }
            }
            Ok(0)
        }
        Command::Verify { d_max, spec } => {
            require(d_max >= 1, "--d-max must be at least 1")?;
            let stream = load_stream(&spec)?;
            let mut all_passed = true;
            let mut total = 0usize;
            let lemmas = combinatorics::verify_lemmas(d_max)?;
            for check in &lemmas.checks {
                total += 1;
                all_passed &= check.passed;
                let tag = if check.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} ({})", check.name, check.detail)?;
            }
            for d in 1..=d_max {
                total += 1;
                let summary = combinatorics::verify_counting(&stream, d)?;
                if summary.passed() {
                    writeln!(
                        out,
                        "PASS counting d={d} (case {}, {} words, {} constrained occurrences)",
                        summary.case,
                        summary.reports.len(),
                        summary.total_expected()
                    )?;
                } else {
                    all_passed = false;
                    writeln!(out, "FAIL counting d={d}:")?;
                    for m in &summary.mismatches {
                        writeln!(out, "  {m}")?;
                    }
                }
            }
            let tag = if all_passed { "PASS" } else { "FAIL" };
            writeln!(out, "overall: {tag} ({total} checks)")?;
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Bound {
            d_list,
            spec,
            format,
        } => {
            require(format == Format::Csv, "bound emits csv")?;
            let stream = load_stream(&spec)?;
            writeln!(out, "{}", BoundReport::CSV_HEADER)?;
            for d in d_list {
                let report = combinatorics::bound_report(&stream, d)?;
                writeln!(out, "{}", report.csv_row())?;
            }
            Ok(0)
        }
    }
}
