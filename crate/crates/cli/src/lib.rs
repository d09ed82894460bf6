//! Command-line front end for `dihedral-hom`.
//!
//! The binary is a thin wrapper over [`run`], which writes everything to a
//! caller-supplied writer so the commands can be exercised in-process.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dihedral_hom::homcount::{count_endos, count_homs, enumerate_homs};
use dihedral_hom::{HomCount, PositiveInt, MAX_BRUTE_FORCE_N};
use serde::Serialize;

pub mod table;

use table::Grid;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dihedral_hom::Error),
    #[error("{0}")]
    Range(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

/// How a successful invocation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// `verify` found at least one cell where the closed form and the
    /// oracle disagree.
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 1,
        }
    }
}

/// Exit status for errors: usage and range problems alike.
pub const ERROR_EXIT_CODE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dihom",
    version,
    about = "Count and enumerate group homomorphisms between dihedral groups D_m -> D_n",
    after_help = "Exit status: 0 on success, 1 if `verify` finds a mismatch, 2 on usage or range errors.\n\
                  Counts are exact and printed in decimal. JSON output emits them as plain numbers even \
                  when they exceed 2^64; all counts stay below 2^127."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of homomorphisms D_M -> D_N from the closed-form counts
    Count {
        #[arg(value_parser = parse_positive, required_unless_present = "endo", conflicts_with = "endo")]
        m: Option<PositiveInt>,
        #[arg(value_parser = parse_positive, required_unless_present = "endo")]
        n: Option<PositiveInt>,
        /// Count endomorphisms of D_N instead
        #[arg(long, value_name = "N", value_parser = parse_positive)]
        endo: Option<PositiveInt>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// List every homomorphism D_M -> D_N by its generator images
    Enumerate {
        #[arg(value_parser = parse_positive)]
        m: PositiveInt,
        #[arg(value_parser = parse_positive)]
        n: PositiveInt,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Compare the closed forms against brute force for every 1 <= m <= MAXM, 1 <= n <= MAXN
    Verify {
        #[arg(value_parser = parse_positive)]
        max_m: PositiveInt,
        #[arg(value_parser = parse_positive)]
        max_n: PositiveInt,
    },
    /// Write the counts for a grid of (m, n) as CSV or JSON
    Table {
        #[arg(value_parser = parse_positive)]
        max_m: PositiveInt,
        #[arg(value_parser = parse_positive)]
        max_n: PositiveInt,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Add brute-force `oracle` and `agree` columns
        #[arg(long)]
        with_oracle: bool,
        /// Output file (standard output if omitted)
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

fn parse_positive(s: &str) -> Result<PositiveInt, String> {
    let v: u64 = s
        .parse()
        .map_err(|e| format!("`{s}` is not a positive integer: {e}"))?;
    PositiveInt::new(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CountJson {
    m: u64,
    n: u64,
    case: &'static str,
    count: u128,
    gcd: u64,
    formula: &'static str,
    evaluation: String,
}

#[derive(Serialize)]
struct HomJson {
    img_r: String,
    img_f: String,
}

/// The closed form with `m` and `n` substituted, e.g. `4 + 4·6 + 6·2 = 40`.
pub fn evaluation(hc: &HomCount) -> String {
    let (c, a) = hc.case.coefficients();
    let mut s = c.to_string();
    if a > 0 {
        s += &format!(" + {a}·{}", hc.n);
    }
    s += &format!(" + {}·{} = {}", hc.n, hc.gcd(), hc.count);
    s
}

fn endo_evaluation(hc: &HomCount) -> String {
    if hc.n.is_odd() {
        format!("{}² + 1 = {}", hc.n, hc.count)
    } else {
        format!("({} + 2)² = {}", hc.n, hc.count)
    }
}

fn cmd_count<W: Write>(
    hc: HomCount,
    endo: bool,
    format: TextOrJson,
    out: &mut W,
) -> Result<(), CliError> {
    let (formula, eval) = if endo {
        (
            if hc.n.is_odd() {
                "n² + 1"
            } else {
                "(n + 2)²"
            },
            endo_evaluation(&hc),
        )
    } else {
        (hc.case.formula(), evaluation(&hc))
    };
    match format {
        TextOrJson::Text => {
            writeln!(out, "{hc}")?;
            writeln!(out, "{formula}: {eval}")?;
        }
        TextOrJson::Json => {
            let j = CountJson {
                m: hc.m.get(),
                n: hc.n.get(),
                case: hc.case.as_str(),
                count: hc.count,
                gcd: hc.gcd().get(),
                formula,
                evaluation: eval,
            };
            serde_json::to_writer(&mut *out, &j)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_enumerate<W: Write>(
    m: PositiveInt,
    n: PositiveInt,
    format: TextOrJson,
    out: &mut W,
) -> Result<(), CliError> {
    let homs = enumerate_homs(m, n)?;
    match format {
        TextOrJson::Text => {
            for h in &homs {
                writeln!(out, "{h}")?;
            }
            writeln!(out, "total {}", homs.len())?;
        }
        TextOrJson::Json => {
            let list: Vec<_> = homs
                .iter()
                .map(|h| HomJson {
                    img_r: h.img_r().to_string(),
                    img_f: h.img_f().to_string(),
                })
                .collect();
            serde_json::to_writer(&mut *out, &list)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_verify<W: Write>(grid: Grid, out: &mut W) -> Result<Outcome, CliError> {
    if grid.max_n > MAX_BRUTE_FORCE_N {
        return Err(CliError::Range(format!(
            "oracle needs max n <= {MAX_BRUTE_FORCE_N}, got {}",
            grid.max_n
        )));
    }
    let rows = table::evaluate(grid, true)?;
    let mut mismatches = 0u64;
    for row in rows.iter().filter(|r| r.agree == Some(false)) {
        mismatches += 1;
        writeln!(
            out,
            "mismatch D_{} -> D_{} ({}): formula {}, oracle {}",
            row.m,
            row.n,
            row.case,
            row.count,
            row.oracle.unwrap_or_default()
        )?;
    }
    writeln!(out, "{} cells, {mismatches} mismatches", rows.len())?;
    Ok(if mismatches == 0 {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}

fn cmd_table<W: Write>(
    grid: Grid,
    format: TableFormat,
    with_oracle: bool,
    output: Option<PathBuf>,
    out: &mut W,
) -> Result<(), CliError> {
    let rows = table::evaluate(grid, with_oracle)?;
    let sink: Box<dyn Write + '_> = match output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(&mut *out),
    };
    match format {
        TableFormat::Csv => table::write_csv(&rows, with_oracle, sink),
        TableFormat::Json => table::write_json(&rows, grid, sink),
    }
}

/// Runs one parsed command, writing its standard output to `out`.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Count { m, n, endo, format } => {
            let (hc, is_endo) = match endo {
                Some(n) => (count_endos(n)?, true),
                // clap guarantees both are present without --endo
                None => (count_homs(m.unwrap(), n.unwrap())?, false),
            };
            cmd_count(hc, is_endo, format, out)?;
        }
        Command::Enumerate { m, n, format } => cmd_enumerate(m, n, format, out)?,
        Command::Verify { max_m, max_n } => {
            return cmd_verify(
                Grid {
                    max_m: max_m.get(),
                    max_n: max_n.get(),
                },
                out,
            )
        }
        Command::Table {
            max_m,
            max_n,
            format,
            with_oracle,
            output,
        } => cmd_table(
            Grid {
                max_m: max_m.get(),
                max_n: max_n.get(),
            },
            format,
            with_oracle,
            output,
            out,
        )?,
    }
    out.flush()?;
    Ok(Outcome::Success)
}
