//! CLI front end: sweeps and per-prime detail reports with table, JSON,
//! and CSV output.
//!
//! Exit codes: 0 on success, 1 when a mathematical inconsistency is
//! detected (disagreeing conditions, wrong zero set, or a failed Monster
//! constant check), 2 on usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use ssprimes::harness::{
    condition_report, verify_coincidence, MonsterOrder, COMPOSITE_INDEX_NOTE,
};
use ssprimes::jacobi::jacobi_cusp_dim;
use ssprimes::locus::supersingular_report;
use ssprimes::modular_curve::genus_x0;
use ssprimes::{report, ValidatedPrime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable fixed-width text
    Table,
    /// One JSON document
    Json,
    /// Comma-separated values with a header row
    Csv,
}

#[derive(Parser)]
#[command(
    name = "ssprimes",
    version,
    about = "Computes and cross-verifies the four characterizations of the supersingular primes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check all four conditions for every prime up to a bound
    Verify {
        /// Largest prime to check (2..=1000000)
        #[arg(long, default_value_t = 1000,
              value_parser = clap::value_parser!(u64).range(2..=1_000_000))]
        max_prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Genus of X_0(p), Fricke fixed points, and the quotient genus
    Genus {
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Dimension of the weight-2 index-p Jacobi cusp form space
    Jacobi {
        p: u64,
        /// Include the per-term breakdown of the dimension sum
        #[arg(long)]
        terms: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Supersingular j-invariants over F_p and their expected count
    Supersingular {
        p: u64,
        /// List the j-invariants found in F_p
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// All four conditions and the Kodaira status at a single prime
    Conditions {
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Integrity check of the stored Monster-order constant
    MonsterCheck {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn main() {
    std::process::exit(run(Cli::parse()));
}

/// Write a line to stdout, tolerating a closed pipe (`ssprimes ... | head`):
/// truncated output must not turn into a panic or change the exit code.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.write_all(b"\n");
}

/// As [`emit`] but without the trailing newline, for payloads that already
/// end in one.
fn emit_raw(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Verify { max_prime, format } => cmd_verify(max_prime, format),
        Command::Genus { p, format } => with_prime(p, |vp| {
            let g = genus_x0(vp);
            emit(
                &match format {
                    Format::Table => report::genus_table(&g),
                    Format::Json => report::genus_json(&g),
                    Format::Csv => report::genus_csv(&g),
                }
            );
            0
        }),
        Command::Jacobi { p, terms, format } => with_prime(p, |vp| {
            let d = jacobi_cusp_dim(vp);
            emit(
                &match format {
                    Format::Table => report::jacobi_table(&d, terms),
                    Format::Json => report::jacobi_json(&d, terms),
                    Format::Csv => report::jacobi_csv(&d, terms),
                }
            );
            0
        }),
        Command::Supersingular { p, list, format } => with_prime(p, |vp| {
            let r = supersingular_report(vp);
            emit(
                &match format {
                    Format::Table => report::supersingular_table(&r, list),
                    Format::Json => report::supersingular_json(&r, list),
                    Format::Csv => report::supersingular_csv(&r, list),
                }
            );
            0
        }),
        Command::Conditions { p, format } => with_prime(p, |vp| {
            let r = condition_report(vp);
            emit(
                &match format {
                    Format::Table => report::conditions_table(&r),
                    Format::Json => report::conditions_json(&r),
                    Format::Csv => report::conditions_csv(&r),
                }
            );
            0
        }),
        Command::MonsterCheck { format } => {
            let m = MonsterOrder::standard();
            emit(
                &match format {
                    Format::Table => report::monster_table(&m),
                    Format::Json => report::monster_json(&m),
                    Format::Csv => report::monster_csv(&m),
                }
            );
            if m.check().valid() {
                0
            } else {
                1
            }
        }
    }
}

/// Validate the prime argument; composite input is a usage error naming
/// the smallest factor.
fn with_prime(p: u64, body: impl FnOnce(&ValidatedPrime) -> i32) -> i32 {
    match ValidatedPrime::new(p) {
        Ok(vp) => body(&vp),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_verify(max_prime: u64, format: Format) -> i32 {
    let summary = verify_coincidence(max_prime);
    let line = report::summary_line(&summary);
    match format {
        Format::Table => {
            emit(&report::verify_table(&summary));
            emit("");
            emit(&line);
            emit("");
            emit(COMPOSITE_INDEX_NOTE);
        }
        // stdout stays machine-parseable; the summary goes to stderr.
        Format::Json => {
            emit(&report::verify_json(&summary));
            eprintln!("{line}");
        }
        Format::Csv => {
            emit_raw(&report::verify_csv(&summary));
            eprintln!("{line}");
        }
    }
    if summary.is_success() {
        0
    } else {
        1
    }
}
