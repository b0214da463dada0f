//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a precondition or a verification fails,
//! 2 for usage and parse errors.

mod descriptor;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::braid::{bigelow_element, cable_word, BraidWord};
use crate::decomp::{
    kernel_equivalence_check, verify_global_decomposition, verify_infinitesimal_decomposition, Intertwiner,
};
use crate::error::Error;
use crate::selftest::{run_selftest, total_time, DEFAULT_SEED};

pub use descriptor::parse_rep_descriptor;

pub const SERIES_ORDER_ENV: &str = "BRAIDCABLE_SERIES_ORDER";
pub const DEFAULT_SERIES_ORDER: usize = 4;
pub const BIGELOW_ALIAS: &str = "@bigelow";

#[derive(Debug, Parser)]
#[command(
    name = "braidcable",
    version,
    about = "Exact braid group representations and cabling checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a representation on a braid word.
    Eval {
        /// burau, sym or sum=[...], with optional ;twist=r and ;frame=±q^k.
        #[arg(long)]
        rep: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        /// Signed generator indices separated by spaces, or @bigelow.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// Print the expansion at q = exp(h/2) instead of Laurent entries.
        #[arg(long)]
        series: bool,
        /// Truncation order of the expansion (implies --series).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        series_order: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Print the r-parallel cable of a word.
    Cable {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify the decomposition of the cabled Burau representation.
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        /// Check the infinitesimal version instead.
        #[arg(long)]
        infinitesimal: bool,
        /// Include the change-of-basis matrix in the output.
        #[arg(long)]
        emit_intertwiner: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare kernel membership for R_bur and its cabling (prints JSON).
    Kernel {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Run the full verification grid.
    Selftest {
        /// Seed for the random pure-word suites.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::GeneratorOutOfRange { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

/// Text to print and whether the command succeeded.
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

fn ok(output: String) -> Outcome {
    Outcome { output, success: true }
}

/// Parses a word argument; `@bigelow` is only valid on 5 strands.
pub fn resolve_word(n: usize, text: &str) -> Result<BraidWord, CliError> {
    if text.trim() == BIGELOW_ALIAS {
        if n != 5 {
            return Err(CliError::Failed(format!("{BIGELOW_ALIAS} lives in B_5, not B_{n}")));
        }
        return Ok(bigelow_element());
    }
    Ok(BraidWord::parse(n, text)?)
}

/// `--series-order`, else the environment variable, else 4.
pub fn series_order(flag: Option<u64>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n as usize);
    }
    match std::env::var(SERIES_ORDER_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{SERIES_ORDER_ENV}={v:?} is not a positive integer"
            ))),
        },
        Err(_) => Ok(DEFAULT_SERIES_ORDER),
    }
}

pub fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Eval {
            rep,
            n,
            word,
            series,
            series_order: order_flag,
            json,
        } => {
            let n = n as usize;
            let rep = parse_rep_descriptor(&rep, n)?;
            let w = resolve_word(n, &word)?;
            let m = rep.eval_word(&w)?;
            if series || order_flag.is_some() {
                let order = series_order(order_flag)?;
                let s = m.to_series(order)?;
                return Ok(ok(if json {
                    json!({"rep": rep.label(), "n": n, "word": w.letters(), "series_order": order, "matrix": s.to_json()})
                        .to_string()
                } else {
                    s.to_string()
                }));
            }
            Ok(ok(if json {
                json!({"rep": rep.label(), "n": n, "word": w.letters(), "matrix": m.to_json()}).to_string()
            } else {
                m.to_string()
            }))
        }
        Command::Cable { n, r, word, json } => {
            let w = resolve_word(n as usize, &word)?;
            let c = cable_word(&w, r as i64)?;
            Ok(ok(if json {
                json!({"n": n, "r": r, "strands": c.strands(), "word": c.letters()}).to_string()
            } else {
                c.to_string()
            }))
        }
        Command::Decompose {
            n,
            r,
            infinitesimal,
            emit_intertwiner,
            json,
        } => {
            let (n, r) = (n as usize, r as usize);
            let report = if infinitesimal {
                verify_infinitesimal_decomposition(n, r)?
            } else {
                verify_global_decomposition(n, r)?
            };
            let output = if json {
                report.to_json(emit_intertwiner).to_string()
            } else {
                let mut text = report.to_string();
                if emit_intertwiner {
                    match &report.intertwiner {
                        Some(Intertwiner::Rational(m)) => text.push_str(&format!("intertwiner:\n{m}")),
                        Some(Intertwiner::RatFunc(m)) => text.push_str(&format!("intertwiner:\n{m}")),
                        None => text.push_str("intertwiner: none\n"),
                    }
                }
                text
            };
            Ok(Outcome {
                output,
                success: report.verified,
            })
        }
        Command::Kernel { n, r, word } => {
            let w = resolve_word(n as usize, &word)?;
            let verdict = kernel_equivalence_check(&w, r as usize)?;
            Ok(Outcome {
                output: verdict.to_json().to_string(),
                success: verdict.agree(),
            })
        }
        Command::Selftest { seed, json } => {
            let results = run_selftest(seed);
            let success = results.iter().all(|r| r.passed);
            let output = if json {
                serde_json::to_string(&results).expect("results serialize")
            } else {
                let mut text: String = results.iter().map(|r| format!("{r}\n")).collect();
                let passed = results.iter().filter(|r| r.passed).count();
                text.push_str(&format!(
                    "{passed}/{} criteria passed in {:.2?}",
                    results.len(),
                    total_time(&results)
                ));
                text
            };
            Ok(Outcome { output, success })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.output);
            if outcome.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Failed(msg)) = &e;
            let _ = writeln!(err, "error: {msg}");
            e.exit_code()
        }
    }
}
