use std::process::ExitCode;

use cfgen_cli::analysis::{analyze, Settings};
use cfgen_cli::scan::{scan, to_csv};
use cfgen_cli::suites::{matdemo, verify_suite};
use cfgen_cli::{parse_input, CliError, NumberInput};
use cfgen_core::CheckReport;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Continued fractions of quadratic irrationals: convergent generating
/// functions, Lévy constants and the matrix machinery behind them.
///
/// INPUT is `sqrt(D)`, `(P+sqrt(D))/Q` or `cf:a0;[a1,...];(b1,...)`.
#[derive(Parser, Debug)]
#[command(name = "cfgen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Emit JSON
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV (scan only)
    #[arg(long, global = true)]
    csv: bool,
    /// Series depth / number of terms
    #[arg(long, global = true)]
    terms: Option<usize>,
    /// Working precision in bits for Lévy constants
    #[arg(long, global = true, default_value_t = cfgen_core::levy::DEFAULT_PREC_BITS)]
    prec: u32,
    /// Step budget for expanding a surd
    #[arg(long, global = true, default_value_t = 100_000)]
    max_steps: usize,
    /// Seed for random suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continued fraction, indices and convergents
    Expand { input: String },
    /// Generating functions of the convergents
    Genfun { input: String },
    /// Lévy constant by closed form, denominator root and convergent growth
    Levy {
        input: String,
        /// Convergent index for the empirical estimate
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Structured-matrix determinant and Cramer demo with brute-force checks
    Matdemo {
        /// Use the system of this number instead of a random one
        input: Option<String>,
        /// Size of the random system
        #[arg(long, default_value_t = 3)]
        ell: usize,
    },
    /// Full identity and oracle suite on one input
    Verify { input: String },
    /// Batch over sqrt(d) for non-square d in [dmin, dmax]
    Scan {
        dmin: u64,
        dmax: u64,
        /// Convergent index for the empirical estimate
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
}

fn parse(text: &str) -> Result<NumberInput, CliError> {
    Ok(parse_input(text)?)
}

fn finish(report: &CheckReport, json: bool) -> Result<(), CliError> {
    if json {
        let entries: Vec<_> = report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "range": e.range,
                    "passed": e.passed,
                    "checked": e.checked,
                    "first_failure": e.first_failure,
                })
            })
            .collect();
        println!("{}", json!({ "passed": report.all_passed(), "entries": entries }));
    } else {
        print!("{report}");
    }
    match report.failures().next() {
        None => Ok(()),
        Some(e) => Err(CliError::Verification(e.name.clone())),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let c = &cli.common;
    let mut settings = Settings {
        max_steps: c.max_steps,
        prec_bits: c.prec,
        ..Settings::default()
    };
    match &cli.command {
        Command::Expand { input } | Command::Genfun { input } => {
            let a = analyze(&parse(input)?, settings)?;
            if c.json {
                println!("{}", a.to_json());
            } else if matches!(cli.command, Command::Expand { .. }) {
                print!("{}", a.expand_text(c.terms.unwrap_or(10)));
            } else {
                print!("{}", a.genfun_text(c.terms.unwrap_or(10)));
            }
        }
        Command::Levy { input, n } => {
            settings.empirical_n = *n;
            let a = analyze(&parse(input)?, settings)?;
            if c.json {
                println!("{}", a.to_json());
            } else {
                print!("{}", a.levy_text());
            }
        }
        Command::Matdemo { input, ell } => {
            let cf = input
                .as_deref()
                .map(|t| parse(t)?.continued_fraction(c.max_steps).map_err(CliError::from))
                .transpose()?;
            let (text, report) = matdemo(cf.as_ref(), *ell, c.seed)?;
            if !c.json {
                print!("{text}");
            }
            finish(&report, c.json)?;
        }
        Command::Verify { input } => {
            let cf = parse(input)?.continued_fraction(c.max_steps)?;
            let report = verify_suite(&cf, c.terms.unwrap_or(60), c.prec, c.seed)?;
            finish(&report, c.json)?;
        }
        Command::Scan { dmin, dmax, n } => {
            let records = scan(*dmin, *dmax, *n, c.prec)?;
            if c.json {
                let rows: Vec<_> = records.iter().map(|r| r.to_json()).collect();
                println!("{}", serde_json::Value::Array(rows));
            } else {
                print!("{}", to_csv(&records));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
