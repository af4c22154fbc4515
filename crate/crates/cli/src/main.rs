//! Command-line front end for the finite ℤ-algebra decomposition library.
//!
//! Subcommands mirror the pipeline stages: `annihilator`, `scalars`,
//! `idempotents`, `primdec`, `decompose` and `verify`. Inputs are text
//! documents (see `doc.rs`); results print either as a human-readable
//! summary or as a machine-readable structured document. All randomness
//! flows from `--seed`, so equal invocations print identical bytes; timing
//! goes to stderr.
//!
//! Exit codes: 0 success, 1 mathematical failure, 2 input or parse error.

use clap::{Parser, ValueEnum};
use zalg_cli::commands;
use zalg_cli::doc::{self, InputDocument, OutputDocument};
use num_bigint::BigInt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "zalg", about = "Exact decomposition of finite Z-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Input document path.
    input: PathBuf,
    /// Seed for the randomized subroutines.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the document to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(clap::Subcommand, Debug)]
enum Command {
    /// Left, right and two-sided annihilators of an algebra.
    Annihilator(Common),
    /// Maximal ring of scalars with its presentation.
    Scalars(Common),
    /// Primitive idempotents of Z[x..]/I for an ideal document.
    Idempotents(Common),
    /// Primary decomposition with prime components for an ideal document.
    Primdec(Common),
    /// Full decomposition of R/Ann(R) into factors.
    Decompose(Common),
    /// Verify a decomposition given by a factors file.
    Verify {
        #[command(flatten)]
        common: Common,
        /// File with one `factor c1 .. cn ; c1 .. cn ; ...` line per factor.
        #[arg(long)]
        factors: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    };
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    code
}

enum CliError {
    Parse(String),
    Math(String),
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Annihilator(c) => {
            let doc = read_algebra(&c)?;
            emit(&c, commands::cmd_annihilator(&doc, c.seed).map_err(math)?)
        }
        Command::Scalars(c) => match read_input(&c)? {
            InputDocument::Algebra(doc) => {
                emit(&c, commands::cmd_scalars(&doc, c.seed).map_err(math)?)
            }
            InputDocument::Bilinear(doc) => {
                emit(&c, commands::cmd_scalars_bilinear(&doc, c.seed).map_err(math)?)
            }
            InputDocument::Ideal(_) => {
                Err(CliError::Parse("expected an algebra or bilinear document".into()))
            }
        },
        Command::Idempotents(c) => {
            let doc = read_ideal(&c)?;
            emit(&c, commands::cmd_idempotents(&doc, c.seed).map_err(math)?)
        }
        Command::Primdec(c) => {
            let doc = read_ideal(&c)?;
            emit(&c, commands::cmd_primdec(&doc, c.seed).map_err(math)?)
        }
        Command::Decompose(c) => match read_input(&c)? {
            InputDocument::Algebra(doc) => {
                emit(&c, commands::cmd_decompose(&doc, c.seed).map_err(math)?)
            }
            InputDocument::Bilinear(doc) => {
                emit(&c, commands::cmd_decompose_bilinear(&doc, c.seed).map_err(math)?)
            }
            InputDocument::Ideal(_) => {
                Err(CliError::Parse("expected an algebra or bilinear document".into()))
            }
        },
        Command::Verify { common, factors } => {
            let doc = read_algebra(&common)?;
            let text = std::fs::read_to_string(&factors)
                .map_err(|e| CliError::Parse(format!("{}: {e}", factors.display())))?;
            let parsed = parse_factors(&text, doc.gens.len())?;
            emit(
                &common,
                commands::cmd_verify(&doc, &parsed, common.seed).map_err(math)?,
            )
        }
    }
}

fn math(e: commands::MathError) -> CliError {
    CliError::Math(e.to_string())
}

fn read_input(c: &Common) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(&c.input)
        .map_err(|e| CliError::Parse(format!("{}: {e}", c.input.display())))?;
    InputDocument::parse(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn read_algebra(c: &Common) -> Result<doc::AlgebraDoc, CliError> {
    match read_input(c)? {
        InputDocument::Algebra(a) => Ok(a),
        _ => Err(CliError::Parse("expected an algebra document".into())),
    }
}

fn read_ideal(c: &Common) -> Result<doc::IdealDoc, CliError> {
    match read_input(c)? {
        InputDocument::Ideal(i) => Ok(i),
        _ => Err(CliError::Parse("expected an ideal document".into())),
    }
}

fn parse_factors(text: &str, n: usize) -> Result<Vec<Vec<Vec<BigInt>>>, CliError> {
    let mut out = Vec::new();
    for (num, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(rest) = content.strip_prefix("factor") else {
            return Err(CliError::Parse(format!(
                "line {}: expected `factor ...`",
                num + 1
            )));
        };
        let mut gens = Vec::new();
        for part in rest.split(';') {
            let coords: Result<Vec<BigInt>, _> =
                part.split_whitespace().map(|t| t.parse::<BigInt>()).collect();
            let coords =
                coords.map_err(|_| CliError::Parse(format!("line {}: bad integer", num + 1)))?;
            if coords.is_empty() {
                continue;
            }
            if coords.len() != n {
                return Err(CliError::Parse(format!(
                    "line {}: factor generator length {} != generator count {}",
                    num + 1,
                    coords.len(),
                    n
                )));
            }
            gens.push(coords);
        }
        if gens.is_empty() {
            return Err(CliError::Parse(format!("line {}: empty factor", num + 1)));
        }
        out.push(gens);
    }
    Ok(out)
}

fn emit(c: &Common, doc: OutputDocument) -> Result<(), CliError> {
    let rendered = match c.format {
        Format::Structured => doc.print(),
        Format::Text => commands::render_text(&doc),
    };
    match &c.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
