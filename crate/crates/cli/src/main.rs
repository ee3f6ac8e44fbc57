//! Command-line front end: compute spanning areas of polygonal curves from
//! JSON curve files, write reports and SVG renderings, print words and
//! truncations, and cross-verify the optimizer against the brute-force
//! oracle.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spanarea::pipeline::truncated_from_report;
use spanarea::solver::ORACLE_MAX_LEN;
use spanarea::{
    exhaustive_oracle, format_coord, minimal_area, winding_from_word, PipelineError, Weights,
};
use spanarea_cli::formats::{self, load_curve, save_report, FormatError};
use spanarea_cli::svg;

/// Exit codes promised by the interface, beyond 2 (parse error) and
/// 3 (invalid curve) which come from `FormatError`: 4 for a truncation level
/// out of range, 5 for a word too long to verify exhaustively.
const EXIT_RANGE: u8 = 4;
const EXIT_TOO_LONG: u8 = 5;

#[derive(Parser)]
#[command(
    name = "spanarea",
    about = "Exact minimal spanning area of closed polygonal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the spanning area and write a full report.
    Area {
        /// Input curve file (JSON).
        input: PathBuf,
        /// Where to write the report (JSON).
        #[arg(long)]
        report: PathBuf,
        /// Optional SVG rendering of the face decomposition.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the curve's cyclically reduced word and per-face windings.
    Word {
        input: PathBuf,
    },
    /// Print the truncated values on the 1..=N largest faces.
    Truncate {
        input: PathBuf,
        #[arg(long)]
        upto: usize,
    },
    /// Re-solve with the exhaustive oracle and check report invariants.
    Verify {
        input: PathBuf,
        /// Longest word the oracle will accept.
        #[arg(long, default_value_t = ORACLE_MAX_LEN)]
        max_len: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("computation failed: {0}")]
    Pipeline(#[from] PipelineError),
    #[error("truncation level {0} exceeds the {1} bounded faces")]
    TruncationRange(usize, usize),
    #[error("word length {0} exceeds the verification bound {1}")]
    WordTooLong(usize, usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Format(e) => e.exit_code(),
            CliError::Pipeline(_) | CliError::VerificationFailed(_) => 1,
            CliError::TruncationRange(..) => EXIT_RANGE,
            CliError::WordTooLong(..) => EXIT_TOO_LONG,
            CliError::Io(_) => 1,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Area { input, report, svg } => {
            let (curve, name) = load_curve(&input)?;
            let result = minimal_area(&curve)?;
            save_report(&report, &result, name.as_deref())?;
            if let Some(svg_path) = svg {
                let rendered = svg::render(&curve, &result);
                formats::write_atomic(&svg_path, rendered.as_bytes())?;
            }
            println!("area {}", format_coord(&result.area_value));
            Ok(())
        }
        Command::Word { input } => {
            let (curve, _) = load_curve(&input)?;
            let result = minimal_area(&curve)?;
            println!("word {}", result.word);
            for gen in 0..result.face_count {
                println!(
                    "winding {} {}",
                    gen + 1,
                    winding_from_word(&result.word, gen)
                );
            }
            Ok(())
        }
        Command::Truncate { input, upto } => {
            let (curve, _) = load_curve(&input)?;
            let result = minimal_area(&curve)?;
            if upto == 0 || upto > result.face_count {
                return Err(CliError::TruncationRange(upto, result.face_count));
            }
            for level in 1..=upto {
                let value = truncated_from_report(&result, level)?;
                println!("{}", format_coord(&value));
            }
            Ok(())
        }
        Command::Verify { input, max_len } => {
            let (curve, _) = load_curve(&input)?;
            let result = minimal_area(&curve)?;
            let bound = max_len.min(ORACLE_MAX_LEN);
            if result.word.len() > bound {
                return Err(CliError::WordTooLong(result.word.len(), bound));
            }
            let dp_cost = result.area_value.clone();
            let oracle_cost = if result.face_count == 0 {
                dp_cost.clone()
            } else {
                let weights = Weights::new(result.areas.clone())
                    .map_err(|e| CliError::VerificationFailed(e.to_string()))?;
                let (cost, _) = exhaustive_oracle(&result.word, &weights)
                    .map_err(|e| CliError::VerificationFailed(e.to_string()))?;
                cost
            };
            println!("dp     {}", format_coord(&dp_cost));
            println!("oracle {}", format_coord(&oracle_cost));
            if dp_cost != oracle_cost {
                return Err(CliError::VerificationFailed(
                    "dynamic program and oracle disagree".into(),
                ));
            }
            if !result.invariants_hold() {
                return Err(CliError::VerificationFailed(
                    "report invariants do not hold".into(),
                ));
            }
            Ok(())
        }
    }
}
