//! `minktrig`: JSON front end for triangles on the Minkowski unit sphere.

mod commands;
mod error;
mod input;
mod num;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use minktrig_core::Tolerances;
use serde::Serialize;

use error::{CliError, EXIT_DOMAIN, EXIT_VERIFY};
use input::{parse, read_source, JsonSegment, JsonTriangle};

#[derive(Parser)]
#[command(name = "minktrig", version, about = "Classify, dualize and verify triangles on the Minkowski unit sphere")]
struct Cli {
    /// Reject unknown input fields; exit 4 when a verification fails.
    #[arg(long, global = true)]
    strict: bool,
    /// Bound for trigonometric residuals.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Read input from a file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a triangle.
    Classify(Source),
    /// Compute the polar triangle.
    Polar(Source),
    /// Evaluate the laws of cosines and sines and the sum theorems.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Verify sampled triangles instead of reading one.
        #[arg(long, num_args = 2, value_names = ["FAMILY", "COUNT"])]
        sample: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write points along a geodesic segment as CSV.
    ExportGeodesic {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 65)]
        samples: usize,
    },
    /// Draw random triangles of one family.
    Sample {
        family: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn print<T: Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let tol = Tolerances::DEFAULT;
    let triangle = |s: &Source| -> Result<JsonTriangle, CliError> {
        parse(&read_source(s.file.as_deref())?, JsonTriangle::FIELDS, cli.strict)
    };
    match &cli.command {
        Command::Classify(s) => print(&commands::classify(&triangle(s)?, &tol)?)?,
        Command::Polar(s) => {
            let out = commands::polar(&triangle(s)?, &tol)?;
            print(&out)?;
            if !out.exists() {
                return Ok(EXIT_DOMAIN);
            }
        }
        Command::Verify { source, sample, seed } => {
            let out = match sample.as_deref() {
                Some([family, count]) => {
                    let count = count
                        .parse()
                        .map_err(|_| CliError::Input(format!("invalid sample count \"{count}\"")))?;
                    commands::verify_sample(commands::parse_family(family)?, count, *seed, cli.tolerance, &tol)?
                }
                _ => commands::verify(&triangle(source)?, cli.tolerance, &tol)?,
            };
            print(&out)?;
            if cli.strict && out.failures() > 0 {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::ExportGeodesic { source, samples } => {
            let seg: JsonSegment = parse(&read_source(source.file.as_deref())?, JsonSegment::FIELDS, cli.strict)?;
            commands::export_geodesic(&seg, *samples, &tol, std::io::stdout().lock())?;
        }
        Command::Sample { family, count, seed } => {
            print(&commands::sample(commands::parse_family(family)?, *count, *seed, &tol)?)?
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
