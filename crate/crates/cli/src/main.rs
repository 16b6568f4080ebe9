//! `majorana`: invariants, classification and transforms of symmetric
//! multiqubit states from JSON state files.

mod commands;
mod error;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;

use commands::{Family, Mode, Sections};
use error::CliError;
use format::{read_input, to_json};

#[derive(Parser, Debug)]
#[command(name = "majorana", version, about = "Entanglement invariants of symmetric qubit states")]
struct Cli {
    /// Chordal tolerance for clustering roots.
    #[arg(long, global = true, default_value_t = majorana::DEFAULT_TOL)]
    tol: f64,
    /// Seed for random transforms.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report LU and SLOCC invariants of a state file.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        lu: bool,
        #[arg(long)]
        slocc: bool,
        /// Recompute the invariants in the full Hilbert space (n = 2, 3).
        #[arg(long)]
        oracle_check: bool,
    },
    /// Print the root degeneracy class.
    Classify { file: PathBuf },
    /// Apply a random LU, random ILO or time reversal.
    #[command(group(ArgGroup::new("mode").required(true).args(["lu_random", "ilo_random", "time_reversal"])))]
    Transform {
        file: PathBuf,
        #[arg(long)]
        lu_random: bool,
        #[arg(long)]
        ilo_random: bool,
        #[arg(long)]
        time_reversal: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Write a state file for a named family.
    Generate {
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Excitation number for `dicke`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        mu_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        mu_im: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the Majorana roots and sphere points.
    Roots { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Ghz,
    W,
    Dicke,
    #[value(name = "ghz4-family")]
    Ghz4Family,
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::Parse(format!("--tol must be positive, got {}", cli.tol)));
    }
    match cli.command {
        Command::Invariants {
            file,
            lu,
            slocc,
            oracle_check,
        } => {
            let input = read_input(&file)?;
            let sections = Sections {
                lu,
                slocc,
                oracle: oracle_check,
            };
            emit(&to_json(&commands::invariants(&input, sections, cli.tol)?), None)
        }
        Command::Classify { file } => {
            let input = read_input(&file)?;
            emit(&format!("{}\n", commands::classify(&input, cli.tol)?), None)
        }
        Command::Transform {
            file,
            lu_random,
            ilo_random,
            output,
            ..
        } => {
            let input = read_input(&file)?;
            let mode = if lu_random {
                Mode::LuRandom
            } else if ilo_random {
                Mode::IloRandom
            } else {
                Mode::TimeReversal
            };
            emit(&to_json(&commands::transform(&input, mode, cli.seed)?), output.as_ref())
        }
        Command::Generate {
            family,
            n,
            k,
            mu_re,
            mu_im,
            output,
        } => {
            let family = match family {
                FamilyArg::Ghz => Family::Ghz,
                FamilyArg::W => Family::W,
                FamilyArg::Dicke => Family::Dicke {
                    k: k.ok_or_else(|| CliError::Parse("dicke needs --k".into()))?,
                },
                FamilyArg::Ghz4Family => Family::Ghz4 {
                    mu: C64::new(mu_re, mu_im),
                },
            };
            emit(&to_json(&commands::generate(family, n)?), output.as_ref())
        }
        Command::Roots { file } => emit(&to_json(&commands::roots(&read_input(&file)?)), None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("majorana: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
