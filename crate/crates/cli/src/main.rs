use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gaussbound::commands::{
    cmd_discriminate, cmd_spectrum, cmd_sweep, cmd_validate, DiscriminateArgs, Format,
};

/// Bounds on the error probability of discriminating two Gaussian states.
#[derive(Parser)]
#[command(name = "gaussbound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a state file describes a physical Gaussian state.
    Validate { file: PathBuf },
    /// Print the symplectic spectrum of a state.
    Spectrum {
        file: PathBuf,
        /// Also print the diagonalizing symplectic matrix and its residuals.
        #[arg(long)]
        full: bool,
    },
    /// Compute discrimination bounds for a pair of states.
    Discriminate {
        state_a: PathBuf,
        state_b: PathBuf,
        /// Number of identical copies available to the measurement.
        #[arg(long, default_value_t = 1)]
        copies: u32,
        /// Comma-separated subset of bounds to report: qc,bhatta,mink,young,fid.
        #[arg(long)]
        bounds: Option<String>,
        /// Grid points for the infimum search over s.
        #[arg(long)]
        grid: Option<usize>,
        /// Cross-check with the exact Fock-space Helstrom error
        /// (single-mode thermal and coherent states only).
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run a parameter sweep from a spec file and write a CSV.
    Sweep { spec: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Spectrum { file, full } => cmd_spectrum(file, *full),
        Command::Discriminate {
            state_a,
            state_b,
            copies,
            bounds,
            grid,
            oracle,
            format,
        } => cmd_discriminate(DiscriminateArgs {
            state_a,
            state_b,
            copies: *copies,
            bounds: bounds.as_deref(),
            grid: *grid,
            oracle: *oracle,
            format: *format,
        }),
        Command::Sweep { spec } => cmd_sweep(spec),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
