use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use splinedim::commands;
use splinedim::mesh::read_mesh;
use splinedim::table::Format;
use splinedim::{CliError, Output, EXIT_INPUT};
use splinedim_core::dimension::MethodRequest;
use splinedim_core::oracle::OracleOptions;

/// Dimensions of bivariate spline spaces C^r_d on planar triangulations.
#[derive(Parser)]
#[command(name = "splinedim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a mesh and describe its interior structure.
    Validate { mesh: PathBuf },
    /// Dimension of C^r_d for one (r, d).
    Dim {
        mesh: PathBuf,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "auto", value_parser = commands::parse_method)]
        method: MethodRequest,
        /// Lift the size limit on oracle computations.
        #[arg(long)]
        allow_large: bool,
    },
    /// Dimensions for d = 0..=dmax.
    Table {
        mesh: PathBuf,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        dmax: u32,
        #[arg(long, default_value = "auto", value_parser = commands::parse_method)]
        method: MethodRequest,
        #[arg(long, default_value = "pretty")]
        format: Format,
        /// Add oracle columns; exit with status 3 if any row disagrees.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Regularity and degree thresholds for a mesh with one totally interior edge.
    Regularity {
        mesh: PathBuf,
        #[arg(long)]
        r: u32,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Validate { mesh } => Ok(commands::validate(&read_mesh(&mesh)?)),
        Command::Dim { mesh, r, d, method, allow_large } => {
            commands::dim(&read_mesh(&mesh)?, r, d, method, OracleOptions { allow_large })
        }
        Command::Table { mesh, r, dmax, method, format, verify, allow_large } => commands::table(
            &read_mesh(&mesh)?,
            r,
            dmax,
            method,
            format,
            verify,
            OracleOptions { allow_large },
        ),
        Command::Regularity { mesh, r } => commands::regularity(&read_mesh(&mesh)?, r),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
