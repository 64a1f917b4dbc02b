use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand as ClapSubcommand};
use fracwave_cli::{parse_config, run, CliError, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "fracwave", version, about = "Mittag-Leffler functions, fractional Cauchy problems and the mixed wave solver")]
struct Args {
    #[command(subcommand)]
    command: Option<Command>,

    /// JSON run configuration
    #[arg(long, global = true, env = "FRACWAVE_CONFIG")]
    config: Option<PathBuf>,

    /// Output directory
    #[arg(long, global = true, env = "FRACWAVE_OUT")]
    out: Option<PathBuf>,

    /// Truncation N
    #[arg(long, global = true, env = "FRACWAVE_MODES")]
    modes: Option<usize>,

    /// Absolute quadrature tolerance
    #[arg(long, global = true, env = "FRACWAVE_TOL")]
    tol: Option<f64>,
}

#[derive(ClapSubcommand, Debug, Clone, Copy)]
enum Command {
    /// Evaluate E_{α,β}(z) at the points in the `ml` section
    Ml,
    /// Solve the Cauchy problem in the `cauchy` section
    Cauchy,
    /// Assemble the series solution and write solution.csv and modes.json
    Solve,
    /// Assemble, check residuals and decay, write report.json
    Verify,
}

fn execute(args: Args) -> Result<(), CliError> {
    let path = args.config.ok_or_else(|| CliError::Config {
        path: "--config".into(),
        message: "a configuration file is required".into(),
    })?;
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let mut cfg = parse_config(&text, path.parent())?;
    if let Some(c) = args.command {
        cfg.subcommand = Some(match c {
            Command::Ml => Subcommand::Ml,
            Command::Cauchy => Subcommand::Cauchy,
            Command::Solve => Subcommand::Solve,
            Command::Verify => Subcommand::Verify,
        });
    }
    if let Some(out) = args.out {
        cfg.out = out;
    }
    if let Some(n) = args.modes {
        if n == 0 {
            return Err(CliError::Config {
                path: "--modes".into(),
                message: "N >= 1".into(),
            });
        }
        cfg.modes = n;
    }
    if let Some(tol) = args.tol {
        if !(tol > 0.0) {
            return Err(CliError::Config {
                path: "--tol".into(),
                message: "must be positive".into(),
            });
        }
        cfg.abs_tol = tol;
    }
    for p in run(&cfg)? {
        println!("{}", p.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let first = first.trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(1);
        }
    };
    match execute(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
