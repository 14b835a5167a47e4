use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matpfd_cli::{run_command, Command, Format, Request, EXIT_USAGE};
use matpfd_core::Mode;

/// Exact resolvent partial fractions, generalized eigenvector chains and
/// closed-form matrix exponentials for rational matrices.
#[derive(Parser)]
#[command(name = "matpfd", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Characteristic polynomial and its factorization.
    Charpoly(Common),
    /// Partial fractions of (sI - A)^-1 with matrix coefficients.
    Pfd(Common),
    /// Chains of generalized eigenvectors from the coefficient columns.
    Chains(Common),
    /// Closed-form e^{tA}.
    Exp(Common),
    /// Solution of y' = Ay, y(0) = y0.
    Solve {
        #[command(flatten)]
        common: Common,
        /// Initial vector, e.g. "1,-1,2".
        #[arg(long, allow_hyphen_values = true)]
        y0: String,
    },
    /// Fundamental system of y' = Ay (the columns of e^{tA}).
    General(Common),
    /// Check every identity and compare with a numeric exponential.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Sample times for the numeric comparison.
        #[arg(long = "t", default_value = "0.1,0.5,1.0", allow_hyphen_values = true)]
        times: String,
    },
}

#[derive(Args)]
struct Common {
    /// Matrix file: one row per line, `#` comments; `-` reads stdin.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// File of known eigenvalues, one `ROOT [MULTIPLICITY]` per line.
    #[arg(long)]
    roots: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Complex,
    Real,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

fn read(path: &Path) -> Result<String, String> {
    let result = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn build(common: &Common) -> Result<Request, String> {
    Ok(Request {
        matrix: read(&common.file)?,
        mode: match common.mode {
            ModeArg::Complex => Mode::Complex,
            ModeArg::Real => Mode::Real,
            ModeArg::Auto => Mode::Auto,
        },
        format: match common.format {
            FormatArg::Text => Format::Text,
            FormatArg::Latex => Format::Latex,
            FormatArg::Json => Format::Json,
        },
        roots: common.roots.as_deref().map(read).transpose()?,
        y0: None,
        times: None,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common, y0, times) = match &cli.command {
        Sub::Charpoly(c) => (Command::Charpoly, c, None, None),
        Sub::Pfd(c) => (Command::Pfd, c, None, None),
        Sub::Chains(c) => (Command::Chains, c, None, None),
        Sub::Exp(c) => (Command::Exp, c, None, None),
        Sub::Solve { common, y0 } => (Command::Solve, common, Some(y0.clone()), None),
        Sub::General(c) => (Command::General, c, None, None),
        Sub::Verify { common, times } => (Command::Verify, common, None, Some(times.clone())),
    };
    let request = match build(common) {
        Ok(r) => Request { y0, times, ..r },
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let outcome = run_command(command, &request);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
