//! Subcommand dispatch with exit-code mapping.

use matpfd_core::chains::extract_column_chains;
use matpfd_core::pipeline::{analyze, factor_in_mode, Analysis, Decomposition, DEFAULT_TIMES};
use matpfd_core::{
    faddeev_leverrier, select_chain_basis, Error, GaussianRational, GeneralSolution, IvpSolution,
    Mode, Rational,
};

use crate::input::{parse_hints, parse_matrix, parse_rational_list, parse_time_list};
use crate::render::{json, latex, text, EigenChains, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Charpoly,
    Pfd,
    Chains,
    Exp,
    Solve,
    General,
    Verify,
}

/// Everything a command needs, with file contents already read.
#[derive(Clone, Debug, Default)]
pub struct Request {
    pub matrix: String,
    pub mode: Mode,
    pub format: Format,
    pub roots: Option<String>,
    pub y0: Option<String>,
    pub times: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn domain(stage: &str, err: &Error) -> Self {
        Self {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {stage} failed [{}]: {err}\n", err.kind()),
        }
    }
}

/// Picks one of the three renderings.
fn pick<T: ?Sized>(
    format: Format,
    value: &T,
    text: fn(&T) -> String,
    latex: fn(&T) -> String,
    json: fn(&T) -> String,
) -> String {
    match format {
        Format::Text => text(value),
        Format::Latex => latex(value),
        Format::Json => json(value),
    }
}

pub fn run_command(command: Command, request: &Request) -> Outcome {
    if request.y0.is_some() && command != Command::Solve {
        return Outcome::usage("--y0 is only accepted by solve");
    }
    if request.times.is_some() && command != Command::Verify {
        return Outcome::usage("--t is only accepted by verify");
    }
    if command == Command::Chains && request.mode == Mode::Real {
        return Outcome::usage("chains requires complex mode (chains are defined per eigenvalue)");
    }
    let a = match parse_matrix(&request.matrix) {
        Ok(a) => a,
        Err(e) => return Outcome::usage(format!("matrix file: {e}")),
    };
    let hints = match request.roots.as_deref().map(parse_hints).transpose() {
        Ok(h) => h.unwrap_or_default(),
        Err(e) => return Outcome::usage(format!("roots file: {e}")),
    };
    let format = request.format;

    if command == Command::Charpoly {
        return charpoly(&a, request.mode, &hints, format);
    }
    let y0 = match (command, &request.y0) {
        (Command::Solve, None) => return Outcome::usage("solve requires --y0"),
        (_, Some(text)) => match parse_rational_list("--y0", text) {
            Ok(v) if v.len() == a.rows() => Some(v),
            Ok(v) => {
                return Outcome::usage(format!(
                    "--y0 has {} entries for a {}x{} matrix",
                    v.len(),
                    a.rows(),
                    a.rows()
                ))
            }
            Err(e) => return Outcome::usage(e),
        },
        _ => None,
    };
    let times = match &request.times {
        Some(text) => match parse_time_list("--t", text) {
            Ok(t) => t,
            Err(e) => return Outcome::usage(e),
        },
        None => DEFAULT_TIMES.to_vec(),
    };

    let analysis = match analyze(&a, request.mode, &hints) {
        Ok(x) => x,
        Err(e) => return Outcome::domain(stage_of(&e), &e),
    };
    match command {
        Command::Charpoly => unreachable!("handled above"),
        Command::Pfd => Outcome::ok(pick(
            format,
            &analysis.decomposition,
            text::pfd,
            latex::pfd,
            json::pfd,
        )),
        Command::Chains => chains(&analysis, format),
        Command::Exp => Outcome::ok(pick(
            format,
            &analysis.closed_form(),
            text::exp,
            latex::exp,
            json::exp,
        )),
        Command::Solve => {
            let y0: Vec<GaussianRational> = y0
                .expect("checked above")
                .into_iter()
                .map(GaussianRational::from)
                .collect();
            match IvpSolution::from_closed_form(&analysis.closed_form(), &y0) {
                Ok(sol) => Outcome::ok(pick(format, &sol, text::solve, latex::solve, json::solve)),
                Err(e) => Outcome::domain("solve", &e),
            }
        }
        Command::General => {
            let sol = GeneralSolution::from_closed_form(&analysis.closed_form());
            match sol.wronskian_at_zero() {
                Ok(w) => {
                    let pair = (sol, w);
                    Outcome::ok(pick(
                        format,
                        &pair,
                        |(s, w)| text::general(s, w),
                        |(s, w)| latex::general(s, w),
                        |(s, w)| json::general(s, w),
                    ))
                }
                Err(e) => Outcome::domain("general solution", &e),
            }
        }
        Command::Verify => {
            let report = analysis.verify(&times);
            let stdout = pick(format, &report, text::verify, latex::verify, json::verify);
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
    }
}

fn stage_of(e: &Error) -> &'static str {
    match e {
        Error::MatrixTooLarge(..) | Error::DimensionMismatch(_) => "characteristic polynomial",
        Error::IrrationalSpectrum { .. }
        | Error::RepeatedQuadraticFactor { .. }
        | Error::HintMismatch { .. } => "factorization",
        _ => "partial fractions",
    }
}

fn charpoly(
    a: &matpfd_core::Matrix<Rational>,
    mode: Mode,
    hints: &[(GaussianRational, usize)],
    format: Format,
) -> Outcome {
    let p = match faddeev_leverrier(a) {
        Ok((p, _)) => p,
        Err(e) => return Outcome::domain("characteristic polynomial", &e),
    };
    let factored = factor_in_mode(&p, mode, hints);
    let stdout = match format {
        Format::Text => text::charpoly(&p, factored.as_ref().ok()),
        Format::Latex => latex::charpoly(&p, factored.as_ref().ok()),
        Format::Json => json::charpoly(&p, factored.as_ref().ok()),
    };
    match factored {
        Ok(_) => Outcome::ok(stdout),
        Err(e) => Outcome {
            stdout,
            ..Outcome::domain("factorization", &e)
        },
    }
}

fn chains(analysis: &Analysis, format: Format) -> Outcome {
    let Decomposition::Complex(pfd) = &analysis.decomposition else {
        return Outcome::domain("chains", &Error::RequiresLinearFactors);
    };
    let ga = analysis.gaussian_matrix();
    let mut eigen = Vec::new();
    for (i, block) in pfd.blocks.iter().enumerate() {
        let columns = extract_column_chains(pfd, i);
        let basis = select_chain_basis(pfd, i);
        let (columns, basis) = match (columns, basis) {
            (Ok(c), Ok(b)) => (c, b),
            (Err(e), _) | (_, Err(e)) => return Outcome::domain("chains", &e),
        };
        eigen.push(EigenChains {
            eigenvalue: block.eigenvalue.clone(),
            multiplicity: block.multiplicity(),
            geometric_multiplicity: ga.shift(&block.eigenvalue).nullity(),
            columns,
            basis,
        });
    }
    Outcome::ok(pick(
        format,
        eigen.as_slice(),
        text::chains,
        latex::chains,
        json::chains,
    ))
}
