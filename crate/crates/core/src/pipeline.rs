//! End-to-end driver: characteristic polynomial, factorization in the
//! requested mode, resolvent expansion and closed-form exponential.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::chains::{select_chain_basis, ChainBasis};
use crate::error::{Error, Result};
use crate::expm::{
    exp_derivative, exp_eval, exp_from_pfd, exp_from_real_pfd, left_multiply, numeric_oracle_exp,
    ClosedFormExp,
};
use crate::linalg::{faddeev_leverrier, Matrix, PolyMatrix};
use crate::pfd::{
    pfd_real, pfd_residue, pfd_undetermined, verify_pfd, verify_real_pfd, RealResolventPfd,
    ResolventPfd, VerifyReport,
};
use crate::poly::{factor_charpoly, FactoredCharPoly, Poly, SpectrumMode};
use crate::scalar::{GaussianRational, Rational};

/// Relative max-norm tolerance between the closed form and the oracle.
pub const ORACLE_TOLERANCE: f64 = 1e-9;
/// Relative max-norm tolerance for `e^{(s+t)A} = e^{sA} e^{tA}`.
pub const SEMIGROUP_TOLERANCE: f64 = 1e-8;
/// Default evaluation times for numeric checks.
pub const DEFAULT_TIMES: [f64; 3] = [0.1, 0.5, 1.0];
/// Time pairs for the semigroup check.
pub const SEMIGROUP_PAIRS: [(f64, f64); 2] = [(0.1, 0.2), (0.5, 0.5)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    Complex,
    Real,
    /// Complex, falling back to real when the spectrum is not Gaussian.
    #[default]
    Auto,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(Mode::Complex),
            "real" => Ok(Mode::Real),
            "auto" => Ok(Mode::Auto),
            other => Err(Error::InvalidScalar(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Complex => "complex",
            Mode::Real => "real",
            Mode::Auto => "auto",
        })
    }
}

/// Factors `p` in the given mode; `Auto` retries in real mode only on
/// [`Error::IrrationalSpectrum`].
pub fn factor_in_mode(
    p: &Poly<Rational>,
    mode: Mode,
    hints: &[(GaussianRational, usize)],
) -> Result<FactoredCharPoly> {
    match mode {
        Mode::Complex => factor_charpoly(p, SpectrumMode::Complex, hints),
        Mode::Real => factor_charpoly(p, SpectrumMode::Real, hints),
        Mode::Auto => match factor_charpoly(p, SpectrumMode::Complex, hints) {
            Err(Error::IrrationalSpectrum { .. }) => factor_charpoly(p, SpectrumMode::Real, hints),
            other => other,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Complex(ResolventPfd<GaussianRational>),
    Real(RealResolventPfd),
}

/// Everything computed for one matrix.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub matrix: Matrix<Rational>,
    pub charpoly: Poly<Rational>,
    pub adjugate: PolyMatrix<Rational>,
    pub factored: FactoredCharPoly,
    pub decomposition: Decomposition,
}

fn complex_pfd(
    factored: &FactoredCharPoly,
    adjugate: &PolyMatrix<Rational>,
) -> Result<ResolventPfd<GaussianRational>> {
    if factored.linear.iter().all(|(l, _)| l.im.is_zero()) {
        let pfd = pfd_residue::<Rational>(factored, adjugate)?;
        Ok(pfd.map(|x| GaussianRational::from(x.clone())))
    } else {
        pfd_residue(
            factored,
            &adjugate.map(|x| GaussianRational::from(x.clone())),
        )
    }
}

/// Runs the exact pipeline on `a` up to the resolvent expansion.
pub fn analyze(
    a: &Matrix<Rational>,
    mode: Mode,
    hints: &[(GaussianRational, usize)],
) -> Result<Analysis> {
    let (charpoly, adjugate) = faddeev_leverrier(a)?;
    let factored = factor_in_mode(&charpoly, mode, hints)?;
    let decomposition = match factored.mode {
        SpectrumMode::Complex => Decomposition::Complex(complex_pfd(&factored, &adjugate)?),
        SpectrumMode::Real => Decomposition::Real(pfd_real(&factored, &adjugate)?),
    };
    Ok(Analysis {
        matrix: a.clone(),
        charpoly,
        adjugate,
        factored,
        decomposition,
    })
}

impl Analysis {
    pub fn mode(&self) -> SpectrumMode {
        self.factored.mode
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn gaussian_matrix(&self) -> Matrix<GaussianRational> {
        self.matrix.map(|x| GaussianRational::from(x.clone()))
    }

    /// `e^{tA}`; real-mode results are embedded with zero imaginary parts.
    pub fn closed_form(&self) -> ClosedFormExp<GaussianRational> {
        match &self.decomposition {
            Decomposition::Complex(pfd) => exp_from_pfd(pfd),
            Decomposition::Real(pfd) => {
                exp_from_real_pfd(pfd).map(|x| GaussianRational::from(x.clone()))
            }
        }
    }

    /// One chain basis per eigenvalue (complex mode only).
    pub fn chain_bases(&self) -> Result<Vec<ChainBasis<GaussianRational>>> {
        let Decomposition::Complex(pfd) = &self.decomposition else {
            return Err(Error::RequiresLinearFactors);
        };
        (0..pfd.blocks.len())
            .map(|i| select_chain_basis(pfd, i))
            .collect()
    }

    /// Every exact identity plus the numeric checks at `times`.
    pub fn verify(&self, times: &[f64]) -> VerifyReport {
        let mut report = VerifyReport::default();
        let n = self.n();
        let a = &self.matrix;

        let mut adj_ok = true;
        for s in [
            Rational::from_integer((n as i64 + 3).into()),
            Rational::from_integer((-7).into()),
        ] {
            let lhs = &a.shift(&s).scale(&-Rational::one()) * &self.adjugate.eval(&s);
            adj_ok &= lhs == Matrix::scalar(n, &self.charpoly.eval(&s));
        }
        report.push("adjugate identity (sI - A) M(s) = p(s) I", adj_ok, "");
        match a.det() {
            Ok(det) => {
                let sign = if n.is_multiple_of(2) {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                let ok = self.charpoly.coeff(0) == sign * det.clone();
                report.push("p(0) = (-1)^n det A", ok, format!("det A = {det}"));
            }
            Err(e) => report.push("p(0) = (-1)^n det A", false, format!("{e}")),
        }
        let expanded = self.factored.expand();
        let ok = expanded == self.charpoly.map(|x| GaussianRational::from(x.clone()));
        report.push(
            "factors multiply back to p(s)",
            ok,
            format!("{}", self.charpoly),
        );

        match &self.decomposition {
            Decomposition::Complex(pfd) => self.verify_complex(pfd, &mut report),
            Decomposition::Real(pfd) => self.verify_real(pfd, &mut report),
        }

        let cf = self.closed_form();
        let ga = self.gaussian_matrix();
        report.push(
            "e^{tA} at t = 0 is I",
            cf.value_at_zero() == Matrix::identity(n),
            "",
        );
        report.push(
            "d/dt e^{tA} = A e^{tA}",
            exp_derivative(&cf) == left_multiply(&ga, &cf),
            format!("{} terms", cf.terms.len()),
        );
        for &t in times {
            let err = exp_eval(&cf, t).relative_error(&numeric_oracle_exp(a, t));
            report.push(
                format!("oracle agreement at t = {t}"),
                err <= ORACLE_TOLERANCE,
                format!("relative error {err:.3e}"),
            );
        }
        for (s, t) in SEMIGROUP_PAIRS {
            let lhs = exp_eval(&cf, s + t);
            let rhs = exp_eval(&cf, s).mul(&exp_eval(&cf, t));
            let err = lhs.relative_error(&rhs);
            report.push(
                format!("semigroup e^{{({s}+{t})A}} = e^{{{s}A}} e^{{{t}A}}"),
                err <= SEMIGROUP_TOLERANCE,
                format!("relative error {err:.3e}"),
            );
        }
        report
    }

    fn verify_complex(&self, pfd: &ResolventPfd<GaussianRational>, report: &mut VerifyReport) {
        let ga = self.gaussian_matrix();
        report.extend(verify_pfd(&ga, pfd));
        let gadj = self.adjugate.map(|x| GaussianRational::from(x.clone()));
        match pfd_undetermined(&self.factored, &gadj) {
            Ok(other) => report.push(
                "residue and undetermined-coefficient expansions agree",
                &other == pfd,
                "",
            ),
            Err(e) => report.push(
                "residue and undetermined-coefficient expansions agree",
                false,
                format!("{e}"),
            ),
        }
        let mut all: Vec<Vec<GaussianRational>> = Vec::new();
        for (i, block) in pfd.blocks.iter().enumerate() {
            let name = format!("chain basis for {}", block.eigenvalue);
            match select_chain_basis(pfd, i) {
                Ok(basis) => {
                    let nullity = ga.shift(&block.eigenvalue).nullity();
                    let valid = basis.chains.iter().all(|c| c.is_valid_for(&ga));
                    let ok = valid
                        && basis.total() == block.multiplicity()
                        && basis.chains.len() == nullity;
                    report.push(
                        name,
                        ok,
                        format!(
                            "{} chains, {} vectors, nullity {nullity}",
                            basis.chains.len(),
                            basis.total()
                        ),
                    );
                    all.extend(basis.vectors().cloned());
                }
                Err(e) => report.push(name, false, format!("{e}")),
            }
        }
        let rank = Matrix::from_columns(self.n(), &all)
            .map(|m| m.rank())
            .unwrap_or(0);
        report.push(
            "chain bases span the whole space",
            rank == self.n(),
            format!("rank {rank} of {}", self.n()),
        );
    }

    fn verify_real(&self, pfd: &RealResolventPfd, report: &mut VerifyReport) {
        report.extend(verify_real_pfd(&self.matrix, pfd));
        // Cross-check against the Gaussian expansion when one exists:
        // P = B + conj(B) and Q = i beta (B - conj(B)) for mu = -a + i beta.
        let Ok(factored) = factor_charpoly(&self.charpoly, SpectrumMode::Complex, &[]) else {
            return;
        };
        let Ok(complex) = complex_pfd(&factored, &self.adjugate) else {
            report.push(
                "real form matches complex expansion",
                false,
                "complex expansion failed",
            );
            return;
        };
        let projector = |mu: &GaussianRational| {
            complex
                .blocks
                .iter()
                .find(|b| &b.eigenvalue == mu)
                .map(|b| b.projector().clone())
        };
        let embed = |m: &Matrix<Rational>| m.map(|x| GaussianRational::from(x.clone()));
        let mut ok = pfd.linear.iter().all(|b| {
            let mu = GaussianRational::from(b.eigenvalue.clone());
            complex
                .blocks
                .iter()
                .find(|c| c.eigenvalue == mu)
                .is_some_and(|c| {
                    c.coefficients == b.map(|x| GaussianRational::from(x.clone())).coefficients
                })
        });
        for block in &pfd.quadratic {
            let (Some(beta), Some([mu, _])) = (block.factor.beta(), block.factor.gaussian_roots())
            else {
                ok = false;
                continue;
            };
            let (Some(b), Some(bc)) = (projector(&mu), projector(&mu.conj())) else {
                ok = false;
                continue;
            };
            let ibeta = GaussianRational::new(Rational::zero(), beta);
            ok &= embed(&block.p) == &b + &bc;
            ok &= embed(&block.q) == (&b - &bc).scale(&ibeta);
        }
        report.push("real form matches complex expansion", ok, "");
    }
}
