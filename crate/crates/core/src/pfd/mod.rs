//! Partial fractions of the resolvent `(sI - A)^-1` with matrix coefficients.
//!
//! Two independent algorithms produce the complex-mode expansion:
//! [`pfd_residue`] Taylor-expands `M(s) / prod_{l != i} (s - lambda_l)^{r_l}`
//! around each eigenvalue, [`pfd_undetermined`] matches
//! `M(s) = sum B_ij p(s) / (s - lambda_i)^j` at sample points. [`pfd_real`]
//! does the latter over the rationals with quadratic terms
//! `((s + a) P + Q) / ((s + a)^2 + d)`.

mod real;
mod residue;
mod undetermined;
mod verify;

use alloc::vec::Vec;

pub use real::{pfd_real, reconstruct_real_resolvent};
pub use residue::pfd_residue;
pub use undetermined::pfd_undetermined;
pub use verify::{verify_pfd, verify_real_pfd, Check, VerifyReport};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::QuadraticFactor;
use crate::scalar::{Rational, Scalar};

/// The coefficients `B_i1, ..., B_ir` of one eigenvalue. Zero matrices are
/// kept so that `coefficients[j - 1]` is always `B_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenBlock<T> {
    pub eigenvalue: T,
    pub coefficients: Vec<Matrix<T>>,
}

impl<T: Scalar> EigenBlock<T> {
    pub fn multiplicity(&self) -> usize {
        self.coefficients.len()
    }

    /// `B_ij` for `1 <= j`; zero past the multiplicity.
    pub fn coefficient(&self, j: usize) -> Matrix<T> {
        let n = self.coefficients[0].rows();
        j.checked_sub(1)
            .and_then(|k| self.coefficients.get(k).cloned())
            .unwrap_or_else(|| Matrix::zeros(n, n))
    }

    /// The spectral projector `B_i1`.
    pub fn projector(&self) -> &Matrix<T> {
        &self.coefficients[0]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> EigenBlock<U> {
        EigenBlock {
            eigenvalue: f(&self.eigenvalue),
            coefficients: self.coefficients.iter().map(|m| m.map(f)).collect(),
        }
    }
}

/// Complex-mode expansion, blocks ordered like the factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventPfd<T> {
    pub n: usize,
    pub blocks: Vec<EigenBlock<T>>,
}

impl<T: Scalar> ResolventPfd<T> {
    pub fn block(&self, i: usize) -> Result<&EigenBlock<T>> {
        self.blocks.get(i).ok_or(Error::NoSuchEigenvalue(i))
    }

    pub fn coefficient_count(&self) -> usize {
        self.blocks.iter().map(EigenBlock::multiplicity).sum()
    }

    /// Recovers `A = sum_i (lambda_i B_i1 + B_i2)`.
    pub fn matrix(&self) -> Matrix<T> {
        self.blocks
            .iter()
            .fold(Matrix::zeros(self.n, self.n), |acc, b| {
                &(&acc + &b.projector().scale(&b.eigenvalue)) + &b.coefficient(2)
            })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> ResolventPfd<U> {
        ResolventPfd {
            n: self.n,
            blocks: self.blocks.iter().map(|b| b.map(f)).collect(),
        }
    }
}

/// One quadratic term `((s + a) P + Q) / ((s + a)^2 + d)`.
///
/// `Q` is `sqrt(d)` times the coefficient of `sqrt(d) / ((s + a)^2 + d)`, so
/// it stays rational even when `sqrt(d)` is not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticBlock {
    pub factor: QuadraticFactor,
    pub p: Matrix<Rational>,
    pub q: Matrix<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealResolventPfd {
    pub n: usize,
    pub linear: Vec<EigenBlock<Rational>>,
    pub quadratic: Vec<QuadraticBlock>,
}

impl RealResolventPfd {
    pub fn coefficient_count(&self) -> usize {
        self.linear
            .iter()
            .map(EigenBlock::multiplicity)
            .sum::<usize>()
            + 2 * self.quadratic.len()
    }
}

/// `sum_i sum_j B_ij / (s0 - lambda_i)^j`.
pub fn reconstruct_resolvent<T: Scalar>(pfd: &ResolventPfd<T>, s0: &T) -> Result<Matrix<T>> {
    linear_part(pfd.n, &pfd.blocks, s0)
}

pub(crate) fn linear_part<T: Scalar>(
    n: usize,
    blocks: &[EigenBlock<T>],
    s0: &T,
) -> Result<Matrix<T>> {
    let mut out = Matrix::zeros(n, n);
    for b in blocks {
        let gap = s0.clone() - &b.eigenvalue;
        if gap.is_zero() {
            return Err(Error::EvalAtPole(alloc::format!("{s0}")));
        }
        let inv = gap.inv()?;
        let mut factor = T::one();
        for coeff in &b.coefficients {
            factor = factor * &inv;
            out = &out + &coeff.scale(&factor);
        }
    }
    Ok(out)
}

/// `count` sample points `n+1, n+2, ...` that avoid every eigenvalue.
pub(crate) fn sample_points<T: Scalar>(n: usize, count: usize, avoid: &[T]) -> Vec<T> {
    (n as i64 + 1..)
        .map(T::from_i64)
        .filter(|s| !avoid.contains(s))
        .take(count)
        .collect()
}

pub(crate) fn ensure_no_collision<T: Scalar>(points: &[T], avoid: &[T]) -> Result<()> {
    match points.iter().find(|s| avoid.contains(s)) {
        Some(s) => Err(Error::SampleCollision(alloc::format!("{s}"))),
        None => Ok(()),
    }
}
