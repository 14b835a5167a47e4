use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{reconstruct_real_resolvent, reconstruct_resolvent, sample_points, EigenBlock};
use super::{RealResolventPfd, ResolventPfd};
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail outcome of every identity that was checked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                write!(f, "{status}  {}", c.name)?;
            } else {
                write!(f, "{status}  {:<width$}  {}", c.name, c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks the identities a complex-mode expansion of `a` must satisfy:
/// `sum_i B_i1 = I`, `B_i1^2 = B_i1`, `B_i1 B_p1 = 0`, `A B_i1 = B_i1 A`,
/// `(A - lambda_i) B_ij = B_{i,j+1}`, `(A - lambda_i) B_{i r_i} = 0`,
/// `B_ij = B_i2^{j-1}`, `rank B_i1 = r_i`, and the resolvent identity at
/// three sample points.
pub fn verify_pfd<T: Scalar>(a: &Matrix<T>, pfd: &ResolventPfd<T>) -> VerifyReport {
    let n = a.rows();
    let mut report = VerifyReport::default();
    let total = pfd
        .blocks
        .iter()
        .fold(Matrix::zeros(n, n), |acc, b| &acc + b.projector());
    report.push("projectors sum to I", total == Matrix::identity(n), "");
    let projectors: Vec<&Matrix<T>> = pfd.blocks.iter().map(EigenBlock::projector).collect();
    orthogonality(&mut report, &projectors);
    for block in &pfd.blocks {
        block_checks(&mut report, a, block);
    }
    let poles: Vec<T> = pfd.blocks.iter().map(|b| b.eigenvalue.clone()).collect();
    for s0 in sample_points(n, 3, &poles) {
        let ok = reconstruct_resolvent(pfd, &s0)
            .map(|r| &r * &a.shift(&s0).scale(&-T::one()) == Matrix::identity(n))
            .unwrap_or(false);
        report.push(format!("resolvent identity at s = {s0}"), ok, "");
    }
    report
}

/// Real-form counterpart: linear blocks as in [`verify_pfd`]; for each
/// quadratic `(s + a)^2 + d`: `P^2 = P`, `(A + a) P = Q`, `(A + a) Q = -d P`,
/// `rank P = 2`; all projectors orthogonal and summing to `I`.
pub fn verify_real_pfd(a: &Matrix<Rational>, pfd: &RealResolventPfd) -> VerifyReport {
    let n = a.rows();
    let mut report = VerifyReport::default();
    let mut projectors: Vec<&Matrix<Rational>> =
        pfd.linear.iter().map(EigenBlock::projector).collect();
    projectors.extend(pfd.quadratic.iter().map(|q| &q.p));
    let total = projectors
        .iter()
        .fold(Matrix::zeros(n, n), |acc, p| &acc + *p);
    report.push("projectors sum to I", total == Matrix::identity(n), "");
    orthogonality(&mut report, &projectors);
    for block in &pfd.linear {
        block_checks(&mut report, a, block);
    }
    for block in &pfd.quadratic {
        let label = format!("[(s+{})^2+{}]", block.factor.a, block.factor.d);
        let shifted = a.shift(&-block.factor.a.clone());
        report.push(
            format!("{label} P^2 = P"),
            &block.p * &block.p == block.p,
            "",
        );
        report.push(
            format!("{label} (A+a)P = Q"),
            &shifted * &block.p == block.q,
            "",
        );
        report.push(
            format!("{label} (A+a)Q = -dP"),
            &shifted * &block.q == block.p.scale(&-block.factor.d.clone()),
            "",
        );
        let rank = block.p.rank();
        report.push(
            format!("{label} rank P = 2"),
            rank == 2,
            format!("rank {rank}"),
        );
    }
    let poles: Vec<Rational> = pfd.linear.iter().map(|b| b.eigenvalue.clone()).collect();
    for s0 in sample_points(n, 3, &poles) {
        let ok = reconstruct_real_resolvent(pfd, &s0)
            .map(|r| &r * &a.shift(&s0).scale(&-Rational::from_i64(1)) == Matrix::identity(n))
            .unwrap_or(false);
        report.push(format!("resolvent identity at s = {s0}"), ok, "");
    }
    report
}

fn orthogonality<T: Scalar>(report: &mut VerifyReport, projectors: &[&Matrix<T>]) {
    let mut bad = Vec::new();
    for (i, p) in projectors.iter().enumerate() {
        for (k, q) in projectors.iter().enumerate() {
            if i != k && !(*p * *q).is_zero() {
                bad.push(format!("({},{})", i + 1, k + 1));
            }
        }
    }
    report.push(
        "projectors mutually annihilate",
        bad.is_empty(),
        bad.join(" "),
    );
}

fn block_checks<T: Scalar>(report: &mut VerifyReport, a: &Matrix<T>, block: &EigenBlock<T>) {
    let label = format!("[lambda={}]", block.eigenvalue);
    let r = block.multiplicity();
    let shifted = a.shift(&block.eigenvalue);
    let p = block.projector();
    report.push(format!("{label} B_1^2 = B_1"), &(p * p) == p, "");
    report.push(
        format!("{label} (A-lambda)B_1 = B_1(A-lambda)"),
        &shifted * p == p * &shifted,
        "",
    );
    let broken: Vec<String> = (1..r)
        .filter(|&j| &shifted * &block.coefficient(j) != block.coefficient(j + 1))
        .map(|j| format!("j={j}"))
        .collect();
    report.push(
        format!("{label} (A-lambda)B_j = B_(j+1)"),
        broken.is_empty(),
        broken.join(" "),
    );
    report.push(
        format!("{label} (A-lambda)B_r = 0"),
        (&shifted * &block.coefficient(r)).is_zero(),
        "",
    );
    let b2 = block.coefficient(2);
    let broken: Vec<String> = (3..=r)
        .filter(|&j| b2.pow(j - 1) != block.coefficient(j))
        .map(|j| format!("j={j}"))
        .collect();
    report.push(
        format!("{label} B_j = B_2^(j-1)"),
        broken.is_empty(),
        broken.join(" "),
    );
    let rank = p.rank();
    report.push(
        format!("{label} rank B_1 = {r}"),
        rank == r,
        format!("rank {rank}"),
    );
}
