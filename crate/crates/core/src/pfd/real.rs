use alloc::vec::Vec;

use num_traits::Zero;

use super::undetermined::{row_as_matrix, solve_at_samples};
use super::{linear_part, EigenBlock, QuadraticBlock, RealResolventPfd};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PolyMatrix};
use crate::poly::{FactoredCharPoly, Poly};
use crate::scalar::{Rational, Scalar};

/// Real-form expansion with terms `B_ij / (s - lambda_i)^j` for real
/// eigenvalues and `((s + a) P + Q) / ((s + a)^2 + d)` per quadratic factor,
/// found by undetermined coefficients over the rationals.
pub fn pfd_real(
    factored: &FactoredCharPoly,
    adjugate: &PolyMatrix<Rational>,
) -> Result<RealResolventPfd> {
    let n = adjugate.size();
    let eigen: Vec<(Rational, usize)> = factored.eigenvalues()?;
    let quadratics: Vec<Poly<Rational>> = factored.quadratic.iter().map(|q| q.poly()).collect();
    let charpoly = quadratics.iter().fold(
        Poly::from_roots(eigen.iter().map(|(l, r)| (l, *r))),
        |acc, q| &acc * q,
    );
    let mut basis = Vec::with_capacity(n);
    for (lambda, r) in &eigen {
        let mut q = charpoly.clone();
        for _ in 0..*r {
            q = q
                .div_exact(&Poly::linear(lambda))
                .expect("root of the charpoly");
            basis.push(q.clone());
        }
    }
    for (factor, poly) in factored.quadratic.iter().zip(&quadratics) {
        let cofactor = charpoly.div_exact(poly).expect("factor of the charpoly");
        let shift = Poly::new(alloc::vec![factor.a.clone(), Rational::from_i64(1)]);
        basis.push(&cofactor * &shift);
        basis.push(cofactor);
    }
    let avoid: Vec<Rational> = eigen.iter().map(|(l, _)| l.clone()).collect();
    let solution = solve_at_samples(n, &basis, adjugate, &avoid)?;
    let mut row = 0;
    let mut linear = Vec::with_capacity(eigen.len());
    for (lambda, r) in eigen {
        let coefficients = (0..r)
            .map(|j| row_as_matrix(&solution, row + j, n))
            .collect();
        row += r;
        linear.push(EigenBlock {
            eigenvalue: lambda,
            coefficients,
        });
    }
    let quadratic = factored
        .quadratic
        .iter()
        .enumerate()
        .map(|(k, factor)| QuadraticBlock {
            factor: factor.clone(),
            p: row_as_matrix(&solution, row + 2 * k, n),
            q: row_as_matrix(&solution, row + 2 * k + 1, n),
        })
        .collect();
    Ok(RealResolventPfd {
        n,
        linear,
        quadratic,
    })
}

/// Evaluates the real-form expansion at a rational point.
pub fn reconstruct_real_resolvent(
    pfd: &RealResolventPfd,
    s0: &Rational,
) -> Result<Matrix<Rational>> {
    let mut out = linear_part(pfd.n, &pfd.linear, s0)?;
    for block in &pfd.quadratic {
        let shifted = s0 + &block.factor.a;
        let den = &shifted * &shifted + &block.factor.d;
        if den.is_zero() {
            return Err(Error::EvalAtPole(alloc::format!("{s0}")));
        }
        let inv = den.inv()?;
        let term = &block.p.scale(&shifted) + &block.q;
        out = &out + &term.scale(&inv);
    }
    Ok(out)
}
