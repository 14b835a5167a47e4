use alloc::vec::Vec;

use super::{ensure_no_collision, sample_points, EigenBlock, ResolventPfd};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PolyMatrix};
use crate::poly::{FactoredCharPoly, Poly};
use crate::scalar::Scalar;

/// Expansion by undetermined coefficients: multiplying through by `p(s)`
/// gives the polynomial identity
///
/// ```text
/// M(s) = sum_i sum_j B_ij * p(s) / (s - lambda_i)^j
/// ```
///
/// whose `n` basis polynomials span the polynomials of degree `< n`. The
/// identity is evaluated at `n` sample points and solved for all `n^2`
/// entries at once.
pub fn pfd_undetermined<T: Scalar>(
    factored: &FactoredCharPoly,
    adjugate: &PolyMatrix<T>,
) -> Result<ResolventPfd<T>> {
    if !factored.quadratic.is_empty() {
        return Err(Error::RequiresLinearFactors);
    }
    let n = adjugate.size();
    let eigen: Vec<(T, usize)> = factored.eigenvalues()?;
    let charpoly = Poly::from_roots(eigen.iter().map(|(l, r)| (l, *r)));
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
    let avoid: Vec<T> = eigen.iter().map(|(l, _)| l.clone()).collect();
    let solution = solve_at_samples(n, &basis, adjugate, &avoid)?;
    let mut blocks = Vec::with_capacity(eigen.len());
    let mut row = 0;
    for (lambda, r) in eigen {
        let coefficients = (0..r)
            .map(|j| row_as_matrix(&solution, row + j, n))
            .collect();
        row += r;
        blocks.push(EigenBlock {
            eigenvalue: lambda,
            coefficients,
        });
    }
    Ok(ResolventPfd { n, blocks })
}

/// Solves `sum_k basis_k(s) X_k = M(s)` at sample points; row `k` of the
/// result holds `X_k` flattened row-major.
pub(crate) fn solve_at_samples<T: Scalar>(
    n: usize,
    basis: &[Poly<T>],
    adjugate: &PolyMatrix<T>,
    avoid: &[T],
) -> Result<Matrix<T>> {
    let points = sample_points(n, basis.len(), avoid);
    ensure_no_collision(&points, avoid)?;
    let mut vander = Matrix::zeros(points.len(), basis.len());
    let mut rhs = Matrix::zeros(points.len(), n * n);
    for (k, s) in points.iter().enumerate() {
        for (c, b) in basis.iter().enumerate() {
            vander[(k, c)] = b.eval(s);
        }
        let m = adjugate.eval(s);
        for (e, v) in m.data().iter().enumerate() {
            rhs[(k, e)] = v.clone();
        }
    }
    vander.solve_many(&rhs)
}

pub(crate) fn row_as_matrix<T: Scalar>(flat: &Matrix<T>, row: usize, n: usize) -> Matrix<T> {
    Matrix::new(n, n, flat.row(row).to_vec()).expect("n^2 entries")
}
