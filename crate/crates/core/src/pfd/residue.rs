use alloc::vec::Vec;

use super::{EigenBlock, ResolventPfd};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PolyMatrix};
use crate::poly::{FactoredCharPoly, Poly};
use crate::scalar::Scalar;

/// Expansion by Taylor coefficients at each eigenvalue.
///
/// With `g_i(s) = M(s) / prod_{l != i} (s - lambda_l)^{r_l}`, the resolvent
/// near `lambda_i` is `g_i(s) / (s - lambda_i)^{r_i}`, so `B_{i, r_i - m}` is
/// the `m`-th Taylor coefficient of `g_i` at `lambda_i`. Each entry is
/// shifted to the eigenvalue and divided as a truncated power series.
pub fn pfd_residue<T: Scalar>(
    factored: &FactoredCharPoly,
    adjugate: &PolyMatrix<T>,
) -> Result<ResolventPfd<T>> {
    if !factored.quadratic.is_empty() {
        return Err(Error::RequiresLinearFactors);
    }
    let n = adjugate.size();
    let eigen: Vec<(T, usize)> = factored.eigenvalues()?;
    let entries: Vec<Poly<T>> = (0..n * n).map(|k| adjugate.entry(k / n, k % n)).collect();
    let mut blocks = Vec::with_capacity(eigen.len());
    for (i, (lambda, r)) in eigen.iter().enumerate() {
        let others = Poly::from_roots(
            eigen
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != i)
                .map(|(_, (mu, m))| (mu, *m)),
        );
        let den = others.taylor_shift(lambda);
        let mut coefficients = alloc::vec![Matrix::zeros(n, n); *r];
        for (k, entry) in entries.iter().enumerate() {
            let series = Poly::series_div(&entry.taylor_shift(lambda), &den, *r)?;
            for m in 0..*r {
                coefficients[r - 1 - m][(k / n, k % n)] = series.coeff(m);
            }
        }
        blocks.push(EigenBlock {
            eigenvalue: lambda.clone(),
            coefficients,
        });
    }
    Ok(ResolventPfd { n, blocks })
}
