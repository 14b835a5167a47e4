use alloc::vec::Vec;

use super::Matrix;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Largest dimension accepted by the exact pipeline.
pub const MAX_DIMENSION: usize = 12;

/// `C_0 + C_1 s + ... + C_m s^m` with square coefficient matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<T> {
    n: usize,
    coeffs: Vec<Matrix<T>>,
}

impl<T: Scalar> PolyMatrix<T> {
    pub fn new(n: usize, mut coeffs: Vec<Matrix<T>>) -> Self {
        while coeffs.last().is_some_and(Matrix::is_zero) {
            coeffs.pop();
        }
        Self { n, coeffs }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Matrix<T>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| c[(i, j)].clone()).collect())
    }

    pub fn eval(&self, s: &T) -> Matrix<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(self.n, self.n), |acc, c| &acc.scale(s) + c)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> PolyMatrix<U> {
        PolyMatrix::new(self.n, self.coeffs.iter().map(|c| c.map(f)).collect())
    }

    /// `(sI - A) * self`, as a polynomial matrix.
    pub fn mul_resolvent_operator(&self, a: &Matrix<T>) -> PolyMatrix<T> {
        let n = self.n;
        let mut out = alloc::vec![Matrix::zeros(n, n); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = &out[k + 1] + c;
            out[k] = &out[k] - &(a * c);
        }
        PolyMatrix::new(n, out)
    }

    /// `p(s) * I`.
    pub fn scalar_poly(n: usize, p: &Poly<T>) -> PolyMatrix<T> {
        PolyMatrix::new(n, p.coeffs().iter().map(|c| Matrix::scalar(n, c)).collect())
    }
}

/// Characteristic polynomial `det(sI - A)` and adjugate `M(s)` of `sI - A`
/// in one pass:
///
/// ```text
/// N_1 = I,  c_{n-k} = -tr(A N_k) / k,  N_{k+1} = A N_k + c_{n-k} I,
/// M(s) = sum_k N_k s^{n-k}
/// ```
pub fn faddeev_leverrier<T: Scalar>(a: &Matrix<T>) -> Result<(Poly<T>, PolyMatrix<T>)> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "characteristic polynomial of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n > MAX_DIMENSION {
        return Err(Error::MatrixTooLarge(n, MAX_DIMENSION));
    }
    let mut charpoly = alloc::vec![T::zero(); n + 1];
    charpoly[n] = T::one();
    let mut adj = alloc::vec![Matrix::zeros(n, n); n];
    let mut nk = Matrix::identity(n);
    for k in 1..=n {
        adj[n - k] = nk.clone();
        let ank = a * &nk;
        let c = -ank.trace().try_div(&T::from_i64(k as i64))?;
        nk = ank.shift(&-c.clone());
        charpoly[n - k] = c;
    }
    debug_assert!(nk.is_zero(), "Cayley-Hamilton");
    let charpoly = Poly::new(charpoly);
    let adj = PolyMatrix::new(n, adj);
    debug_assert_eq!(
        adj.mul_resolvent_operator(a),
        PolyMatrix::scalar_poly(n, &charpoly)
    );
    Ok((charpoly, adj))
}
