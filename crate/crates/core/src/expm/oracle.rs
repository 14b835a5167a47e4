use crate::expm::float::FloatMatrix;
use crate::linalg::Matrix;
use crate::scalar::{rational, Rational};

const MAX_TAYLOR_TERMS: usize = 60;

/// `e^{tA}` by scaling and squaring with a truncated Taylor series. Shares
/// no code with the exact pipeline.
pub fn numeric_oracle_exp(a: &Matrix<Rational>, t: f64) -> FloatMatrix {
    let n = a.rows();
    let rows: alloc::vec::Vec<_> = a
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| rational::to_f64(x) * t).collect())
        .collect();
    let x = FloatMatrix::from_rows(&rows);
    let mut squarings = 0;
    let mut norm = x.inf_norm();
    while norm > 0.5 {
        norm /= 2.0;
        squarings += 1;
    }
    let x = x.scale(libm::ldexp(1.0, -squarings));

    let mut sum = FloatMatrix::identity(n);
    let mut term = FloatMatrix::identity(n);
    for k in 1..=MAX_TAYLOR_TERMS {
        term = term.mul(&x).scale(1.0 / k as f64);
        sum = sum.add(&term);
        if term.max_abs() <= 1e-17 * sum.max_abs() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}
