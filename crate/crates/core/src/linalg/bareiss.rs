//! Fraction-free (Bareiss) elimination.
//!
//! Each row is first multiplied by the lcm of its denominators, so the
//! elimination runs on (Gaussian) integers and every Bareiss division is
//! exact. The field type is kept throughout; it just never grows
//! denominators.

use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::One;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{primitive_integer_vector, Integer, Rational, Scalar};

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub matrix: Matrix<T>,
    /// Pivot column of each of the first `pivots.len()` rows.
    pub pivots: Vec<usize>,
    /// `det(echelon) = row_factor * sign * det(original)` for square input.
    pub row_factor: T,
    pub sign_flipped: bool,
}

/// Basis of the right kernel, one primitive integer vector per free column.
pub type Nullspace<T> = Vec<Vec<T>>;

fn row_denominator_lcm<T: Scalar>(row: &[T]) -> Integer {
    row.iter().fold(Integer::one(), |acc, x| {
        let (re, im) = x.parts();
        acc.lcm(re.denom()).lcm(im.denom())
    })
}

impl<T: Scalar> Matrix<T> {
    /// Bareiss elimination choosing pivots only among the first
    /// `pivot_cols` columns; the remaining columns are carried along.
    pub fn echelon(&self, pivot_cols: usize) -> Echelon<T> {
        let (rows, cols) = (self.rows(), self.cols());
        let mut m = self.clone();
        let mut row_factor = T::one();
        for i in 0..rows {
            let l = row_denominator_lcm(m.row(i));
            if !l.is_one() {
                let f = T::from_rational(Rational::from_integer(l));
                for j in 0..cols {
                    m[(i, j)] = m[(i, j)].clone() * &f;
                }
                row_factor = row_factor * &f;
            }
        }
        let mut prev = T::one();
        let mut pivots = Vec::new();
        let mut sign_flipped = false;
        let mut r = 0;
        for c in 0..pivot_cols.min(cols) {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(r, j)].clone();
                    m[(r, j)] = tmp;
                }
                sign_flipped = !sign_flipped;
            }
            let prev_inv = prev.inv().expect("nonzero previous pivot");
            let pivot = m[(r, c)].clone();
            for i in r + 1..rows {
                let lead = m[(i, c)].clone();
                for j in c + 1..cols {
                    let v = pivot.clone() * &m[(i, j)] - &(lead.clone() * &m[(r, j)]);
                    m[(i, j)] = v * &prev_inv;
                }
                m[(i, c)] = T::zero();
            }
            // rows below were rescaled by pivot/prev
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        Echelon {
            matrix: m,
            pivots,
            row_factor,
            sign_flipped,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon(self.cols()).pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols() - self.rank()
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "determinant of a {}x{} matrix",
                self.rows(),
                self.cols()
            )));
        }
        let n = self.rows();
        if n == 0 {
            return Ok(T::one());
        }
        let e = self.echelon(n);
        if e.pivots.len() < n {
            return Ok(T::zero());
        }
        // the last Bareiss pivot is the determinant of the scaled matrix
        let last = e.matrix[(n - 1, n - 1)].clone();
        let det = last.try_div(&e.row_factor)?;
        Ok(if e.sign_flipped { -det } else { det })
    }

    /// Kernel basis, one vector per non-pivot column in ascending order,
    /// each scaled to integer parts with content 1 and a positive first
    /// nonzero entry.
    pub fn nullspace(&self) -> Nullspace<T> {
        let cols = self.cols();
        let e = self.echelon(cols);
        let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = alloc::vec![T::zero(); cols];
                x[f] = T::one();
                back_substitute(&e, &mut x, |_| T::zero());
                primitive_integer_vector(&x)
            })
            .collect()
    }

    /// One solution of `self * X = rhs` (free variables set to zero).
    pub fn solve_many(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        let aug = self.augment(rhs)?;
        let n = self.cols();
        let e = aug.echelon(n);
        let rank = e.pivots.len();
        for i in rank..aug.rows() {
            if (n..aug.cols()).any(|j| !e.matrix[(i, j)].is_zero()) {
                return Err(Error::InconsistentSystem);
            }
        }
        let mut out = Matrix::zeros(n, rhs.cols());
        for k in 0..rhs.cols() {
            let mut x = alloc::vec![T::zero(); n];
            back_substitute(&e, &mut x, |row| e.matrix[(row, n + k)].clone());
            for (i, v) in x.into_iter().enumerate() {
                out[(i, k)] = v;
            }
        }
        Ok(out)
    }

    pub fn solve(&self, rhs: &[T]) -> Result<Vec<T>> {
        let b = Matrix::from_columns(self.rows(), &[rhs.to_vec()])?;
        Ok(self.solve_many(&b)?.column(0))
    }

    pub fn inverse(&self) -> Result<Matrix<T>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "inverse of a {}x{} matrix",
                self.rows(),
                self.cols()
            )));
        }
        if self.rank() < self.rows() {
            return Err(Error::Singular);
        }
        self.solve_many(&Matrix::identity(self.rows()))
    }

    /// Whether `v` lies in the column space.
    pub fn spans(&self, v: &[T]) -> bool {
        match self.solve(v) {
            Ok(_) => true,
            Err(Error::InconsistentSystem) => false,
            Err(e) => panic!("column-space test: {e}"),
        }
    }
}

/// Fills the pivot variables of `x` from the echelon rows, given the
/// right-hand side of each row.
fn back_substitute<T: Scalar>(e: &Echelon<T>, x: &mut [T], rhs: impl Fn(usize) -> T) {
    let n = x.len();
    for (row, &pc) in e.pivots.iter().enumerate().rev() {
        let mut acc = rhs(row);
        for (j, xj) in x.iter().enumerate().take(n).skip(pc + 1) {
            if !xj.is_zero() {
                acc = acc - &(e.matrix[(row, j)].clone() * xj);
            }
        }
        x[pc] = acc.try_div(&e.matrix[(row, pc)]).expect("nonzero pivot");
    }
}
