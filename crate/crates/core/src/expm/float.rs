use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::expm::closed_form::{sin_is_scaled, BasisFn, ClosedFormExp};
use crate::scalar::{Rational, Scalar};

/// Dense row-major `f64` matrix used for numeric evaluation only.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    n: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square rows required");
        Self {
            n,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(libm::fabs(*x)))
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        self.data
            .chunks(self.n.max(1))
            .map(|r| r.iter().map(|x| libm::fabs(*x)).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(-1.0))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.data[i * n + k];
                if x == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += x * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    /// `max|self - reference| / max|reference|` (absolute if the reference is zero).
    pub fn relative_error(&self, reference: &Self) -> f64 {
        let diff = self.sub(reference).max_abs();
        let scale = reference.max_abs();
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }
}

impl fmt::Display for FloatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x:.12e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

fn to_f64(r: &Rational) -> f64 {
    crate::scalar::rational::to_f64(r)
}

/// `f(t)` as a complex number `(re, im)`.
pub(crate) fn basis_value<T: Scalar>(f: &BasisFn<T>, t: f64) -> (f64, f64) {
    match f {
        BasisFn::PolyExp { lambda, power } => {
            let (re, im) = lambda.to_c64();
            let mag = libm::pow(t, *power as f64) * libm::exp(re * t);
            (mag * libm::cos(im * t), mag * libm::sin(im * t))
        }
        BasisFn::Cos { a, d } => {
            let beta = libm::sqrt(to_f64(d));
            (libm::exp(-to_f64(a) * t) * libm::cos(beta * t), 0.0)
        }
        BasisFn::Sin { a, d } => {
            let beta = libm::sqrt(to_f64(d));
            let v = libm::exp(-to_f64(a) * t) * libm::sin(beta * t);
            (if sin_is_scaled(d) { v / beta } else { v }, 0.0)
        }
    }
}

/// Real and imaginary parts of the closed form at `t`.
pub fn exp_eval_complex<T: Scalar>(cf: &ClosedFormExp<T>, t: f64) -> (FloatMatrix, FloatMatrix) {
    let mut re = FloatMatrix::zeros(cf.n);
    let mut im = FloatMatrix::zeros(cf.n);
    for (f, c) in &cf.terms {
        let (fr, fi) = basis_value(f, t);
        for (k, x) in c.data().iter().enumerate() {
            let (cr, ci) = x.to_c64();
            re.data[k] += fr * cr - fi * ci;
            im.data[k] += fr * ci + fi * cr;
        }
    }
    (re, im)
}

/// Numeric value of the closed form at `t`. For a real input matrix the
/// imaginary parts cancel; only the real part is returned.
pub fn exp_eval<T: Scalar>(cf: &ClosedFormExp<T>, t: f64) -> FloatMatrix {
    exp_eval_complex(cf, t).0
}
