use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expm::closed_form::{BasisFn, ClosedFormExp};
use crate::expm::float::basis_value;
use crate::linalg::Matrix;
use crate::pipeline::{analyze, Mode};
use crate::scalar::{GaussianRational, Rational, Scalar};

/// One term `f(t) v` of a vector-valued solution.
pub type VectorTerm<T> = (BasisFn<T>, Vec<T>);

fn combine<T: Scalar>(terms: impl IntoIterator<Item = VectorTerm<T>>) -> Vec<VectorTerm<T>> {
    let mut merged: BTreeMap<BasisFn<T>, Vec<T>> = BTreeMap::new();
    for (f, v) in terms {
        match merged.get_mut(&f) {
            Some(acc) => {
                for (x, y) in acc.iter_mut().zip(v) {
                    *x = x.clone() + y;
                }
            }
            None => {
                merged.insert(f, v);
            }
        }
    }
    merged
        .into_iter()
        .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
        .collect()
}

fn value_at_zero<T: Scalar>(n: usize, terms: &[VectorTerm<T>]) -> Vec<T> {
    let mut out = alloc::vec![T::zero(); n];
    for (f, v) in terms {
        let c = f.at_zero();
        for (x, y) in out.iter_mut().zip(v) {
            *x = x.clone() + c.clone() * y;
        }
    }
    out
}

fn eval_terms<T: Scalar>(n: usize, terms: &[VectorTerm<T>], t: f64) -> Vec<f64> {
    let mut out = alloc::vec![0.0; n];
    for (f, v) in terms {
        let (fr, fi) = basis_value(f, t);
        for (x, y) in out.iter_mut().zip(v) {
            let (yr, yi) = y.to_c64();
            *x += fr * yr - fi * yi;
        }
    }
    out
}

/// `y(t) = e^{tA} y0` as a sum of basis functions times exact vectors.
/// Terms whose vector vanishes are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IvpSolution<T> {
    pub n: usize,
    pub terms: Vec<VectorTerm<T>>,
}

impl<T: Scalar> IvpSolution<T> {
    pub fn from_closed_form(cf: &ClosedFormExp<T>, y0: &[T]) -> Result<Self> {
        if y0.len() != cf.n {
            return Err(Error::DimensionMismatch(alloc::format!(
                "initial vector of length {} for a {}x{} system",
                y0.len(),
                cf.n,
                cf.n
            )));
        }
        let mut terms = Vec::with_capacity(cf.terms.len());
        for (f, c) in &cf.terms {
            terms.push((f.clone(), c.mul_vec(y0)?));
        }
        Ok(Self {
            n: cf.n,
            terms: combine(terms),
        })
    }

    pub fn value_at_zero(&self) -> Vec<T> {
        value_at_zero(self.n, &self.terms)
    }

    /// Real part of `y(t)`.
    pub fn eval(&self, t: f64) -> Vec<f64> {
        eval_terms(self.n, &self.terms, t)
    }
}

/// The `n` columns of `e^{tA}`, each a solution of `y' = A y`; together a
/// fundamental system whose Wronskian at `t = 0` is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSolution<T> {
    pub n: usize,
    pub columns: Vec<Vec<VectorTerm<T>>>,
}

impl<T: Scalar> GeneralSolution<T> {
    pub fn from_closed_form(cf: &ClosedFormExp<T>) -> Self {
        let columns = (0..cf.n)
            .map(|m| combine(cf.terms.iter().map(|(f, c)| (f.clone(), c.column(m)))))
            .collect();
        Self { n: cf.n, columns }
    }

    pub fn matrix_at_zero(&self) -> Matrix<T> {
        let cols: Vec<Vec<T>> = self
            .columns
            .iter()
            .map(|c| value_at_zero(self.n, c))
            .collect();
        Matrix::from_columns(self.n, &cols).expect("n columns of length n")
    }

    pub fn wronskian_at_zero(&self) -> Result<T> {
        self.matrix_at_zero().det()
    }

    /// Real part of column `m` at `t`.
    pub fn eval_column(&self, m: usize, t: f64) -> Vec<f64> {
        eval_terms(self.n, &self.columns[m], t)
    }
}

/// Solves `y' = A y`, `y(0) = y0` exactly.
pub fn solve_ivp(
    a: &Matrix<Rational>,
    y0: &[Rational],
    mode: Mode,
) -> Result<IvpSolution<GaussianRational>> {
    let analysis = analyze(a, mode, &[])?;
    let y0: Vec<GaussianRational> = y0.iter().cloned().map(GaussianRational::from).collect();
    IvpSolution::from_closed_form(&analysis.closed_form(), &y0)
}

/// A fundamental system of `y' = A y`.
pub fn general_solution(
    a: &Matrix<Rational>,
    mode: Mode,
) -> Result<GeneralSolution<GaussianRational>> {
    let analysis = analyze(a, mode, &[])?;
    Ok(GeneralSolution::from_closed_form(&analysis.closed_form()))
}
