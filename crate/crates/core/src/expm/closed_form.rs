use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::linalg::Matrix;
use crate::pfd::{RealResolventPfd, ResolventPfd};
use crate::scalar::{rational_sqrt, Rational, Scalar};

/// Scalar time functions the closed forms are built from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisFn<T> {
    /// `t^power e^{lambda t}`.
    PolyExp { lambda: T, power: usize },
    /// `e^{-a t} cos(sqrt(d) t)`.
    Cos { a: Rational, d: Rational },
    /// `e^{-a t} sin(sqrt(d) t)` when `sqrt(d)` is rational, otherwise
    /// `e^{-a t} sin(sqrt(d) t) / sqrt(d)`.
    Sin { a: Rational, d: Rational },
}

impl<T: Scalar> BasisFn<T> {
    /// Value at `t = 0`.
    pub fn at_zero(&self) -> T {
        match self {
            BasisFn::PolyExp { power: 0, .. } | BasisFn::Cos { .. } => T::one(),
            _ => T::zero(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BasisFn<U> {
        match self {
            BasisFn::PolyExp { lambda, power } => BasisFn::PolyExp {
                lambda: f(lambda),
                power: *power,
            },
            BasisFn::Cos { a, d } => BasisFn::Cos {
                a: a.clone(),
                d: d.clone(),
            },
            BasisFn::Sin { a, d } => BasisFn::Sin {
                a: a.clone(),
                d: d.clone(),
            },
        }
    }
}

/// Whether the sine basis for radicand `d` carries the `1/sqrt(d)` factor.
pub(crate) fn sin_is_scaled(d: &Rational) -> bool {
    rational_sqrt(d).is_none()
}

/// `sqrt(d)` if rational, else 1: `d/dt S = -a S + kappa C` and
/// `d/dt C = -a C - (d / kappa) S` for the cos/sin pair `C`, `S`.
fn sin_kappa(d: &Rational) -> Rational {
    rational_sqrt(d).unwrap_or_else(Rational::one)
}

/// `sum_k f_k(t) C_k` with distinct basis functions in ascending order and
/// nonzero coefficient matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormExp<T> {
    pub n: usize,
    pub terms: Vec<(BasisFn<T>, Matrix<T>)>,
}

impl<T: Scalar> ClosedFormExp<T> {
    /// Merges equal basis functions and drops zero coefficients.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BasisFn<T>, Matrix<T>)>) -> Self {
        let mut merged: BTreeMap<BasisFn<T>, Matrix<T>> = BTreeMap::new();
        for (f, c) in terms {
            match merged.get_mut(&f) {
                Some(acc) => *acc = &*acc + &c,
                None => {
                    merged.insert(f, c);
                }
            }
        }
        Self {
            n,
            terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn value_at_zero(&self) -> Matrix<T> {
        self.terms
            .iter()
            .fold(Matrix::zeros(self.n, self.n), |acc, (f, c)| {
                &acc + &c.scale(&f.at_zero())
            })
    }

    pub fn coefficient(&self, f: &BasisFn<T>) -> Option<&Matrix<T>> {
        self.terms.iter().find(|(g, _)| g == f).map(|(_, c)| c)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> ClosedFormExp<U> {
        ClosedFormExp::from_terms(self.n, self.terms.iter().map(|(b, c)| (b.map(f), c.map(f))))
    }
}

/// Inverse transform of the complex-mode expansion:
/// `B_ij / (s - lambda)^j  ->  t^{j-1} e^{lambda t} B_ij / (j-1)!`.
pub fn exp_from_pfd<T: Scalar>(pfd: &ResolventPfd<T>) -> ClosedFormExp<T> {
    let mut terms = Vec::new();
    for block in &pfd.blocks {
        let mut factorial = T::one();
        for (k, b) in block.coefficients.iter().enumerate() {
            if k > 0 {
                factorial = factorial * &T::from_i64(k as i64);
            }
            let f = BasisFn::PolyExp {
                lambda: block.eigenvalue.clone(),
                power: k,
            };
            terms.push((f, b.scale(&factorial.inv().expect("nonzero factorial"))));
        }
    }
    ClosedFormExp::from_terms(pfd.n, terms)
}

/// Inverse transform of the real-form expansion. A quadratic term
/// `((s + a) P + Q) / ((s + a)^2 + d)` becomes
/// `e^{-a t} (cos(sqrt(d) t) P + sin(sqrt(d) t) Q / sqrt(d))`.
pub fn exp_from_real_pfd(pfd: &RealResolventPfd) -> ClosedFormExp<Rational> {
    let linear = ResolventPfd {
        n: pfd.n,
        blocks: pfd.linear.clone(),
    };
    let mut terms = exp_from_pfd(&linear).terms;
    for block in &pfd.quadratic {
        let (a, d) = (block.factor.a.clone(), block.factor.d.clone());
        terms.push((
            BasisFn::Cos {
                a: a.clone(),
                d: d.clone(),
            },
            block.p.clone(),
        ));
        let sin_coeff = match rational_sqrt(&d) {
            Some(beta) => block.q.scale(&beta.inv().expect("d > 0")),
            None => block.q.clone(),
        };
        terms.push((BasisFn::Sin { a, d }, sin_coeff));
    }
    ClosedFormExp::from_terms(pfd.n, terms)
}

/// Term-wise `d/dt`, recombined onto the same basis.
pub fn exp_derivative<T: Scalar>(cf: &ClosedFormExp<T>) -> ClosedFormExp<T> {
    let mut terms = Vec::new();
    for (f, c) in &cf.terms {
        match f {
            BasisFn::PolyExp { lambda, power } => {
                terms.push((f.clone(), c.scale(lambda)));
                if *power > 0 {
                    let g = BasisFn::PolyExp {
                        lambda: lambda.clone(),
                        power: power - 1,
                    };
                    terms.push((g, c.scale(&T::from_i64(*power as i64))));
                }
            }
            BasisFn::Cos { a, d } => {
                let kappa = sin_kappa(d);
                let sin = BasisFn::Sin {
                    a: a.clone(),
                    d: d.clone(),
                };
                terms.push((f.clone(), c.scale(&T::from_rational(-a.clone()))));
                terms.push((sin, c.scale(&T::from_rational(-(d / &kappa)))));
            }
            BasisFn::Sin { a, d } => {
                let kappa = sin_kappa(d);
                let cos = BasisFn::Cos {
                    a: a.clone(),
                    d: d.clone(),
                };
                terms.push((f.clone(), c.scale(&T::from_rational(-a.clone()))));
                terms.push((cos, c.scale(&T::from_rational(kappa))));
            }
        }
    }
    ClosedFormExp::from_terms(cf.n, terms)
}

/// `A * cf`, coefficient by coefficient.
pub fn left_multiply<T: Scalar>(a: &Matrix<T>, cf: &ClosedFormExp<T>) -> ClosedFormExp<T> {
    ClosedFormExp::from_terms(cf.n, cf.terms.iter().map(|(f, c)| (f.clone(), a * c)))
}

impl<T: Scalar> Default for ClosedFormExp<T> {
    fn default() -> Self {
        Self {
            n: 0,
            terms: Vec::new(),
        }
    }
}

impl<T: Scalar> ClosedFormExp<T> {
    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_zero())
    }
}
