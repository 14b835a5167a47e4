use alloc::string::ToString;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{rational_sqrt, Rational};
use crate::error::{Error, Result};

/// `a + b*sqrt(d)` with a fixed positive non-square radicand `d`.
///
/// Only used at the output boundary, where a sine coefficient `Q / sqrt(d)`
/// has to be shown as an explicit matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtExt {
    pub a: Rational,
    pub b: Rational,
    d: Rational,
}

impl SqrtExt {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<Self> {
        if !d.is_positive() || rational_sqrt(&d).is_some() {
            return Err(Error::InvalidScalar(alloc::format!("sqrt({d})")));
        }
        Ok(Self { a, b, d })
    }

    pub fn rational(a: Rational, d: &Rational) -> Result<Self> {
        Self::new(a, Rational::zero(), d.clone())
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::MismatchedRadicand(
                self.d.to_string(),
                other.d.to_string(),
            ));
        }
        Ok(())
    }

    fn with(&self, a: Rational, b: Rational) -> Self {
        Self {
            a,
            b,
            d: self.d.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(&self.a - &other.a, &self.b - &other.b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let a = &self.a * &other.a + &self.b * &other.b * &self.d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(self.with(a, b))
    }

    pub fn neg(&self) -> Self {
        self.with(-self.a.clone(), -self.b.clone())
    }

    pub fn conj(&self) -> Self {
        self.with(self.a.clone(), -self.b.clone())
    }

    /// `a^2 - b^2 d`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(self.with(&c.a / &n, &c.b / &n))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.with(&self.a * r, &self.b * r)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        super::rational::to_f64(&self.a)
            + super::rational::to_f64(&self.b) * libm::sqrt(super::rational::to_f64(&self.d))
    }
}

/// `1/2`, `sqrt(2)`, `-3/4*sqrt(2)`, `1+sqrt(2)`.
impl fmt::Display for SqrtExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.b.is_one() {
            write!(f, "sqrt({})", self.d)
        } else if (-self.b.clone()).is_one() {
            write!(f, "-sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.b, self.d)
        }
    }
}
