//! Exact scalar fields: rationals, Gaussian rationals and `Q(sqrt d)`.
//!
//! Every value is kept in canonical form after each operation, so structural
//! equality is mathematical equality.

mod gaussian;
pub(crate) mod rational;
mod sqrt_ext;

use core::fmt::{Debug, Display};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use gaussian::GaussianRational;
pub use rational::{normalize, parse_rational, rational_sqrt, render_rational, Integer, Rational};
pub use sqrt_ext::SqrtExt;

use crate::error::Result;

/// A field of exact scalars that matrices and polynomials are built over.
///
/// The ordering is only used for deterministic output (lexicographic on
/// `(re, im)` for Gaussian rationals); it is not compatible with the field
/// operations.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse; fails on zero.
    fn inv(&self) -> Result<Self>;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }

    fn from_rational(r: Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(Integer::from(v)))
    }

    /// Embeds a Gaussian rational if it belongs to this field.
    fn from_gaussian(g: &GaussianRational) -> Option<Self>;

    fn to_gaussian(&self) -> GaussianRational;

    fn conj(&self) -> Self;

    /// Real and imaginary parts.
    fn parts(&self) -> (Rational, Rational);

    fn to_c64(&self) -> (f64, f64) {
        let (re, im) = self.parts();
        (rational::to_f64(&re), rational::to_f64(&im))
    }

    fn is_real(&self) -> bool {
        self.parts().1.is_zero()
    }
}

impl Scalar for Rational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn from_gaussian(g: &GaussianRational) -> Option<Self> {
        g.im.is_zero().then(|| g.re.clone())
    }

    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::from(self.clone())
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn parts(&self) -> (Rational, Rational) {
        (self.clone(), Rational::zero())
    }
}

impl Scalar for GaussianRational {
    fn inv(&self) -> Result<Self> {
        GaussianRational::inv(self)
    }

    fn from_rational(r: Rational) -> Self {
        GaussianRational::from(r)
    }

    fn from_gaussian(g: &GaussianRational) -> Option<Self> {
        Some(g.clone())
    }

    fn to_gaussian(&self) -> GaussianRational {
        self.clone()
    }

    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }

    fn parts(&self) -> (Rational, Rational) {
        (self.re.clone(), self.im.clone())
    }
}

/// Scales a vector so that its entries have integer parts with content 1 and
/// its first nonzero entry is a positive integer. Zero vectors are returned
/// unchanged.
pub fn primitive_integer_vector<T: Scalar>(v: &[T]) -> alloc::vec::Vec<T> {
    use num_integer::Integer as _;
    let Some(pivot) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let pivot_inv = pivot.inv().expect("nonzero pivot");
    let scaled: alloc::vec::Vec<T> = v.iter().map(|x| x.clone() * &pivot_inv).collect();
    let mut lcm = Integer::one();
    for x in &scaled {
        let (re, im) = x.parts();
        lcm = lcm.lcm(re.denom()).lcm(im.denom());
    }
    let lcm = T::from_rational(Rational::from_integer(lcm));
    let cleared: alloc::vec::Vec<T> = scaled.into_iter().map(|x| x * &lcm).collect();
    let mut gcd = Integer::zero();
    for x in &cleared {
        let (re, im) = x.parts();
        gcd = gcd.gcd(re.numer()).gcd(im.numer());
    }
    if gcd.is_zero() || gcd.is_one() {
        return cleared;
    }
    let g = T::from_rational(Rational::new(Integer::one(), gcd));
    cleared.into_iter().map(|x| x * &g).collect()
}
