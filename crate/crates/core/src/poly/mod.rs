//! Dense univariate polynomials in `s` over an exact [`Scalar`] field.

mod factor;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use factor::{
    factor_charpoly, rational_roots, FactoredCharPoly, QuadraticFactor, SpectrumMode,
};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero, which has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * s^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `s - root`.
    pub fn linear(root: &T) -> Self {
        Self::new(vec![-root.clone(), T::one()])
    }

    /// Product of `(s - root)^multiplicity` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a T, usize)>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, (root, m)| {
            &acc * &Self::linear(root).pow(m)
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `s^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&lead.inv().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * &T::from_i64(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lead_inv = divisor.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let factor = rem[k + dd].clone() * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - &(factor.clone() * dc);
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `q` with `q(s) = p(s + c)`.
    pub fn taylor_shift(&self, c: &T) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if c.is_zero() || n < 2 {
            return self.clone();
        }
        for k in 0..n - 1 {
            for j in (k..n - 1).rev() {
                let carry = a[j + 1].clone() * c;
                a[j] = a[j].clone() + &carry;
            }
        }
        Self::new(a)
    }

    /// Power-series quotient `num / den` truncated to `order` terms.
    pub fn series_div(num: &Self, den: &Self, order: usize) -> Result<Self> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::SingularSeriesDivision);
        }
        let d0_inv = d0.inv()?;
        let mut out: Vec<T> = Vec::with_capacity(order);
        for k in 0..order {
            let mut acc = num.coeff(k);
            for j in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
                acc = acc - &(den.coeffs[j].clone() * &out[k - j]);
            }
            out.push(acc * &d0_inv);
        }
        Ok(Self::new(out))
    }

    /// Square-free decomposition `self = prod_k f_k^k` (Yun). Returns the
    /// nonconstant `(f_k, k)` pairs with monic `f_k`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let b = f.gcd(&df);
        let mut c = f.div_exact(&b).expect("gcd divides");
        let mut d = &df.div_exact(&b).expect("gcd divides") - &c.derivative();
        let mut k = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            let next_c = c.div_exact(&a).expect("gcd divides");
            d = &d.div_exact(&a).expect("gcd divides") - &next_c.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, k));
            }
            c = next_c;
            k += 1;
        }
        out
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Writes `s^3 - 6s^2 + 12s - 8`. Coefficients with both a real and an
/// imaginary part are parenthesized.
impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (re, im) = c.parts();
            let compound = !re.is_zero() && !im.is_zero();
            let negative = !compound && (re < Zero::zero() || im < Zero::zero());
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let body = if compound {
                alloc::format!("({magnitude})")
            } else {
                alloc::format!("{magnitude}")
            };
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !magnitude.is_one() {
                        f.write_str(&body)?;
                    }
                    f.write_str("s")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational, Rational};

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(
            cs.iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn cube_of_linear_factor() {
        let cube = Poly::linear(&r(2)).pow(3);
        assert_eq!(cube, p(&[-8, 12, -6, 1]));
        assert_eq!(cube.to_string(), "s^3 - 6s^2 + 12s - 8");
    }

    #[test]
    fn derivative_and_eval() {
        assert_eq!(p(&[9, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[6, -5, 1]).eval(&r(2)), r(0));
        assert_eq!(p(&[6, -5, 1]).eval(&r(3)), r(0));
    }

    #[test]
    fn divrem_contract() {
        let (q, rem) = p(&[1, 2, 3, 4]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(&(&q * &p(&[1, 1])) + &rem, p(&[1, 2, 3, 4]));
        assert!(rem.degree().unwrap_or(0) < 1);
        assert_eq!(
            p(&[1, 2]).divrem(&Poly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
        let (q, rem) = p(&[1]).divrem(&p(&[0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, p(&[1]));
    }

    #[test]
    fn taylor_shift_examples() {
        // (s+2)^2 - 5(s+2) + 6 = s^2 - s
        assert_eq!(p(&[6, -5, 1]).taylor_shift(&r(2)), p(&[0, -1, 1]));
        assert_eq!(p(&[3, 1, 4, 1, 5]).taylor_shift(&r(0)), p(&[3, 1, 4, 1, 5]));
        assert_eq!(p(&[0, 0, 0, 1]).taylor_shift(&r(1)), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn series_division_examples() {
        assert_eq!(
            Poly::series_div(&p(&[1]), &p(&[1, -1]), 3).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(
            Poly::series_div(&p(&[0, 1]), &p(&[1, 1]), 3).unwrap(),
            p(&[0, 1, -1])
        );
        // (2+s)/(2-s) = 1 + s + s^2/2 + ...
        assert_eq!(
            Poly::series_div(&p(&[2, 1]), &p(&[2, -1]), 2).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            Poly::series_div(&p(&[1]), &p(&[0, 1]), 2),
            Err(Error::SingularSeriesDivision)
        );
    }

    #[test]
    fn gaussian_display() {
        let i = GaussianRational::i();
        let q = Poly::new(alloc::vec![
            GaussianRational::from(1) + &i,
            -i.clone(),
            GaussianRational::from(1)
        ]);
        assert_eq!(q.to_string(), "s^2 - is + (1+i)");
    }

    #[test]
    fn squarefree_parts() {
        // (s-1)^2 (s+2) (s^2+1)^3
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1])) * &p(&[1, 0, 1]).pow(3);
        let parts = f.squarefree_decomposition();
        assert_eq!(
            parts,
            alloc::vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2), (p(&[1, 0, 1]), 3)]
        );
    }
}
