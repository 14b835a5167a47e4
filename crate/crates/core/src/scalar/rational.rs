use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always gcd-reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `num/den` in canonical form.
pub fn normalize(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Parses `-12`, `3/4`, `+5`, `4/-6` (normalized to `-2/3`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidScalar(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let int = |s: &str| -> Result<Integer> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(s).map_err(|_| bad())
    };
    let num = int(num)?;
    let den = match den {
        Some(d) => int(d)?,
        None => Integer::from(1),
    };
    normalize(num, den)
}

/// Canonical text form: `p` or `p/q`.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        assert_eq!(normalize((4).into(), (-6).into()).unwrap(), q(-2, 3));
        let zero = normalize(0.into(), 5.into()).unwrap();
        assert_eq!(
            (zero.numer().clone(), zero.denom().clone()),
            (0.into(), 1.into())
        );
        assert_eq!(normalize(17.into(), 3.into()).unwrap(), q(17, 3));
        assert_eq!(normalize(1.into(), 0.into()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn textbook_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn parses_and_renders() {
        assert_eq!(parse_rational("-12").unwrap(), q(-12, 1));
        assert_eq!(parse_rational(" 3/4 ").unwrap(), q(3, 4));
        assert_eq!(parse_rational("4/-6").unwrap(), q(-2, 3));
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("--1").is_err());
        assert_eq!(render_rational(&q(-3, 4)), "-3/4");
        assert_eq!(render_rational(&q(6, 3)), "2");
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(rational_sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(rational_sqrt(&q(2, 1)), None);
        assert_eq!(rational_sqrt(&q(-4, 1)), None);
        assert_eq!(rational_sqrt(&q(0, 1)), Some(q(0, 1)));
    }
}
