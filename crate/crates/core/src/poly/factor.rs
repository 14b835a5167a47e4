//! Factorization of characteristic polynomials into the shapes the resolvent
//! expansion works with: linear factors over `Q(i)` (complex mode), or real
//! linear factors plus simple irreducible quadratics `(s+a)^2 + d` (real mode).

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::{rational_sqrt, GaussianRational, Integer, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpectrumMode {
    Complex,
    Real,
}

/// `(s + a)^2 + d` with `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadraticFactor {
    pub a: Rational,
    pub d: Rational,
}

impl QuadraticFactor {
    pub fn poly(&self) -> Poly<Rational> {
        let two = Rational::from_integer(2.into());
        Poly::new(vec![
            &self.a * &self.a + &self.d,
            two * &self.a,
            Rational::one(),
        ])
    }

    /// `sqrt(d)` when it is rational.
    pub fn beta(&self) -> Option<Rational> {
        rational_sqrt(&self.d)
    }

    /// The roots `-a +- i sqrt(d)` when they are Gaussian rationals.
    pub fn gaussian_roots(&self) -> Option<[GaussianRational; 2]> {
        let beta = self.beta()?;
        let re = -self.a.clone();
        Some([
            GaussianRational::new(re.clone(), beta.clone()),
            GaussianRational::new(re, -beta),
        ])
    }

    fn from_monic(f: &Poly<Rational>) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let a = f.coeff(1) * &half;
        let d = f.coeff(0) - &(&a * &a);
        Self { a, d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredCharPoly {
    pub mode: SpectrumMode,
    /// Distinct eigenvalues with algebraic multiplicities, ordered by `(re, im)`.
    pub linear: Vec<(GaussianRational, usize)>,
    /// Real mode only; pairwise distinct, each of multiplicity one.
    pub quadratic: Vec<QuadraticFactor>,
}

impl FactoredCharPoly {
    pub fn degree(&self) -> usize {
        self.linear.iter().map(|(_, r)| r).sum::<usize>() + 2 * self.quadratic.len()
    }

    pub fn expand(&self) -> Poly<GaussianRational> {
        let linear = Poly::from_roots(self.linear.iter().map(|(l, r)| (l, *r)));
        self.quadratic.iter().fold(linear, |acc, q| {
            &acc * &q.poly().map(|c| GaussianRational::from(c.clone()))
        })
    }

    /// Eigenvalues converted into the scalar field `T`.
    pub fn eigenvalues<T: Scalar>(&self) -> Result<Vec<(T, usize)>> {
        self.linear
            .iter()
            .map(|(l, r)| {
                T::from_gaussian(l)
                    .map(|v| (v, *r))
                    .ok_or_else(|| Error::NotRepresentable(l.to_string()))
            })
            .collect()
    }

    pub fn is_eigenvalue<T: Scalar>(&self, s: &T) -> bool {
        let g = s.to_gaussian();
        self.linear.iter().any(|(l, _)| *l == g)
    }
}

/// Factors a monic rational polynomial.
///
/// Rational roots come from the rational-root theorem applied to the
/// primitive integer polynomial. What is left is split into square-free
/// parts; each part must be a quadratic or a product of two quadratics over
/// the rationals. Hinted roots are verified by exact deflation before they
/// are used.
pub fn factor_charpoly(
    p: &Poly<Rational>,
    mode: SpectrumMode,
    hints: &[(GaussianRational, usize)],
) -> Result<FactoredCharPoly> {
    let p = p.monic();
    let mut linear: Vec<(GaussianRational, usize)> = Vec::new();
    let mut quadratic: Vec<QuadraticFactor> = Vec::new();

    let mut residual = p.map(|c| GaussianRational::from(c.clone()));
    for (root, mult) in hints {
        let mult = *mult;
        let seen_linear = linear.iter().any(|(l, r)| l == root && *r == mult);
        let seen_quadratic = mult == 1
            && quadratic
                .iter()
                .any(|q| q.a == -root.re.clone() && q.d == &root.im * &root.im);
        if seen_linear || seen_quadratic {
            continue;
        }
        let mismatch = |reason: &str| Error::HintMismatch {
            root: root.to_string(),
            multiplicity: mult,
            reason: reason.to_string(),
        };
        if mult == 0 {
            return Err(mismatch("multiplicity must be positive"));
        }
        let roots: Vec<GaussianRational> = if root.im.is_zero() {
            vec![root.clone()]
        } else {
            vec![root.clone(), root.conj()]
        };
        for r in &roots {
            residual = deflate_exactly(&residual, r, mult).map_err(&mismatch)?;
        }
        if root.im.is_zero() || mode == SpectrumMode::Complex {
            linear.extend(roots.into_iter().map(|r| (r, mult)));
        } else {
            let q = QuadraticFactor {
                a: -root.re.clone(),
                d: &root.im * &root.im,
            };
            if mult > 1 {
                return Err(Error::RepeatedQuadraticFactor {
                    factor: q.poly().to_string(),
                    multiplicity: mult,
                });
            }
            quadratic.push(q);
        }
    }
    let mut residual: Poly<Rational> = residual.map(|c| c.re.clone());

    for root in rational_roots(&residual) {
        let linear_factor = Poly::linear(&root);
        let mut mult = 0;
        while let Some(q) = residual.div_exact(&linear_factor) {
            residual = q;
            mult += 1;
        }
        linear.push((GaussianRational::from(root), mult));
    }

    for (part, mult) in residual.squarefree_decomposition() {
        let quadratics = match part.degree() {
            Some(2) => vec![part.clone()],
            Some(4) => match split_quartic(&part) {
                Some((f, g)) => vec![f, g],
                None => return Err(irrational(&part)),
            },
            _ => return Err(irrational(&part)),
        };
        for f in quadratics {
            let q = QuadraticFactor::from_monic(&f);
            if !q.d.is_positive() {
                return Err(irrational(&f));
            }
            match mode {
                SpectrumMode::Complex => {
                    let roots = q.gaussian_roots().ok_or_else(|| irrational(&f))?;
                    linear.extend(roots.into_iter().map(|r| (r, mult)));
                }
                SpectrumMode::Real if mult > 1 => {
                    return Err(Error::RepeatedQuadraticFactor {
                        factor: f.to_string(),
                        multiplicity: mult,
                    });
                }
                SpectrumMode::Real => quadratic.push(q),
            }
        }
    }

    linear.sort();
    quadratic.sort();
    let factored = FactoredCharPoly {
        mode,
        linear,
        quadratic,
    };
    debug_assert_eq!(
        factored.expand(),
        p.map(|c| GaussianRational::from(c.clone()))
    );
    Ok(factored)
}

fn irrational(residual: &Poly<Rational>) -> Error {
    Error::IrrationalSpectrum {
        residual: residual.to_string(),
    }
}

fn deflate_exactly(
    p: &Poly<GaussianRational>,
    root: &GaussianRational,
    mult: usize,
) -> core::result::Result<Poly<GaussianRational>, &'static str> {
    let factor = Poly::linear(root);
    let mut out = p.clone();
    for _ in 0..mult {
        out = out
            .div_exact(&factor)
            .ok_or("multiplicity exceeds the actual one")?;
    }
    if out.eval(root).is_zero() {
        return Err("actual multiplicity is larger");
    }
    Ok(out)
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    let Some(ints) = primitive_integer_coeffs(p) else {
        return Vec::new();
    };
    let mut roots = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[lowest..];
    if ints.len() < 2 {
        return roots;
    }
    let lead = ints.last().unwrap().abs();
    let constant = ints[0].abs();
    // Cauchy bound on |root|
    let bound = ints[..ints.len() - 1]
        .iter()
        .map(|c| Rational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one();
    let numerators = divisors(&constant);
    let denominators = divisors(&lead);
    let mut candidates = Vec::new();
    for num in &numerators {
        for den in &denominators {
            if !num.gcd(den).is_one() {
                continue;
            }
            let c = Rational::new(num.clone(), den.clone());
            if c > bound {
                continue;
            }
            candidates.push(-c.clone());
            candidates.push(c);
        }
    }
    for c in candidates {
        if eval_integer_poly_at(ints, &c) {
            roots.push(c);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn primitive_integer_coeffs(p: &Poly<Rational>) -> Option<Vec<Integer>> {
    if p.degree()? == 0 {
        return None;
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Integer> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    Some(ints.into_iter().map(|c| c / &content).collect())
}

/// Whether `c = u/v` is a root, via `sum a_i u^i v^(n-i) = 0` in integers.
fn eval_integer_poly_at(ints: &[Integer], c: &Rational) -> bool {
    let (u, v) = (c.numer(), c.denom());
    let n = ints.len() - 1;
    let mut acc = Integer::zero();
    let mut vpow = Integer::one();
    let mut terms = vec![Integer::zero(); n + 1];
    for i in (0..=n).rev() {
        terms[i] = vpow.clone();
        vpow *= v;
    }
    let mut upow = Integer::one();
    for i in 0..=n {
        acc += &ints[i] * &upow * &terms[i];
        upow *= u;
    }
    acc.is_zero()
}

/// Positive divisors of `n > 0`, by trial division. Cofactors left after
/// trial division up to the cap are treated as prime.
fn divisors(n: &Integer) -> Vec<Integer> {
    const TRIAL_CAP: u64 = 1_000_000;
    let mut rest = n.abs();
    if rest.is_zero() {
        return vec![Integer::one()];
    }
    let mut primes: Vec<(Integer, u32)> = Vec::new();
    let mut f: u64 = 2;
    while f <= TRIAL_CAP {
        let fb = Integer::from(f);
        if &fb * &fb > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &fb).is_zero() {
            rest /= &fb;
            e += 1;
        }
        if e > 0 {
            primes.push((fb, e));
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        primes.push((rest, 1));
    }
    let mut out = vec![Integer::one()];
    for (prime, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pw = d.clone();
            next.push(pw.clone());
            for _ in 0..e {
                pw *= &prime;
                next.push(pw.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Splits a monic square-free quartic with no rational roots into two
/// monic rational quadratics, through the rational roots of its resolvent
/// cubic `y^3 - c y^2 + (b e - 4 g) y - (b^2 g - 4 c g + e^2)`, where
/// `y = q + v` for `(s^2 + p s + q)(s^2 + u s + v)`.
fn split_quartic(f: &Poly<Rational>) -> Option<(Poly<Rational>, Poly<Rational>)> {
    let (g, e, c, b) = (f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
    let four = Rational::from_integer(4.into());
    let half = Rational::new(1.into(), 2.into());
    let resolvent = Poly::new(vec![
        -(&b * &b * &g - &four * &c * &g + &e * &e),
        &b * &e - &four * &g,
        -c.clone(),
        Rational::one(),
    ]);
    for y in rational_roots(&resolvent) {
        let Some(s1) = rational_sqrt(&(&y * &y - &four * &g)) else {
            continue;
        };
        let Some(s2) = rational_sqrt(&(&b * &b - &four * (&c - &y))) else {
            continue;
        };
        let q = (&y + &s1) * &half;
        let v = (&y - &s1) * &half;
        for sign in [Rational::one(), -Rational::one()] {
            let p = (&b + &s2 * &sign) * &half;
            let u = (&b - &s2 * &sign) * &half;
            let first = Poly::new(vec![q.clone(), p, Rational::one()]);
            let second = Poly::new(vec![v.clone(), u, Rational::one()]);
            if &first * &second == *f {
                return Some((first, second));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(
            cs.iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(
            Rational::from_integer(re.into()),
            Rational::from_integer(im.into()),
        )
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn triple_root() {
        let f = factor_charpoly(&p(&[-8, 12, -6, 1]), SpectrumMode::Complex, &[]).unwrap();
        assert_eq!(f.linear, vec![(g(2, 0), 3)]);
        assert!(f.quadratic.is_empty());
    }

    #[test]
    fn real_mode_linear_and_quadratic() {
        let f = factor_charpoly(&p(&[26, 21, 6, 1]), SpectrumMode::Real, &[]).unwrap();
        assert_eq!(f.linear, vec![(g(-2, 0), 1)]);
        assert_eq!(f.quadratic, vec![QuadraticFactor { a: r(2), d: r(9) }]);
        let f = factor_charpoly(&p(&[9, 0, 1]), SpectrumMode::Real, &[]).unwrap();
        assert_eq!(f.quadratic, vec![QuadraticFactor { a: r(0), d: r(9) }]);
    }

    #[test]
    fn complex_mode_gaussian_roots() {
        let f = factor_charpoly(&p(&[26, 21, 6, 1]), SpectrumMode::Complex, &[]).unwrap();
        assert_eq!(f.linear, vec![(g(-2, -3), 1), (g(-2, 0), 1), (g(-2, 3), 1)]);
        // (s^2+1)^2 is fine over Q(i)
        let f = factor_charpoly(&p(&[1, 0, 2, 0, 1]), SpectrumMode::Complex, &[]).unwrap();
        assert_eq!(f.linear, vec![(g(0, -1), 2), (g(0, 1), 2)]);
    }

    #[test]
    fn irrational_and_repeated_quadratic() {
        let err = factor_charpoly(&p(&[-2, 0, 1]), SpectrumMode::Complex, &[]).unwrap_err();
        assert_eq!(
            err,
            Error::IrrationalSpectrum {
                residual: "s^2 - 2".into()
            }
        );
        let err = factor_charpoly(&p(&[-2, 0, 1]), SpectrumMode::Real, &[]).unwrap_err();
        assert!(matches!(err, Error::IrrationalSpectrum { .. }));
        let err = factor_charpoly(&p(&[1, 0, 2, 0, 1]), SpectrumMode::Real, &[]).unwrap_err();
        assert_eq!(
            err,
            Error::RepeatedQuadraticFactor {
                factor: "s^2 + 1".into(),
                multiplicity: 2
            }
        );
        // s^2 + 2 has no Gaussian-rational roots
        let err = factor_charpoly(&p(&[2, 0, 1]), SpectrumMode::Complex, &[]).unwrap_err();
        assert!(matches!(err, Error::IrrationalSpectrum { .. }));
        // cubic with no rational root
        let err = factor_charpoly(&p(&[-2, 0, 0, 1]), SpectrumMode::Real, &[]).unwrap_err();
        assert_eq!(
            err,
            Error::IrrationalSpectrum {
                residual: "s^3 - 2".into()
            }
        );
    }

    #[test]
    fn quartic_splits_into_distinct_quadratics() {
        // (s^2 + 1)(s^2 + 2s + 5)
        let f = &p(&[1, 0, 1]) * &p(&[5, 2, 1]);
        let fac = factor_charpoly(&f, SpectrumMode::Real, &[]).unwrap();
        assert_eq!(
            fac.quadratic,
            vec![
                QuadraticFactor { a: r(0), d: r(1) },
                QuadraticFactor { a: r(1), d: r(4) }
            ]
        );
        // (s^2 + 2)(s^2 + 3): not Gaussian in complex mode, fine in real mode
        let f = &p(&[2, 0, 1]) * &p(&[3, 0, 1]);
        let fac = factor_charpoly(&f, SpectrumMode::Real, &[]).unwrap();
        assert_eq!(fac.quadratic.len(), 2);
        assert_eq!(fac.expand(), f.map(|c| GaussianRational::from(c.clone())));
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2s - 1)(3s + 2) s
        let f = &(&p(&[-1, 2]) * &p(&[2, 3])) * &p(&[0, 1]);
        let roots = rational_roots(&f);
        assert_eq!(
            roots,
            vec![
                Rational::new((-2).into(), 3.into()),
                r(0),
                Rational::new(1.into(), 2.into())
            ]
        );
    }

    #[test]
    fn hints_are_verified() {
        // (s^2 + 2)(s - 1): hint sqrt-free Gaussian root is wrong, rational hint right
        let f = &p(&[2, 0, 1]) * &p(&[-1, 1]);
        let err = factor_charpoly(&f, SpectrumMode::Complex, &[(g(0, 1), 1)]).unwrap_err();
        assert!(matches!(err, Error::HintMismatch { .. }));
        let err = factor_charpoly(&f, SpectrumMode::Real, &[(g(1, 0), 2)]).unwrap_err();
        assert!(matches!(err, Error::HintMismatch { .. }));
        let ok = factor_charpoly(&p(&[-8, 12, -6, 1]), SpectrumMode::Complex, &[(g(2, 0), 3)]);
        assert_eq!(ok.unwrap().linear, vec![(g(2, 0), 3)]);
        let err = factor_charpoly(&p(&[-8, 12, -6, 1]), SpectrumMode::Complex, &[(g(2, 0), 2)]);
        assert!(matches!(err, Err(Error::HintMismatch { .. })));
    }

    #[test]
    fn gaussian_hint_in_real_mode_becomes_quadratic() {
        let f = p(&[13, 4, 1]);
        let fac = factor_charpoly(&f, SpectrumMode::Real, &[(g(-2, 3), 1)]).unwrap();
        assert_eq!(fac.quadratic, vec![QuadraticFactor { a: r(2), d: r(9) }]);
        let fac =
            factor_charpoly(&f, SpectrumMode::Complex, &[(g(-2, 3), 1), (g(-2, -3), 1)]).unwrap();
        assert_eq!(fac.linear.len(), 2);
    }
}
