mod common;

use common::{q, Planted};
use matpfd_core::pipeline::Decomposition;
use matpfd_core::pipeline::{analyze, DEFAULT_TIMES};
use matpfd_core::scalar::{parse_rational, render_rational};
use matpfd_core::{
    exp_eval, factor_charpoly, numeric_oracle_exp, reconstruct_real_resolvent,
    reconstruct_resolvent, GaussianRational, Matrix, Mode, Poly, Rational, Scalar, SpectrumMode,
    SqrtExt,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type G = GaussianRational;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn gaussian() -> impl Strategy<Value = G> {
    (rational(), rational()).prop_map(|(re, im)| G::new(re, im))
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(q).collect()).unwrap())
}

proptest! {
    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + a.clone() * &c);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!((a.clone() * &b).norm(), a.norm() * b.norm());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &Scalar::inv(&a).unwrap(), G::one());
        }
    }

    #[test]
    fn gaussian_text_round_trip(a in gaussian()) {
        let parsed: G = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(parse_rational(&render_rational(&a)).unwrap(), a);
    }

    #[test]
    fn sqrt_extension_norm(a in rational(), b in rational(), d in prop::sample::select(vec![2i64, 3, 5, 6, 7])) {
        let x = SqrtExt::new(a, b, q(d)).unwrap();
        let n = x.mul(&x.conj()).unwrap();
        prop_assert_eq!(n, SqrtExt::new(x.norm(), Rational::zero(), q(d)).unwrap());
        if !x.is_zero() {
            let one = x.mul(&x.inv().unwrap()).unwrap();
            prop_assert_eq!(one, SqrtExt::new(Rational::one(), Rational::zero(), q(d)).unwrap());
        }
    }

    #[test]
    fn taylor_shift_inverts(coeffs in proptest::collection::vec(rational(), 0..7), c in rational()) {
        let p = Poly::new(coeffs);
        let back = p.taylor_shift(&c).taylor_shift(&-c.clone());
        prop_assert_eq!(&back, &p);
        let x = Rational::new(3.into(), 7.into());
        prop_assert_eq!(p.taylor_shift(&c).eval(&x), p.eval(&(x + &c)));
    }

    #[test]
    fn series_division_agrees_with_multiplication(
        num in proptest::collection::vec(rational(), 1..6),
        den_tail in proptest::collection::vec(rational(), 0..4),
        c0 in rational().prop_filter("unit", |c| !c.is_zero()),
    ) {
        let num = Poly::new(num);
        let mut den = vec![c0];
        den.extend(den_tail);
        let den = Poly::new(den);
        let order = 6;
        let quot = Poly::series_div(&num, &den, order).unwrap();
        let prod = &quot * &den;
        for k in 0..order {
            prop_assert_eq!(prod.coeff(k), num.coeff(k));
        }
    }

    #[test]
    fn factorization_recovers_planted_roots(
        roots in proptest::collection::vec((-6i64..=6, 1i64..=3, 1usize..=3), 1..4),
    ) {
        let mut seen = std::collections::BTreeMap::new();
        for (n, d, m) in roots {
            *seen.entry(Rational::new(n.into(), d.into())).or_insert(0) += m;
        }
        let p = seen.iter().fold(Poly::one(), |acc, (r, m)| &acc * &Poly::linear(r).pow(*m));
        let f = factor_charpoly(&p, SpectrumMode::Complex, &[]).unwrap();
        let got: Vec<(Rational, usize)> = f.linear.iter().map(|(l, m)| (l.re.clone(), *m)).collect();
        let want: Vec<(Rational, usize)> = seen.into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn resolvent_reconstruction(a in (2usize..=3).prop_flat_map(small_matrix)) {
        let Ok(analysis) = analyze(&a, Mode::Auto, &[]) else {
            return Ok(());
        };
        let n = a.rows();
        let avoid: Vec<Rational> = analysis.factored.linear.iter().map(|(l, _)| l.re.clone()).collect();
        let points = (0..40).map(|k| Rational::new((2 * k + 11).into(), 3.into()));
        for s0 in points.filter(|s| !avoid.contains(s)).take(3) {
            let rhs = a.shift(&s0).scale(&-Rational::one());
            let res = match &analysis.decomposition {
                Decomposition::Complex(pfd) => {
                    let s0 = G::from(s0.clone());
                    let r = reconstruct_resolvent(pfd, &s0).unwrap();
                    let lhs = &r * &rhs.map(|x| G::from(x.clone()));
                    lhs == Matrix::identity(n)
                }
                Decomposition::Real(pfd) => {
                    &reconstruct_real_resolvent(pfd, &s0).unwrap() * &rhs == Matrix::identity(n)
                }
            };
            prop_assert!(res);
        }
    }

    #[test]
    fn verification_suite_passes(a in (2usize..=4).prop_flat_map(small_matrix)) {
        let Ok(analysis) = analyze(&a, Mode::Auto, &[]) else {
            return Ok(());
        };
        let report = analysis.verify(&DEFAULT_TIMES);
        prop_assert!(report.all_passed(), "A = {}\n{}", a, report);
    }
}

#[test]
fn closed_form_tracks_oracle_on_planted_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for k in 0..40 {
        let planted = Planted::random(&mut rng, 2 + k % 5);
        let cf = analyze(&planted.a, Mode::Auto, &[]).unwrap().closed_form();
        for t in DEFAULT_TIMES {
            let err = exp_eval(&cf, t).relative_error(&numeric_oracle_exp(&planted.a, t));
            assert!(err <= 1e-9, "A = {}, t = {t}: {err:e}", planted.a);
        }
    }
}
