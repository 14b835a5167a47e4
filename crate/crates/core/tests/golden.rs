//! Worked examples with hand-checked expansion coefficients, chains and
//! closed forms.

mod common;

use common::{frac, q, qvec, M};
use matpfd_core::pipeline::{analyze, Decomposition, DEFAULT_TIMES};
use matpfd_core::{
    exp_derivative, exp_eval, exp_from_pfd, extract_column_chains, factor_charpoly,
    faddeev_leverrier, general_solution, pfd_residue, pfd_undetermined, select_chain_basis,
    solve_ivp, BasisFn, ChainSource, Error, GaussianRational, Mode, Poly, Rational, SpectrumMode,
};

type G = GaussianRational;

fn m(rows: &[&[i64]]) -> M {
    M::from_i64_rows(rows)
}

fn g(re: i64, im: i64) -> G {
    G::new(q(re), q(im))
}

fn gm(rows: &[&[i64]]) -> matpfd_core::Matrix<G> {
    m(rows).map(|x| G::from(x.clone()))
}

fn gvec(v: &[i64]) -> Vec<G> {
    v.iter().map(|&x| G::from(q(x))).collect()
}

fn poly_exp(re: i64, power: usize) -> BasisFn<G> {
    BasisFn::PolyExp {
        lambda: g(re, 0),
        power,
    }
}

fn triple_root() -> M {
    m(&[&[0, 1, 2], &[-2, 4, 0], &[-1, 1, 2]])
}

#[test]
fn triple_root_coefficients() {
    let a = triple_root();
    let (p, adj) = faddeev_leverrier(&a).unwrap();
    assert_eq!(p, Poly::new(qvec(&[-8, 12, -6, 1])));
    let f = factor_charpoly(&p, SpectrumMode::Complex, &[]).unwrap();
    assert_eq!(f.linear, vec![(g(2, 0), 3)]);

    let pfd = pfd_residue::<Rational>(&f, &adj).unwrap();
    let b = &pfd.blocks[0].coefficients;
    assert_eq!(b[0], M::identity(3));
    assert_eq!(b[1], m(&[&[-2, 1, 2], &[-2, 2, 0], &[-1, 1, 0]]));
    assert_eq!(b[2], m(&[&[0, 2, -4], &[0, 2, -4], &[0, 1, -2]]));
    assert_eq!(pfd_undetermined::<Rational>(&f, &adj).unwrap(), pfd);
}

#[test]
fn triple_root_chains() {
    let a = triple_root();
    let analysis = analyze(&a, Mode::Complex, &[]).unwrap();
    let Decomposition::Complex(pfd) = &analysis.decomposition else {
        panic!("expected complex decomposition");
    };
    let chains = extract_column_chains(pfd, 0).unwrap();
    let vectors: Vec<Vec<Vec<G>>> = chains.iter().map(|c| c.vectors.clone()).collect();
    assert_eq!(
        vectors,
        vec![
            vec![gvec(&[1, 0, 0]), gvec(&[-2, -2, -1])],
            vec![gvec(&[0, 1, 0]), gvec(&[1, 2, 1]), gvec(&[2, 2, 1])],
            vec![gvec(&[0, 0, 1]), gvec(&[2, 0, 0]), gvec(&[-4, -4, -2])],
        ]
    );
    let ga = analysis.gaussian_matrix();
    assert!(chains.iter().all(|c| c.is_valid_for(&ga)));

    let basis = select_chain_basis(pfd, 0).unwrap();
    assert_eq!(basis.chains.len(), 1);
    assert_eq!(basis.chains[0].source, ChainSource::Column(1));
    assert_eq!(basis.total(), 3);
}

#[test]
fn chain_selection_with_vanishing_coefficient() {
    let a = m(&[&[-5, 6, 2], &[-6, 7, 2], &[6, -6, -1]]);
    let analysis = analyze(&a, Mode::Complex, &[]).unwrap();
    let Decomposition::Complex(pfd) = &analysis.decomposition else {
        unreachable!()
    };
    let i = pfd
        .blocks
        .iter()
        .position(|b| b.eigenvalue == g(1, 0))
        .unwrap();
    let basis = select_chain_basis(pfd, i).unwrap();
    let lengths: Vec<usize> = basis.chains.iter().map(|c| c.len()).collect();
    assert_eq!(lengths, vec![1, 1]);
    assert_eq!(basis.combination_chains(), 0);
}

#[test]
fn chain_selection_for_scalar_matrix() {
    let a = M::identity(3).scale(&q(4));
    let analysis = analyze(&a, Mode::Complex, &[]).unwrap();
    let Decomposition::Complex(pfd) = &analysis.decomposition else {
        unreachable!()
    };
    let basis = select_chain_basis(pfd, 0).unwrap();
    let sources: Vec<ChainSource<G>> = basis.chains.iter().map(|c| c.source.clone()).collect();
    assert_eq!(
        sources,
        vec![
            ChainSource::Column(0),
            ChainSource::Column(1),
            ChainSource::Column(2)
        ]
    );
}

#[test]
fn column_chains_can_miss_a_basis() {
    // N = x y^T with y^T x = 0 and every y_m nonzero: every column chain is
    // e_m -> x, so the plain columns never give the length-1 chain of the
    // (2, 1) block structure.
    let a = m(&[&[1, 1, 1], &[-1, -1, -1], &[0, 0, 0]]);
    let analysis = analyze(&a, Mode::Complex, &[]).unwrap();
    let Decomposition::Complex(pfd) = &analysis.decomposition else {
        unreachable!()
    };
    let columns = extract_column_chains(pfd, 0).unwrap();
    assert!(columns
        .iter()
        .all(|c| c.len() == 2 && c.eigenvector() == gvec(&[1, -1, 0])));
    let basis = select_chain_basis(pfd, 0).unwrap();
    let lengths: Vec<usize> = basis.chains.iter().map(|c| c.len()).collect();
    assert_eq!(lengths, vec![2, 1]);
    assert_eq!(basis.combination_chains(), 1);
    let ga = analysis.gaussian_matrix();
    assert!(basis.chains.iter().all(|c| c.is_valid_for(&ga)));
}

#[test]
fn distinct_real_eigenvalues() {
    let a = m(&[&[6, 4], &[-3, -1]]);
    let cf = analyze(&a, Mode::Auto, &[]).unwrap().closed_form();
    assert_eq!(
        cf.terms,
        vec![
            (poly_exp(2, 0), gm(&[&[-3, -4], &[3, 4]])),
            (poly_exp(3, 0), gm(&[&[4, 4], &[-3, -3]])),
        ]
    );
}

#[test]
fn pure_rotation_real_form() {
    let a = m(&[&[5, 17], &[-2, -5]]);
    let analysis = analyze(&a, Mode::Real, &[]).unwrap();
    let cf = analysis.closed_form();
    let third = G::from(frac(1, 3));
    assert_eq!(
        cf.terms,
        vec![
            (BasisFn::Cos { a: q(0), d: q(9) }, gm(&[&[1, 0], &[0, 1]])),
            (
                BasisFn::Sin { a: q(0), d: q(9) },
                gm(&[&[5, 17], &[-2, -5]]).scale(&third)
            ),
        ]
    );
    // Auto picks the Gaussian eigenvalues +-3i; both forms give the same e^{tA}.
    let auto = analyze(&a, Mode::Auto, &[]).unwrap();
    assert_eq!(auto.factored.mode, SpectrumMode::Complex);
    let complex = auto.closed_form();
    for t in DEFAULT_TIMES {
        let err = exp_eval(&complex, t).relative_error(&exp_eval(&cf, t));
        assert!(err < 1e-12, "t = {t}: {err}");
    }
}

#[test]
fn initial_value_problem_drops_vanishing_term() {
    let a = m(&[&[-5, 6, 2], &[-6, 7, 2], &[6, -6, -1]]);
    let analysis = analyze(&a, Mode::Auto, &[]).unwrap();
    let Decomposition::Complex(pfd) = &analysis.decomposition else {
        panic!("expected complex decomposition");
    };
    let one = pfd.blocks.iter().find(|b| b.eigenvalue == g(1, 0)).unwrap();
    assert_eq!(
        one.coefficients[0],
        gm(&[&[-2, 3, 1], &[-3, 4, 1], &[3, -3, 0]])
    );
    assert!(one.coefficients[1].is_zero());
    let minus_one = pfd
        .blocks
        .iter()
        .find(|b| b.eigenvalue == g(-1, 0))
        .unwrap();
    assert_eq!(
        minus_one.coefficients[0],
        gm(&[&[3, -3, -1], &[3, -3, -1], &[-3, 3, 1]])
    );

    let sol = solve_ivp(&a, &qvec(&[1, -1, 2]), Mode::Auto).unwrap();
    assert_eq!(
        sol.terms,
        vec![
            (poly_exp(-1, 0), gvec(&[4, 4, -4])),
            (poly_exp(1, 0), gvec(&[-3, -5, 6])),
        ]
    );
    assert_eq!(sol.value_at_zero(), gvec(&[1, -1, 2]));
}

#[test]
fn mixed_real_and_quadratic_factor() {
    let a = m(&[&[1, 9, 6], &[-6, -20, -12], &[9, 24, 13]]);
    let analysis = analyze(&a, Mode::Real, &[]).unwrap();
    let Decomposition::Real(pfd) = &analysis.decomposition else {
        panic!("expected real decomposition");
    };
    assert_eq!(pfd.linear.len(), 1);
    assert_eq!(pfd.linear[0].eigenvalue, q(-2));
    assert_eq!(
        pfd.linear[0].coefficients[0],
        m(&[&[2, 1, 0], &[-2, -1, 0], &[2, 1, 0]])
    );
    let quad = &pfd.quadratic[0];
    assert_eq!((quad.factor.a.clone(), quad.factor.d.clone()), (q(2), q(9)));
    assert_eq!(quad.p, m(&[&[-1, -1, 0], &[2, 2, 0], &[-2, -1, 1]]));
    assert_eq!(quad.q, m(&[&[3, 9, 6], &[-6, -18, -12], &[9, 24, 15]]));

    let cf = analysis.closed_form();
    assert_eq!(
        cf.coefficient(&BasisFn::Sin { a: q(2), d: q(9) }),
        Some(&gm(&[&[1, 3, 2], &[-2, -6, -4], &[3, 8, 5]]))
    );
    assert!(
        analysis.verify(&DEFAULT_TIMES).all_passed(),
        "{}",
        analysis.verify(&DEFAULT_TIMES)
    );
}

#[test]
fn gaussian_eigenvalues_in_complex_mode() {
    let a = m(&[&[1, 9, 6], &[-6, -20, -12], &[9, 24, 13]]);
    let analysis = analyze(&a, Mode::Complex, &[]).unwrap();
    let eigenvalues: Vec<G> = analysis
        .factored
        .linear
        .iter()
        .map(|(l, _)| l.clone())
        .collect();
    assert_eq!(eigenvalues, vec![g(-2, -3), g(-2, 0), g(-2, 3)]);
    let report = analysis.verify(&DEFAULT_TIMES);
    assert!(report.all_passed(), "{report}");
}

#[test]
fn derivative_identity_on_examples() {
    for a in [
        triple_root(),
        m(&[&[6, 4], &[-3, -1]]),
        m(&[&[-5, 6, 2], &[-6, 7, 2], &[6, -6, -1]]),
    ] {
        let analysis = analyze(&a, Mode::Complex, &[]).unwrap();
        let Decomposition::Complex(pfd) = &analysis.decomposition else {
            unreachable!()
        };
        let cf = exp_from_pfd(pfd);
        let ga = analysis.gaussian_matrix();
        let expected = matpfd_core::expm::left_multiply(&ga, &cf);
        assert_eq!(exp_derivative(&cf), expected);
    }
}

#[test]
fn fundamental_system_has_unit_wronskian() {
    let sol = general_solution(&triple_root(), Mode::Auto).unwrap();
    assert_eq!(sol.columns.len(), 3);
    assert_eq!(sol.wronskian_at_zero().unwrap(), g(1, 0));
    // Column 2 of e^{tA}: e^{2t}(e_2 + t (1,2,1) + t^2/2 (2,2,1)).
    assert_eq!(
        sol.columns[1],
        vec![
            (poly_exp(2, 0), gvec(&[0, 1, 0])),
            (poly_exp(2, 1), gvec(&[1, 2, 1])),
            (poly_exp(2, 2), vec![g(1, 0), g(1, 0), G::from(frac(1, 2))]),
        ]
    );
}

#[test]
fn irrational_spectrum_is_reported() {
    let a = m(&[&[0, 1], &[2, 0]]);
    match analyze(&a, Mode::Complex, &[]) {
        Err(Error::IrrationalSpectrum { residual }) => assert_eq!(residual, "s^2 - 2"),
        other => panic!("unexpected {other:?}"),
    }
    // Auto falls back to the real form, which still fails: s^2 - 2 has no
    // rational roots and is not an irreducible real quadratic.
    assert!(analyze(&a, Mode::Auto, &[]).is_err());
}

#[test]
fn irrational_frequency_in_real_mode() {
    let a = m(&[&[0, 1], &[-2, 0]]);
    let analysis = analyze(&a, Mode::Auto, &[]).unwrap();
    assert_eq!(analysis.factored.mode, SpectrumMode::Real);
    let report = analysis.verify(&DEFAULT_TIMES);
    assert!(report.all_passed(), "{report}");
    let cf = analysis.closed_form();
    assert_eq!(
        cf.coefficient(&BasisFn::Sin { a: q(0), d: q(2) }),
        Some(&gm(&[&[0, 1], &[-2, 0]]))
    );
}

#[test]
fn repeated_quadratic_rejected_in_real_mode() {
    // Two copies of the rotation generator: p(s) = (s^2 + 1)^2.
    let a = m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    match analyze(&a, Mode::Real, &[]) {
        Err(Error::RepeatedQuadraticFactor {
            factor,
            multiplicity,
        }) => {
            assert_eq!((factor.as_str(), multiplicity), ("s^2 + 1", 2));
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(analyze(&a, Mode::Complex, &[])
        .unwrap()
        .verify(&DEFAULT_TIMES)
        .all_passed());
}
