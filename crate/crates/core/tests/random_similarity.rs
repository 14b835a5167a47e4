//! Planted Jordan structures: every expansion coefficient is compared with
//! `S E N^(j-1) S^-1` computed directly from the planted form.

mod common;

use common::Planted;
use matpfd_core::pipeline::{analyze, Decomposition};
use matpfd_core::{
    exp_derivative, expm::left_multiply, factor_charpoly, faddeev_leverrier, pfd_residue,
    pfd_undetermined, select_chain_basis, verify_pfd, GaussianRational, Mode, Rational,
    SpectrumMode,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CASES: usize = 60;

fn cases() -> impl Iterator<Item = Planted> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    (0..CASES).map(move |k| Planted::random(&mut rng, 2 + k % 5))
}

#[test]
fn coefficients_match_planted_structure() {
    for planted in cases() {
        let (p, adj) = faddeev_leverrier(&planted.a).unwrap();
        assert_eq!(p, planted.charpoly(), "A = {}", planted.a);
        let f = factor_charpoly(&p, SpectrumMode::Complex, &[]).unwrap();
        let residue = pfd_residue::<Rational>(&f, &adj).unwrap();
        let undetermined = pfd_undetermined::<Rational>(&f, &adj).unwrap();
        assert_eq!(residue, undetermined, "A = {}", planted.a);

        let expected = planted.expected();
        assert_eq!(residue.blocks.len(), expected.len());
        for (block, exp) in residue.blocks.iter().zip(&expected) {
            assert_eq!(block.eigenvalue, exp.eigenvalue);
            assert_eq!(block.coefficients, exp.coefficients, "A = {}", planted.a);
        }
        let report = verify_pfd(&planted.a, &residue);
        assert!(report.all_passed(), "A = {}\n{report}", planted.a);
    }
}

#[test]
fn chain_bases_match_block_counts() {
    for planted in cases() {
        let analysis = analyze(&planted.a, Mode::Complex, &[]).unwrap();
        let Decomposition::Complex(pfd) = &analysis.decomposition else {
            unreachable!()
        };
        let ga = analysis.gaussian_matrix();
        let mut all = Vec::new();
        for (i, exp) in planted.expected().iter().enumerate() {
            let basis = select_chain_basis(pfd, i).unwrap();
            assert_eq!(basis.total(), exp.multiplicity);
            assert_eq!(basis.chains.len(), exp.block_count, "A = {}", planted.a);
            assert!(basis.chains.iter().all(|c| c.is_valid_for(&ga)));
            all.extend(basis.vectors().cloned());
        }
        let stacked =
            matpfd_core::Matrix::<GaussianRational>::from_columns(planted.n(), &all).unwrap();
        assert_eq!(stacked.rank(), planted.n());
    }
}

#[test]
fn closed_form_satisfies_the_equation() {
    for planted in cases() {
        let analysis = analyze(&planted.a, Mode::Auto, &[]).unwrap();
        let cf = analysis.closed_form();
        let ga = analysis.gaussian_matrix();
        assert_eq!(exp_derivative(&cf), left_multiply(&ga, &cf));
        assert_eq!(
            cf.value_at_zero(),
            matpfd_core::Matrix::identity(planted.n())
        );
    }
}
