//! Exact partial-fraction decomposition of matrix resolvents.
//!
//! Given a square rational matrix `A`, this crate computes the expansion
//!
//! ```text
//! (sI - A)^-1 = sum_i sum_j B_ij / (s - lambda_i)^j
//! ```
//!
//! with exact matrix coefficients, reads chains of generalized eigenvectors
//! off the columns of the `B_ij`, and inverse-Laplace-transforms the
//! expansion into a closed-form `e^{tA}`. Everything except the
//! floating-point evaluator and the scaling-and-squaring oracle in
//! [`expm`] is exact.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod chains;
pub mod error;
pub mod expm;
pub mod linalg;
pub mod pfd;
pub mod pipeline;
pub mod poly;
pub mod scalar;

pub use chains::{
    extract_column_chains, generalized_rank, membership_check, select_chain_basis, Chain,
    ChainBasis, ChainSource, Membership,
};
pub use error::{Error, Result};
pub use expm::{
    exp_derivative, exp_eval, exp_from_pfd, exp_from_real_pfd, general_solution,
    numeric_oracle_exp, solve_ivp, BasisFn, ClosedFormExp, FloatMatrix, GeneralSolution,
    IvpSolution,
};
pub use linalg::{faddeev_leverrier, Matrix, PolyMatrix};
pub use pfd::{
    pfd_real, pfd_residue, pfd_undetermined, reconstruct_real_resolvent, reconstruct_resolvent,
    verify_pfd, verify_real_pfd, EigenBlock, QuadraticBlock, RealResolventPfd, ResolventPfd,
    VerifyReport,
};
pub use pipeline::{Decomposition, Mode};
pub use poly::{factor_charpoly, FactoredCharPoly, Poly, QuadraticFactor, SpectrumMode};
pub use scalar::{GaussianRational, Integer, Rational, Scalar, SqrtExt};
