//! Text, LaTeX and JSON renderings of every command result.

pub mod json;
pub mod latex;
pub mod text;

use matpfd_core::chains::{Chain, ChainBasis};
use matpfd_core::{GaussianRational, Poly, QuadraticFactor, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

/// Chains for one eigenvalue as shown by the `chains` command.
#[derive(Clone, Debug)]
pub struct EigenChains {
    pub eigenvalue: GaussianRational,
    pub multiplicity: usize,
    pub geometric_multiplicity: usize,
    pub columns: Vec<Chain<GaussianRational>>,
    pub basis: ChainBasis<GaussianRational>,
}

/// A rational or Gaussian value with `/`, or an inner sign, needs
/// parentheses when used as a factor.
pub(crate) fn needs_parens(text: &str) -> bool {
    text.contains('/') || text.chars().skip(1).any(|c| c == '+' || c == '-')
}

pub(crate) fn linear_factor(root: &GaussianRational) -> Poly<GaussianRational> {
    Poly::linear(root)
}

pub(crate) fn quadratic_poly(q: &QuadraticFactor) -> Poly<Rational> {
    q.poly()
}
