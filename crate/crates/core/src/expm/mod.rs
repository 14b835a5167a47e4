//! Closed-form matrix exponentials and linear ODE solutions obtained by
//! inverse Laplace transform of the resolvent expansion, plus a
//! floating-point scaling-and-squaring oracle to check them against.

mod closed_form;
mod float;
mod ode;
mod oracle;

pub use closed_form::{
    exp_derivative, exp_from_pfd, exp_from_real_pfd, left_multiply, BasisFn, ClosedFormExp,
};
pub use float::{exp_eval, exp_eval_complex, FloatMatrix};
pub use ode::{general_solution, solve_ivp, GeneralSolution, IvpSolution, VectorTerm};
pub use oracle::numeric_oracle_exp;
