//! Exact dense matrices, fraction-free elimination and the Faddeev–LeVerrier
//! characteristic polynomial / adjugate pair.

mod bareiss;
mod faddeev;
mod matrix;

pub use bareiss::{Echelon, Nullspace};
pub use faddeev::{faddeev_leverrier, PolyMatrix, MAX_DIMENSION};
pub use matrix::Matrix;
