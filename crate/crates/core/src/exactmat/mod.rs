//! Exact dense linear algebra over the rationals.

mod elim;
mod matrix;
pub mod rational;
mod schur;
mod textio;

pub use elim::{
    column_space, inverse, is_invertible, null_space, rank, rank_normal_form, row_reduce,
    RankNormalForm, RowReduction,
};
pub use matrix::Matrix;
pub use rational::{frac, int, parse_rational, Rational};
pub use schur::{schur_complement, schur_one_inverse};
pub use textio::parse_matrices;
pub(crate) use textio::parse_json_value;
