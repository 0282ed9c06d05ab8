//! Exact arithmetic: rationals, sparse multivariate polynomials, dense
//! univariate polynomials and truncated power series.

mod multipoly;
mod parse;
mod rational;
mod ring;
mod series;
mod unipoly;

pub use multipoly::{
    poly_arith, projective_vars, vars_from, Homogeneity, Monomial, MultiPoly, PolyOp, Vars,
};
pub use parse::{infer_vars, parse_poly};
pub use rational::{
    big, binomial, factorial, fmt_pq, int, is_nonneg_integer, lcm_of_denominators,
    parse_rational, rat, to_integer, Rational,
};
pub use ring::{subset_laplace_det, CommRing};
pub use series::{series_inverse, series_mul, TruncSeries};
pub use unipoly::{binom_poly, UniPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
}
