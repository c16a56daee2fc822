//! Exact scalars, sparse polynomials and linear algebra over the rationals.

mod matrix;
mod monomial;
mod poly;
mod rational;

pub use matrix::{
    canonical_basis, coefficient_matrix, normalize_first, nullspace, same_span, span_rank, Matrix,
};
pub use monomial::{monomial_basis, monomials_up_to, Monomial};
pub use poly::{poly_mul, Polynomial, VarNames};
pub(crate) use poly::{split_terms, write_term};
pub use rational::{
    as_int, as_nonneg_int, binomial, common_denominator, factorial, format_rational, int,
    parse_rational, rat, Rational,
};
