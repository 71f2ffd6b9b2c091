//! Monomials, sparse multivariate polynomials, dense univariate polynomials
//! and a text parser for polynomial expressions.

mod monomial;
mod multi;
mod parse;
mod uni;

pub use monomial::{grevlex_cmp, Monomial};
pub use multi::{poly_eval_interval, MultiPoly};
pub use parse::parse_polynomial;
pub use uni::UniPoly;
