//! Exact arithmetic in F_p, F_p[t] and F_p(t).

mod exponent;
mod fp;
mod irreducible;
mod parse;
mod poly;
mod ratfunc;

pub use exponent::Exponent;
pub use fp::{FpElement, Prime, MAX_PRIME};
pub use irreducible::{factor, irreducibles, irreducibles_up_to_degree, is_irreducible, Irreducibles};
pub use parse::{parse_poly, parse_ratfunc, parse_ratfunc_with_n};
pub use poly::{modpow_quotient, FpPoly};
pub use ratfunc::RatFunc;

pub(crate) use fp::binom_small;
pub(crate) use parse::{parse_expr, Expr};
pub(crate) use poly::{coefficient_index, dense_div_rem, dense_mul, DENSE_LIMIT};
