//! Exact computational algebra over the rational function field F_p(t).
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: F_p, sparse F_p[t] with arbitrary-size exponents, canonical
//!   F_p(t), the text grammar and irreducible enumeration.
//! - [`places`]: places of F_p(t), valuations, truncated local expansions and
//!   valuation profiles of sequences.
//! - [`derivation`]: the iterative (Hasse-Schmidt) derivation on F_p(t),
//!   Lucas arithmetic, the `Delta_m` projection and p^m-th roots.
//! - [`ideal`]: multivariate polynomials over F_p(t), Groebner bases,
//!   derivation-stability of ideals and descent to p^m-power coefficients.
//! - [`units`]: S-unit groups, local power-residue images, congruence
//!   witnesses and the Frobenius filtration.
//! - [`reports`]: reproducible convergence reports for two explicit
//!   sequences.

pub mod derivation;
pub mod error;
pub mod field;
pub mod ideal;
pub mod places;
pub mod reports;
pub mod units;

pub use derivation::{c_coeff, delta_m, hasse_derive, lucas_binom, pm_power_root, DerivationIndex};
pub use error::{Error, ParseError, Result};
pub use field::{irreducibles, modpow_quotient, parse_ratfunc, Exponent, FpElement, FpPoly, Prime, RatFunc};
pub use ideal::{MonomialOrder, MultiPoly, PolyIdeal};
pub use places::{valuation, Place, Valuation};
pub use units::{SUnitGroup, SUnitVector};
