//! The iterative derivation `{D^(i)}` on F_p(t) with `D^(i)(t^e) = C(e, i) t^(e-i)`.

mod delta;
mod hasse;
mod lucas;

pub use delta::{delta_m, delta_m_termwise, delta_m_with_bound, frobenius_root, pm_power_root, DEFAULT_POWER_BOUND};
pub use hasse::{
    c_coeff, hasse_derivatives_by_leibniz, hasse_derive, hasse_derive_by_leibniz, hasse_derive_index,
    hasse_derive_poly,
};
pub use lucas::{lucas_binom, DerivationIndex};

pub(crate) use delta::checked_pm;
