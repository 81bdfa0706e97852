use num_bigint::BigUint;

use super::{valuation, Place, Valuation};
use crate::error::{Error, Result};
use crate::field::{irreducibles, parse_ratfunc_with_n, FpPoly, Prime, RatFunc};

/// Largest `n` for which the factorial-exponent sequence `t^(p^(n!))` is
/// materialized.
pub const FACTORIAL_GUARD: u64 = 4;

/// A sequence `(x_n)_{n >= 1}` in F_p(t).
#[derive(Clone, Debug)]
pub enum SequenceSpec {
    /// `x_n = (P^n + a) / (P^(2n) + b) + alpha` where `P` is the product of
    /// the first `n` monic irreducibles.
    Exm0 { a: FpPoly, b: FpPoly, alpha: RatFunc },
    /// `y_n = t^(p^(n!))`.
    Exm1,
    /// A closed form in the field grammar, with `n` usable in exponents.
    ClosedForm(String),
}

impl SequenceSpec {
    pub fn term(&self, n: u64, p: Prime) -> Result<RatFunc> {
        if n == 0 {
            return Err(Error::InvalidParameter("sequences are indexed from n = 1".into()));
        }
        match self {
            SequenceSpec::Exm0 { a, b, alpha } => {
                let prod = irreducibles(p, n as usize)
                    .iter()
                    .fold(FpPoly::one(p), |acc, pi| &acc * pi);
                let pn = prod.pow_u64(n);
                let num = &pn + a;
                let den = &pn.pow_u64(2) + b;
                Ok(RatFunc::new(num, den)? + alpha)
            }
            SequenceSpec::Exm1 => {
                if n > FACTORIAL_GUARD {
                    return Err(Error::BoundExceeded {
                        what: "n",
                        value: n.to_string(),
                        bound: FACTORIAL_GUARD.to_string(),
                    });
                }
                Ok(RatFunc::from_poly(FpPoly::monomial(1, factorial_power(p, n).into(), p)))
            }
            SequenceSpec::ClosedForm(text) => Ok(parse_ratfunc_with_n(text, p, n)?),
        }
    }
}

/// `p^(n!)`.
pub(crate) fn factorial_power(p: Prime, n: u64) -> BigUint {
    let fact: u32 = (1..=n as u32).product();
    BigUint::from(p.get()).pow(fact)
}

/// Valuations of consecutive differences `x_(n+1) - x_n` for `n < n_max`.
pub fn cauchy_profile(seq: &SequenceSpec, v: &Place, n_max: u64, p: Prime) -> Result<Vec<Valuation>> {
    let mut out = Vec::new();
    if n_max < 2 {
        return Ok(out);
    }
    let mut prev = seq.term(1, p)?;
    for n in 2..=n_max {
        let next = seq.term(n, p)?;
        out.push(valuation(&(&next - &prev), v));
        prev = next;
    }
    Ok(out)
}
