use num_bigint::BigInt;
use serde::Serialize;

use super::{valuation, Place, Valuation};
use crate::field::{FpPoly, RatFunc};

/// A truncated expansion `sum_k c_k u^(lead + k)` in the uniformizer `u`
/// (`pi` at a finite place, `1/t` at infinity). Coefficients are residue
/// classes: polynomials of degree below `deg pi`, or constants at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaurentExpansion {
    pub place: Place,
    pub lead_valuation: Valuation,
    pub coefficients: Vec<FpPoly>,
    pub precision: usize,
}

impl LaurentExpansion {
    /// The truncation as an element of F_p(t).
    pub fn reconstruct(&self) -> RatFunc {
        let p = match &self.place {
            Place::Finite(pi) => pi.modulus(),
            Place::Infinity => match self.coefficients.first() {
                Some(c) => c.modulus(),
                None => unreachable!("precision >= 1"),
            },
        };
        let Some(lead) = self.lead_valuation.as_i64() else {
            return RatFunc::zero(p);
        };
        let uniformizer = match &self.place {
            Place::Finite(pi) => RatFunc::from_poly(pi.clone()),
            Place::Infinity => RatFunc::t(p).inv().unwrap(),
        };
        let mut acc = RatFunc::zero(p);
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = uniformizer
                .pow_signed(&BigInt::from(lead + k as i64))
                .expect("uniformizer is nonzero");
            acc = acc + RatFunc::from_poly(c.clone()) * power;
        }
        acc
    }
}

/// Expand `r` at `v` to `precision` terms, exactly.
pub fn local_expansion(r: &RatFunc, v: &Place, precision: usize) -> LaurentExpansion {
    assert!(precision >= 1, "precision must be positive");
    let p = r.modulus();
    let lead = valuation(r, v);
    let Some(lead_i) = lead.as_i64() else {
        return LaurentExpansion {
            place: v.clone(),
            lead_valuation: Valuation::Infinite,
            coefficients: vec![FpPoly::zero(p); precision],
            precision,
        };
    };
    let (num, den, pi) = match v {
        Place::Finite(pi) => (r.num().clone(), r.den().clone(), pi.clone()),
        // In u = 1/t, num(t)/den(t) = u^(deg den - deg num) * rev(num)(u) / rev(den)(u).
        Place::Infinity => (reverse(r.num()), reverse(r.den()), FpPoly::t(p)),
    };
    let (mut a, mut b) = (num, den);
    if let Place::Finite(_) = v {
        let k = lead_i.unsigned_abs();
        let pik = pi.pow_u64(k);
        if lead_i > 0 {
            a = a.exact_div(&pik).expect("valuation divides numerator");
        } else if lead_i < 0 {
            b = b.exact_div(&pik).expect("valuation divides denominator");
        }
    }
    let b_inv = b.inverse_mod(&pi).expect("denominator is a unit after shifting");
    let mut coefficients = Vec::with_capacity(precision);
    for _ in 0..precision {
        let c = (&a.rem(&pi) * &b_inv).rem(&pi);
        a = (&a - &(&c * &b)).exact_div(&pi).expect("digit removes one factor of pi");
        coefficients.push(c);
    }
    LaurentExpansion {
        place: v.clone(),
        lead_valuation: lead,
        coefficients,
        precision,
    }
}

fn reverse(f: &FpPoly) -> FpPoly {
    let d = f.degree_u64().expect("expansion of machine-size polynomial");
    FpPoly::from_terms(
        f.terms()
            .iter()
            .map(|(e, c)| ((d - e.as_u64().unwrap()).into(), *c)),
        f.modulus(),
    )
}
