//! Places of F_p(t) and their valuations.

mod expansion;
mod profile;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{is_irreducible, parse_poly, Exponent, FpPoly, Prime, RatFunc, DENSE_LIMIT};

pub use expansion::{local_expansion, LaurentExpansion};
pub use profile::{cauchy_profile, SequenceSpec, FACTORIAL_GUARD};

/// A place of F_p(t): a monic irreducible polynomial or the degree place.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Finite(FpPoly),
    Infinity,
}

impl Place {
    pub fn finite(pi: FpPoly) -> Result<Place> {
        if pi.is_constant() || !pi.is_monic() {
            return Err(Error::InvalidPlace(format!("{pi} is not a monic nonconstant polynomial")));
        }
        if !is_irreducible(&pi) {
            return Err(Error::InvalidPlace(format!("{pi} is not irreducible")));
        }
        Ok(Place::Finite(pi))
    }

    /// `inf` or a monic irreducible in the field-element grammar.
    pub fn parse(text: &str, p: Prime) -> Result<Place> {
        let s = text.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Place::Infinity);
        }
        Place::finite(parse_poly(s, p)?)
    }

    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(pi) => pi.degree_u64().expect("place of machine-size degree") as u32,
            Place::Infinity => 1,
        }
    }

    /// Size `q_v = p^deg` of the residue field.
    pub fn residue_size(&self, p: Prime) -> BigUint {
        BigUint::from(p.get()).pow(self.degree())
    }

    pub fn uniformizer(&self) -> Option<&FpPoly> {
        match self {
            Place::Finite(pi) => Some(pi),
            Place::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(pi) => write!(f, "{pi}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A discrete valuation value; `Infinite` is the valuation of zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Valuation {
    Finite(BigInt),
    Infinite,
}

impl Valuation {
    pub fn from_i64(v: i64) -> Self {
        Valuation::Finite(BigInt::from(v))
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => v.to_i64(),
            Valuation::Infinite => None,
        }
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

impl serde::Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(self),
        }
    }
}

/// `ord_pi(f)` for nonzero `f`.
///
/// Large sparse inputs such as `t^(p^k) - t` are handled without expansion:
/// powers of `t` are units away from `pi = t`, and when every exponent is
/// divisible by `p^k` the polynomial is a `p^k`-th power (F_p is perfect), so
/// its order is `p^k` times the order of the root. What remains is lifted by
/// testing divisibility by `pi^j` with per-term modular exponentiation.
pub fn order_at(f: &FpPoly, pi: &FpPoly) -> BigUint {
    assert!(!f.is_zero(), "order of zero is infinite");
    let p = f.modulus();
    if pi.terms() == [(Exponent::Small(1), 1)] {
        return f.min_exponent().unwrap().to_biguint();
    }
    if let Some(dense) = f.to_dense(DENSE_LIMIT) {
        return BigUint::from(dense_order(FpPoly::from_coeffs(&dense, p), pi));
    }
    let mut scale = BigUint::one();
    let mut g = f.clone();
    loop {
        let m = g.min_exponent().unwrap().clone();
        if !m.is_zero() {
            g = FpPoly::from_terms(g.terms().iter().map(|(e, c)| (e.checked_sub(&m).unwrap(), *c)), p);
        }
        let k = g
            .terms()
            .iter()
            .filter_map(|(e, _)| e.p_adic_valuation(p.as_u64()))
            .min();
        match k {
            None => return BigUint::zero(), // nonzero constant
            Some(0) => break,
            Some(k) => {
                let pk = BigUint::from(p.get()).pow(k as u32);
                scale *= &pk;
                g = FpPoly::from_terms(g.terms().iter().map(|(e, c)| (e.div_rem_big(&pk).0, *c)), p);
            }
        }
    }
    if g.to_dense(DENSE_LIMIT).is_some() {
        return scale * dense_order(g, pi);
    }
    let mut j = 0u64;
    let mut modulus = pi.clone();
    while g.rem(&modulus).is_zero() {
        j += 1;
        modulus = &modulus * pi;
    }
    scale * j
}

fn dense_order(mut f: FpPoly, pi: &FpPoly) -> u64 {
    let mut k = 0;
    while let Some(q) = f.exact_div(pi) {
        f = q;
        k += 1;
    }
    k
}

/// The normalized discrete valuation of `r` at `v`; `+inf` for zero.
pub fn valuation(r: &RatFunc, v: &Place) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinite;
    }
    match v {
        Place::Infinity => {
            let dn = BigInt::from(r.num().degree().unwrap().to_biguint());
            let dd = BigInt::from(r.den().degree().unwrap().to_biguint());
            Valuation::Finite(dd - dn)
        }
        Place::Finite(pi) => {
            let a = BigInt::from(order_at(r.num(), pi));
            let b = if r.den().is_one() {
                BigInt::zero()
            } else {
                BigInt::from(order_at(r.den(), pi))
            };
            Valuation::Finite(a - b)
        }
    }
}

/// All places where a nonzero `r` has nonzero valuation, found by factoring
/// numerator and denominator.
pub fn support(r: &RatFunc) -> Vec<Place> {
    assert!(!r.is_zero());
    let mut out: Vec<Place> = Vec::new();
    for poly in [r.num(), r.den()] {
        for (pi, _) in crate::field::factor(poly).1 {
            let place = Place::Finite(pi);
            if !out.contains(&place) {
                out.push(place);
            }
        }
    }
    if valuation(r, &Place::Infinity) != Valuation::from_i64(0) {
        out.push(Place::Infinity);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn place(s: &str, q: u64) -> Place {
        Place::parse(s, p(q)).unwrap()
    }

    #[test]
    fn valuation_examples() {
        let r = parse_ratfunc("t^3/(t+1)", p(2)).unwrap();
        assert_eq!(valuation(&r, &place("t", 2)), Valuation::from_i64(3));
        assert_eq!(valuation(&r, &Place::Infinity), Valuation::from_i64(-2));
        let s = parse_ratfunc("(t^2-1)/t", p(3)).unwrap();
        assert_eq!(valuation(&s, &place("t+1", 3)), Valuation::from_i64(1));
        assert_eq!(valuation(&RatFunc::zero(p(3)), &Place::Infinity), Valuation::Infinite);
    }

    #[test]
    fn rejects_bad_places() {
        assert!(Place::parse("t^2+1", p(2)).is_err()); // (t+1)^2
        assert!(Place::parse("2*t+1", p(3)).is_err());
        assert!(Place::parse("3", p(5)).is_err());
        assert_eq!(Place::parse(" inf ", p(5)).unwrap(), Place::Infinity);
    }

    #[test]
    fn sparse_order_matches_dense() {
        // t^64 - t^4 = t^4 (t^15 - 1)^4 over F_2; pi = t^2+t+1 divides t^15-1 once.
        let q = p(2);
        let pi = parse_poly("t^2+t+1", q).unwrap();
        let f = parse_poly("t^64 + t^4", q).unwrap();
        assert_eq!(dense_order(f.clone(), &pi), 4);
        // Same polynomial scaled up by a Frobenius twist the dense path cannot hold.
        let huge = f.frobenius(30);
        assert_eq!(order_at(&huge, &pi), BigUint::from(4u32) << 30u32);
    }

    #[test]
    fn support_lists_zeros_and_poles() {
        let r = parse_ratfunc("t^2/(t+1)", p(2)).unwrap();
        let s = support(&r);
        assert_eq!(s.len(), 3);
        assert!(s.contains(&Place::Infinity));
    }
}
