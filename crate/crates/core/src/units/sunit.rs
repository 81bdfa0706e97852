use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{coefficient_index, FpElement, FpPoly, Prime, RatFunc};
use crate::places::{order_at, support, Place};

/// `O_T^* = F_p^* x <pi : pi in T finite>`, the units away from `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SUnitGroup {
    p: Prime,
    finite: Vec<FpPoly>,
    includes_infinity: bool,
}

impl SUnitGroup {
    /// `T` must contain the infinite place.
    pub fn new(p: Prime, places: &[Place]) -> Result<Self> {
        if !places.contains(&Place::Infinity) {
            return Err(Error::InvalidParameter(
                "the place set must contain inf (use SUnitGroup::without_infinity otherwise)".into(),
            ));
        }
        Self::build(p, places, true)
    }

    /// A place set without the infinite place: members must also have
    /// valuation zero at infinity.
    pub fn without_infinity(p: Prime, places: &[Place]) -> Result<Self> {
        if places.contains(&Place::Infinity) {
            return Err(Error::InvalidParameter("place set contains inf".into()));
        }
        Self::build(p, places, false)
    }

    fn build(p: Prime, places: &[Place], includes_infinity: bool) -> Result<Self> {
        let mut finite: Vec<FpPoly> = Vec::new();
        for v in places {
            if let Place::Finite(pi) = v {
                if pi.modulus() != p {
                    return Err(Error::ModulusMismatch(pi.modulus().get(), p.get()));
                }
                if !finite.contains(pi) {
                    finite.push(pi.clone());
                }
            }
        }
        finite.sort_by_key(|pi| (pi.degree_u64(), coefficient_index(pi)));
        Ok(SUnitGroup {
            p,
            finite,
            includes_infinity,
        })
    }

    /// The smallest place set (with `inf`) containing the support of `gens`.
    pub fn spanning(p: Prime, gens: &[RatFunc]) -> Result<Self> {
        let mut places = vec![Place::Infinity];
        for g in gens {
            if g.is_zero() {
                return Err(Error::NotAnSUnit("0".into()));
            }
            if g.modulus() != p {
                return Err(Error::ModulusMismatch(g.modulus().get(), p.get()));
            }
            for v in support(g) {
                if !places.contains(&v) {
                    places.push(v);
                }
            }
        }
        Self::new(p, &places)
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    /// Finite places of `T` in enumeration order.
    pub fn finite_places(&self) -> &[FpPoly] {
        &self.finite
    }

    pub fn places(&self) -> Vec<Place> {
        let mut out: Vec<Place> = self.finite.iter().cloned().map(Place::Finite).collect();
        if self.includes_infinity {
            out.push(Place::Infinity);
        }
        out
    }

    pub fn includes_infinity(&self) -> bool {
        self.includes_infinity
    }

    /// Rank of the free part.
    pub fn rank(&self) -> usize {
        self.finite.len()
    }

    pub fn decompose(&self, u: &RatFunc) -> Result<SUnitVector> {
        s_unit_decompose(u, self)
    }

    pub fn element(&self, v: &SUnitVector) -> RatFunc {
        assert_eq!(v.exponents.len(), self.rank());
        let mut acc = RatFunc::from_element(v.constant);
        for (pi, &e) in self.finite.iter().zip(&v.exponents) {
            let f = RatFunc::from_poly(pi.pow_u64(e.unsigned_abs()));
            acc = if e >= 0 { acc * f } else { acc / f };
        }
        acc
    }

    /// Human-readable product form of a member.
    pub fn render(&self, v: &SUnitVector) -> String {
        let mut parts = Vec::new();
        if !v.constant.is_one() || v.exponents.iter().all(|&e| e == 0) {
            parts.push(v.constant.to_string());
        }
        for (pi, &e) in self.finite.iter().zip(&v.exponents) {
            if e == 0 {
                continue;
            }
            let base = if pi.terms().len() == 1 { pi.to_string() } else { format!("({pi})") };
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        parts.join(" * ")
    }
}

/// `constant * prod pi_i^(e_i)` over the finite places of a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SUnitVector {
    pub constant: FpElement,
    pub exponents: Vec<i64>,
}

impl SUnitVector {
    /// Membership in `(K^*)^(p^n)`: constants are always `p^n`-th powers,
    /// so only the exponents matter.
    pub fn is_pn_power(&self, p: Prime, n: u32) -> bool {
        let q = BigUint::from(p.get()).pow(n);
        match q.to_i64() {
            Some(q) => self.exponents.iter().all(|e| e % q == 0),
            None => self.exponents.iter().all(|&e| e == 0),
        }
    }
}

impl fmt::Display for SUnitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {:?}", self.constant, self.exponents)
    }
}

fn strip(f: &FpPoly, pi: &FpPoly) -> (FpPoly, i64) {
    if f.is_constant() {
        return (f.clone(), 0);
    }
    let k = order_at(f, pi);
    let k64 = k.to_i64().expect("multiplicity fits in i64");
    if k64 == 0 {
        return (f.clone(), 0);
    }
    if pi.terms().len() == 1 {
        // pi = t: shift exponents down.
        let shift = crate::field::Exponent::from_biguint(k);
        let terms = f.terms().iter().map(|(e, c)| (e.checked_sub(&shift).unwrap(), *c));
        return (FpPoly::from_terms(terms, f.modulus()), k64);
    }
    let q = f.exact_div(&pi.pow_u64(k64 as u64)).expect("order divides");
    (q, k64)
}

/// Exact factorization of `u` over the finite places of `group`.
pub fn s_unit_decompose(u: &RatFunc, group: &SUnitGroup) -> Result<SUnitVector> {
    if u.is_zero() {
        return Err(Error::NotAnSUnit("0".into()));
    }
    if u.modulus() != group.p {
        return Err(Error::ModulusMismatch(u.modulus().get(), group.p.get()));
    }
    let mut num = u.num().clone();
    let mut den = u.den().clone();
    let mut exponents = Vec::with_capacity(group.rank());
    for pi in &group.finite {
        let (n2, a) = strip(&num, pi);
        let (d2, b) = strip(&den, pi);
        num = n2;
        den = d2;
        exponents.push(a - b);
    }
    if !num.is_constant() || !den.is_constant() {
        return Err(Error::NotAnSUnit(u.to_string()));
    }
    if !group.includes_infinity {
        let deg: i64 = group
            .finite
            .iter()
            .zip(&exponents)
            .map(|(pi, e)| e * pi.degree_u64().unwrap() as i64)
            .sum();
        if deg != 0 {
            return Err(Error::NotAnSUnit(u.to_string()));
        }
    }
    // den is monic, so the remaining quotient is lc(num).
    Ok(SUnitVector {
        constant: FpElement::new(num.leading_coeff() as i64, group.p),
        exponents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn group(places: &[&str], q: u64) -> SUnitGroup {
        let pl: Vec<Place> = places.iter().map(|s| Place::parse(s, p(q)).unwrap()).collect();
        SUnitGroup::new(p(q), &pl).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let g = group(&["t", "t+1", "inf"], 2);
        let v = g.decompose(&parse_ratfunc("t^2/(t+1)", p(2)).unwrap()).unwrap();
        assert_eq!(v.constant.value(), 1);
        assert_eq!(v.exponents, vec![2, -1]);
        let one = g.decompose(&RatFunc::one(p(2))).unwrap();
        assert_eq!(one.exponents, vec![0, 0]);
        let h = group(&["t", "inf"], 3);
        let w = h.decompose(&parse_ratfunc("2*t", p(3)).unwrap()).unwrap();
        assert_eq!((w.constant.value(), w.exponents.clone()), (2, vec![1]));
    }

    #[test]
    fn not_an_s_unit() {
        let g = group(&["t", "inf"], 2);
        let err = g.decompose(&parse_ratfunc("t/(t+1)", p(2)).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotAnSUnit(_)));
    }

    #[test]
    fn infinity_is_required_unless_flagged() {
        let t = Place::parse("t", p(2)).unwrap();
        assert!(SUnitGroup::new(p(2), &[t.clone()]).is_err());
        let places = [Place::parse("t", p(3)).unwrap(), Place::parse("t+1", p(3)).unwrap()];
        let g = SUnitGroup::without_infinity(p(3), &places).unwrap();
        assert!(g.decompose(&parse_ratfunc("t/(t+1)", p(3)).unwrap()).is_ok());
        assert!(g.decompose(&parse_ratfunc("t", p(3)).unwrap()).is_err());
    }

    #[test]
    fn element_round_trip_and_render() {
        let g = group(&["t", "t^2+t+2", "inf"], 3);
        let u = parse_ratfunc("2*t^3/(t^2+t+2)^2", p(3)).unwrap();
        let v = g.decompose(&u).unwrap();
        assert_eq!(g.element(&v), u);
        assert_eq!(g.render(&v), "2 * t^3 * (t^2 + t + 2)^-2");
    }
}
