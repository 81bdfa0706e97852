use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};

use super::fp::{inv_mod, FpElement, Prime};
use super::poly::FpPoly;
use crate::error::{Error, Result};

/// An element of F_p(t) in canonical form: `num / den` with `den` monic and
/// `gcd(num, den) = 1`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: FpPoly,
    den: FpPoly,
}

impl RatFunc {
    pub fn new(num: FpPoly, den: FpPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.modulus() != den.modulus() {
            return Err(Error::ModulusMismatch(num.modulus().get(), den.modulus().get()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: FpPoly, den: FpPoly) -> Self {
        let p = den.modulus();
        if num.is_zero() {
            return RatFunc {
                num,
                den: FpPoly::one(p),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        Self::normalize(num, den)
    }

    fn normalize(num: FpPoly, den: FpPoly) -> Self {
        match den.leading_coeff() {
            1 => RatFunc { num, den },
            lc => {
                let inv = inv_mod(lc, den.modulus().get());
                RatFunc {
                    num: num.scale(inv),
                    den: den.scale(inv),
                }
            }
        }
    }

    pub fn from_poly(num: FpPoly) -> Self {
        let p = num.modulus();
        RatFunc {
            num,
            den: FpPoly::one(p),
        }
    }

    pub fn zero(p: Prime) -> Self {
        Self::from_poly(FpPoly::zero(p))
    }

    pub fn one(p: Prime) -> Self {
        Self::from_poly(FpPoly::one(p))
    }

    pub fn t(p: Prime) -> Self {
        Self::from_poly(FpPoly::t(p))
    }

    pub fn constant(c: i64, p: Prime) -> Self {
        Self::from_poly(FpPoly::constant(c, p))
    }

    pub fn from_element(c: FpElement) -> Self {
        Self::constant(c.value() as i64, c.modulus())
    }

    pub fn num(&self) -> &FpPoly {
        &self.num
    }

    pub fn den(&self) -> &FpPoly {
        &self.den
    }

    pub fn into_parts(self) -> (FpPoly, FpPoly) {
        (self.num, self.den)
    }

    pub fn modulus(&self) -> Prime {
        self.den.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The element as a constant of F_p, if it is one.
    pub fn as_constant(&self) -> Option<FpElement> {
        (self.den.is_one() && self.num.is_constant())
            .then(|| FpElement::new(self.num.constant_term() as i64, self.modulus()))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn scale(&self, c: FpElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.modulus());
        }
        RatFunc {
            num: self.num.scale(c.value()),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn pow_u64(&self, e: u64) -> Self {
        self.pow(&BigUint::from(e))
    }

    /// Integer powers; `None` when inverting zero.
    pub fn pow_signed(&self, e: &BigInt) -> Option<Self> {
        match e.sign() {
            Sign::Minus => self.inv().map(|x| x.pow(e.magnitude())),
            _ => Some(self.pow(e.magnitude())),
        }
    }

    /// Substitute `t -> t^k`.
    pub fn scale_exponents(&self, k: &BigUint) -> Self {
        // The substitution is a field embedding, so coprimality is preserved.
        Self::normalize(self.num.scale_exponents(k), self.den.scale_exponents(k))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus());
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_rem(&g1).0 };
        let d = if g1.is_one() { other.den.clone() } else { other.den.div_rem(&g1).0 };
        let c = if g2.is_one() { other.num.clone() } else { other.num.div_rem(&g2).0 };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_rem(&g2).0 };
        Self::normalize(&a * &c, &b * &d)
    }

    fn add_ref(&self, other: &Self, negate: bool) -> Self {
        let rhs_num = if negate { -&other.num } else { other.num.clone() };
        if self.den == other.den {
            return Self::reduce(&self.num + &rhs_num, self.den.clone());
        }
        if self.den.is_one() {
            return Self::normalize(&(&self.num * &other.den) + &rhs_num, other.den.clone());
        }
        if other.den.is_one() {
            return Self::normalize(&self.num + &(&rhs_num * &self.den), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = &(&self.num * &other.den) + &(&rhs_num * &self.den);
            return Self::normalize(num, &self.den * &other.den);
        }
        let sd = self.den.div_rem(&g).0;
        let od = other.den.div_rem(&g).0;
        let num = &(&self.num * &od) + &(&rhs_num * &sd);
        Self::reduce(num, &self.den * &od)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |g: &FpPoly| {
            if g.terms().len() > 1 {
                format!("({g})")
            } else {
                g.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[F_{}]({})", self.modulus(), self)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                debug_assert_eq!(self.modulus(), rhs.modulus());
                $body(self, rhs)
            }
        }
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_ref(b, false));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_ref(b, true));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_ref(b));
forward_binop!(Div, div, |a: &RatFunc, b: &RatFunc| a
    .checked_div(b)
    .expect("division by zero in F_p(t)"));

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
