use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_PRIME: u32 = 251;

/// A validated characteristic `2 <= p <= 251`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if !(2..=MAX_PRIME as u64).contains(&p) || !is_prime_u64(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn as_u64(self) -> u64 {
        self.0 as u64
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    a * b % p
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue; callers guarantee `a != 0 mod p`.
#[inline]
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a, (p - 2) as u64, p)
}

/// `C(n, k) mod p` for `n, k < p`, where the factorials are invertible.
pub(crate) fn binom_small(n: u32, k: u32, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1;
    let mut den = 1;
    for i in 0..k {
        num = mul_mod(num, (n - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

/// An element of the prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FpElement {
    value: u32,
    p: Prime,
}

impl FpElement {
    pub fn new(value: i64, p: Prime) -> Self {
        let v = value.rem_euclid(p.get() as i64) as u32;
        FpElement { value: v, p }
    }

    pub(crate) fn from_reduced(value: u32, p: Prime) -> Self {
        debug_assert!(value < p.get());
        FpElement { value, p }
    }

    pub fn zero(p: Prime) -> Self {
        FpElement { value: 0, p }
    }

    pub fn one(p: Prime) -> Self {
        FpElement { value: 1, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| FpElement {
            value: inv_mod(self.value, self.p.get()),
            p: self.p,
        })
    }

    pub fn pow(self, e: u64) -> Self {
        FpElement {
            value: pow_mod(self.value, e, self.p.get()),
            p: self.p,
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut x = self;
        let mut k = 1;
        while !x.is_one() {
            x = x * self;
            k += 1;
        }
        Some(k)
    }

    /// Smallest generator of F_p^*.
    pub fn primitive_root(p: Prime) -> Self {
        (1..p.get())
            .map(|v| FpElement::from_reduced(v, p))
            .find(|g| g.order() == Some(p.as_u64() - 1))
            .expect("F_p^* is cyclic")
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for FpElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.value)
    }
}

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        debug_assert_eq!(self.p, rhs.p);
        FpElement {
            value: add_mod(self.value, rhs.value, self.p.get()),
            p: self.p,
        }
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        debug_assert_eq!(self.p, rhs.p);
        FpElement {
            value: sub_mod(self.value, rhs.value, self.p.get()),
            p: self.p,
        }
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        debug_assert_eq!(self.p, rhs.p);
        FpElement {
            value: mul_mod(self.value, rhs.value, self.p.get()),
            p: self.p,
        }
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        FpElement {
            value: sub_mod(0, self.value, self.p.get()),
            p: self.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(251).is_ok());
        assert_eq!(Prime::new(4), Err(Error::InvalidPrime(4)));
        assert_eq!(Prime::new(257), Err(Error::InvalidPrime(257)));
        assert_eq!(Prime::new(1), Err(Error::InvalidPrime(1)));
    }

    #[test]
    fn inverses_and_roots() {
        let p = Prime::new(7).unwrap();
        for v in 1..7 {
            let x = FpElement::new(v, p);
            assert!((x * x.inv().unwrap()).is_one());
        }
        assert_eq!(FpElement::primitive_root(p).value(), 3);
        assert_eq!(FpElement::new(-1, p).value(), 6);
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binom_small(4, 2, 7), 6);
        assert_eq!(binom_small(6, 3, 7), 20 % 7);
        assert_eq!(binom_small(2, 3, 7), 0);
    }
}
