use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{dense_div_rem, dense_mul, modpow_quotient, FpPoly, Prime};
use crate::places::Place;

/// Largest residue field for which discrete-log tables are built.
pub const DLOG_BOUND: u64 = 1 << 16;

/// `F_p[t] / (pi)` with full discrete-log tables. Elements are encoded as
/// the base-p integer of their coefficient vector, constant term least
/// significant.
#[derive(Clone, Debug)]
pub struct ResidueField {
    p: Prime,
    pi: Vec<u32>,
    degree: usize,
    size: u64,
    generator: u32,
    log: Vec<u32>,
}

impl ResidueField {
    pub fn new(place: &Place) -> Result<Self> {
        let Place::Finite(pi) = place else {
            return Err(Error::InvalidPlace("the residue field at inf is F_p; use a finite place".into()));
        };
        let p = pi.modulus();
        let degree = pi.degree_u64().unwrap() as usize;
        let size = (p.get() as u64)
            .checked_pow(degree as u32)
            .filter(|&q| q <= DLOG_BOUND)
            .ok_or_else(|| Error::BoundExceeded {
                what: "residue field size",
                value: format!("{}^{}", p, degree),
                bound: DLOG_BOUND.to_string(),
            })?;
        let mut field = ResidueField {
            p,
            pi: pi.to_dense(u64::MAX).unwrap(),
            degree,
            size,
            generator: 0,
            log: Vec::new(),
        };
        field.generator = field.smallest_primitive();
        field.log = vec![u32::MAX; size as usize];
        let mut x = 1u32;
        for k in 0..size - 1 {
            field.log[x as usize] = k as u32;
            x = field.mul(x, field.generator);
        }
        Ok(field)
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn generator(&self) -> FpPoly {
        self.decode(self.generator)
    }

    fn decode_vec(&self, mut x: u32) -> Vec<u32> {
        let p = self.p.get();
        let mut v = Vec::with_capacity(self.degree);
        while x > 0 {
            v.push(x % p);
            x /= p;
        }
        v
    }

    fn encode_vec(&self, v: &[u32]) -> u32 {
        v.iter().rev().fold(0, |acc, &c| acc * self.p.get() + c)
    }

    pub fn decode(&self, x: u32) -> FpPoly {
        FpPoly::from_coeffs(&self.decode_vec(x), self.p)
    }

    /// Encoding of `f mod pi`.
    pub fn reduce(&self, f: &FpPoly) -> u32 {
        let pi = FpPoly::from_coeffs(&self.pi, self.p);
        let r = f.rem(&pi);
        let mut v = vec![0u32; self.degree];
        for (e, c) in r.terms() {
            v[e.as_u64().unwrap() as usize] = *c;
        }
        self.encode_vec(&v)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = dense_mul(&self.decode_vec(a), &self.decode_vec(b), self.p.get());
        let r = dense_div_rem(&prod, &self.pi, self.p.get()).1;
        self.encode_vec(&r)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn smallest_primitive(&self) -> u32 {
        let n = self.size - 1;
        let primes = prime_factors(n);
        (1..self.size as u32)
            .find(|&x| primes.iter().all(|&r| self.pow(x, n / r) != 1))
            .expect("the multiplicative group is cyclic")
    }

    /// `log_g(x)` in `Z/(q-1)`; `None` for zero.
    pub fn dlog(&self, x: u32) -> Option<u64> {
        if x == 0 {
            return None;
        }
        Some(self.log[x as usize] as u64)
    }

    pub fn dlog_poly(&self, f: &FpPoly) -> Option<u64> {
        self.dlog(self.reduce(f))
    }
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `f` modulo the irreducible `pi`, via
/// square-and-multiply in the quotient ring; `f` must be prime to `pi`.
pub fn unit_order(f: &FpPoly, pi: &FpPoly) -> u64 {
    let p = pi.modulus().get() as u64;
    let d = pi.degree_u64().unwrap() as u32;
    let n = p.checked_pow(d).expect("residue field size fits in u64") - 1;
    assert!(!f.rem(pi).is_zero(), "not a unit at the place");
    let one = FpPoly::one(pi.modulus());
    let mut order = n;
    for r in prime_factors(n) {
        while order % r == 0 && modpow_quotient(f, &BigUint::from(order / r), pi) == one {
            order /= r;
        }
    }
    order
}

/// `u^((q-1)/gcd(m, q-1)) = 1`: whether the residue of `u` is an `m`-th power.
pub fn is_mth_power_residue(u: &FpPoly, pi: &FpPoly, m: u64) -> bool {
    let p = pi.modulus().get() as u64;
    let n = p.pow(pi.degree_u64().unwrap() as u32) - 1;
    let e = n / m.gcd(&n);
    modpow_quotient(u, &BigUint::from(e), pi).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_poly;

    fn place(s: &str, q: u64) -> Place {
        Place::parse(s, Prime::new(q).unwrap()).unwrap()
    }

    #[test]
    fn f4_logs() {
        let f = ResidueField::new(&place("t^2+t+1", 2)).unwrap();
        assert_eq!(f.size(), 4);
        assert_eq!(f.generator().to_string(), "t");
        let p2 = Prime::new(2).unwrap();
        assert_eq!(f.dlog_poly(&parse_poly("t", p2).unwrap()), Some(1));
        assert_eq!(f.dlog_poly(&parse_poly("t+1", p2).unwrap()), Some(2));
        assert_eq!(f.dlog_poly(&parse_poly("t^2+t+1", p2).unwrap()), None);
    }

    #[test]
    fn f16_logs() {
        let f = ResidueField::new(&place("t^4+t+1", 2)).unwrap();
        let p2 = Prime::new(2).unwrap();
        assert_eq!(f.dlog_poly(&parse_poly("t+1", p2).unwrap()), Some(4));
        // Every nonzero element appears exactly once in the table.
        let mut seen: Vec<u64> = (1..16).map(|x| f.dlog(x).unwrap()).collect();
        seen.sort();
        assert_eq!(seen, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn orders() {
        let p2 = Prime::new(2).unwrap();
        let pi = parse_poly("t^2+t+1", p2).unwrap();
        assert_eq!(unit_order(&FpPoly::t(p2), &pi), 3);
        let pi4 = parse_poly("t^4+t^3+t^2+t+1", p2).unwrap();
        assert_eq!(unit_order(&FpPoly::t(p2), &pi4), 5);
        assert!(!is_mth_power_residue(&FpPoly::t(p2), &pi, 3));
        assert!(is_mth_power_residue(&FpPoly::t(p2).pow_u64(3), &pi, 3));
    }

    #[test]
    fn large_field_is_rejected() {
        assert!(ResidueField::new(&place("t^17+t^3+1", 2)).is_err());
    }
}
