#![allow(dead_code)]

use hasse_core::ideal::Monomial;
use hasse_core::{FpElement, FpPoly, MultiPoly, Prime, RatFunc};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use rand::Rng;

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

// Proptest strategies.

pub fn small_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5]).prop_map(prime)
}

pub fn poly(p: Prime, max_deg: usize) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0..p.get(), 0..=max_deg + 1).prop_map(move |c| FpPoly::from_coeffs(&c, p))
}

pub fn nonzero_poly(p: Prime, max_deg: usize) -> impl Strategy<Value = FpPoly> {
    poly(p, max_deg).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn ratfunc(p: Prime, max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (poly(p, max_deg), nonzero_poly(p, max_deg)).prop_map(|(a, b)| RatFunc::new(a, b).unwrap())
}

pub fn nonzero_ratfunc(p: Prime, max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (nonzero_poly(p, max_deg), nonzero_poly(p, max_deg)).prop_map(|(a, b)| RatFunc::new(a, b).unwrap())
}

// Seeded generators for the fixed-count acceptance runs.

pub fn rand_poly<R: Rng>(rng: &mut R, p: Prime, max_deg: usize) -> FpPoly {
    let d = rng.gen_range(0..=max_deg);
    let c: Vec<u32> = (0..=d).map(|_| rng.gen_range(0..p.get())).collect();
    FpPoly::from_coeffs(&c, p)
}

pub fn rand_nonzero_poly<R: Rng>(rng: &mut R, p: Prime, max_deg: usize) -> FpPoly {
    loop {
        let f = rand_poly(rng, p, max_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn rand_ratfunc<R: Rng>(rng: &mut R, p: Prime, max_deg: usize) -> RatFunc {
    RatFunc::new(rand_poly(rng, p, max_deg), rand_nonzero_poly(rng, p, max_deg)).unwrap()
}

pub fn rand_nonzero_ratfunc<R: Rng>(rng: &mut R, p: Prime, max_deg: usize) -> RatFunc {
    RatFunc::new(rand_nonzero_poly(rng, p, max_deg), rand_nonzero_poly(rng, p, max_deg)).unwrap()
}

/// A random polynomial in `nvars` variables of total degree at most `deg`
/// whose coefficients come from `coeff`.
pub fn rand_multipoly<R: Rng>(
    rng: &mut R,
    p: Prime,
    nvars: usize,
    deg: u32,
    terms: usize,
    mut coeff: impl FnMut(&mut R) -> RatFunc,
) -> MultiPoly {
    let mut out = MultiPoly::zero(p, nvars);
    for _ in 0..terms {
        let mut e = vec![0u32; nvars];
        let total = rng.gen_range(0..=deg);
        for _ in 0..total {
            e[rng.gen_range(0..nvars)] += 1;
        }
        let c = coeff(rng);
        out = &out + &MultiPoly::term(c, Monomial::from_exponents(e));
    }
    out
}

// Independent oracles.

/// `C(n, k)` over the integers by the product formula.
pub fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

pub fn binom_mod(n: u64, k: u64, p: Prime) -> u32 {
    (binom_big(n, k) % BigUint::from(p.get())).to_u32().unwrap()
}

/// `D^(i)` on a polynomial straight from `D^(i) t^j = C(j, i) t^(j - i)`.
pub fn hasse_poly_oracle(i: u64, f: &FpPoly) -> FpPoly {
    let p = f.modulus();
    let mut coeffs: Vec<u32> = Vec::new();
    for (e, c) in f.terms() {
        let j = e.as_u64().unwrap();
        if j < i {
            continue;
        }
        let k = (j - i) as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        let b = binom_mod(j, i, p) as u64;
        coeffs[k] = ((coeffs[k] as u64 + b * *c as u64) % p.get() as u64) as u32;
    }
    FpPoly::from_coeffs(&coeffs, p)
}

/// Membership in `K^(p^m)` read off the canonical form: numerator and
/// denominator are `p^m`-th powers iff every exponent is divisible by `p^m`.
pub fn is_pm_power_oracle(c: &RatFunc, m: u32) -> bool {
    let q = BigUint::from(c.modulus().get()).pow(m);
    [c.num(), c.den()]
        .iter()
        .all(|f| f.terms().iter().all(|(e, _)| (e.to_biguint() % &q) == BigUint::from(0u32)))
}

/// Substitute `t -> t^(p^m)` in a rational function.
pub fn frobenius_twist(c: &RatFunc, m: u32) -> RatFunc {
    c.scale_exponents(&BigUint::from(c.modulus().get()).pow(m))
}

pub fn fp(v: i64, p: Prime) -> FpElement {
    FpElement::new(v, p)
}
