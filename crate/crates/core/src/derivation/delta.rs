use num_bigint::BigUint;

use super::hasse::{hasse_derive, hasse_derive_poly};
use crate::error::{Error, Result};
use crate::field::{FpPoly, Prime, RatFunc};

/// Default cap on `p^m` for [`delta_m`] and the full derivation test sets.
pub const DEFAULT_POWER_BOUND: u64 = 512;

/// `p^m`, or `BoundExceeded` above `bound`.
pub(crate) fn checked_pm(p: Prime, m: u32, bound: u64) -> Result<u64> {
    let q = (p.as_u64() as u128).checked_pow(m).filter(|&q| q <= bound as u128);
    q.map(|q| q as u64).ok_or_else(|| Error::BoundExceeded {
        what: "p^m",
        value: format!("{}^{}", p, m),
        bound: bound.to_string(),
    })
}

/// `sum_{i < p^m} (-t)^i D^(i)(c)`, a `p^m`-th power for every `c`.
pub fn delta_m(c: &RatFunc, m: u32) -> Result<RatFunc> {
    delta_m_with_bound(c, m, DEFAULT_POWER_BOUND)
}

pub fn delta_m_with_bound(c: &RatFunc, m: u32, bound: u64) -> Result<RatFunc> {
    let p = c.modulus();
    let q = checked_pm(p, m, bound)?;
    if c.is_zero() {
        return Ok(c.clone());
    }
    // Every term shares the denominator b^q: D^(i)(a/b) = D^(i)(a b^(q-1)) / b^q.
    let lifted = c.num() * &c.den().pow_u64(q - 1);
    let neg_t = -&FpPoly::t(p);
    let mut sum = FpPoly::zero(p);
    let mut weight = FpPoly::one(p);
    for i in 0..q {
        let d = hasse_derive_poly(i, &lifted);
        if !d.is_zero() {
            sum = &sum + &(&weight * &d);
        }
        weight = &weight * &neg_t;
    }
    RatFunc::new(sum, c.den().pow_u64(q))
}

/// The literal sum with each `D^(i)(c)` evaluated separately.
pub fn delta_m_termwise(c: &RatFunc, m: u32, bound: u64) -> Result<RatFunc> {
    let p = c.modulus();
    let q = checked_pm(p, m, bound)?;
    let neg_t = -RatFunc::t(p);
    let mut acc = RatFunc::zero(p);
    for i in 0..q {
        acc = acc + neg_t.pow_u64(i) * hasse_derive(i, c);
    }
    Ok(acc)
}

/// The `p^m`-th root read off the exponents, when every exponent of the
/// reduced numerator and denominator is divisible by `p^m`.
pub fn frobenius_root(c: &RatFunc, m: u32) -> Option<RatFunc> {
    let p = c.modulus();
    let pm = BigUint::from(p.get()).pow(m);
    let root = |f: &FpPoly| -> Option<FpPoly> {
        let mut terms = Vec::with_capacity(f.terms().len());
        for (e, coef) in f.terms() {
            let (qt, r) = e.div_rem_big(&pm);
            if r != BigUint::ZERO {
                return None;
            }
            // a^p = a in F_p, so coefficients are their own roots.
            terms.push((qt, *coef));
        }
        Some(FpPoly::from_terms(terms, p))
    };
    let num = root(c.num())?;
    let den = root(c.den())?;
    Some(RatFunc::new(num, den).expect("root of a nonzero denominator"))
}

/// Above this `p^m` only the exponent test runs.
const KERNEL_TEST_BOUND: u64 = 1 << 12;

/// `r` with `r^(p^m) = c`, or `None` when `c` is not a `p^m`-th power.
///
/// Membership is decided by the joint kernel of `D^(l)`, `1 <= l < p^m`;
/// by the factorization of `D^(l)` through the `D^(p^s)` it suffices to test
/// `l = p^s`, `s < m`. The root itself comes from the exponents, and the two
/// routes are asserted to agree.
pub fn pm_power_root(c: &RatFunc, m: u32) -> Option<RatFunc> {
    let p = c.modulus();
    let direct = frobenius_root(c, m);
    if checked_pm(p, m, KERNEL_TEST_BOUND).is_ok() {
        let mut ps = 1u64;
        let mut in_kernel = true;
        for _ in 0..m {
            if !hasse_derive(ps, c).is_zero() {
                in_kernel = false;
                break;
            }
            ps *= p.as_u64();
        }
        assert_eq!(in_kernel, direct.is_some(), "kernel test disagrees with exponent test for {c}");
    }
    direct
}
