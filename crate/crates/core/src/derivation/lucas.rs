use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::field::{binom_small, Exponent, FpElement, Prime};

/// `i = sum_n digits[n] p^n` with `0 <= digits[n] < p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationIndex {
    value: u64,
    digits: Vec<u32>,
    p: Prime,
}

impl DerivationIndex {
    pub fn new(i: u64, p: Prime) -> Self {
        DerivationIndex {
            value: i,
            digits: digits_u64(i, p),
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Base-p digits, least significant first; empty for zero.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }
}

pub(crate) fn digits_u64(mut i: u64, p: Prime) -> Vec<u32> {
    let p = p.as_u64();
    let mut out = Vec::new();
    while i > 0 {
        out.push((i % p) as u32);
        i /= p;
    }
    out
}

/// `C(i, j) mod p` as the product of digit binomials.
pub fn lucas_binom(i: u64, j: u64, p: Prime) -> FpElement {
    FpElement::from_reduced(lucas_u64(i, j, p), p)
}

pub(crate) fn lucas_u64(mut i: u64, mut j: u64, p: Prime) -> u32 {
    let q = p.as_u64();
    let mut acc = 1u32;
    while j > 0 {
        let (a, b) = ((i % q) as u32, (j % q) as u32);
        if b > a {
            return 0;
        }
        acc = acc * binom_small(a, b, p.get()) % p.get();
        i /= q;
        j /= q;
    }
    acc
}

/// `C(e, j) mod p` for an exponent of any size. Only the digits of `e` below
/// the length of `j` matter.
pub(crate) fn lucas_exp(e: &Exponent, j: u64, p: Prime) -> u32 {
    if let Some(e) = e.as_u64() {
        return lucas_u64(e, j, p);
    }
    let q = p.as_u64() as u128;
    let mut modulus: u128 = 1;
    while modulus <= j as u128 {
        modulus *= q;
    }
    let low = e.div_rem_big(&BigUint::from(modulus)).1.to_u64().unwrap();
    lucas_u64(low, j, p)
}
