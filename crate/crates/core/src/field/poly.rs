use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::exponent::Exponent;
use super::fp::{add_mod, inv_mod, mul_mod, sub_mod, FpElement, Prime};

/// Polynomials up to this degree are handled with dense coefficient vectors.
pub(crate) const DENSE_LIMIT: u64 = 1 << 18;

/// A polynomial over F_p in `t`, stored sparsely with arbitrary-size exponents.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: Prime,
    terms: Vec<(Exponent, u32)>,
}

impl FpPoly {
    pub fn zero(p: Prime) -> Self {
        FpPoly { p, terms: Vec::new() }
    }

    pub fn one(p: Prime) -> Self {
        Self::constant(1, p)
    }

    pub fn t(p: Prime) -> Self {
        Self::monomial(1, Exponent::Small(1), p)
    }

    pub fn constant(c: i64, p: Prime) -> Self {
        Self::monomial(FpElement::new(c, p).value(), Exponent::ZERO, p)
    }

    /// `c * t^e`; the coefficient is reduced mod p.
    pub fn monomial(c: u32, e: Exponent, p: Prime) -> Self {
        let c = c % p.get();
        if c == 0 {
            Self::zero(p)
        } else {
            FpPoly { p, terms: vec![(e, c)] }
        }
    }

    /// Dense ascending coefficients.
    pub fn from_coeffs(coeffs: &[u32], p: Prime) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| {
                let c = c % p.get();
                (c != 0).then_some((Exponent::Small(i as u64), c))
            })
            .collect();
        FpPoly { p, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, u32)>>(terms: I, p: Prime) -> Self {
        let mut acc: BTreeMap<Exponent, u32> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert(0);
            *slot = add_mod(*slot, c % p.get(), p.get());
        }
        Self::from_map(acc, p)
    }

    fn from_map(map: BTreeMap<Exponent, u32>, p: Prime) -> Self {
        FpPoly {
            p,
            terms: map.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }

    pub(crate) fn from_dense(v: Vec<u32>, p: Prime) -> Self {
        Self::from_coeffs(&v, p)
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn terms(&self) -> &[(Exponent, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// `None` for the zero polynomial, which has degree minus infinity.
    pub fn degree(&self) -> Option<&Exponent> {
        self.terms.last().map(|(e, _)| e)
    }

    /// Degree as `u64`, if the polynomial is nonzero and of machine size.
    pub fn degree_u64(&self) -> Option<u64> {
        self.degree().and_then(Exponent::as_u64)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.last().map_or(0, |(_, c)| *c)
    }

    pub fn coeff(&self, e: &Exponent) -> u32 {
        self.terms
            .binary_search_by(|(x, _)| x.cmp(e))
            .map_or(0, |i| self.terms[i].1)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(&Exponent::ZERO)
    }

    pub fn min_exponent(&self) -> Option<&Exponent> {
        self.terms.first().map(|(e, _)| e)
    }

    pub(crate) fn to_dense(&self, limit: u64) -> Option<Vec<u32>> {
        match self.degree() {
            None => Some(Vec::new()),
            Some(Exponent::Small(d)) if *d <= limit => {
                let mut v = vec![0; *d as usize + 1];
                for (e, c) in &self.terms {
                    v[e.as_u64().unwrap() as usize] = *c;
                }
                Some(v)
            }
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p.get();
        let c = c % p;
        if c == 0 {
            return Self::zero(self.p);
        }
        FpPoly {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), mul_mod(*x, c, p)))
                .collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.scale(inv_mod(lc, self.p.get())),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: &Exponent) -> Self {
        FpPoly {
            p: self.p,
            terms: self.terms.iter().map(|(e, c)| (e.add(k), *c)).collect(),
        }
    }

    /// Substitute `t -> t^k`.
    pub fn scale_exponents(&self, k: &BigUint) -> Self {
        FpPoly {
            p: self.p,
            terms: self.terms.iter().map(|(e, c)| (e.mul_big(k), *c)).collect(),
        }
    }

    /// `self^(p^k)`: coefficients are fixed by Frobenius on F_p.
    pub fn frobenius(&self, k: u32) -> Self {
        self.scale_exponents(&BigUint::from(self.p.get()).pow(k))
    }


    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p.get();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let b = |c: u32| if negate_other { sub_mod(0, c, p) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((ea.clone(), *ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((eb.clone(), b(*cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = add_mod(*ca, b(*cb), p);
                    if s != 0 {
                        out.push((ea.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(e, c)| (e.clone(), b(*c))));
        FpPoly { p: self.p, terms: out }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        if let (Some(da), Some(db)) = (self.degree_u64(), other.degree_u64()) {
            // Dense accumulation pays off unless both operands are very sparse.
            let work = (self.terms.len() * other.terms.len()) as u64;
            if da + db <= DENSE_LIMIT && (da + db) <= 8 * work + 64 {
                return self.mul_dense(other, (da + db) as usize);
            }
        }
        let p = self.p.get();
        let mut acc: BTreeMap<Exponent, u32> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = acc.entry(ea.add(eb)).or_insert(0);
                *slot = add_mod(*slot, mul_mod(*ca, *cb, p), p);
            }
        }
        Self::from_map(acc, self.p)
    }

    fn mul_dense(&self, other: &Self, deg: usize) -> Self {
        let p = self.p.get() as u64;
        let mut acc = vec![0u64; deg + 1];
        let a: Vec<(usize, u64)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.as_u64().unwrap() as usize, *c as u64))
            .collect();
        for (eb, cb) in &other.terms {
            let eb = eb.as_u64().unwrap() as usize;
            let cb = *cb as u64;
            for &(ea, ca) in &a {
                acc[ea + eb] += ca * cb;
            }
            // 63001 * 2^18 stays far below 2^64, but reduce occasionally anyway.
            if acc.len() > 1 << 20 {
                acc.iter_mut().for_each(|x| *x %= p);
            }
        }
        let v = acc.into_iter().map(|x| (x % p) as u32).collect();
        Self::from_dense(v, self.p)
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// `self^e`, splitting `e` into base-p digits so that each digit block is
    /// a Frobenius twist: `f^e = prod_j (f^{e_j})^{p^j}`.
    pub fn pow(&self, e: &BigUint) -> Self {
        if e.is_zero() {
            return Self::one(self.p);
        }
        if self.terms.len() == 1 {
            let (ex, c) = &self.terms[0];
            let ce = FpElement::from_reduced(*c, self.p)
                .pow((e % (self.p.as_u64() - 1)).to_u64().unwrap());
            // c^e with e = 0 mod (p-1) but e > 0 is 1, which pow() above yields.
            return Self::monomial(ce.value(), ex.mul_big(e), self.p);
        }
        let digits = Exponent::from_biguint(e.clone()).digits(self.p.as_u64());
        let mut acc = Self::one(self.p);
        for (j, d) in digits.into_iter().enumerate() {
            if d != 0 {
                acc = acc.mul_poly(&self.pow_u64(d as u64).frobenius(j as u32));
            }
        }
        acc
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        debug_assert_eq!(self.p, divisor.p);
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Self::zero(self.p), self.clone());
        }
        if let (Some(a), Some(b)) = (self.to_dense(DENSE_LIMIT), divisor.to_dense(DENSE_LIMIT)) {
            let (q, r) = dense_div_rem(&a, &b, self.p.get());
            return (Self::from_dense(q, self.p), Self::from_dense(r, self.p));
        }
        self.div_rem_sparse(divisor)
    }

    fn div_rem_sparse(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p.get();
        let (dd, dc) = divisor.terms.last().unwrap();
        let inv = inv_mod(*dc, p);
        let mut rem: BTreeMap<Exponent, u32> = self.terms.iter().cloned().collect();
        let mut quot: BTreeMap<Exponent, u32> = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
            let Some(shift) = e.checked_sub(dd) else { break };
            let f = mul_mod(c, inv, p);
            quot.insert(shift.clone(), f);
            for (de, dcoef) in &divisor.terms {
                let key = de.add(&shift);
                let slot = rem.entry(key.clone()).or_insert(0);
                *slot = sub_mod(*slot, mul_mod(*dcoef, f, p), p);
                if *slot == 0 {
                    rem.remove(&key);
                }
            }
        }
        (Self::from_map(quot, self.p), Self::from_map(rem, self.p))
    }

    /// Remainder modulo `divisor`; huge sparse dividends are reduced term by
    /// term with square-and-multiply instead of long division.
    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.degree() < divisor.degree() {
            return self.clone();
        }
        let small_divisor = divisor.degree_u64().is_some_and(|d| d <= DENSE_LIMIT);
        if small_divisor && self.to_dense(DENSE_LIMIT).is_none() {
            let mut acc = Self::zero(self.p);
            let t = Self::t(self.p);
            for (e, c) in &self.terms {
                let r = modpow_quotient(&t, &e.to_biguint(), divisor);
                acc = &acc + &r.scale(*c);
            }
            return acc;
        }
        self.div_rem(divisor).1
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one(self.p);
        }
        if let (Some(a), Some(b)) = (self.to_dense(DENSE_LIMIT), other.to_dense(DENSE_LIMIT)) {
            return Self::from_dense(dense_gcd(a, b, self.p.get()), self.p);
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, when they are coprime.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s) = ext_gcd_left(&self.rem(m), m);
        if !g.is_one() {
            return None;
        }
        Some(s.rem(m))
    }
}

/// Returns `(g, s)` with `g = gcd(a, b)` monic and `s*a = g mod b`.
fn ext_gcd_left(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &q.mul_poly(&s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let lc = r0.leading_coeff();
    if lc == 0 {
        return (r0, s0);
    }
    let inv = inv_mod(lc, p.get());
    (r0.scale(inv), s0.scale(inv))
}

/// `base^e mod modulus` by square-and-multiply; never expands `base^e`.
pub fn modpow_quotient(base: &FpPoly, e: &BigUint, modulus: &FpPoly) -> FpPoly {
    assert!(
        !modulus.is_constant(),
        "modpow_quotient needs a nonconstant modulus"
    );
    let p = modulus.p.get();
    let m = modulus
        .to_dense(DENSE_LIMIT)
        .expect("modulus of machine-size degree");
    let b = base.rem(modulus).to_dense(DENSE_LIMIT).unwrap();
    let mut acc = vec![1u32];
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = dense_div_rem(&dense_mul(&acc, &acc, p), &m, p).1;
        if e.bit(i) {
            acc = dense_div_rem(&dense_mul(&acc, &b, p), &m, p).1;
        }
    }
    FpPoly::from_dense(dense_div_rem(&acc, &m, p).1, modulus.p)
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn dense_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += (x * y) as u64;
        }
    }
    let mut out: Vec<u32> = acc.into_iter().map(|x| (x % p as u64) as u32).collect();
    trim(&mut out);
    out
}

pub(crate) fn dense_div_rem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u32; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        if c == 0 {
            continue;
        }
        let f = mul_mod(c, inv, p);
        q[k] = f;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = sub_mod(r[k + i], mul_mod(bi, f, p), p);
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn dense_gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = dense_div_rem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        a.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
    }
    a
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        self.scale(self.p.get() - 1)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match (e.as_u64(), *c) {
                (Some(0), c) => write!(f, "{c}")?,
                (Some(1), 1) => write!(f, "t")?,
                (Some(1), c) => write!(f, "{c}*t")?,
                (_, 1) => write!(f, "t^{e}")?,
                (_, c) => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[F_{}]({})", self.p, self)
    }
}

impl serde::Serialize for FpPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Base-p integer whose digits are the coefficients (constant term least
/// significant); the tie-break used when enumerating polynomials.
pub(crate) fn coefficient_index(f: &FpPoly) -> BigUint {
    let p = BigUint::from(f.p.get());
    let mut acc = BigUint::zero();
    let mut power = BigUint::one();
    let mut last = 0u64;
    for (e, c) in f.terms() {
        let e = e.as_u64().expect("index of machine-size polynomial");
        power *= p.pow((e - last) as u32);
        last = e;
        acc += &power * *c;
    }
    acc
}
