use super::lucas::{lucas_exp, DerivationIndex};
use crate::field::{FpElement, FpPoly, Prime, RatFunc};

/// `D^(i)` on F_p[t] by the monomial rule `t^e -> C(e, i) t^(e - i)`.
pub fn hasse_derive_poly(i: u64, f: &FpPoly) -> FpPoly {
    if i == 0 {
        return f.clone();
    }
    let p = f.modulus();
    let shift = i.into();
    FpPoly::from_terms(
        f.terms().iter().filter_map(|(e, c)| {
            let e_minus = e.checked_sub(&shift)?;
            let b = lucas_exp(e, i, p);
            (b != 0).then(|| (e_minus, b * c % p.get()))
        }),
        p,
    )
}

/// Smallest power of `p` exceeding `i`.
pub(crate) fn power_above(i: u64, p: Prime) -> u64 {
    let mut q = p.as_u64();
    while q <= i {
        q *= p.as_u64();
    }
    q
}

/// `D^(i)` on F_p(t).
///
/// For `q = p^k > i` every `D^(l)` with `0 < l < q` kills `b^q`, so the
/// Leibniz rule gives `D^(i)(a / b) = D^(i)(a b^(q-1)) / b^q`. This is the
/// same value [`hasse_derive_by_leibniz`] produces, without the recursion.
pub fn hasse_derive(i: u64, r: &RatFunc) -> RatFunc {
    if i == 0 || r.is_zero() {
        return if i == 0 { r.clone() } else { RatFunc::zero(r.modulus()) };
    }
    if r.den().is_one() {
        return RatFunc::from_poly(hasse_derive_poly(i, r.num()));
    }
    let q = power_above(i, r.modulus());
    let lifted = r.num() * &r.den().pow_u64(q - 1);
    let bq = r.den().pow_u64(q);
    RatFunc::new(hasse_derive_poly(i, &lifted), bq).expect("nonzero denominator")
}

/// [`hasse_derive`] taking a [`DerivationIndex`].
pub fn hasse_derive_index(i: &DerivationIndex, r: &RatFunc) -> RatFunc {
    hasse_derive(i.value(), r)
}

/// `[D^(0) h, ..., D^(n) h]` for `h = f/g` by the quotient recursion
/// `g D^(i)(h) = D^(i)(f) - sum_{j<i} D^(j)(h) D^(i-j)(g)`.
pub fn hasse_derivatives_by_leibniz(r: &RatFunc, n: u64) -> Vec<RatFunc> {
    let f = r.num();
    let g = r.den();
    let g_ders: Vec<RatFunc> = (0..=n).map(|k| RatFunc::from_poly(hasse_derive_poly(k, g))).collect();
    let g_inv = RatFunc::from_poly(g.clone()).inv().unwrap();
    let mut out: Vec<RatFunc> = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let mut acc = RatFunc::from_poly(hasse_derive_poly(i, f));
        for (j, h_j) in out.iter().enumerate() {
            let gd = &g_ders[(i - j as u64) as usize];
            if !gd.is_zero() && !h_j.is_zero() {
                acc = acc - h_j * gd;
            }
        }
        out.push(acc * &g_inv);
    }
    out
}

/// `D^(i)` by the quotient recursion; slower than [`hasse_derive`].
pub fn hasse_derive_by_leibniz(i: u64, r: &RatFunc) -> RatFunc {
    hasse_derivatives_by_leibniz(r, i).pop().unwrap()
}

/// `c_i` with `(D^(p^0))^(i_0) ... (D^(p^d))^(i_d) = c_i D^(i)`.
pub fn c_coeff(i: &DerivationIndex) -> FpElement {
    let p = i.modulus();
    let q = p.as_u64();
    let mut acc = FpElement::one(p);
    let mut partial = 0u64;
    let mut pn = 1u64;
    for &digit in i.digits() {
        partial += digit as u64 * pn;
        acc = acc * super::lucas_binom(partial, digit as u64 * pn, p);
        for a in 1..=digit as u64 {
            acc = acc * super::lucas_binom(a * pn, pn, p);
        }
        pn = pn.saturating_mul(q);
    }
    acc
}
