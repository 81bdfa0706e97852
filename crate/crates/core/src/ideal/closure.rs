use serde::Serialize;

use super::multipoly::MultiPoly;
use super::PolyIdeal;
use crate::derivation::{checked_pm, delta_m_with_bound, hasse_derive, pm_power_root, DEFAULT_POWER_BOUND};
use crate::error::{Error, Result};

/// Coefficient-wise `D^(i)`; monomials are constants for the derivation.
pub fn hasse_derive_multi(i: u64, f: &MultiPoly) -> MultiPoly {
    f.map_coefficients(|c| hasse_derive(i, c))
}

/// Which derivation indices a closure test applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestSet {
    /// Every `1 <= i < p^m`.
    Full,
    /// `i = p^s` for `s < m`. Equivalent to [`TestSet::Full`]: every `D^(i)`
    /// with `i < p^m` is a nonzero multiple of a composition of these.
    PrimePowers,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureWitness {
    pub index: u64,
    pub generator: MultiPoly,
    pub normal_form: MultiPoly,
}

/// Outcome of a closure test, with the failing `(i, g)` pairs.
#[derive(Clone, Debug, Serialize)]
pub struct RationalityCertificate {
    pub m: u32,
    pub rational: bool,
    pub test_set: TestSet,
    pub tested_indices: Vec<u64>,
    pub basis: Vec<MultiPoly>,
    pub witnesses: Vec<ClosureWitness>,
}

/// Whether `ideal` is stable under `D^(i)` for `1 <= i < p^m`, i.e. defined
/// over the `p^m`-th powers. Tested on the reduced basis.
pub fn is_pm_rational(ideal: &PolyIdeal, m: u32) -> Result<RationalityCertificate> {
    is_pm_rational_with(ideal, m, TestSet::Full, DEFAULT_POWER_BOUND)
}

pub fn is_pm_rational_with(ideal: &PolyIdeal, m: u32, test_set: TestSet, bound: u64) -> Result<RationalityCertificate> {
    let p = ideal.modulus();
    let q = checked_pm(p, m, bound)?;
    let indices: Vec<u64> = match test_set {
        TestSet::Full => (1..q).collect(),
        TestSet::PrimePowers => (0..m).map(|s| p.as_u64().pow(s)).collect(),
    };
    let basis = ideal.groebner_basis().to_vec();
    let mut witnesses = Vec::new();
    for g in &basis {
        for &i in &indices {
            let d = hasse_derive_multi(i, g);
            if d.is_zero() {
                continue;
            }
            let nf = ideal.normal_form(&d);
            if !nf.is_zero() {
                witnesses.push(ClosureWitness {
                    index: i,
                    generator: g.clone(),
                    normal_form: nf,
                });
            }
        }
    }
    Ok(RationalityCertificate {
        m,
        rational: witnesses.is_empty(),
        test_set,
        tested_indices: indices,
        basis,
        witnesses,
    })
}

/// Generators of `ideal` whose coefficients are all `p^m`-th powers.
///
/// Each reduced basis element `f` is peeled: with `f` monic, emit
/// `g = sum_alpha Delta_m(c_alpha) X^alpha` and continue with `f - g`.
/// `Delta_m(1) = 1`, so `f - g` has a smaller leading monomial, and `g`
/// lies in the ideal because the ideal is closed under the derivations.
pub fn descend_generators(ideal: &PolyIdeal, m: u32) -> Result<Vec<MultiPoly>> {
    let cert = is_pm_rational_with(ideal, m, TestSet::PrimePowers, DEFAULT_POWER_BOUND)?;
    if !cert.rational {
        return Err(Error::NotDClosed {
            witnesses: cert.witnesses.len(),
        });
    }
    let order = ideal.order();
    let mut out: Vec<MultiPoly> = Vec::new();
    for f in &cert.basis {
        let mut f = f.clone();
        while !f.is_zero() {
            f = f.monic(order);
            let g = f.try_map_coefficients(|c| delta_m_with_bound(c, m, DEFAULT_POWER_BOUND))?;
            assert!(g.terms().all(|(_, c)| pm_power_root(c, m).is_some()), "descended coefficient is not a p^m-th power");
            f = &f - &g;
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    Ok(out)
}
