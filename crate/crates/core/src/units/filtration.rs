use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::hnf::solution_lattice;
use super::sunit::{SUnitGroup, SUnitVector};
use crate::error::{Error, Result};
use crate::field::{FpElement, RatFunc};

/// One level `U_n = H ∩ (K^*)^(p^n)` of the filtration of `H = <gens>`.
#[derive(Clone, Debug, Serialize)]
pub struct FiltrationLevel {
    pub n: u32,
    /// Exponent vectors `a` (one entry per generator) of a basis of `U_n`.
    pub basis: Vec<Vec<i64>>,
    /// `prod gens_i^(a_i)` for each basis vector, in product form.
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub p: u32,
    pub generators: Vec<String>,
    pub levels: Vec<FiltrationLevel>,
    /// `∩_n U_n` as a subgroup of `F_p^*`, sorted.
    pub intersection: Vec<u32>,
    /// Whether the intersection consists of constants only.
    pub torsion: bool,
}

impl FiltrationReport {
    pub fn intersection_is_trivial(&self) -> bool {
        self.intersection == [1]
    }
}

fn to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| {
            x.to_i64().ok_or_else(|| Error::BoundExceeded {
                what: "lattice entry",
                value: x.to_string(),
                bound: i64::MAX.to_string(),
            })
        })
        .collect()
}

fn combine(a: &[i64], decomposed: &[SUnitVector], group: &SUnitGroup) -> SUnitVector {
    let p = group.modulus();
    let mut constant = FpElement::one(p);
    let mut exponents = vec![0i64; group.rank()];
    for (&ai, u) in a.iter().zip(decomposed) {
        // F_p^* has order p - 1.
        constant = constant * u.constant.pow(ai.rem_euclid(p.get() as i64 - 1) as u64);
        for (e, &x) in exponents.iter_mut().zip(&u.exponents) {
            *e += ai * x;
        }
    }
    SUnitVector { constant, exponents }
}

/// The filtration `U_n = H ∩ (K^*)^(p^n)`, `n = 1..=n_max`, of the subgroup
/// `H` generated by `gens` inside `group`, together with `∩_n U_n`.
///
/// A member `c * prod pi_j^(e_j)` is a `p^n`-th power iff `p^n` divides
/// every `e_j`, so `U_n` corresponds to `{a : a E = 0 mod p^n}` for the
/// exponent matrix `E` of the generators, and the intersection to `ker E`.
pub fn frobenius_filtration(gens: &[RatFunc], group: &SUnitGroup, n_max: u32) -> Result<FiltrationReport> {
    let p = group.modulus();
    let decomposed: Vec<SUnitVector> = gens.iter().map(|g| group.decompose(g)).collect::<Result<_>>()?;
    let e: Vec<Vec<i64>> = decomposed.iter().map(|u| u.exponents.clone()).collect();
    let k = group.rank();
    let mut levels = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let q = BigInt::from(p.get()).pow(n);
        let basis = solution_lattice(&e, k, Some(&q))
            .iter()
            .map(|v| to_i64(v))
            .collect::<Result<Vec<_>>>()?;
        let members: Vec<SUnitVector> = basis.iter().map(|a| combine(a, &decomposed, group)).collect();
        assert!(members.iter().all(|u| u.is_pn_power(p, n)), "lattice vector outside U_n");
        levels.push(FiltrationLevel {
            n,
            basis,
            elements: members.iter().map(|u| group.render(u)).collect(),
        });
    }
    let kernel: Vec<SUnitVector> = solution_lattice(&e, k, None)
        .iter()
        .map(|v| to_i64(v).map(|a| combine(&a, &decomposed, group)))
        .collect::<Result<_>>()?;
    let torsion = kernel.iter().all(|u| u.exponents.iter().all(|&x| x == 0));
    let mut subgroup = BTreeSet::from([1u32]);
    loop {
        let next: BTreeSet<u32> = subgroup
            .iter()
            .flat_map(|&x| kernel.iter().map(move |u| (FpElement::new(x as i64, p) * u.constant).value()))
            .chain(subgroup.iter().copied())
            .collect();
        if next.len() == subgroup.len() {
            break;
        }
        subgroup = next;
    }
    Ok(FiltrationReport {
        p: p.get(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
        levels,
        intersection: subgroup.into_iter().collect(),
        torsion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{parse_ratfunc, Prime};

    fn run(gens: &[&str], q: u64, n_max: u32) -> FiltrationReport {
        let p = Prime::new(q).unwrap();
        let g: Vec<RatFunc> = gens.iter().map(|s| parse_ratfunc(s, p).unwrap()).collect();
        let group = SUnitGroup::spanning(p, &g).unwrap();
        frobenius_filtration(&g, &group, n_max).unwrap()
    }

    #[test]
    fn independent_generators() {
        let r = run(&["t", "t+1"], 2, 8);
        for level in &r.levels {
            let q = 1i64 << level.n;
            assert_eq!(level.basis, vec![vec![q, 0], vec![0, q]]);
        }
        assert_eq!(r.levels[0].elements, ["t^2", "(t + 1)^2"]);
        assert!(r.intersection_is_trivial());
        assert!(r.torsion);
    }

    #[test]
    fn constant_generator() {
        let r = run(&["2"], 3, 5);
        for level in &r.levels {
            assert_eq!(level.basis, vec![vec![1]]);
            assert_eq!(level.elements, ["2"]);
        }
        assert_eq!(r.intersection, [1, 2]);
        assert!(r.torsion);
    }

    #[test]
    fn empty_and_dependent() {
        let r = run(&[], 5, 3);
        assert!(r.levels.iter().all(|l| l.basis.is_empty()));
        assert!(r.intersection_is_trivial());
        // t^2 / t^2 * 3: the relation (1, -1, 1) up to constants.
        let r = run(&["t^2", "3*t^2", "3"], 5, 2);
        assert_eq!(r.intersection, [1, 2, 3, 4]);
    }

    #[test]
    fn not_in_group() {
        let p = Prime::new(2).unwrap();
        let group = SUnitGroup::spanning(p, &[parse_ratfunc("t", p).unwrap()]).unwrap();
        let err = frobenius_filtration(&[parse_ratfunc("t+1", p).unwrap()], &group, 1).unwrap_err();
        assert!(matches!(err, Error::NotAnSUnit(_)));
    }
}
