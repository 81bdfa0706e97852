mod common;

use common::*;
use hasse_core::derivation::DEFAULT_POWER_BOUND;
use hasse_core::ideal::{
    descend_generators, intersect_ideals, is_pm_rational, is_pm_rational_with, vanishing_ideal, TestSet,
};
use hasse_core::{pm_power_root, MonomialOrder, MultiPoly, PolyIdeal, Prime, RatFunc};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameters of a random ideal: prime, exponent m, variable count, seed.
fn setup() -> impl Strategy<Value = (Prime, u32, usize, u64)> {
    (prop::sample::select(vec![2u64, 3]), 1u32..3, 2usize..4, any::<u64>()).prop_map(|(p, m, n, s)| (prime(p), m, n, s))
}

fn random_gens(rng: &mut ChaCha8Rng, p: Prime, n: usize, m: Option<u32>) -> Vec<MultiPoly> {
    let k = rng.gen_range(1..=2);
    (0..k)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            rand_multipoly(rng, p, n, 2, terms, |r| {
                let c = rand_nonzero_ratfunc(r, p, 2);
                match m {
                    Some(m) => frobenius_twist(&c, m),
                    None => c,
                }
            })
        })
        .filter(|g| !g.is_zero())
        .collect()
}

fn ideal(p: Prime, n: usize, gens: Vec<MultiPoly>) -> PolyIdeal {
    PolyIdeal::new(p, n, gens, MonomialOrder::GrevLex).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn power_coefficient_ideals_descend((p, m, n, seed) in setup()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = ideal(p, n, random_gens(&mut rng, p, n, Some(m)));
        prop_assert!(is_pm_rational(&i, m).unwrap().rational);
        let d = descend_generators(&i, m).unwrap();
        for g in &d {
            prop_assert!(g.terms().all(|(_, c)| pm_power_root(c, m).is_some()));
        }
        prop_assert!(ideal(p, n, d).same_ideal(&i));
    }

    #[test]
    fn reduced_test_set_agrees((p, m, n, seed) in setup(), twisted in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = ideal(p, n, random_gens(&mut rng, p, n, twisted.then_some(m)));
        let full = is_pm_rational_with(&i, m, TestSet::Full, DEFAULT_POWER_BOUND).unwrap();
        let reduced = is_pm_rational_with(&i, m, TestSet::PrimePowers, DEFAULT_POWER_BOUND).unwrap();
        prop_assert_eq!(full.rational, reduced.rational);
        for w in &full.witnesses {
            prop_assert!(!w.normal_form.is_zero());
        }
    }

    #[test]
    fn intersections_stay_closed((p, m, n, seed) in setup()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = ideal(p, n, random_gens(&mut rng, p, n, Some(m)));
        let j = ideal(p, n, random_gens(&mut rng, p, n, Some(m)));
        let k = intersect_ideals(&i, &j).unwrap();
        prop_assert!(is_pm_rational(&k, m).unwrap().rational);
        for g in k.groebner_basis() {
            prop_assert!(i.contains(g) && j.contains(g));
        }
    }

    #[test]
    fn vanishing_ideals_of_power_points((p, m, n, seed) in setup(), npts in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points = Vec::new();
        while points.len() < npts {
            let pt: Vec<RatFunc> = (0..n).map(|_| frobenius_twist(&rand_ratfunc(&mut rng, p, 1), m)).collect();
            if pt.iter().any(|c| !c.is_zero()) {
                points.push(pt);
            }
        }
        let v = vanishing_ideal(&points, n, p).unwrap();
        prop_assert!(is_pm_rational(&v, m).unwrap().rational);
        let d = descend_generators(&v, m).unwrap();
        prop_assert!(ideal(p, n, d).same_ideal(&v));
        // Every generator vanishes at every point.
        for g in v.groebner_basis() {
            for pt in &points {
                let mut val = RatFunc::zero(p);
                for (mono, c) in g.terms() {
                    let mut term = c.clone();
                    for (x, &e) in pt.iter().zip(mono.exponents()) {
                        term = &term * &x.pow_u64(e as u64);
                    }
                    val = &val + &term;
                }
                prop_assert!(val.is_zero());
            }
        }
    }

    #[test]
    fn explicit_combinations_reduce_to_zero((p, _m, n, seed) in setup()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_gens(&mut rng, p, n, None);
        let i = ideal(p, n, gens.clone());
        let mut f = MultiPoly::zero(p, n);
        for g in &gens {
            let h = rand_multipoly(&mut rng, p, n, 2, 2, |r| rand_ratfunc(r, p, 2));
            f = &f + &(&h * g);
        }
        prop_assert!(i.normal_form(&f).is_zero());
    }
}
