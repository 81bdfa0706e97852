mod common;

use common::*;
use hasse_core::field::{factor, irreducibles, parse_poly};
use hasse_core::{parse_ratfunc, FpPoly, Prime, RatFunc};
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = (RatFunc, RatFunc, RatFunc)> {
    small_prime().prop_flat_map(|p| (ratfunc(p, 4), ratfunc(p, 4), ratfunc(p, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn canonical_form((a, _, _) in triple()) {
        prop_assert!(a.den().is_monic());
        prop_assert!(a.num().gcd(a.den()).is_one());
    }

    #[test]
    fn parse_print_round_trip((a, b, _) in triple()) {
        let p = a.modulus();
        prop_assert_eq!(parse_ratfunc(&a.to_string(), p).unwrap(), a);
        let f = b.num().clone();
        prop_assert_eq!(parse_poly(&f.to_string(), p).unwrap(), f);
    }

    #[test]
    fn factorization_multiplies_back(f in small_prime().prop_flat_map(|p| nonzero_poly(p, 8))) {
        let (lc, parts) = factor(&f);
        let mut g = FpPoly::constant(lc.value() as i64, f.modulus());
        for (pi, e) in &parts {
            prop_assert!(pi.is_monic());
            g = &g * &pi.pow_u64(*e);
        }
        prop_assert_eq!(g, f);
    }
}

/// All monic polynomials of degree `d`.
fn monic_of_degree(p: Prime, d: usize) -> Vec<FpPoly> {
    let q = p.get() as usize;
    (0..q.pow(d as u32))
        .map(|mut idx| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push((idx % q) as u32);
                idx /= q;
            }
            c.push(1);
            FpPoly::from_coeffs(&c, p)
        })
        .collect()
}

#[test]
fn irreducibles_pass_trial_division() {
    for (q, k) in [(2u64, 40usize), (3, 30), (5, 20)] {
        let p = prime(q);
        let list = irreducibles(p, k);
        for f in &list {
            let d = f.degree_u64().unwrap() as usize;
            for e in 1..=d / 2 {
                for g in monic_of_degree(p, e) {
                    assert!(!f.rem(&g).is_zero(), "{g} divides {f}");
                }
            }
        }
        // No irreducible of small degree is skipped.
        let top = list.last().unwrap().degree_u64().unwrap() as usize;
        for d in 1..top {
            let count = monic_of_degree(p, d)
                .into_iter()
                .filter(|f| (1..=d / 2).all(|e| monic_of_degree(p, e).iter().all(|g| !f.rem(g).is_zero())))
                .count();
            let listed = list.iter().filter(|f| f.degree_u64() == Some(d as u64)).count();
            assert_eq!(count, listed, "degree {d} over F_{q}");
        }
    }
}
