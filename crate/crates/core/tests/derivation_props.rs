mod common;

use common::*;
use hasse_core::derivation::{delta_m_termwise, hasse_derive_by_leibniz, hasse_derive_poly, DEFAULT_POWER_BOUND};
use hasse_core::{c_coeff, delta_m, hasse_derive, lucas_binom, pm_power_root, DerivationIndex, RatFunc};
use proptest::prelude::*;

fn element() -> impl Strategy<Value = RatFunc> {
    small_prime().prop_flat_map(|p| ratfunc(p, 4))
}

fn element23() -> impl Strategy<Value = RatFunc> {
    prop::sample::select(vec![2u64, 3]).prop_flat_map(|p| ratfunc(prime(p), 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lucas_matches_integer_binomial(i in 0u64..400, j in 0u64..400, p in small_prime()) {
        prop_assert_eq!(lucas_binom(i, j, p).value(), binom_mod(i, j, p));
    }

    #[test]
    fn polynomial_rule(f in small_prime().prop_flat_map(|p| poly(p, 12)), i in 0u64..15) {
        prop_assert_eq!(hasse_derive_poly(i, &f), hasse_poly_oracle(i, &f));
    }

    #[test]
    fn iterativity(r in element(), i in 0u64..16, j in 0u64..15) {
        let lhs = hasse_derive(i, &hasse_derive(j, &r));
        let rhs = hasse_derive(i + j, &r).scale(lucas_binom(i + j, i, r.modulus()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz(r in element(), s_seed in any::<u64>(), i in 0u64..21) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s_seed);
        let s = rand_ratfunc(&mut rng, r.modulus(), 4);
        let lhs = hasse_derive(i, &(&r * &s));
        let mut rhs = RatFunc::zero(r.modulus());
        for j in 0..=i {
            rhs = &rhs + &(&hasse_derive(j, &r) * &hasse_derive(i - j, &s));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_rule_against_polynomial_oracle(r in element(), i in 0u64..12) {
        // b * r = a, so sum_j D^(j)(b) D^(i-j)(r) = D^(i)(a).
        let (a, b) = (r.num().clone(), r.den().clone());
        let mut acc = RatFunc::zero(r.modulus());
        for j in 0..=i {
            let db = RatFunc::from_poly(hasse_poly_oracle(j, &b));
            acc = &acc + &(&db * &hasse_derive(i - j, &r));
        }
        prop_assert_eq!(acc, RatFunc::from_poly(hasse_poly_oracle(i, &a)));
        prop_assert_eq!(hasse_derive(i, &r), hasse_derive_by_leibniz(i, &r));
    }

    #[test]
    fn factorization_through_prime_powers(r in element23(), i in 0u64..64) {
        let p = r.modulus();
        let idx = DerivationIndex::new(i, p);
        let c = c_coeff(&idx);
        prop_assert!(!c.is_zero());
        let mut acc = r.clone();
        let mut q = 1u64;
        for &digit in idx.digits() {
            for _ in 0..digit {
                acc = hasse_derive(q, &acc);
            }
            q *= p.get() as u64;
        }
        prop_assert_eq!(acc.scale(c.inv().unwrap()), hasse_derive(i, &r));
    }

    #[test]
    fn delta_projects_onto_powers(r in element23(), m in 1u32..3) {
        let d = delta_m(&r, m).unwrap();
        prop_assert!(is_pm_power_oracle(&d, m));
        prop_assert!(pm_power_root(&d, m).is_some());
        prop_assert_eq!(&d, &delta_m_termwise(&r, m, DEFAULT_POWER_BOUND).unwrap());
    }

    #[test]
    fn delta_fixes_powers(r in element23(), m in 1u32..3) {
        let c = frobenius_twist(&r, m);
        prop_assert_eq!(delta_m(&c, m).unwrap(), c);
    }

    #[test]
    fn kernel_criterion_matches_exponents(r in element(), m in 1u32..3, twisted in any::<bool>()) {
        let c = if twisted { frobenius_twist(&r, m) } else { r };
        let root = pm_power_root(&c, m);
        prop_assert_eq!(root.is_some(), is_pm_power_oracle(&c, m));
        if let Some(s) = root {
            prop_assert_eq!(frobenius_twist(&s, m), c);
        }
    }
}
