mod common;

use common::*;
use hasse_core::field::{factor, irreducibles};
use hasse_core::places::{local_expansion, order_at, support};
use hasse_core::{valuation, FpPoly, Place, RatFunc, Valuation};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn place(p: hasse_core::Prime) -> impl Strategy<Value = Place> {
    let mut all: Vec<Place> = irreducibles(p, 8).into_iter().map(Place::Finite).collect();
    all.push(Place::Infinity);
    prop::sample::select(all)
}

fn pair_at_place() -> impl Strategy<Value = (RatFunc, RatFunc, Place)> {
    small_prime().prop_flat_map(|p| (ratfunc(p, 5), ratfunc(p, 5), place(p)))
}

/// Multiplicity of `pi` in `f` by repeated division.
fn naive_order(f: &FpPoly, pi: &FpPoly) -> u64 {
    let mut f = f.clone();
    let mut k = 0;
    while let Some(q) = f.exact_div(pi) {
        f = q;
        k += 1;
    }
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_formula(r in small_prime().prop_flat_map(|p| nonzero_ratfunc(p, 6))) {
        let mut total = BigInt::from(0);
        for v in support(&r) {
            let Valuation::Finite(k) = valuation(&r, &v) else { panic!("nonzero element") };
            total += k * BigInt::from(v.degree());
        }
        prop_assert_eq!(total, BigInt::from(0));
        // Places outside the support see a unit.
        let (_, num_f) = factor(r.num());
        let (_, den_f) = factor(r.den());
        for (pi, _) in num_f.iter().chain(&den_f) {
            prop_assert!(support(&r).contains(&Place::Finite(pi.clone())));
        }
    }

    #[test]
    fn ultrametric((a, b, v) in pair_at_place()) {
        let va = valuation(&a, &v);
        let vb = valuation(&b, &v);
        let vs = valuation(&(&a + &b), &v);
        let lo = va.clone().min(vb.clone());
        prop_assert!(vs >= lo);
        if va != vb {
            prop_assert_eq!(vs, lo);
        }
    }

    #[test]
    fn valuation_is_additive((a, b, v) in pair_at_place()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let sum = match (valuation(&a, &v), valuation(&b, &v)) {
            (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
            _ => unreachable!(),
        };
        prop_assert_eq!(valuation(&(&a * &b), &v), sum);
    }

    #[test]
    fn expansion_consistency((a, _, v) in pair_at_place(), precision in 1usize..6) {
        prop_assume!(!a.is_zero());
        let exp = local_expansion(&a, &v, precision);
        let rest = &a - &exp.reconstruct();
        let Valuation::Finite(lead) = exp.lead_valuation.clone() else { unreachable!() };
        prop_assert_eq!(exp.lead_valuation, valuation(&a, &v));
        prop_assert!(valuation(&rest, &v) >= Valuation::Finite(lead + BigInt::from(precision)));
    }

    #[test]
    fn sparse_order_matches_division(
        (f, pi) in small_prime().prop_flat_map(|p| (nonzero_poly(p, 6), prop::sample::select(irreducibles(p, 6)))),
        k in 0u64..4,
        twist in 0u32..3,
    ) {
        let g = &f * &pi.pow_u64(k);
        prop_assert_eq!(order_at(&g, &pi), BigUint::from(naive_order(&g, &pi)));
        // A Frobenius twist multiplies the order by p^twist.
        let q = BigUint::from(f.modulus().get()).pow(twist);
        prop_assert_eq!(order_at(&g.frobenius(twist), &pi), order_at(&g, &pi) * q);
    }
}
