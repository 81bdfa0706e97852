//! Fixed inputs shared by the benchmarks.

use hasse_core::field::parse_poly;
use hasse_core::{parse_ratfunc, FpPoly, MultiPoly, Place, Prime, RatFunc, SUnitGroup};

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

/// A rational function with a non-trivial denominator.
pub fn sample_element(p: Prime) -> RatFunc {
    parse_ratfunc("(t^7 + 2*t^3 + t + 1)/(t^4 + t^2 + 1)^2", p).unwrap()
}

/// Projective points with `p^m`-th power coordinates.
pub fn power_points(p: Prime, m: u32, count: usize) -> Vec<Vec<RatFunc>> {
    let q = (p.get() as u64).pow(m);
    (0..count as i64)
        .map(|k| {
            let c = parse_ratfunc(&format!("(t + {k})^{q}"), p).unwrap();
            let d = parse_ratfunc(&format!("t^{}", q * (k as u64 + 1)), p).unwrap();
            vec![c, d, RatFunc::one(p)]
        })
        .collect()
}

/// Generators of a three-variable ideal over F_p(t).
pub fn sample_generators(p: Prime) -> Vec<MultiPoly> {
    ["X0^2 + t*X1*X2", "X1^2 + (t+1)*X0", "X0*X2 + t^2*X2^2"]
        .iter()
        .map(|g| MultiPoly::parse(g, p, 3).unwrap())
        .collect()
}

pub fn group(p: Prime, places: &str) -> SUnitGroup {
    let places: Vec<Place> = places.split(',').map(|s| Place::parse(s.trim(), p).unwrap()).collect();
    SUnitGroup::new(p, &places).unwrap()
}

/// `t^(2^40) + t^3 + 1`, stored sparsely.
pub fn sparse_poly() -> FpPoly {
    parse_poly("t^(2^40) + t^3 + 1", prime(2)).unwrap()
}
