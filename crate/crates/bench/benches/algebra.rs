use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hasse_bench::*;
use hasse_core::derivation::hasse_derive_by_leibniz;
use hasse_core::ideal::{is_pm_rational, vanishing_ideal};
use hasse_core::places::order_at;
use hasse_core::reports::run_exm1;
use hasse_core::units::csp_witness_search;
use hasse_core::{delta_m, hasse_derive, FpPoly, MonomialOrder, Place, PolyIdeal};
use std::hint::black_box;

fn derivations(c: &mut Criterion) {
    let p = prime(3);
    let r = sample_element(p);
    let mut g = c.benchmark_group("hasse_derive");
    for i in [5u64, 20, 80] {
        g.bench_with_input(BenchmarkId::new("twist", i), &i, |b, &i| b.iter(|| hasse_derive(i, black_box(&r))));
        g.bench_with_input(BenchmarkId::new("leibniz", i), &i, |b, &i| {
            b.iter(|| hasse_derive_by_leibniz(i, black_box(&r)))
        });
    }
    g.finish();
    c.bench_function("delta_m/p=3,m=2", |b| b.iter(|| delta_m(black_box(&r), 2).unwrap()));
}

fn ideals(c: &mut Criterion) {
    let p = prime(2);
    c.bench_function("groebner/three generators", |b| {
        b.iter(|| {
            let i = PolyIdeal::new(p, 3, sample_generators(p), MonomialOrder::GrevLex).unwrap();
            i.groebner_basis().len()
        })
    });
    let points = power_points(p, 1, 3);
    c.bench_function("vanishing+closure/3 points", |b| {
        b.iter(|| {
            let v = vanishing_ideal(black_box(&points), 3, p).unwrap();
            is_pm_rational(&v, 1).unwrap().rational
        })
    });
}

fn units(c: &mut Criterion) {
    let p = prime(2);
    let g = group(p, "t, t+1, inf");
    c.bench_function("csp_search/p=2,m=3", |b| b.iter(|| csp_witness_search(black_box(&g), 3, 4).unwrap()));
    let g5 = group(prime(5), "t, t+1, inf");
    c.bench_function("csp_search/p=5,m=4", |b| b.iter(|| csp_witness_search(black_box(&g5), 4, 3).unwrap()));
}

fn valuations(c: &mut Criterion) {
    let f = sparse_poly();
    let pi = FpPoly::from_coeffs(&[1, 1, 1], prime(2));
    c.bench_function("order_at/sparse 2^40", |b| b.iter(|| order_at(black_box(&f), &pi)));
    let p = prime(2);
    let places = vec![
        Place::parse("t+1", p).unwrap(),
        Place::parse("t^2+t+1", p).unwrap(),
        Place::parse("t^3+t+1", p).unwrap(),
    ];
    c.bench_function("exm1/n_max=4", |b| b.iter(|| run_exm1(p, 4, black_box(&places)).unwrap()));
}

criterion_group!(benches, derivations, ideals, units, valuations);
criterion_main!(benches);
