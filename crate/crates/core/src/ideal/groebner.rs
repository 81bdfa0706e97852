use std::collections::BTreeMap;

use super::monomial::{Monomial, MonomialOrder};
use super::multipoly::MultiPoly;
use crate::field::RatFunc;

/// A divisor prepared for repeated reduction: leading data split off the tail.
struct Divisor {
    lm: Monomial,
    lc_inv: RatFunc,
    tail: Vec<(Monomial, RatFunc)>,
}

impl Divisor {
    fn new(g: &MultiPoly, order: MonomialOrder) -> Self {
        let (lm, lc) = g.leading_term(order).expect("nonzero divisor");
        let lm = lm.clone();
        let lc_inv = lc.inv().unwrap();
        let tail = g.terms().filter(|(m, _)| **m != lm).map(|(m, c)| (m.clone(), c.clone())).collect();
        Divisor { lm, lc_inv, tail }
    }
}

/// Full reduction of `f` by `basis`: no term of the result is divisible by
/// a leading monomial of `basis`.
pub(crate) fn reduce(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let divisors: Vec<Divisor> = basis.iter().filter(|g| !g.is_zero()).map(|g| Divisor::new(g, order)).collect();
    reduce_with(f, &divisors, order)
}

fn reduce_with(f: &MultiPoly, divisors: &[Divisor], order: MonomialOrder) -> MultiPoly {
    let mut work: BTreeMap<Vec<i64>, (Monomial, RatFunc)> =
        f.terms().map(|(m, c)| (order.key(m), (m.clone(), c.clone()))).collect();
    let mut rem = Vec::new();
    while let Some((_, (m, c))) = work.pop_last() {
        let Some(d) = divisors.iter().find(|d| d.lm.divides(&m)) else {
            rem.push((m, c));
            continue;
        };
        let q = m.div(&d.lm);
        let factor = -(&c * &d.lc_inv);
        for (tm, tc) in &d.tail {
            let mm = tm.mul(&q);
            let delta = &factor * tc;
            let key = order.key(&mm);
            match work.get_mut(&key) {
                Some((_, existing)) => {
                    let sum = &*existing + &delta;
                    if sum.is_zero() {
                        work.remove(&key);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    work.insert(key, (mm, delta));
                }
            }
        }
    }
    MultiPoly::from_terms(f.modulus(), f.nvars(), rem)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_monomial(&l.div(fm)).scale(&fc.inv().unwrap());
    let b = g.mul_monomial(&l.div(gm)).scale(&gc.inv().unwrap());
    &a - &b
}

/// The reduced Groebner basis, monic and sorted by leading monomial
/// descending. Buchberger's algorithm with the Gebauer-Moeller criteria and
/// the normal selection strategy.
pub fn groebner(gens: &[MultiPoly], order: MonomialOrder) -> Vec<MultiPoly> {
    let mut polys: Vec<MultiPoly> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let current: Vec<MultiPoly> = active.iter().map(|&i| polys[i].clone()).collect();
        let h = reduce(g, &current, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        if h.is_nonzero_constant() {
            return vec![h];
        }
        lms.push(h.leading_monomial(order).unwrap().clone());
        polys.push(h);
        update(&lms, &mut active, &mut pairs, polys.len() - 1);
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first; ties by index for determinism.
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lms[a.0].lcm(&lms[a.1]);
                let lb = lms[b.0].lcm(&lms[b.1]);
                order.cmp(&la, &lb).then_with(|| a.cmp(b))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let s = s_polynomial(&polys[i], &polys[j], order);
        let divisors: Vec<Divisor> = active.iter().map(|&k| Divisor::new(&polys[k], order)).collect();
        let h = reduce_with(&s, &divisors, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        if h.is_nonzero_constant() {
            return vec![h];
        }
        lms.push(h.leading_monomial(order).unwrap().clone());
        polys.push(h);
        update(&lms, &mut active, &mut pairs, polys.len() - 1);
    }

    let basis: Vec<MultiPoly> = active.iter().map(|&i| polys[i].clone()).collect();
    interreduce(basis, order)
}

/// Gebauer-Moeller update with the new element `h`.
fn update(lms: &[Monomial], active: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, h: usize) {
    let lh = &lms[h];
    let lcm_h = |g: usize| lh.lcm(&lms[g]);

    // Chain criterion among the new pairs; coprime pairs survive it as witnesses.
    let candidates: Vec<usize> = active.clone();
    let mut kept: Vec<usize> = Vec::new();
    for (idx, &g1) in candidates.iter().enumerate() {
        let l1 = lcm_h(g1);
        let coprime = lh.coprime(&lms[g1]);
        let dominated = candidates[idx + 1..].iter().any(|&g2| lcm_h(g2).divides(&l1))
            || kept.iter().any(|&g2| lcm_h(g2).divides(&l1));
        if coprime || !dominated {
            kept.push(g1);
        }
    }
    // Product criterion.
    let mut new_pairs = kept;
    new_pairs.retain(|&g| !lh.coprime(&lms[g]));

    // Old pairs made redundant by h.
    pairs.retain(|&(a, b)| {
        let l = lms[a].lcm(&lms[b]);
        !(lh.divides(&l) && lcm_h(a) != l && lcm_h(b) != l)
    });
    pairs.extend(new_pairs.into_iter().map(|g| (g, h)));

    active.retain(|&g| !lh.divides(&lms[g]));
    active.push(h);
}

fn interreduce(basis: Vec<MultiPoly>, order: MonomialOrder) -> Vec<MultiPoly> {
    let lm = |g: &MultiPoly| g.leading_monomial(order).unwrap().clone();
    // Minimal basis: drop elements whose leading monomial another divides.
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let gm = lm(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = lm(h);
            j != i && hm.divides(&gm) && (hm != gm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[i];
        let (m, c) = g.leading_term(order).unwrap();
        let head = MultiPoly::term(c.clone(), m.clone());
        let tail = g - &head;
        let reduced = &head + &reduce(&tail, &others, order);
        out.push(reduced.monic(order));
    }
    out.sort_by(|a, b| order.cmp(&lm(b), &lm(a)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    fn parse_all(gens: &[&str], p: u64, n: usize) -> Vec<MultiPoly> {
        let p = Prime::new(p).unwrap();
        gens.iter().map(|g| MultiPoly::parse(g, p, n).unwrap()).collect()
    }

    fn show(b: &[MultiPoly]) -> Vec<String> {
        b.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn examples() {
        let g = groebner(&parse_all(&["X0^2 - X1", "X1"], 2, 2), MonomialOrder::Lex);
        assert_eq!(show(&g), ["X0^2", "X1"]);
        let g = groebner(&parse_all(&["X0"], 2, 2), MonomialOrder::GrevLex);
        assert_eq!(show(&g), ["X0"]);
        let g = groebner(&parse_all(&["t*X0 + X1", "X0"], 2, 2), MonomialOrder::GrevLex);
        assert_eq!(show(&g), ["X0", "X1"]);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let g = groebner(&parse_all(&["X0 + 1", "X0"], 3, 1), MonomialOrder::GrevLex);
        assert_eq!(show(&g), ["1"]);
        assert!(groebner(&parse_all(&["0"], 3, 1), MonomialOrder::GrevLex).is_empty());
    }

    #[test]
    fn twisted_cubic() {
        // Minors of [[X0, X1, X2], [X1, X2, X3]].
        let gens = parse_all(&["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"], 5, 4);
        let g = groebner(&gens, MonomialOrder::GrevLex);
        assert_eq!(g.len(), 3);
        let lex = groebner(&gens, MonomialOrder::Lex);
        for f in &gens {
            assert!(reduce(f, &lex, MonomialOrder::Lex).is_zero());
        }
    }
}
