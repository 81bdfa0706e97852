use super::monomial::MonomialOrder;
use super::multipoly::MultiPoly;
use super::PolyIdeal;
use crate::error::{Error, Result};
use crate::field::{Prime, RatFunc};

/// `I ∩ J` by eliminating `w` from `w I + (1 - w) J`.
pub fn intersect_ideals(i: &PolyIdeal, j: &PolyIdeal) -> Result<PolyIdeal> {
    if i.modulus() != j.modulus() {
        return Err(Error::ModulusMismatch(i.modulus().get(), j.modulus().get()));
    }
    if i.nvars() != j.nvars() {
        return Err(Error::VariableMismatch(i.nvars(), j.nvars()));
    }
    let (p, n) = (i.modulus(), i.nvars());
    if i.is_unit() {
        return Ok(j.with_order(i.order()));
    }
    if j.is_unit() {
        return Ok(i.clone());
    }
    let w = MultiPoly::var(0, p, n + 1);
    let one_minus_w = &MultiPoly::one(p, n + 1) - &w;
    let mut gens = Vec::new();
    for g in i.groebner_basis() {
        gens.push(&w * &g.extend_front(1));
    }
    for g in j.groebner_basis() {
        gens.push(&one_minus_w * &g.extend_front(1));
    }
    let elim = PolyIdeal::new(p, n + 1, gens, MonomialOrder::Block { first: 1 })?;
    let out: Vec<MultiPoly> = elim
        .groebner_basis()
        .iter()
        .filter_map(|g| g.drop_front(1))
        .collect();
    PolyIdeal::new(p, n, out, i.order())
}

/// Homogeneous ideal of a finite set of points of projective `N`-space,
/// `N = nvars - 1`. Each point contributes the ideal of its `2 x 2` minors.
pub fn vanishing_ideal(points: &[Vec<RatFunc>], nvars: usize, p: Prime) -> Result<PolyIdeal> {
    if nvars == 0 {
        return Err(Error::InvalidParameter("projective space needs at least one coordinate".into()));
    }
    let mut acc = PolyIdeal::unit(p, nvars);
    for pt in points {
        if pt.len() != nvars {
            return Err(Error::VariableMismatch(pt.len(), nvars));
        }
        if let Some(c) = pt.iter().find(|c| c.modulus() != p) {
            return Err(Error::ModulusMismatch(c.modulus().get(), p.get()));
        }
        if pt.iter().all(RatFunc::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let mut minors = Vec::new();
        for a in 0..nvars {
            for b in a + 1..nvars {
                let xa = MultiPoly::var(a, p, nvars).scale(&pt[b]);
                let xb = MultiPoly::var(b, p, nvars).scale(&pt[a]);
                let minor = &xa - &xb;
                if !minor.is_zero() {
                    minors.push(minor);
                }
            }
        }
        let point_ideal = PolyIdeal::new(p, nvars, minors, MonomialOrder::default())?;
        acc = intersect_ideals(&acc, &point_ideal)?;
    }
    Ok(acc)
}

/// Generators, one per nonblank line; `#` starts a comment. The variable
/// count is `nvars` when given, else one more than the largest index used.
pub fn parse_generators(text: &str, p: Prime, nvars: Option<usize>) -> Result<(usize, Vec<MultiPoly>)> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    let n = match nvars {
        Some(n) => n,
        None => {
            let mut top = 0;
            for l in &lines {
                if let Some(k) = MultiPoly::max_variable(l)? {
                    top = top.max(k + 1);
                }
            }
            top.max(1)
        }
    };
    let gens = lines
        .iter()
        .map(|l| MultiPoly::parse(l, p, n))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn ideal(gens: &[&str], q: u64, n: usize) -> PolyIdeal {
        let g = gens.iter().map(|g| MultiPoly::parse(g, p(q), n).unwrap()).collect();
        PolyIdeal::new(p(q), n, g, MonomialOrder::GrevLex).unwrap()
    }

    fn pt(coords: &[&str], q: u64) -> Vec<RatFunc> {
        coords.iter().map(|c| parse_ratfunc(c, p(q)).unwrap()).collect()
    }

    #[test]
    fn intersection_examples() {
        let i = ideal(&["X0 - t^2*X1"], 2, 2);
        let j = ideal(&["X0 - (t+1)^2*X1"], 2, 2);
        let k = intersect_ideals(&i, &j).unwrap();
        let expected = ideal(&["X0^2 + X0*X1 + t^2*(t+1)^2*X1^2"], 2, 2);
        assert!(k.same_ideal(&expected));
        assert!(intersect_ideals(&i, &i).unwrap().same_ideal(&i));
        let xy = intersect_ideals(&ideal(&["X0"], 3, 2), &ideal(&["X1"], 3, 2)).unwrap();
        assert!(xy.same_ideal(&ideal(&["X0*X1"], 3, 2)));
    }

    #[test]
    fn vanishing_examples() {
        let v = vanishing_ideal(&[pt(&["t^2", "1"], 2)], 2, p(2)).unwrap();
        assert!(v.same_ideal(&ideal(&["X0 - t^2*X1"], 2, 2)));
        let v = vanishing_ideal(&[pt(&["0", "1"], 3), pt(&["1", "0"], 3)], 2, p(3)).unwrap();
        assert!(v.same_ideal(&ideal(&["X0*X1"], 3, 2)));
        let v = vanishing_ideal(&[pt(&["1", "1"], 5)], 2, p(5)).unwrap();
        assert!(v.same_ideal(&ideal(&["X0 - X1"], 5, 2)));
    }

    #[test]
    fn vanishing_rejects_zero_point() {
        let err = vanishing_ideal(&[pt(&["0", "0"], 2)], 2, p(2)).unwrap_err();
        assert_eq!(err, Error::ZeroPoint);
        assert!(vanishing_ideal(&[], 3, p(2)).unwrap().is_unit());
    }

    #[test]
    fn generator_files() {
        let text = "# a comment\nX0 + t*X2\n\n  X1^2 # trailing\n";
        let (n, gens) = parse_generators(text, p(3), None).unwrap();
        assert_eq!(n, 3);
        assert_eq!(gens.len(), 2);
    }
}
