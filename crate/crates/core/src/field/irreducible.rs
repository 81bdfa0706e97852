use super::exponent::Exponent;
use super::fp::{FpElement, Prime};
use super::poly::FpPoly;

/// Monic irreducibles of F_p[t] in a fixed order: degree ascending, then the
/// coefficient vector read as a base-p integer (constant term least
/// significant) ascending.
#[derive(Clone, Debug)]
pub struct Irreducibles {
    p: Prime,
    degree: u32,
    index: u64,
    found: Vec<FpPoly>,
}

impl Irreducibles {
    pub fn new(p: Prime) -> Self {
        Irreducibles {
            p,
            degree: 1,
            index: 0,
            found: Vec::new(),
        }
    }

    fn candidate(&self) -> FpPoly {
        let p = self.p.as_u64();
        let mut coeffs = Vec::with_capacity(self.degree as usize + 1);
        let mut v = self.index;
        for _ in 0..self.degree {
            coeffs.push((v % p) as u32);
            v /= p;
        }
        coeffs.push(1);
        FpPoly::from_coeffs(&coeffs, self.p)
    }

    fn passes(&self, f: &FpPoly) -> bool {
        if self.degree == 1 {
            return true;
        }
        if self.degree <= 3 {
            return !has_root(f);
        }
        let half = self.degree / 2;
        self.found
            .iter()
            .take_while(|g| g.degree_u64().unwrap() <= half as u64)
            .all(|g| !f.rem(g).is_zero())
    }
}

impl Iterator for Irreducibles {
    type Item = FpPoly;

    fn next(&mut self) -> Option<FpPoly> {
        loop {
            if self.index == self.p.as_u64().pow(self.degree) {
                self.degree += 1;
                self.index = 0;
            }
            let f = self.candidate();
            self.index += 1;
            if self.passes(&f) {
                self.found.push(f.clone());
                return Some(f);
            }
        }
    }
}

fn has_root(f: &FpPoly) -> bool {
    let p = f.modulus();
    (0..p.get()).any(|x| eval(f, FpElement::from_reduced(x, p)).is_zero())
}

fn eval(f: &FpPoly, x: FpElement) -> FpElement {
    let p = f.modulus();
    let mut acc = FpElement::zero(p);
    for (e, c) in f.terms() {
        let term = match (x.is_zero(), e.is_zero()) {
            (_, true) => FpElement::one(p),
            (true, false) => FpElement::zero(p),
            // x^(p-1) = 1 for x != 0
            (false, false) => x.pow(e.rem_u64(p.as_u64() - 1)),
        };
        acc = acc + term * FpElement::from_reduced(*c, p);
    }
    acc
}

/// The first `k` monic irreducibles in enumeration order.
pub fn irreducibles(p: Prime, k: usize) -> Vec<FpPoly> {
    Irreducibles::new(p).take(k).collect()
}

/// All monic irreducibles of degree at most `d`, in enumeration order.
pub fn irreducibles_up_to_degree(p: Prime, d: u32) -> Vec<FpPoly> {
    Irreducibles::new(p)
        .take_while(|f| f.degree_u64().unwrap() <= d as u64)
        .collect()
}

/// Irreducibility by trial division against all lower-degree irreducibles.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let Some(d) = f.degree_u64() else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    Irreducibles::new(f.modulus())
        .take_while(|g| 2 * g.degree_u64().unwrap() <= d)
        .all(|g| !f.rem(&g).is_zero())
}

/// Factor a nonzero polynomial as `c * prod f_i^{e_i}` with monic
/// irreducible `f_i`, by trial division in enumeration order.
pub fn factor(f: &FpPoly) -> (FpElement, Vec<(FpPoly, u64)>) {
    assert!(!f.is_zero(), "cannot factor zero");
    let p = f.modulus();
    let lc = FpElement::from_reduced(f.leading_coeff(), p);
    let mut rest = f.monic();
    let mut out = Vec::new();
    // t divides by exponent shifting, which also handles huge sparse inputs.
    if let Some(m) = rest.min_exponent().cloned() {
        if !m.is_zero() {
            let t = FpPoly::t(p);
            out.push((t, m.as_u64().expect("machine-size multiplicity")));
            rest = FpPoly::from_terms(
                rest.terms()
                    .iter()
                    .map(|(e, c)| (e.checked_sub(&m).unwrap(), *c)),
                p,
            );
        }
    }
    for g in Irreducibles::new(p) {
        let Some(d) = rest.degree_u64() else { break };
        if d == 0 {
            break;
        }
        let gd = g.degree_u64().unwrap();
        if 2 * gd > d {
            out.push((rest.clone(), 1));
            break;
        }
        if g.terms() == [(Exponent::Small(1), 1)] {
            continue;
        }
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&g) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| super::poly::coefficient_index(&a.0).cmp(&super::poly::coefficient_index(&b.0)))
    });
    (lc, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse::parse_poly;

    #[test]
    fn first_binary_irreducibles() {
        let p = Prime::new(2).unwrap();
        let got: Vec<String> = irreducibles(p, 5).iter().map(|f| f.to_string()).collect();
        assert_eq!(got, ["t", "t + 1", "t^2 + t + 1", "t^3 + t + 1", "t^3 + t^2 + 1"]);
        assert!(irreducibles(p, 0).is_empty());
    }

    #[test]
    fn ternary_linear() {
        let p = Prime::new(3).unwrap();
        let got: Vec<String> = irreducibles(p, 3).iter().map(|f| f.to_string()).collect();
        assert_eq!(got, ["t", "t + 1", "t + 2"]);
    }

    #[test]
    fn counts_match_necklace_formula() {
        // Number of monic irreducibles of degree d over F_2: 2, 1, 2, 3, 6, 9.
        let p = Prime::new(2).unwrap();
        let all = irreducibles_up_to_degree(p, 6);
        let mut counts = [0; 7];
        for f in &all {
            counts[f.degree_u64().unwrap() as usize] += 1;
        }
        assert_eq!(&counts[1..], &[2, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn factor_reassembles() {
        let p = Prime::new(3).unwrap();
        let f = parse_poly("2*t^2*(t+1)^3*(t^2+1)", p).unwrap();
        let (c, fs) = factor(&f);
        assert_eq!(c.value(), 2);
        let mut prod = FpPoly::constant(c.value() as i64, p);
        for (g, e) in &fs {
            prod = &prod * &g.pow_u64(*e);
        }
        assert_eq!(prod, f);
        assert_eq!(fs.len(), 3);
    }
}
