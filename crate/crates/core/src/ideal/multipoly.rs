use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, ParseError, Result};
use crate::field::{parse_expr, Expr, FpElement, Prime, RatFunc};

/// Largest exponent accepted on a polynomial (non-scalar) base when parsing.
const MAX_VARIABLE_POWER: u64 = 1024;

/// A polynomial in `X0..XN` with coefficients in F_p(t).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    p: Prime,
    nvars: usize,
    terms: BTreeMap<Monomial, RatFunc>,
}

impl MultiPoly {
    pub fn zero(p: Prime, nvars: usize) -> Self {
        MultiPoly {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: RatFunc, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(p: Prime, nvars: usize) -> Self {
        Self::constant(RatFunc::one(p), nvars)
    }

    pub fn var(i: usize, p: Prime, nvars: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::term(RatFunc::one(p), Monomial::var(i, nvars))
    }

    pub fn term(c: RatFunc, m: Monomial) -> Self {
        let mut out = Self::zero(c.modulus(), m.nvars());
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, RatFunc)>>(p: Prime, nvars: usize, terms: I) -> Self {
        let mut out = Self::zero(p, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            out.add_term(m, c);
        }
        out
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&RatFunc> {
        self.terms.get(m)
    }

    /// Nonzero constant (degree-zero) polynomial.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    /// True when every monomial has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &RatFunc)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coeff(&self, order: MonomialOrder) -> Option<&RatFunc> {
        self.leading_term(order).map(|(_, c)| c)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_coeff(order) {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.p, self.nvars);
        }
        MultiPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, q: &Monomial) -> Self {
        MultiPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(q), a.clone())).collect(),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, mut f: impl FnMut(&RatFunc) -> RatFunc) -> Self {
        let mut out = Self::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn try_map_coefficients(&self, mut f: impl FnMut(&RatFunc) -> Result<RatFunc>) -> Result<Self> {
        let mut out = Self::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        Ok(out)
    }

    /// Substitute `t -> t^k` in every coefficient.
    pub fn scale_t_exponents(&self, k: u64) -> Self {
        let k = num_bigint::BigUint::from(k);
        self.map_coefficients(|c| c.scale_exponents(&k))
    }

    /// Prepend `k` new variables.
    pub(crate) fn extend_front(&self, k: usize) -> Self {
        MultiPoly {
            p: self.p,
            nvars: self.nvars + k,
            terms: self.terms.iter().map(|(m, c)| (m.extend_front(k), c.clone())).collect(),
        }
    }

    /// Drop the first `k` variables when they do not occur.
    pub(crate) fn drop_front(&self, k: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.drop_front(k)?, c.clone());
        }
        Some(MultiPoly {
            p: self.p,
            nvars: self.nvars - k,
            terms,
        })
    }

    /// Read a polynomial over `X0..X{nvars-1}` and `t`.
    pub fn parse(text: &str, p: Prime, nvars: usize) -> Result<Self> {
        let e = parse_expr(text, None)?;
        eval(&e, p, nvars)
    }

    /// Highest `k` with `Xk` appearing in `text`, if any.
    pub fn max_variable(text: &str) -> Result<Option<usize>> {
        let e = parse_expr(text, None)?;
        let mut out: Option<usize> = None;
        let mut bad = None;
        e.for_each_symbol(&mut |name, pos| match variable_index(name) {
            Some(k) => out = Some(out.map_or(k, |o| o.max(k))),
            None if name == "t" => {}
            None => bad = Some(ParseError::syntax(pos, format!("unknown symbol '{name}'"))),
        });
        match bad {
            Some(err) => Err(err.into()),
            None => Ok(out),
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed characteristics");
        assert_eq!(self.nvars, other.nvars, "mixed variable counts");
    }
}

fn variable_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('X').or_else(|| name.strip_prefix('x'))?;
    if rest.is_empty() || (rest.len() > 1 && rest.starts_with('0')) {
        return None;
    }
    rest.parse().ok()
}

fn eval(e: &Expr, p: Prime, nvars: usize) -> Result<MultiPoly> {
    Ok(match e {
        Expr::Int(n) => {
            let c = (n % p.get()).to_u32().unwrap();
            MultiPoly::constant(RatFunc::constant(c as i64, p), nvars)
        }
        Expr::Symbol { name, pos } => {
            if name == "t" {
                MultiPoly::constant(RatFunc::t(p), nvars)
            } else if let Some(k) = variable_index(name) {
                if k >= nvars {
                    return Err(ParseError::syntax(*pos, format!("variable {name} out of range (N = {})", nvars - 1)).into());
                }
                MultiPoly::var(k, p, nvars)
            } else {
                return Err(ParseError::syntax(*pos, format!("unknown symbol '{name}'")).into());
            }
        }
        Expr::Neg(a) => -eval(a, p, nvars)?,
        Expr::Add(a, b) => &eval(a, p, nvars)? + &eval(b, p, nvars)?,
        Expr::Sub(a, b) => &eval(a, p, nvars)? - &eval(b, p, nvars)?,
        Expr::Mul(a, b) => &eval(a, p, nvars)? * &eval(b, p, nvars)?,
        Expr::Div { lhs, rhs, pos } => {
            let d = eval(rhs, p, nvars)?;
            let scalar = match d.terms.iter().next() {
                None => return Err(ParseError::DivisionByZero { position: *pos }.into()),
                Some((m, c)) if d.terms.len() == 1 && m.is_one() => c.clone(),
                _ => return Err(ParseError::syntax(*pos, "can only divide by elements of F_p(t)").into()),
            };
            eval(lhs, p, nvars)?.scale(&scalar.inv().unwrap())
        }
        Expr::Pow(a, k) => {
            let base = eval(a, p, nvars)?;
            if base.is_zero() || base.is_nonzero_constant() {
                let c = base.terms.values().next().cloned().unwrap_or_else(|| RatFunc::zero(p));
                let v = if c.is_zero() && k == &num_bigint::BigUint::ZERO { RatFunc::one(p) } else { c.pow(k) };
                MultiPoly::constant(v, nvars)
            } else {
                let k = k
                    .to_u64()
                    .filter(|&k| k <= MAX_VARIABLE_POWER)
                    .ok_or_else(|| Error::BoundExceeded {
                        what: "polynomial exponent",
                        value: k.to_string(),
                        bound: MAX_VARIABLE_POWER.to_string(),
                    })?;
                let mut acc = MultiPoly::one(p, nvars);
                for _ in 0..k {
                    acc = &acc * &base;
                }
                acc
            }
        }
    })
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let mut out = MultiPoly::zero(self.p, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let minus_one = RatFunc::from_element(-FpElement::one(self.p));
        self.scale(&minus_one)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            let simple = c.as_constant().is_some() || !cs.contains(['+', '/']);
            match (m.is_one(), c.is_one()) {
                (true, _) => write!(f, "{cs}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) if simple => write!(f, "{cs}*{m}")?,
                (false, false) => write!(f, "({cs})*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[F_{}; {} vars]({})", self.p, self.nvars, self)
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let f = MultiPoly::parse("X0 + t*X1", p(2), 2).unwrap();
        assert_eq!(f.to_string(), "X0 + t*X1");
        let g = MultiPoly::parse("(X0 + X1)^2", p(2), 2).unwrap();
        assert_eq!(g.to_string(), "X0^2 + X1^2");
        let h = MultiPoly::parse("X0/(t+1) - 1", p(3), 1).unwrap();
        assert_eq!(h.to_string(), "(1/(t + 1))*X0 + 2");
        assert!(h.is_homogeneous() == false);
    }

    #[test]
    fn display_round_trips() {
        let q = p(5);
        let f = MultiPoly::parse("(t^2+1)/(t+3)*X0^2*X2 + 4*t*X1 + 2", q, 3).unwrap();
        assert_eq!(MultiPoly::parse(&f.to_string(), q, 3).unwrap(), f);
    }

    #[test]
    fn parse_errors() {
        assert!(MultiPoly::parse("X2", p(2), 2).is_err());
        assert!(MultiPoly::parse("X0/X1", p(2), 2).is_err());
        assert!(MultiPoly::parse("Y", p(2), 2).is_err());
        assert_eq!(MultiPoly::max_variable("X0 + t*X3").unwrap(), Some(3));
        assert_eq!(MultiPoly::max_variable("t + 1").unwrap(), None);
    }

    #[test]
    fn leading_terms() {
        let f = MultiPoly::parse("X1^3 + X0*X1 + X0", p(3), 2).unwrap();
        let lm = |o| f.leading_monomial(o).unwrap().to_string();
        assert_eq!(lm(MonomialOrder::GrevLex), "X1^3");
        assert_eq!(lm(MonomialOrder::Lex), "X0*X1");
    }
}
