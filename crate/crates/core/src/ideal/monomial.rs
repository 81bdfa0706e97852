use std::cmp::Ordering;
use std::fmt;

/// An exponent vector over `X0..XN`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Prepend `k` variables with exponent zero.
    pub(crate) fn extend_front(&self, k: usize) -> Monomial {
        let mut e = vec![0; k];
        e.extend_from_slice(&self.0);
        Monomial(e)
    }

    /// Drop the first `k` variables, which must have exponent zero.
    pub(crate) fn drop_front(&self, k: usize) -> Option<Monomial> {
        self.0[..k].iter().all(|&e| e == 0).then(|| Monomial(self.0[k..].to_vec()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "X{i}")?,
                _ => write!(f, "X{i}^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Monomial orders with `X0 > X1 > ... > XN`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Graded reverse lexicographic on the first `first` variables, ties
    /// broken by graded reverse lexicographic on the rest. Any monomial
    /// involving the first block beats every monomial free of it.
    Block { first: usize },
}

impl MonomialOrder {
    /// A vector whose lexicographic order is this monomial order.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        match *self {
            MonomialOrder::Lex => e.iter().map(|&x| x as i64).collect(),
            MonomialOrder::GrevLex => grevlex_key(e),
            MonomialOrder::Block { first } => {
                let mut k = grevlex_key(&e[..first.min(e.len())]);
                k.extend(grevlex_key(&e[first.min(e.len())..]));
                k
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            _ => self.key(a).cmp(&self.key(b)),
        }
    }
}

fn grevlex_key(e: &[u32]) -> Vec<i64> {
    let mut k = Vec::with_capacity(e.len() + 1);
    k.push(e.iter().map(|&x| x as i64).sum());
    k.extend(e.iter().rev().map(|&x| -(x as i64)));
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_textbook() {
        let o = MonomialOrder::GrevLex;
        // x^2 y z^2 < x y^3 z? degrees 5 = 5, last variable: 2 > 1, so the first is smaller.
        assert_eq!(o.cmp(&m(&[2, 1, 2]), &m(&[1, 3, 1])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let b = MonomialOrder::Block { first: 1 };
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "X0^2*X2");
        assert_eq!(m(&[0, 0]).to_string(), "1");
    }
}
