use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Exponent of `t` in a sparse polynomial.
///
/// Values that fit in a `u64` are stored inline; the `Big` variant is only
/// used above `u64::MAX`, which keeps the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    Small(u64),
    Big(Box<BigUint>),
}

impl Exponent {
    pub const ZERO: Exponent = Exponent::Small(0);

    pub fn from_biguint(n: BigUint) -> Self {
        match n.to_u64() {
            Some(v) => Exponent::Small(v),
            None => Exponent::Big(Box::new(n)),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            Exponent::Small(v) => BigUint::from(*v),
            Exponent::Big(b) => (**b).clone(),
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        match self {
            Exponent::Small(v) => Some(*v),
            Exponent::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exponent::Small(0))
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        match (self, other) {
            (Exponent::Small(a), Exponent::Small(b)) => match a.checked_add(*b) {
                Some(s) => Exponent::Small(s),
                None => Exponent::from_biguint(BigUint::from(*a) + *b),
            },
            _ => Exponent::from_biguint(self.to_biguint() + other.to_biguint()),
        }
    }

    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        match (self, other) {
            (Exponent::Small(a), Exponent::Small(b)) => a.checked_sub(*b).map(Exponent::Small),
            _ => {
                if self < other {
                    None
                } else {
                    Some(Exponent::from_biguint(self.to_biguint() - other.to_biguint()))
                }
            }
        }
    }

    pub fn mul_big(&self, k: &BigUint) -> Exponent {
        if let (Exponent::Small(a), Some(k)) = (self, k.to_u64()) {
            if let Some(prod) = a.checked_mul(k) {
                return Exponent::Small(prod);
            }
        }
        Exponent::from_biguint(self.to_biguint() * k)
    }

    pub fn rem_u64(&self, m: u64) -> u64 {
        match self {
            Exponent::Small(v) => v % m,
            Exponent::Big(b) => (&**b % m).to_u64().expect("remainder fits"),
        }
    }

    /// `(self / d, self % d)`.
    pub fn div_rem_big(&self, d: &BigUint) -> (Exponent, BigUint) {
        if let (Exponent::Small(a), Some(d)) = (self, d.to_u64()) {
            return (Exponent::Small(a / d), BigUint::from(a % d));
        }
        let (q, r) = self.to_biguint().div_rem(d);
        (Exponent::from_biguint(q), r)
    }

    /// Largest `k` with `p^k | self`; `None` for zero.
    pub fn p_adic_valuation(&self, p: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        match self {
            Exponent::Small(v) => {
                let mut v = *v;
                let mut k = 0;
                while v % p == 0 {
                    v /= p;
                    k += 1;
                }
                Some(k)
            }
            Exponent::Big(b) => {
                let mut v = (**b).clone();
                let mut k = 0;
                let pb = BigUint::from(p);
                loop {
                    let (q, r) = v.div_rem(&pb);
                    if !r.is_zero() {
                        return Some(k);
                    }
                    v = q;
                    k += 1;
                }
            }
        }
    }

    /// Base-`p` digits, least significant first.
    pub fn digits(&self, p: u64) -> Vec<u32> {
        match self {
            Exponent::Small(v) => {
                let mut v = *v;
                let mut out = Vec::new();
                while v > 0 {
                    out.push((v % p) as u32);
                    v /= p;
                }
                out
            }
            Exponent::Big(b) => b
                .to_radix_le(p as u32)
                .into_iter()
                .map(u32::from)
                .collect(),
        }
    }
}

impl From<u64> for Exponent {
    fn from(v: u64) -> Self {
        Exponent::Small(v)
    }
}

impl From<BigUint> for Exponent {
    fn from(v: BigUint) -> Self {
        Exponent::from_biguint(v)
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exponent::Small(a), Exponent::Small(b)) => a.cmp(b),
            (Exponent::Small(_), Exponent::Big(_)) => Ordering::Less,
            (Exponent::Big(_), Exponent::Small(_)) => Ordering::Greater,
            (Exponent::Big(a), Exponent::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Small(v) => write!(f, "{v}"),
            Exponent::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
