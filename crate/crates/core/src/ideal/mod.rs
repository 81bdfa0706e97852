//! Ideals of F_p(t)[X0..XN]: Groebner bases, stability under the iterative
//! derivation, descent of generators and intersections.

mod closure;
mod groebner;
mod monomial;
mod multipoly;
mod ops;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Prime;

pub use closure::{
    descend_generators, hasse_derive_multi, is_pm_rational, is_pm_rational_with, ClosureWitness, RationalityCertificate,
    TestSet,
};
pub use monomial::{Monomial, MonomialOrder};
pub use multipoly::MultiPoly;
pub use ops::{intersect_ideals, parse_generators, vanishing_ideal};

/// An ideal given by generators, with its reduced Groebner basis computed on
/// first use.
#[derive(Debug)]
pub struct PolyIdeal {
    p: Prime,
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<MultiPoly>,
    basis: OnceLock<Vec<MultiPoly>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        PolyIdeal {
            p: self.p,
            nvars: self.nvars,
            order: self.order,
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl PolyIdeal {
    pub fn new(p: Prime, nvars: usize, generators: Vec<MultiPoly>, order: MonomialOrder) -> Result<Self> {
        for g in &generators {
            if g.modulus() != p {
                return Err(Error::ModulusMismatch(g.modulus().get(), p.get()));
            }
            if g.nvars() != nvars {
                return Err(Error::VariableMismatch(g.nvars(), nvars));
            }
        }
        if let MonomialOrder::Block { first } = order {
            if first > nvars {
                return Err(Error::InvalidParameter(format!("block of {first} variables in a ring of {nvars}")));
            }
        }
        Ok(PolyIdeal {
            p,
            nvars,
            order,
            generators,
            basis: OnceLock::new(),
        })
    }

    /// Ideal of a nonempty generator list under the default order.
    pub fn from_generators(generators: Vec<MultiPoly>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty generator list".into()))?;
        let (p, n) = (first.modulus(), first.nvars());
        PolyIdeal::new(p, n, generators, MonomialOrder::default())
    }

    pub fn unit(p: Prime, nvars: usize) -> Self {
        PolyIdeal::new(p, nvars, vec![MultiPoly::one(p, nvars)], MonomialOrder::default()).unwrap()
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// The same ideal under another order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyIdeal {
        PolyIdeal::new(self.p, self.nvars, self.generators.clone(), order).unwrap()
    }

    /// The reduced Groebner basis under [`Self::order`].
    pub fn groebner_basis(&self) -> &[MultiPoly] {
        self.basis.get_or_init(|| groebner::groebner(&self.generators, self.order))
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch");
        groebner::reduce(f, self.groebner_basis(), self.order)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(MultiPoly::is_nonzero_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    /// Equality of ideals, by comparing reduced bases under one order.
    pub fn same_ideal(&self, other: &PolyIdeal) -> bool {
        if self.p != other.p || self.nvars != other.nvars {
            return false;
        }
        if self.order == other.order {
            return self.groebner_basis() == other.groebner_basis();
        }
        self.groebner_basis() == other.with_order(self.order).groebner_basis()
    }
}

/// The reduced Groebner basis of `ideal`.
pub fn groebner_basis(ideal: &PolyIdeal) -> Vec<MultiPoly> {
    ideal.groebner_basis().to_vec()
}

/// The remainder of `f` modulo the reduced basis; zero iff `f` lies in `ideal`.
pub fn normal_form(f: &MultiPoly, ideal: &PolyIdeal) -> MultiPoly {
    ideal.normal_form(f)
}
