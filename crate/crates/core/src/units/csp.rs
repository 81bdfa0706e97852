use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::residue::{is_mth_power_residue, ResidueField, DLOG_BOUND};
use super::sunit::{SUnitGroup, SUnitVector};
use crate::error::{Error, Result};
use crate::field::{irreducibles_up_to_degree, FpElement, FpPoly, Prime, RatFunc};
use crate::places::{valuation, Place, Valuation};

/// Largest quotient `O_T^* / (O_T^*)^m` enumerated explicitly.
pub const QUOTIENT_BOUND: u64 = 1 << 20;

/// The class of a local unit in `O_v^* / (O_v^*)^m = Z / gcd(m, q_v - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalQuotientImage {
    pub place: Place,
    pub m: u64,
    /// `gcd(m, q_v - 1)`.
    pub order: u64,
    pub value: u64,
}

fn check_m(m: u64, p: Prime) -> Result<()> {
    if m == 0 || m % p.get() as u64 == 0 {
        return Err(Error::ModulusNotPrimeToP { m, p: p.get() });
    }
    Ok(())
}

/// Image of a `v`-adic unit `u` in `O_v^* / (O_v^*)^m`, via the discrete log
/// of its residue with respect to the smallest primitive element.
pub fn local_unit_image(u: &RatFunc, v: &Place, m: u64) -> Result<LocalQuotientImage> {
    check_m(m, u.modulus())?;
    if valuation(u, v) != Valuation::from_i64(0) {
        return Err(Error::NotAUnitAt(v.to_string()));
    }
    let field = ResidueField::new(v)?;
    let n = field.size() - 1;
    let l = (field.dlog_poly(u.num()).unwrap() + n - field.dlog_poly(u.den()).unwrap()) % n;
    let order = m.gcd(&n);
    Ok(LocalQuotientImage {
        place: v.clone(),
        m,
        order,
        value: l % order,
    })
}

/// [`local_unit_image`] for a member of an S-unit group.
pub fn local_unit_image_of(u: &SUnitVector, group: &SUnitGroup, v: &Place, m: u64) -> Result<LocalQuotientImage> {
    local_unit_image(&group.element(u), v, m)
}

/// Generators of the finite quotient `O_T^* / (O_T^*)^m`: a primitive root
/// of F_p (when `gcd(m, p-1) > 1`) and the finite places of `T`.
#[derive(Clone, Debug)]
struct Quotient {
    m: u64,
    labels: Vec<String>,
    elements: Vec<RatFunc>,
    orders: Vec<u64>,
}

impl Quotient {
    fn new(group: &SUnitGroup, m: u64) -> Result<Self> {
        let p = group.modulus();
        let mut labels = Vec::new();
        let mut elements = Vec::new();
        let mut orders = Vec::new();
        let c = m.gcd(&(p.get() as u64 - 1));
        if c > 1 {
            let g = FpElement::primitive_root(p);
            labels.push(g.to_string());
            elements.push(RatFunc::from_element(g));
            orders.push(c);
        }
        for pi in group.finite_places() {
            labels.push(pi.to_string());
            elements.push(RatFunc::from_poly(pi.clone()));
            orders.push(m);
        }
        let size = orders.iter().try_fold(1u64, |acc, &o| acc.checked_mul(o));
        if size.map_or(true, |s| s > QUOTIENT_BOUND) {
            return Err(Error::BoundExceeded {
                what: "quotient size",
                value: format!("{}", orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join("*")),
                bound: QUOTIENT_BOUND.to_string(),
            });
        }
        Ok(Quotient { m, labels, elements, orders })
    }

    fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Every element as a coefficient vector, in mixed-radix order.
    fn all(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..o).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// A place added by the search, with the kernel size it leaves.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateStep {
    pub place: Place,
    /// `gcd(m, q_v - 1)`.
    pub modulus: u64,
    /// Images of the quotient generators at this place.
    pub image_row: Vec<u64>,
    /// Rows of all places accepted so far.
    pub image_matrix: Vec<Vec<u64>>,
    pub kernel_after: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CspCertificate {
    pub m: u64,
    pub t: Vec<Place>,
    pub generators: Vec<String>,
    pub generator_orders: Vec<u64>,
    pub quotient_size: u64,
    pub places: Vec<CertificateStep>,
}

impl CspCertificate {
    pub fn witness_places(&self) -> Vec<Place> {
        self.places.iter().map(|s| s.place.clone()).collect()
    }
}

fn image_row(q: &Quotient, v: &Place) -> Result<(u64, Vec<u64>)> {
    let field = ResidueField::new(v)?;
    let n = field.size() - 1;
    let order = q.m.gcd(&n);
    let row = q
        .elements
        .iter()
        .map(|e| {
            let l = field.dlog_poly(e.num()).expect("generator is a unit away from T");
            l % order
        })
        .collect();
    Ok((order, row))
}

fn in_kernel(a: &[u64], row: &[u64], modulus: u64) -> bool {
    let s: u128 = a.iter().zip(row).map(|(&x, &y)| x as u128 * y as u128).sum();
    s % modulus as u128 == 0
}

/// Places `S`, disjoint from `T`, with `O_T^*/(O_T^*)^m -> prod_{v in S}
/// O_v^*/(O_v^*)^m` injective. Candidates are the monic irreducibles up to
/// `degree_bound` in enumeration order; one is accepted when it shrinks the
/// kernel.
pub fn csp_witness_search(group: &SUnitGroup, m: u64, degree_bound: u32) -> Result<CspCertificate> {
    let p = group.modulus();
    check_m(m, p)?;
    let quotient = Quotient::new(group, m)?;
    let mut cert = CspCertificate {
        m,
        t: group.places(),
        generators: quotient.labels.clone(),
        generator_orders: quotient.orders.clone(),
        quotient_size: quotient.size(),
        places: Vec::new(),
    };
    let mut kernel: Vec<Vec<u64>> = quotient.all();
    if kernel.len() == 1 {
        return Ok(cert);
    }
    let mut matrix: Vec<Vec<u64>> = Vec::new();
    let mut top = 0;
    while top < degree_bound && (p.get() as u64).checked_pow(top + 1).map_or(false, |q| q <= DLOG_BOUND) {
        top += 1;
    }
    let candidates = irreducibles_up_to_degree(p, top);
    for d in 1..=top as u64 {
        let batch: Vec<FpPoly> = candidates
            .iter()
            .filter(|f| f.degree_u64() == Some(d) && !group.finite_places().contains(f))
            .cloned()
            .collect();
        let rows: Vec<Result<(u64, Vec<u64>)>> = batch
            .par_iter()
            .map(|f| image_row(&quotient, &Place::Finite(f.clone())))
            .collect();
        for (f, row) in batch.into_iter().zip(rows) {
            let (modulus, row) = row?;
            if modulus == 1 {
                continue;
            }
            let next: Vec<Vec<u64>> = kernel.iter().filter(|a| in_kernel(a, &row, modulus)).cloned().collect();
            if next.len() < kernel.len() {
                kernel = next;
                matrix.push(row.clone());
                cert.places.push(CertificateStep {
                    place: Place::Finite(f),
                    modulus,
                    image_row: row,
                    image_matrix: matrix.clone(),
                    kernel_after: kernel.len() as u64,
                });
                if kernel.len() == 1 {
                    return Ok(cert);
                }
            }
        }
    }
    Err(Error::BoundExceeded {
        what: "degree of witness places",
        value: format!("kernel of size {} remains", kernel.len()),
        bound: degree_bound.to_string(),
    })
}

/// Independent check: every nonzero class of the quotient is a non-`m`-th
/// power residue at some place of `S`, tested by Euler's criterion rather
/// than discrete logs.
pub fn verify_injective(group: &SUnitGroup, m: u64, s: &[Place]) -> Result<bool> {
    let p = group.modulus();
    check_m(m, p)?;
    let quotient = Quotient::new(group, m)?;
    let pis: Vec<&FpPoly> = s
        .iter()
        .map(|v| match v {
            Place::Finite(pi) if !group.finite_places().contains(pi) => Ok(pi),
            _ => Err(Error::InvalidPlace(format!("{v} is not a finite place outside T"))),
        })
        .collect::<Result<_>>()?;
    for a in quotient.all() {
        if a.iter().all(|&x| x == 0) {
            continue;
        }
        let detected = pis.iter().any(|pi| {
            let mut u = FpPoly::one(p);
            for (e, &k) in quotient.elements.iter().zip(&a) {
                u = (&u * &e.num().pow_u64(k)).rem(pi);
            }
            !is_mth_power_residue(&u, pi, m)
        });
        if !detected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn group(places: &[&str], q: u64) -> SUnitGroup {
        let pl: Vec<Place> = places.iter().map(|s| Place::parse(s, p(q)).unwrap()).collect();
        SUnitGroup::new(p(q), &pl).unwrap()
    }

    #[test]
    fn image_examples() {
        let q = p(2);
        let t = RatFunc::t(q);
        let img = local_unit_image(&t, &Place::parse("t^2+t+1", q).unwrap(), 3).unwrap();
        assert_eq!((img.order, img.value), (3, 1));
        let img = local_unit_image(&t, &Place::parse("t+1", q).unwrap(), 3).unwrap();
        assert_eq!((img.order, img.value), (1, 0));
        let cube = parse_ratfunc("(t^2+1)^3", q).unwrap();
        let img = local_unit_image(&cube, &Place::parse("t^2+t+1", q).unwrap(), 3).unwrap();
        assert_eq!(img.value, 0);
        assert!(matches!(
            local_unit_image(&t, &Place::parse("t", q).unwrap(), 3),
            Err(Error::NotAUnitAt(_))
        ));
    }

    #[test]
    fn search_examples() {
        let g = group(&["t", "inf"], 2);
        let cert = csp_witness_search(&g, 3, 2).unwrap();
        let names: Vec<String> = cert.witness_places().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["t^2 + t + 1"]);
        assert!(verify_injective(&g, 3, &cert.witness_places()).unwrap());

        let g = group(&["t", "t+1", "inf"], 2);
        let cert = csp_witness_search(&g, 3, 4).unwrap();
        let names: Vec<String> = cert.witness_places().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["t^2 + t + 1", "t^4 + t + 1"]);
        assert_eq!(cert.places[0].image_row, vec![1, 2]);
        assert_eq!(cert.places[1].image_row, vec![1, 1]);
        assert_eq!(cert.quotient_size, 9);
        assert!(verify_injective(&g, 3, &cert.witness_places()).unwrap());
    }

    #[test]
    fn trivial_modulus() {
        let g = group(&["t", "t+1", "inf"], 3);
        let cert = csp_witness_search(&g, 1, 3).unwrap();
        assert!(cert.places.is_empty());
    }

    #[test]
    fn bound_exceeded_and_bad_modulus() {
        let g = group(&["t", "t+1", "inf"], 2);
        assert!(matches!(csp_witness_search(&g, 3, 2), Err(Error::BoundExceeded { .. })));
        assert!(matches!(csp_witness_search(&g, 4, 4), Err(Error::ModulusNotPrimeToP { .. })));
    }

    #[test]
    fn verifier_rejects_insufficient_sets() {
        let g = group(&["t", "t+1", "inf"], 2);
        let s = [Place::parse("t^2+t+1", p(2)).unwrap()];
        assert!(!verify_injective(&g, 3, &s).unwrap());
    }

    #[test]
    fn constants_matter_when_m_divides_p_minus_one() {
        // Over F_7 with m = 3 the constant 3 is not a cube.
        let g = group(&["inf"], 7);
        let cert = csp_witness_search(&g, 3, 2).unwrap();
        assert_eq!(cert.quotient_size, 3);
        assert!(verify_injective(&g, 3, &cert.witness_places()).unwrap());
    }
}
