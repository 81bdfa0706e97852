use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hasse_core::field::parse_poly;
use hasse_core::ideal::{
    descend_generators, intersect_ideals, is_pm_rational, parse_generators, vanishing_ideal, RationalityCertificate,
};
use hasse_core::reports::{run_exm0, run_exm1, ConvergenceReport};
use hasse_core::units::{csp_witness_search, frobenius_filtration, verify_injective};
use hasse_core::{
    delta_m, hasse_derive, irreducibles, lucas_binom, parse_ratfunc, pm_power_root, MonomialOrder, MultiPoly, Place, PolyIdeal,
    Prime, RatFunc, SUnitGroup,
};
use serde::Serialize;
use serde_json::json;

use crate::{Cli, Command, IdealArgs};

type Outcome = Result<String, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn prime(p: u64) -> Result<Prime, String> {
    Prime::new(p).map_err(err)
}

fn element(text: &str, p: Prime) -> Result<RatFunc, String> {
    parse_ratfunc(text, p).map_err(|e| format!("{text:?}: {e}"))
}

fn to_json(value: &impl Serialize) -> Outcome {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(err)
}

fn places(text: &str, p: Prime) -> Result<Vec<Place>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Place::parse(s, p).map_err(|e| format!("{s:?}: {e}")))
        .collect()
}

fn read_ideal(path: &Path, args: &IdealArgs, p: Prime) -> Result<PolyIdeal, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (n, gens) = parse_generators(&text, p, args.nvars).map_err(|e| format!("{}: {e}", path.display()))?;
    PolyIdeal::new(p, n, gens, MonomialOrder::default()).map_err(err)
}

fn lines(polys: &[MultiPoly]) -> String {
    let mut out = String::new();
    for g in polys {
        let _ = writeln!(out, "{g}");
    }
    out
}

fn certificate_text(cert: &RationalityCertificate, p: Prime) -> String {
    let mut out = String::new();
    let verdict = if cert.rational { "yes" } else { "no" };
    let _ = writeln!(out, "stable under D^(i) for 0 < i < {}^{}: {verdict}", p, cert.m);
    let _ = writeln!(out, "reduced basis:");
    for g in &cert.basis {
        let _ = writeln!(out, "  {g}");
    }
    for w in &cert.witnesses {
        let _ = writeln!(out, "witness: D^({}) of {} has normal form {}", w.index, w.generator, w.normal_form);
    }
    out
}

pub fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Derive { prime: pa, i, expr } => {
            let p = prime(pa.p)?;
            let r = element(expr, p)?;
            let d = hasse_derive(*i, &r);
            if json {
                to_json(&json!({ "p": p.get(), "i": i, "input": r, "result": d }))
            } else {
                Ok(format!("{d}\n"))
            }
        }
        Command::Delta { prime: pa, m, expr } => {
            let p = prime(pa.p)?;
            let r = element(expr, p)?;
            let d = delta_m(&r, *m).map_err(err)?;
            let root = pm_power_root(&d, *m).ok_or("internal error: Delta_m result is not a power")?;
            if json {
                to_json(&json!({ "p": p.get(), "m": m, "input": r, "result": d, "root": root }))
            } else {
                Ok(format!("{d}\n"))
            }
        }
        Command::Lucas { i, j, p } => {
            let p = prime(*p)?;
            let c = lucas_binom(*i, *j, p);
            if json {
                to_json(&json!({ "i": i, "j": j, "p": p.get(), "value": c }))
            } else {
                Ok(format!("{c}\n"))
            }
        }
        Command::PmRoot { prime: pa, m, expr } => {
            let p = prime(pa.p)?;
            let r = element(expr, p)?;
            let root = pm_power_root(&r, *m);
            if json {
                to_json(&json!({ "p": p.get(), "m": m, "input": r, "power": root.is_some(), "root": root }))
            } else {
                Ok(match root {
                    Some(s) => format!("{s}\n"),
                    None => format!("not a {}^{} power\n", p, m),
                })
            }
        }
        Command::IdealRational { ideal, file } => {
            let p = prime(ideal.prime.p)?;
            let i = read_ideal(file, ideal, p)?;
            let cert = is_pm_rational(&i, ideal.m).map_err(err)?;
            if json {
                to_json(&cert)
            } else {
                Ok(certificate_text(&cert, p))
            }
        }
        Command::IdealDescend { ideal, file } => {
            let p = prime(ideal.prime.p)?;
            let i = read_ideal(file, ideal, p)?;
            let gens = descend_generators(&i, ideal.m).map_err(err)?;
            if json {
                to_json(&json!({ "p": p.get(), "m": ideal.m, "generators": gens }))
            } else {
                Ok(lines(&gens))
            }
        }
        Command::IdealIntersect { ideal, file, other } => {
            let p = prime(ideal.prime.p)?;
            let i = read_ideal(file, ideal, p)?;
            let j = read_ideal(other, ideal, p)?;
            let k = intersect_ideals(&i, &j).map_err(err)?;
            let cert = is_pm_rational(&k, ideal.m).map_err(err)?;
            if json {
                to_json(&json!({
                    "p": p.get(),
                    "m": ideal.m,
                    "basis": k.groebner_basis(),
                    "rational": cert.rational,
                }))
            } else {
                let mut out = lines(k.groebner_basis());
                let verdict = if cert.rational { "yes" } else { "no" };
                let _ = writeln!(out, "stable under D^(i) for 0 < i < {}^{}: {verdict}", p, ideal.m);
                Ok(out)
            }
        }
        Command::Vanishing { prime: pa, m, points } => {
            let p = prime(pa.p)?;
            let pts = parse_points(points, p)?;
            let nvars = pts.first().map(Vec::len).ok_or("no points given")?;
            let v = vanishing_ideal(&pts, nvars, p).map_err(err)?;
            let cert = m.map(|m| is_pm_rational(&v, m)).transpose().map_err(err)?;
            if json {
                to_json(&json!({
                    "p": p.get(),
                    "basis": v.groebner_basis(),
                    "rational": cert.as_ref().map(|c| c.rational),
                }))
            } else {
                let mut out = lines(v.groebner_basis());
                if let Some(c) = cert {
                    let verdict = if c.rational { "yes" } else { "no" };
                    let _ = writeln!(out, "stable under D^(i) for 0 < i < {}^{}: {verdict}", p, c.m);
                }
                Ok(out)
            }
        }
        Command::CspSearch {
            prime: pa,
            m,
            t,
            deg_bound,
        } => {
            let p = prime(pa.p)?;
            let group = SUnitGroup::new(p, &places(t, p)?).map_err(err)?;
            let cert = csp_witness_search(&group, *m, *deg_bound).map_err(err)?;
            let verified = verify_injective(&group, *m, &cert.witness_places()).map_err(err)?;
            if !verified {
                return Err("internal error: certificate failed independent verification".into());
            }
            if json {
                let mut value = serde_json::to_value(&cert).map_err(err)?;
                value["verified"] = json!(verified);
                to_json(&value)
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "quotient O_T^*/(O_T^*)^{m} of size {}", cert.quotient_size);
                let _ = writeln!(out, "generators: {}", cert.generators.join(", "));
                for step in &cert.places {
                    let row: Vec<String> = step.image_row.iter().map(u64::to_string).collect();
                    let _ = writeln!(
                        out,
                        "add {}  images ({}) mod {}  kernel size {}",
                        step.place,
                        row.join(", "),
                        step.modulus,
                        step.kernel_after
                    );
                }
                let s: Vec<String> = cert.witness_places().iter().map(Place::to_string).collect();
                let _ = writeln!(out, "S = {{{}}}  (verified injective)", s.join(", "));
                Ok(out)
            }
        }
        Command::Filtration { prime: pa, gens, n_max } => {
            let p = prime(pa.p)?;
            let gens: Vec<RatFunc> = gens
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| element(s, p))
                .collect::<Result<_, _>>()?;
            let group = SUnitGroup::spanning(p, &gens).map_err(err)?;
            let report = frobenius_filtration(&gens, &group, *n_max).map_err(err)?;
            if json {
                to_json(&report)
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "H = <{}> over F_{}(t)", report.generators.join(", "), p);
                for level in &report.levels {
                    let _ = writeln!(out, "U_{} = <{}>", level.n, level.elements.join(", "));
                }
                let inter: Vec<String> = report.intersection.iter().map(u32::to_string).collect();
                let kind = if report.torsion { "torsion" } else { "not torsion" };
                let _ = writeln!(out, "intersection = {{{}}} ({kind})", inter.join(", "));
                Ok(out)
            }
        }
        Command::Exm0 { p, a, b, alpha, n_max } => {
            let p = prime(*p)?;
            let a = parse_poly(a, p).map_err(|e| format!("{a:?}: {e}"))?;
            let b = parse_poly(b, p).map_err(|e| format!("{b:?}: {e}"))?;
            let alpha = element(alpha, p)?;
            report(run_exm0(p, &a, &b, &alpha, *n_max).map_err(err)?, json)
        }
        Command::Exm1 { p, n_max, places: list } => {
            let p = prime(*p)?;
            let places = match list {
                Some(text) => places(text, p)?,
                None => {
                    let t_minus_one = parse_poly("t-1", p).map_err(err)?;
                    let quadratic = irreducibles(p, 64)
                        .into_iter()
                        .find(|f| f.degree_u64() == Some(2))
                        .expect("an irreducible quadratic exists");
                    vec![Place::Finite(t_minus_one), Place::Finite(quadratic)]
                }
            };
            report(run_exm1(p, *n_max, &places).map_err(err)?, json)
        }
    }
}

fn report(r: ConvergenceReport, json: bool) -> Outcome {
    if json {
        to_json(&r)
    } else {
        Ok(r.to_table())
    }
}

/// Points separated by `;`, coordinates by `:`, optional brackets.
fn parse_points(text: &str, p: Prime) -> Result<Vec<Vec<RatFunc>>, String> {
    let pts: Vec<Vec<RatFunc>> = text
        .split(';')
        .map(|s| s.trim().trim_start_matches('[').trim_end_matches(']'))
        .filter(|s| !s.is_empty())
        .map(|s| s.split(':').map(|c| element(c.trim(), p)).collect())
        .collect::<Result<_, _>>()?;
    if let Some(first) = pts.first() {
        if pts.iter().any(|pt| pt.len() != first.len()) {
            return Err("points have different numbers of coordinates".into());
        }
    }
    Ok(pts)
}
