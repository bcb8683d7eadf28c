//! The JSON interchange formats: maps, hypersurfaces, points, witnesses.
//! Polynomial strings use the same grammar the parser accepts, so every
//! file round-trips through parse/format.

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::constructions::hyperplane::BranchWitness;
use crate::constructions::verify::Report;
use crate::dynamics::{Hypersurface, Morphism, ProjPoint};
use crate::error::{Error, Result};
use crate::poly::parse::{format_poly, parse_poly};
use crate::poly::Scalar;

fn bad(msg: &str) -> Error {
    Error::Invalid(format!("json: {msg}"))
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| bad(&format!("missing integer field {key}")))
}

pub fn morphism_to_json(f: &Morphism) -> Value {
    morphism_to_json_with_params(f, &Map::new())
}

/// Map JSON with a params object recording construction inputs (for
/// provenance only; the coords are the authority).
pub fn morphism_to_json_with_params(f: &Morphism, params: &Map<String, Value>) -> Value {
    json!({
        "n": f.n(),
        "d": f.d(),
        "coords": f.coords().iter().map(format_poly).collect::<Vec<_>>(),
        "params": params,
    })
}

pub fn morphism_from_json(v: &Value) -> Result<Morphism> {
    let n = get_usize(v, "n")?;
    let d = get_usize(v, "d")? as u32;
    let coords = v
        .get("coords")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing coords"))?;
    let polys: Result<Vec<_>> = coords
        .iter()
        .map(|c| {
            let s = c.as_str().ok_or_else(|| bad("coord is not a string"))?;
            parse_poly(s, n + 1)
        })
        .collect();
    Morphism::new(n, d, polys?)
}

pub fn hypersurface_to_json(h: &Hypersurface) -> Value {
    json!({"n": h.n(), "form": format_poly(h.form())})
}

pub fn hypersurface_from_json(v: &Value) -> Result<Hypersurface> {
    let n = get_usize(v, "n")?;
    let s = v
        .get("form")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing form"))?;
    Hypersurface::new(&parse_poly(s, n + 1)?)
}

pub fn point_to_json(p: &ProjPoint) -> Value {
    Value::Array(
        p.int_coords()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn point_from_json(v: &Value) -> Result<ProjPoint> {
    let arr = v.as_array().ok_or_else(|| bad("point is not an array"))?;
    let coords: Result<Vec<Scalar>> = arr
        .iter()
        .map(|c| {
            let s = c.as_str().ok_or_else(|| bad("point entry is not a string"))?;
            parse_rational(s)
        })
        .collect();
    ProjPoint::new(&coords?)
}

/// Rational literal "a", "-a", or "a/b".
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = num
        .trim()
        .parse()
        .map_err(|_| bad(&format!("bad rational {s}")))?;
    let d: num_bigint::BigInt = den
        .trim()
        .parse()
        .map_err(|_| bad(&format!("bad rational {s}")))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Scalar::new(n, d))
}

pub fn format_rational(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn witness_to_json(w: &BranchWitness) -> Value {
    json!({
        "map": morphism_to_json(&w.map),
        "q": point_to_json(&w.q),
        "p": point_to_json(&w.p),
        "simple_points": w.simple_points.iter().map(point_to_json).collect::<Vec<_>>(),
        "e": w.e,
    })
}

pub fn witness_from_json(v: &Value) -> Result<BranchWitness> {
    let map = morphism_from_json(v.get("map").ok_or_else(|| bad("missing map"))?)?;
    let q = point_from_json(v.get("q").ok_or_else(|| bad("missing q"))?)?;
    let p = point_from_json(v.get("p").ok_or_else(|| bad("missing p"))?)?;
    let sp = v
        .get("simple_points")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing simple_points"))?;
    let simple_points: Result<Vec<_>> = sp.iter().map(point_from_json).collect();
    let e = get_usize(v, "e")? as u32;
    Ok(BranchWitness {
        map,
        q,
        p,
        simple_points: simple_points?,
        e,
    })
}

pub fn report_to_json(r: &Report) -> Value {
    json!({
        "pass": r.all_pass(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

/// A univariate expression in z, e.g. "z^2 - 1" or "z^3 + 1/2*z", as the
/// P^1 morphism [F(s,t) : t^d] with F the degree-d homogenization.
pub fn p1_map_from_str(src: &str) -> Result<Morphism> {
    let replaced = src.replace('z', "x0");
    let affine = parse_poly(&replaced, 1)?;
    let d = affine
        .terms()
        .map(|(m, _)| m.0[0])
        .max()
        .ok_or(Error::ZeroInput)?;
    if d < 2 {
        return Err(Error::Invalid("P^1 map needs degree >= 2".into()));
    }
    let mut num = crate::poly::Poly::zero(2);
    for (m, c) in affine.terms() {
        let k = m.0[0];
        let mono = crate::poly::Monomial(vec![k, d - k]);
        num = &num + &crate::poly::Poly::from_terms(2, [(mono, c.clone())]);
    }
    Morphism::new(1, d, vec![num, crate::poly::Poly::var(2, 1).pow(d)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hyperplane::hyperplane_construction;
    use crate::constructions::power_map;

    #[test]
    fn map_round_trip() {
        let f = power_map(2, 3).unwrap();
        let v = morphism_to_json(&f);
        assert_eq!(morphism_from_json(&v).unwrap(), f);
    }

    #[test]
    fn witness_round_trip() {
        let w = hyperplane_construction(2, 2, 2, 0).unwrap();
        let v = witness_to_json(&w);
        assert_eq!(witness_from_json(&v).unwrap(), w);
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/4").unwrap(), crate::poly::scalar_ratio(3, 4));
        assert_eq!(parse_rational("-2").unwrap(), crate::poly::scalar_int(-2));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&crate::poly::scalar_ratio(3, 4)), "3/4");
    }

    #[test]
    fn p1_from_string() {
        let f = p1_map_from_str("z^2 - 1").unwrap();
        let g = crate::constructions::p1::polynomial_map(2, &crate::poly::scalar_int(-1)).unwrap();
        assert_eq!(f, g);
        assert!(p1_map_from_str("z").is_err());
    }
}
