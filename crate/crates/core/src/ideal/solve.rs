//! Rational points of zero-dimensional affine ideals.
//!
//! Per-variable elimination produces a univariate polynomial whose rational
//! roots bound the coordinate values; the Cartesian product of candidates is
//! then filtered by exact evaluation of every generator. Solutions with any
//! irrational coordinate are silently absent; callers that need completeness
//! compare counts against an independent degree bound.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::univar;
use crate::poly::{gcd, Poly, Scalar};

/// All rational points of V(I) for a zero-dimensional ideal.
pub fn rational_zeros(ideal: &Ideal) -> Result<Vec<Vec<Scalar>>> {
    let n = ideal.nvars();
    if ideal.contains_one()? {
        return Ok(vec![]);
    }
    let mut candidates: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for v in 0..n {
        let drop: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let uni = if n == 1 {
            ideal.clone()
        } else {
            ideal.elimination(&drop)?
        };
        // gcd of the univariate generators
        let mut g = Poly::zero(1);
        for p in uni.generators() {
            g = gcd::gcd(&g, p);
        }
        if g.is_zero() {
            return Err(Error::Invalid(format!(
                "ideal is not zero-dimensional: no univariate relation in x{v}"
            )));
        }
        let coeffs = univar::to_univar(&g, 0)?;
        candidates.push(univar::rational_roots(&coeffs)?);
    }

    let mut out = Vec::new();
    let mut point = vec![Scalar::from_integer(0.into()); n];
    cartesian(&candidates, 0, &mut point, &mut |pt: &[Scalar]| {
        let ok = ideal
            .generators()
            .iter()
            .all(|g| g.eval(pt).map(|v| num_traits::Zero::is_zero(&v)).unwrap_or(false));
        if ok {
            out.push(pt.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

fn cartesian<F: FnMut(&[Scalar])>(
    cands: &[Vec<Scalar>],
    i: usize,
    point: &mut Vec<Scalar>,
    f: &mut F,
) {
    if i == cands.len() {
        f(point);
        return;
    }
    for c in &cands[i] {
        point[i] = c.clone();
        cartesian(cands, i + 1, point, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::poly::scalar_int;

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(n, gens.iter().map(|s| parse_poly(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn intersection_of_conics() {
        // x^2 + y^2 = 5, x*y = 2: points (+-1, +-2), (+-2, +-1) with matching signs
        let i = ideal(&["x0^2 + x1^2 - 5", "x0*x1 - 2"], 2);
        let z = rational_zeros(&i).unwrap();
        let expect: Vec<Vec<Scalar>> = [(-2, -1), (-1, -2), (1, 2), (2, 1)]
            .iter()
            .map(|&(a, b)| vec![scalar_int(a), scalar_int(b)])
            .collect();
        assert_eq!(z, expect);
    }

    #[test]
    fn irrational_points_absent() {
        let i = ideal(&["x0^2 - 2", "x1 - 1"], 2);
        assert!(rational_zeros(&i).unwrap().is_empty());
    }

    #[test]
    fn positive_dimension_is_an_error() {
        let i = ideal(&["x0 - x1"], 2);
        assert!(rational_zeros(&i).is_err());
    }

    #[test]
    fn empty_variety() {
        let i = ideal(&["x0^2 + 1", "x1"], 2);
        // x0 has no rational candidates at all
        assert!(rational_zeros(&i).unwrap().is_empty());
    }

    #[test]
    fn unit_ideal() {
        let i = ideal(&["x0", "x0 - 1"], 1);
        assert!(rational_zeros(&i).unwrap().is_empty());
    }
}
