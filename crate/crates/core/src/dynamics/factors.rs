//! Linear factors of homogeneous forms, found without general factorization.
//!
//! A linear factor with first nonzero coefficient at slot k can be scaled to
//! x_k + sum c_i x_i (i > k). Substituting x_k = -sum c_i x_i into the form
//! and forcing every coefficient to vanish gives a polynomial system in the
//! c_i; its rational zeros are exactly the rational hyperplane components
//! with that leading slot. Every candidate is verified by exact division.

use crate::error::{Error, Result};
use crate::ideal::{solve::rational_zeros, Ideal};
use crate::poly::divide::try_div_exact;
use crate::poly::{Monomial, Poly, Scalar};

/// Distinct rational linear factors of a homogeneous form, each taken once,
/// plus the cofactor after dividing them all out. On a squarefree form the
/// cofactor has no rational hyperplane components.
pub fn linear_factors(form: &Poly) -> Result<(Vec<Poly>, Poly)> {
    if form.is_zero() {
        return Err(Error::ZeroInput);
    }
    if form.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let nv = form.nvars();
    let mut found: Vec<Poly> = Vec::new();
    let mut rest = form.clone();
    for k in 0..nv {
        for ell in factors_leading_at(form, k)? {
            if let Some(q) = try_div_exact(&rest, &ell) {
                found.push(ell.normalize());
                rest = q;
            }
        }
    }
    Ok((found, rest.normalize()))
}

/// Candidate factors x_k + sum_{i>k} c_i x_i of `form`.
fn factors_leading_at(form: &Poly, k: usize) -> Result<Vec<Poly>> {
    let nv = form.nvars();
    let m = nv - k - 1;
    if m == 0 {
        let xk = Poly::var(nv, k);
        return Ok(if try_div_exact(form, &xk).is_some() {
            vec![xk]
        } else {
            vec![]
        });
    }
    // ring: original x slots, then m parameter slots
    let big = nv + m;
    let mut images: Vec<Poly> = (0..nv).map(|i| Poly::var(big, i)).collect();
    let mut sub = Poly::zero(big);
    for j in 0..m {
        sub = &sub - &(&Poly::var(big, nv + j) * &Poly::var(big, k + 1 + j));
    }
    images[k] = sub;
    let g = form.compose(&images)?;

    // group by x-monomial; each c-coefficient must vanish
    let mut groups: std::collections::BTreeMap<Monomial, Poly> = Default::default();
    for (mon, c) in g.terms() {
        let mut xpart = mon.0.clone();
        let mut cpart = vec![0u32; big];
        for j in 0..m {
            cpart[nv + j] = xpart[nv + j];
            xpart[nv + j] = 0;
        }
        let key = Monomial(xpart);
        let add = Poly::from_terms(big, [(Monomial(cpart), c.clone())]);
        let slot = groups.entry(key).or_insert_with(|| Poly::zero(big));
        *slot = &*slot + &add;
    }
    let drop: Vec<usize> = (0..nv).collect();
    let gens: Vec<Poly> = groups.values().map(|p| p.drop_vars(&drop)).collect();
    if gens.is_empty() {
        return Ok(vec![]);
    }
    let ideal = Ideal::new(m, gens)?;
    let zeros = match rational_zeros(&ideal) {
        Ok(z) => z,
        // a positive-dimensional coefficient system means no isolated
        // rational factors to certify here (cannot happen for nonzero forms)
        Err(_) => return Ok(vec![]),
    };
    let mut out = Vec::new();
    for z in zeros {
        let mut ell = Poly::var(nv, k);
        for (j, c) in z.iter().enumerate() {
            ell = &ell + &Poly::var(nv, k + 1 + j).scale(c);
        }
        out.push(ell);
    }
    Ok(out)
}

/// Linear form through the dual vector `coeffs` (ownership convenience).
pub fn linear_form(nv: usize, coeffs: &[Scalar]) -> Poly {
    assert_eq!(coeffs.len(), nv);
    let mut p = Poly::zero(nv);
    for (i, c) in coeffs.iter().enumerate() {
        p = &p + &Poly::var(nv, i).scale(c);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn splits_product_of_hyperplanes() {
        let f = &(&q("x0", 3) * &q("x1 - x2", 3)) * &q("x0 + 2*x1 + 3*x2", 3);
        let (lin, rest) = linear_factors(&f).unwrap();
        assert_eq!(lin.len(), 3);
        assert!(rest.is_constant());
        assert!(lin.contains(&q("x0", 3)));
        assert!(lin.contains(&q("x1 - x2", 3)));
        assert!(lin.contains(&q("x0 + 2*x1 + 3*x2", 3)));
    }

    #[test]
    fn mixed_factorization() {
        // x0 * (x1^2 + x2^2): only one rational hyperplane
        let f = &q("x0", 3) * &q("x1^2 + x2^2", 3);
        let (lin, rest) = linear_factors(&f).unwrap();
        assert_eq!(lin, vec![q("x0", 3)]);
        assert_eq!(rest, q("x1^2 + x2^2", 3));
    }

    #[test]
    fn irreducible_conic_has_none() {
        let f = q("x0^2 + x1^2 + x2^2", 3);
        let (lin, rest) = linear_factors(&f).unwrap();
        assert!(lin.is_empty());
        assert_eq!(rest, f);
    }

    #[test]
    fn rational_but_non_integer_coefficients() {
        // (2x0 - 3x1)(x0 + x1) with leading normalization
        let f = &q("2*x0 - 3*x1", 2) * &q("x0 + x1", 2);
        let (lin, rest) = linear_factors(&f).unwrap();
        assert_eq!(lin.len(), 2);
        assert!(rest.is_constant());
        assert!(lin.contains(&q("2*x0 - 3*x1", 2)));
        assert!(lin.contains(&q("x0 + x1", 2)));
    }
}
