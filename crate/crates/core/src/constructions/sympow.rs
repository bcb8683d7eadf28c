//! Symmetric powers: the map induced on P^n viewed as the coefficient space
//! of binary degree-n forms.
//!
//! A point (a_0 : ... : a_n) stands for g(s,t) = sum a_i s^{n-i} t^i. The
//! image under the n-th symmetric power of f = [F : G] is the form whose
//! roots are the f-images of the roots of g; its coefficients are read off
//! the resultant Res_{(s,t)}(g, v*F - u*G) as a binary form in (u, v).

use crate::dynamics::Morphism;
use crate::error::{Error, Result};
use crate::poly::divide::try_div_exact;
use crate::poly::gcd::gcd;
use crate::poly::resultant::macaulay_resultant;
use crate::poly::{Monomial, Poly};

/// The n-th symmetric power of a P^1 morphism, as a degree-d morphism of P^n.
pub fn symmetric_power(f1: &Morphism, n: usize) -> Result<Morphism> {
    if f1.n() != 1 {
        return Err(Error::Invalid("symmetric power takes a map of P^1".into()));
    }
    if n < 2 {
        return Err(Error::Invalid("symmetric power needs n >= 2".into()));
    }
    let d = f1.d();
    // ring slots: 0 = s, 1 = t, 2..2+n+1 = a_0..a_n, then u, v
    let na = n + 1;
    let big = 2 + na + 2;
    let (u, v) = (big - 2, big - 1);
    let mut g = Poly::zero(big);
    for i in 0..na {
        let mono = Monomial(
            (0..big)
                .map(|k| {
                    if k == 0 {
                        (n - i) as u32
                    } else if k == 1 {
                        i as u32
                    } else if k == 2 + i {
                        1
                    } else {
                        0
                    }
                })
                .collect(),
        );
        g = &g + &Poly::from_terms(big, [(mono, crate::poly::Scalar::from_integer(1.into()))]);
    }
    let lift = |p: &Poly| p.extend_vars(big - 2);
    let h = &(&Poly::var(big, v) * &lift(&f1.coords()[0]))
        - &(&Poly::var(big, u) * &lift(&f1.coords()[1]));
    let res = macaulay_resultant(&[g, h], &[0, 1])?;

    // read coefficients of u^{n-i} v^i as polynomials in the a's
    let mut coords = vec![Poly::zero(na); na];
    for (m, c) in res.terms() {
        let (eu, ev) = (m.0[u] as usize, m.0[v] as usize);
        assert_eq!(eu + ev, n, "resultant is a binary form of degree n");
        let i = ev;
        let a_mono = Monomial((0..na).map(|k| m.0[2 + k]).collect());
        coords[i] = &coords[i] + &Poly::from_terms(na, [(a_mono, c.clone())]);
    }
    // make the coordinates coprime
    let mut content = Poly::zero(na);
    for c in &coords {
        content = gcd(&content, c);
    }
    if !content.is_constant() {
        coords = coords
            .iter()
            .map(|c| try_div_exact(c, &content).expect("content divides"))
            .collect();
    }
    let out = Morphism::new(n, d, coords)?;
    if out.d() != d {
        return Err(Error::DegreeMismatch {
            expected: d,
            found: out.d(),
        });
    }
    Ok(out)
}
