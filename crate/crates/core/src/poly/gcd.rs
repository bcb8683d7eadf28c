//! Multivariate gcd over Q and squarefree parts.
//!
//! Primitive pseudo-remainder sequences, recursing on the variable of
//! smallest degree. A univariate specialization mod p runs first: when the
//! specialized gcd is constant (and the leading coefficient survives the
//! specialization), the true gcd has degree zero in that variable and the
//! PRS is skipped entirely.

use crate::poly::divide::try_div_exact;
use crate::poly::modp;
use crate::poly::{Monomial, Poly};

/// Normalized gcd; gcd(0, b) = normalize(b), gcd of nonzero constants is 1.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    let a = a.normalize();
    let b = b.normalize();
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.nvars());
    }
    gcd_inner(&a, &b).normalize()
}

fn gcd_inner(a: &Poly, b: &Poly) -> Poly {
    // variable of smallest combined degree among those shared
    let shared: Vec<usize> = a
        .support_vars()
        .into_iter()
        .filter(|&v| b.degree_in(v) > 0)
        .collect();
    let v = match shared
        .iter()
        .copied()
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
    {
        Some(v) => v,
        // disjoint supports: any common divisor is constant
        None => return Poly::one(a.nvars()),
    };

    let ca = a.coeffs_in_var(v);
    let cb = b.coeffs_in_var(v);
    let cont_a = coeff_gcd(&ca);
    let cont_b = coeff_gcd(&cb);
    let cont = gcd(&cont_a, &cont_b);

    if modp_filter_says_coprime(a, b, v) {
        return cont;
    }

    let pa: Vec<Poly> = ca
        .iter()
        .map(|c| try_div_exact(c, &cont_a).expect("content divides"))
        .collect();
    let pb: Vec<Poly> = cb
        .iter()
        .map(|c| try_div_exact(c, &cont_b).expect("content divides"))
        .collect();

    let a_prim = assemble(&pa, v, a.nvars());
    let b_prim = assemble(&pb, v, a.nvars());
    let mut others: Vec<usize> = a_prim
        .support_vars()
        .into_iter()
        .chain(b_prim.support_vars())
        .filter(|&u| u != v)
        .collect();
    others.sort_unstable();
    others.dedup();
    if let [w] = others[..] {
        if let Some(g) = bivar_modular_gcd(&a_prim, &b_prim, v, w) {
            return (&g * &cont).normalize();
        }
    }

    let g = prs(pa, pb, a.nvars());
    let g = assemble(&g, v, a.nvars());
    (&primitive_part_in(&g, v) * &cont).normalize()
}

fn coeff_gcd(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero(coeffs[0].nvars());
    for c in coeffs {
        if !c.is_zero() {
            g = gcd(&g, c);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
    }
    g
}

fn primitive_part_in(p: &Poly, v: usize) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let cont = coeff_gcd(&p.coeffs_in_var(v));
    try_div_exact(p, &cont).expect("content divides")
}

fn trim(mut c: Vec<Poly>) -> Vec<Poly> {
    while c.last().map_or(false, |p| p.is_zero()) {
        c.pop();
    }
    c
}

fn assemble(coeffs: &[Poly], v: usize, nvars: usize) -> Poly {
    let mut out = Poly::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        out = &out + &c.mul_monomial(&Monomial(
            (0..nvars).map(|i| if i == v { e as u32 } else { 0 }).collect(),
        ));
    }
    out
}

/// Primitive PRS on coefficient vectors in one variable.
fn prs(a: Vec<Poly>, b: Vec<Poly>, nvars: usize) -> Vec<Poly> {
    let mut a = trim(a);
    let mut b = trim(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = trim(r);
        if !b.is_empty() {
            // primitive part keeps growth in check
            let cont = coeff_gcd(&b);
            b = b
                .iter()
                .map(|c| try_div_exact(c, &cont).expect("content divides"))
                .collect();
            b = trim(b);
        }
        let _ = nvars;
    }
    a
}

/// Pseudo-remainder of `a` by `b` (both trimmed, b nonempty).
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next = vec![Poly::zero(lr.nvars()); dr];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut t = &r[i] * lb;
            if i + db >= dr && i + db - dr < db {
                // aligned subtraction of lr * x^{dr-db} * b
                t = &t - &(&lr * &b[i + db - dr]);
            }
            *slot = t;
        }
        r = trim(next);
    }
    r
}

/// Modular gcd of two bivariate polynomials that are primitive with
/// respect to `v` (no common coefficient content in `w`): gcd the
/// univariate images at interpolation points mod a word prime, scale each
/// image by gcd(lc_a, lc_b) evaluated at the point, interpolate in `w`,
/// lift symmetrically, and certify the candidate by exact division. The
/// degree of a good modular image bounds the true gcd degree from above,
/// so a certified divisor of that degree is the gcd; anything less returns
/// None and the caller falls back to the pseudo-remainder sequence.
fn bivar_modular_gcd(a: &Poly, b: &Poly, v: usize, w: usize) -> Option<Poly> {
    use crate::poly::modp::*;
    use num_bigint::BigInt;

    let p: u64 = 4_611_686_018_427_388_039; // prime just above 2^62
    let nvars = a.nvars();
    let a = &a.normalize();
    let b = &b.normalize();
    let ca = a.coeffs_in_var(v);
    let cb = b.coeffs_in_var(v);
    let lc_a = ca.last()?.clone();
    let lc_b = cb.last()?.clone();
    // full gcd over Z[w] including the integer content: the interpolated
    // polynomial gamma * monic(G) = (gamma / lc_G) * G has integer
    // coefficients only when lc_G divides gamma over Z, not just over Q
    let gamma = {
        let prim = gcd(&lc_a, &lc_b);
        use num_integer::Integer;
        let cont = int_content(&lc_a).gcd(&int_content(&lc_b));
        prim.scale(&crate::poly::Scalar::from(cont))
    };
    let dw_bound = a.degree_in(w).min(b.degree_in(w)) as usize + gamma.degree_in(w) as usize;
    let needed = dw_bound + 1;

    let mut dmin = usize::MAX;
    let mut samples: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut point = vec![0u64; nvars];
    for y in 0..(needed as u64 + 64) {
        point[w] = y;
        let la = eval_mod(&lc_a, &point, p)?;
        let lb = eval_mod(&lc_b, &point, p)?;
        if la == 0 || lb == 0 {
            continue;
        }
        let ua = specialize(a, v, &point, p)?;
        let ub = specialize(b, v, &point, p)?;
        let g = ugcd(&ua, &ub, p);
        let d = deg(&g)?;
        if d == 0 {
            // a good image certifies a gcd of degree zero in v, and
            // primitivity in v rules out a factor purely in w
            return Some(Poly::one(nvars));
        }
        if d < dmin {
            dmin = d;
            samples.clear();
        }
        if d == dmin {
            let gy = eval_mod(&gamma, &point, p)?;
            let scaled: Vec<u64> = g.iter().map(|&c| mulmod(c, gy, p)).collect();
            samples.push((y, scaled));
            if samples.len() == needed {
                break;
            }
        }
    }
    if samples.len() < needed {
        return None;
    }

    // Lagrange interpolation in w of each v-coefficient, then a symmetric
    // lift of the residues to integers
    let half = p / 2;
    let mut terms: Vec<(Monomial, crate::poly::Scalar)> = Vec::new();
    for k in 0..=dmin {
        let pts: Vec<(u64, u64)> = samples
            .iter()
            .map(|(y, g)| (*y, g.get(k).copied().unwrap_or(0)))
            .collect();
        let coeffs = lagrange_interp(&pts, p);
        for (e, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let lifted = if c > half {
                BigInt::from(c) - BigInt::from(p)
            } else {
                BigInt::from(c)
            };
            let mono = Monomial(
                (0..nvars)
                    .map(|i| match i {
                        i if i == v => k as u32,
                        i if i == w => e as u32,
                        _ => 0,
                    })
                    .collect(),
            );
            terms.push((mono, crate::poly::Scalar::from(lifted)));
        }
    }
    let mut g = Poly::from_terms(nvars, terms).normalize();
    if g.degree_in(v) as usize != dmin {
        return None;
    }
    let cont = coeff_gcd(&g.coeffs_in_var(v));
    g = try_div_exact(&g, &cont)?.normalize();
    if try_div_exact(a, &g).is_none() || try_div_exact(b, &g).is_none() {
        return None;
    }
    Some(g)
}

/// Gcd of the integer numerators; the poly is expected normalized, so the
/// denominators are 1 and this is the integer content.
fn int_content(p: &Poly) -> num_bigint::BigInt {
    use num_integer::Integer;
    let mut g = num_bigint::BigInt::from(0);
    for (_, c) in p.terms() {
        g = g.gcd(c.numer());
    }
    g
}

/// Dense univariate Lagrange interpolation through the given points mod p.
fn lagrange_interp(pts: &[(u64, u64)], p: u64) -> Vec<u64> {
    use crate::poly::modp::*;
    let mut out = vec![0u64; pts.len()];
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![1u64 % p];
        let mut denom = 1u64;
        for (j, &(xj, _)) in pts.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![0u64; basis.len() + 1];
            for (e, &c) in basis.iter().enumerate() {
                next[e + 1] = addmod(next[e + 1], c, p);
                next[e] = submod(next[e], mulmod(c, xj % p, p), p);
            }
            basis = next;
            denom = mulmod(denom, submod(xi % p, xj % p, p), p);
        }
        let scale = mulmod(yi, invmod(denom, p), p);
        for (e, &c) in basis.iter().enumerate() {
            out[e] = addmod(out[e], mulmod(c, scale, p), p);
        }
    }
    out
}

/// True only when the gcd provably has degree zero in `v`.
fn modp_filter_says_coprime(a: &Poly, b: &Poly, v: usize) -> bool {
    let p = 1_073_741_827u64; // prime, > 2^30
    let nvars = a.nvars();
    let la = a.coeffs_in_var(v);
    let lead = la.last().unwrap();
    'point: for trial in 0..8u64 {
        let point: Vec<u64> = (0..nvars)
            .map(|i| (i as u64 + 2 + trial * 37) % p)
            .collect();
        // leading coefficient must survive for the degree argument
        match modp::eval_mod(lead, &point, p) {
            Some(0) | None => continue 'point,
            Some(_) => {}
        }
        let ua = match specialize(a, v, &point, p) {
            Some(u) => u,
            None => continue 'point,
        };
        let ub = match specialize(b, v, &point, p) {
            Some(u) => u,
            None => continue 'point,
        };
        if ub.iter().all(|&c| c == 0) {
            continue 'point;
        }
        let g = modp::ugcd(&ua, &ub, p);
        return modp::deg(&g) == Some(0);
    }
    false
}

fn specialize(f: &Poly, v: usize, point: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut out = vec![0u64; f.degree_in(v) as usize + 1];
    for (m, c) in f.terms() {
        let mut val = modp::scalar_mod(c, p)?;
        for (i, &e) in m.0.iter().enumerate() {
            if i != v && e > 0 {
                val = modp::mulmod(val, modp::powmod(point[i], e as u64, p), p);
            }
        }
        let slot = m.0[v] as usize;
        out[slot] = modp::addmod(out[slot], val, p);
    }
    Some(modp::trim(out))
}

/// Product of the distinct irreducible factors, normalized.
pub fn squarefree_part(p: &Poly) -> Poly {
    if p.is_zero() || p.is_constant() {
        return p.normalize();
    }
    let mut g = Poly::zero(p.nvars());
    for v in p.support_vars() {
        let d = p.derivative(v).expect("in range");
        g = gcd(&g, &gcd(p, &d));
        if g.is_constant() {
            break;
        }
    }
    if g.is_constant() {
        return p.normalize();
    }
    try_div_exact(p, &g)
        .expect("gcd divides")
        .normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn spec_pair() {
        let g = gcd(&q("x0^2 - x1^2", 2), &q("x0^2 + 2*x0*x1 + x1^2", 2));
        assert_eq!(g, q("x0 + x1", 2));
    }

    #[test]
    fn coprime_and_constants() {
        assert_eq!(gcd(&q("x0", 2), &q("x1", 2)), Poly::one(2));
        assert_eq!(gcd(&q("6", 1), &q("4", 1)), Poly::one(1));
        assert_eq!(gcd(&Poly::zero(1), &q("-3*x0", 1)), q("x0", 1));
    }

    #[test]
    fn shared_factor_with_content() {
        let f = &q("2*x0 + 2*x1", 3) * &q("x0*x2 - x1", 3);
        let g = &q("x0 + x1", 3) * &q("x2^2 + 1", 3);
        assert_eq!(gcd(&f, &g), q("x0 + x1", 3));
    }

    #[test]
    fn gcd_divides_both() {
        let a = &q("x0^2 + x1", 2) * &q("x0 - x1", 2).pow(2);
        let b = &q("x0 - x1", 2) * &q("x1^3 - 2", 2);
        let g = gcd(&a, &b);
        assert_eq!(g, q("x0 - x1", 2));
        assert!(try_div_exact(&a, &g).is_some());
        assert!(try_div_exact(&b, &g).is_some());
    }

    #[test]
    fn squarefree_spec_example() {
        assert_eq!(squarefree_part(&q("x0^2*x1", 2)), q("x0*x1", 2));
        assert_eq!(
            squarefree_part(&q("8*x0*x1*x2", 3)),
            q("x0*x1*x2", 3)
        );
        let cube = q("x0 + x1", 2).pow(3);
        assert_eq!(squarefree_part(&cube), q("x0 + x1", 2));
    }

    #[test]
    fn squarefree_mixed_multiplicity() {
        let f = &q("x0", 2).pow(3) * &q("x0 - x1", 2).pow(2);
        let f = &f * &q("x1^2 + 1", 2);
        let sf = squarefree_part(&f);
        assert_eq!(sf, (&(&q("x0", 2) * &q("x0 - x1", 2)) * &q("x1^2 + 1", 2)).normalize());
    }
}
