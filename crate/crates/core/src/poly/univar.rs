//! Certified rational roots of univariate polynomials.
//!
//! Strategy: reduce to a primitive squarefree integer polynomial, pick a
//! small prime keeping it squarefree with nonvanishing leading coefficient,
//! scan its roots mod p, Hensel-lift each simple root quadratically past the
//! divisor bound, recover a rational by lattice reconstruction, and verify
//! exactly. Any rational root a/b (lowest terms) has b dividing the leading
//! coefficient, so b is invertible mod p and the root reduces to one of the
//! scanned residues: the procedure is complete, not heuristic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{modp, Poly, Scalar};

/// Dense coefficients of a polynomial supported on a single variable.
pub fn to_univar(f: &Poly, var: usize) -> Result<Vec<Scalar>> {
    for (m, _) in f.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if i != var && e > 0 {
                return Err(Error::Invalid(format!(
                    "polynomial involves x{i}, expected only x{var}"
                )));
            }
        }
    }
    let d = f.degree_in(var) as usize;
    let mut out = vec![Scalar::zero(); d + 1];
    for (m, c) in f.terms() {
        out[m.0[var] as usize] = c.clone();
    }
    Ok(out)
}

fn utrim(mut c: Vec<Scalar>) -> Vec<Scalar> {
    while c.last().map_or(false, |x| x.is_zero()) {
        c.pop();
    }
    c
}

fn ueval_q(f: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn uderiv_q(f: &[Scalar]) -> Vec<Scalar> {
    utrim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn urem_q(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let b = utrim(b.to_vec());
    let mut r = utrim(a.to_vec());
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / &lb;
        for j in 0..=db {
            let v = &c * &b[j];
            r[dr - db + j] = &r[dr - db + j] - &v;
        }
        r = utrim(r);
    }
    r
}

fn ugcd_q(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut a = utrim(a.to_vec());
    let mut b = utrim(b.to_vec());
    while !b.is_empty() {
        let r = urem_q(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        for c in &mut a {
            *c = &*c / &lc;
        }
    }
    a
}

fn udiv_exact_q(a: &[Scalar], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let b = utrim(b.to_vec());
    let mut r = utrim(a.to_vec());
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q = vec![Scalar::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / &lb;
        q[dr - db] = c.clone();
        for j in 0..=db {
            let v = &c * &b[j];
            r[dr - db + j] = &r[dr - db + j] - &v;
        }
        r = utrim(r);
    }
    if r.is_empty() {
        Some(utrim(q))
    } else {
        None
    }
}

/// Primitive integer coefficients, same roots.
fn to_int_primitive(f: &[Scalar]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in f {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.iter().map(|c| c / &g).collect()
    }
}

fn small_primes() -> impl Iterator<Item = u64> {
    (1009u64..).filter(|&n| modp::is_prime_u64(n))
}

fn ext_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Rational reconstruction of `r mod m`: find a/b with |a|, b <= sqrt(m/2).
fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<Scalar> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if t1.is_negative() {
        Some(Scalar::new(-r1, -t1))
    } else {
        Some(Scalar::new(r1, t1))
    }
}

/// All distinct rational roots, ascending.
pub fn rational_roots(coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    let f = utrim(coeffs.to_vec());
    if f.is_empty() {
        return Err(Error::ZeroInput);
    }
    if f.len() == 1 {
        return Ok(vec![]);
    }
    // strip roots at 0
    let mut start = 0;
    while f[start].is_zero() {
        start += 1;
    }
    let mut roots = Vec::new();
    if start > 0 {
        roots.push(Scalar::zero());
    }
    let body = &f[start..];
    if body.len() > 1 {
        let sf = squarefree_coeffs(body);
        roots.extend(roots_of_squarefree(&to_int_primitive(&sf), body)?);
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn squarefree_coeffs(f: &[Scalar]) -> Vec<Scalar> {
    let g = ugcd_q(f, &uderiv_q(f));
    if g.len() <= 1 {
        return f.to_vec();
    }
    udiv_exact_q(f, &g).expect("gcd divides")
}

fn roots_of_squarefree(fi: &[BigInt], original: &[Scalar]) -> Result<Vec<Scalar>> {
    let lc = fi.last().unwrap();
    // pick a prime: leading coefficient survives and the reduction stays squarefree
    let mut chosen = None;
    for p in small_primes().take(2000) {
        if modp::bigint_mod(lc, p) == 0 {
            continue;
        }
        let fp: Vec<u64> = fi.iter().map(|c| modp::bigint_mod(c, p)).collect();
        let fp = modp::trim(fp);
        if modp::is_squarefree_mod(&fp, p) {
            chosen = Some((p, fp));
            break;
        }
    }
    let (p, fp) = chosen.ok_or_else(|| {
        Error::Invalid("no suitable prime found for root isolation".into())
    })?;

    // residues that are roots mod p
    let residues: Vec<u64> = (0..p).filter(|&r| modp::ueval(&fp, r, p) == 0).collect();

    // divisor bound: |numerator| <= |a0|, denominator <= |lc|
    let a0 = fi.iter().find(|c| !c.is_zero()).unwrap();
    let bound = a0.abs().max(lc.abs());
    let target: BigInt = BigInt::from(2) * &bound * &bound + 1;

    let fprime: Vec<BigInt> = fi
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();

    let mut out = Vec::new();
    for r0 in residues {
        let mut m = BigInt::from(p);
        let mut r = BigInt::from(r0);
        while m < target {
            let m2 = &m * &m;
            let fv = eval_int_mod(fi, &r, &m2);
            let dv = eval_int_mod(&fprime, &r, &m2);
            let inv = match ext_inv(&dv, &m2) {
                Some(i) => i,
                None => break, // cannot happen for a simple root; bail safely
            };
            r = (&r - fv * inv).mod_floor(&m2);
            m = m2;
        }
        if let Some(cand) = rational_reconstruct(&r, &m) {
            if ueval_q(original, &cand).is_zero() {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

fn eval_int_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

/// Distinct rational roots with multiplicities.
pub fn rational_roots_with_mult(coeffs: &[Scalar]) -> Result<Vec<(Scalar, u32)>> {
    let roots = rational_roots(coeffs)?;
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let lin = vec![-r.clone(), Scalar::one()];
        let mut k = 0u32;
        let mut cur = utrim(coeffs.to_vec());
        while let Some(q) = udiv_exact_q(&cur, &lin) {
            k += 1;
            cur = q;
            if cur.is_empty() {
                break;
            }
        }
        out.push((r, k));
    }
    Ok(out)
}

/// Rational points of P^1 where a binary form in slots `(v0, v1)` vanishes,
/// as `([a : b], multiplicity)`. The point at infinity `[1:0]` is included
/// when the coefficient of `x{v0}^d` vanishes.
pub fn binary_form_rational_roots(
    form: &Poly,
    v0: usize,
    v1: usize,
) -> Result<Vec<((Scalar, Scalar), u32)>> {
    let d = form.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    // dehomogenize at x{v1} = 1
    let affine = form.substitute(&[(v1, Scalar::one())]);
    let coeffs = to_univar(&affine, v0)?;
    let mut out: Vec<((Scalar, Scalar), u32)> = rational_roots_with_mult(&coeffs)?
        .into_iter()
        .map(|(r, k)| ((r, Scalar::one()), k))
        .collect();
    let affine_deg = coeffs.len() as u32 - 1;
    if affine_deg < d {
        out.push(((Scalar::one(), Scalar::zero()), d - affine_deg));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::poly::scalar_int;

    fn coeffs(s: &str) -> Vec<Scalar> {
        to_univar(&parse_poly(s, 1).unwrap(), 0).unwrap()
    }

    #[test]
    fn integer_roots() {
        let r = rational_roots(&coeffs("x0^2 - 5*x0 + 6")).unwrap();
        assert_eq!(r, vec![scalar_int(2), scalar_int(3)]);
    }

    #[test]
    fn fractional_and_zero_roots() {
        // x(2x-1)(3x+5)
        let f = coeffs("6*x0^3 + 7*x0^2 - 5*x0");
        let r = rational_roots(&f).unwrap();
        assert_eq!(
            r,
            vec![
                crate::poly::scalar_ratio(-5, 3),
                scalar_int(0),
                crate::poly::scalar_ratio(1, 2)
            ]
        );
    }

    #[test]
    fn irrational_roots_excluded() {
        assert!(rational_roots(&coeffs("x0^2 - 2")).unwrap().is_empty());
        assert!(rational_roots(&coeffs("x0^2 + 1")).unwrap().is_empty());
    }

    #[test]
    fn multiplicities() {
        // (x-1)^3 (x+2)
        let f = parse_poly("x0 - 1", 1).unwrap().pow(3);
        let f = &f * &parse_poly("x0 + 2", 1).unwrap();
        let m = rational_roots_with_mult(&to_univar(&f, 0).unwrap()).unwrap();
        assert_eq!(m, vec![(scalar_int(-2), 1), (scalar_int(1), 3)]);
    }

    #[test]
    fn big_coefficients_still_certified() {
        // (10^12 x - 1)(x - 10^12)
        let a = BigInt::from(10u64.pow(12));
        let f = vec![
            Scalar::from_integer(a.clone()),
            Scalar::from_integer(-(&a * &a) - BigInt::one()),
            Scalar::from_integer(a.clone()),
        ];
        let r = rational_roots(&f).unwrap();
        assert_eq!(
            r,
            vec![
                Scalar::new(BigInt::one(), a.clone()),
                Scalar::from_integer(a)
            ]
        );
    }

    #[test]
    fn binary_form_with_infinity() {
        // x0 * x1^2 * (x0 - x1): roots [0:1] (mult 2 from x1^2? no: x1^2 gives [1:0])
        let f = parse_poly("x0^2*x1^2 - x0*x1^3", 2).unwrap(); // x0*x1^2*(x0 - x1)
        let roots = binary_form_rational_roots(&f, 0, 1).unwrap();
        let total: u32 = roots.iter().map(|(_, k)| k).sum();
        assert_eq!(total, 4);
        assert!(roots
            .iter()
            .any(|((a, b), k)| a.is_zero() && b.is_one() && *k == 1));
        assert!(roots
            .iter()
            .any(|((a, b), k)| a.is_one() && b.is_zero() && *k == 2));
        assert!(roots
            .iter()
            .any(|((a, b), k)| a.is_one() && b.is_one() && *k == 1));
    }
}
