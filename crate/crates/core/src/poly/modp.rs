//! Arithmetic modulo a word-sized prime.
//!
//! Used three ways: as a pre-filter inside the rational gcd (specialize to
//! one variable, gcd mod p), as the ground field for Hensel lifting of
//! univariate rational roots, and as an independent cross-check of exact
//! results (evaluate both sides of an identity at random points mod p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::poly::{Poly, Scalar};

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    addmod(a, p - b % p, p)
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse mod a prime; panics on zero.
pub fn invmod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero mod p");
    powmod(a, p - 2, p)
}

pub fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// Image of a rational mod p; `None` when the denominator vanishes mod p.
pub fn scalar_mod(c: &Scalar, p: u64) -> Option<u64> {
    let den = bigint_mod(c.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mulmod(bigint_mod(c.numer(), p), invmod(den, p), p))
}

/// Evaluate a multivariate rational polynomial at a point mod p.
pub fn eval_mod(f: &Poly, point: &[u64], p: u64) -> Option<u64> {
    assert_eq!(point.len(), f.nvars());
    let mut total = 0u64;
    for (m, c) in f.terms() {
        let mut v = scalar_mod(c, p)?;
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                v = mulmod(v, powmod(point[i], e as u64, p), p);
            }
        }
        total = addmod(total, v, p);
    }
    Some(total)
}

// ---- dense univariate polynomials over F_p: Vec<u64>, index = exponent ----

pub fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn deg(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn umul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addmod(out[i + j], mulmod(x, y, p), p);
        }
    }
    trim(out)
}

pub fn urem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = invmod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = mulmod(r[dr], lead_inv, p);
        for j in 0..=db {
            let idx = dr - db + j;
            r[idx] = submod(r[idx], mulmod(c, b[j], p), p);
        }
        r = trim(r);
    }
    r
}

pub fn monic(f: &[u64], p: u64) -> Vec<u64> {
    let f = trim(f.to_vec());
    match f.last() {
        None => f,
        Some(&lc) => {
            let inv = invmod(lc, p);
            f.iter().map(|&c| mulmod(c, inv, p)).collect()
        }
    }
}

pub fn ugcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = urem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn uderiv(f: &[u64], p: u64) -> Vec<u64> {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(i as u64 % p, c, p))
            .collect(),
    )
}

pub fn ueval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = addmod(mulmod(acc, x, p), c, p);
    }
    acc
}

pub fn is_squarefree_mod(f: &[u64], p: u64) -> bool {
    let g = ugcd(f, &uderiv(f, p), p);
    deg(&g) == Some(0)
}

/// Reduce integer coefficients mod p. `None` if any denominator is not 1.
pub fn int_coeffs(coeffs: &[Scalar]) -> Option<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|c| {
            if c.denom().abs() == BigInt::from(1) {
                Some(c.numer() * c.denom().signum())
            } else {
                None
            }
        })
        .collect()
}

/// Deterministic sequence of word-sized primes for filters and cross-checks.
pub fn prime_stream() -> impl Iterator<Item = u64> {
    // 30-bit territory keeps every product inside u128 comfortably
    const START: u64 = (1 << 30) + 3;
    (START..).filter(|&n| is_prime_u64(n))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64 with these witnesses
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    const P: u64 = 1_073_741_827; // prime just above 2^30

    #[test]
    fn modular_inverse() {
        for a in [1u64, 2, 12345, P - 1] {
            assert_eq!(mulmod(a, invmod(a, P), P), 1);
        }
    }

    #[test]
    fn univariate_gcd_mod_p() {
        // (x+1)(x+2) and (x+1)(x+3) share x+1
        let a = umul(&[1, 1], &[2, 1], P);
        let b = umul(&[1, 1], &[3, 1], P);
        assert_eq!(ugcd(&a, &b, P), vec![1, 1]);
    }

    #[test]
    fn squarefree_detection() {
        let sq = umul(&[1, 1], &[1, 1], P);
        assert!(!is_squarefree_mod(&sq, P));
        assert!(is_squarefree_mod(&[2, 0, 1], P));
    }

    #[test]
    fn eval_matches_rational() {
        let f = parse_poly("3/2*x0^2 - x1 + 7", 2).unwrap();
        let exact = f
            .eval(&[crate::poly::scalar_int(4), crate::poly::scalar_int(9)])
            .unwrap();
        let modular = eval_mod(&f, &[4, 9], P).unwrap();
        assert_eq!(scalar_mod(&exact, P).unwrap(), modular);
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = prime_stream().take(5).collect();
        for p in ps {
            assert!(is_prime_u64(p));
            assert!(p > 1 << 30);
        }
        assert!(!is_prime_u64(1 << 31));
    }
}
