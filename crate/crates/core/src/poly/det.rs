//! Determinants over the polynomial ring.
//!
//! Fraction-free Bareiss elimination: every division is exact, so entries
//! stay polynomials and intermediate growth is controlled. A dense mod-p
//! determinant is kept alongside for randomized cross-checks.

use crate::error::{Error, Result};
use crate::poly::divide::try_div_exact;
use crate::poly::modp;
use crate::poly::Poly;

/// Determinant of a square matrix of polynomials (row-major).
pub fn det_bareiss(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Poly::one(0);
    }
    let nvars = m[0][0].nvars();
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = Poly::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Poly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = try_div_exact(&num, &prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let mut d = a[n - 1][n - 1].clone();
    if sign < 0 {
        d = -&d;
    }
    d
}

/// Determinant of the (n+1)x(n+1) Jacobian matrix of the coordinate forms.
pub fn jacobian_determinant(coords: &[Poly]) -> Result<Poly> {
    let n = coords.len();
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let nvars = coords[0].nvars();
    if nvars != n {
        return Err(Error::NvarsMismatch(n, nvars));
    }
    let mut m = Vec::with_capacity(n);
    for f in coords {
        if f.nvars() != nvars {
            return Err(Error::NvarsMismatch(nvars, f.nvars()));
        }
        let row: Result<Vec<Poly>> = (0..nvars).map(|j| f.derivative(j)).collect();
        m.push(row?);
    }
    Ok(det_bareiss(&m))
}

/// Dense determinant mod p by Gaussian elimination.
pub fn det_mod(m: &[Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x % p).collect())
        .collect();
    let mut det = 1u64;
    for k in 0..n {
        let piv = match (k..n).find(|&r| a[r][k] != 0) {
            Some(r) => r,
            None => return 0,
        };
        if piv != k {
            a.swap(k, piv);
            det = p - det;
        }
        det = modp::mulmod(det, a[k][k], p);
        let inv = modp::invmod(a[k][k], p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = modp::mulmod(a[i][k], inv, p);
            for j in k..n {
                let sub = modp::mulmod(f, a[k][j], p);
                a[i][j] = modp::submod(a[i][j], sub, p);
            }
        }
    }
    det % p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn power_map_jacobians() {
        // [x0^2, x1^2, x2^2] -> 8 x0 x1 x2
        let f: Vec<Poly> = (0..3).map(|i| Poly::var(3, i).pow(2)).collect();
        assert_eq!(jacobian_determinant(&f).unwrap(), q("8*x0*x1*x2", 3));
        // cubes: 27 x0^2 x1^2 x2^2, degree 6 = (n+1)(d-1)
        let g: Vec<Poly> = (0..3).map(|i| Poly::var(3, i).pow(3)).collect();
        let j = jacobian_determinant(&g).unwrap();
        assert_eq!(j, q("27*x0^2*x1^2*x2^2", 3));
        assert_eq!(j.total_degree(), 6);
    }

    #[test]
    fn singular_and_swapped() {
        let z = Poly::zero(2);
        let x = q("x0", 2);
        let y = q("x1", 2);
        // rows proportional -> zero
        let d = det_bareiss(&[vec![x.clone(), y.clone()], vec![x.scale(&crate::poly::scalar_int(2)), y.scale(&crate::poly::scalar_int(2))]]);
        assert!(d.is_zero());
        // pivot requires a swap
        let d2 = det_bareiss(&[vec![z.clone(), x.clone()], vec![y.clone(), z]]);
        assert_eq!(d2, -&(&x * &y));
    }

    #[test]
    fn agrees_with_mod_p() {
        let p = 1_000_000_007u64;
        let m = [
            vec![3u64, 1, 4],
            vec![1, 5, 9],
            vec![2, 6, 5],
        ];
        // exact integer determinant = -90
        let exact: i64 = -90;
        let mp: Vec<Vec<Poly>> = m
            .iter()
            .map(|r| r.iter().map(|&x| Poly::constant(1, crate::poly::scalar_int(x as i64))).collect())
            .collect();
        assert_eq!(det_bareiss(&mp), Poly::constant(1, crate::poly::scalar_int(exact)));
        assert_eq!(det_mod(&m, p), (exact.rem_euclid(p as i64)) as u64);
    }
}
