//! Resultants.
//!
//! Sylvester resultants eliminate one variable from a pair; the Macaulay
//! construction eliminates all coordinate variables from n+1 forms at once,
//! with coefficients allowed to live in a parameter ring. The Macaulay
//! resultant is the exact quotient det(M) / det(M') of two minors; when the
//! denominator minor degenerates the coordinate variables are permuted and
//! the construction retried.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::det::det_bareiss;
use crate::poly::divide::try_div_exact;
use crate::poly::{Monomial, Poly};

/// Sylvester resultant of `f` and `g` with respect to variable `var`.
/// Entries, and therefore the result, live in the same ring with `var`
/// eliminated (exponent zero).
pub fn sylvester_resultant(f: &Poly, g: &Poly, var: usize) -> Poly {
    assert_eq!(f.nvars(), g.nvars());
    let nvars = f.nvars();
    if f.is_zero() || g.is_zero() {
        return Poly::zero(nvars);
    }
    let fc = f.coeffs_in_var(var);
    let gc = g.coeffs_in_var(var);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 {
        return fc[0].pow(n as u32);
    }
    if n == 0 {
        return gc[0].pow(m as u32);
    }
    let size = m + n;
    let zero = Poly::zero(nvars);
    let mut mat = vec![vec![zero; size]; size];
    // n rows of f-coefficients (descending), then m rows of g-coefficients
    for r in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    det_bareiss(&mat)
}

/// All monomials of total degree `d` in the slots `xvars` of a ring with
/// `nvars` variables, ascending grevlex.
fn monomials_of_degree(nvars: usize, xvars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(
        xvars: &[usize],
        pos: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if pos + 1 == xvars.len() {
            current[xvars[pos]] = remaining;
            out.push(Monomial(current.clone()));
            current[xvars[pos]] = 0;
            return;
        }
        for e in 0..=remaining {
            current[xvars[pos]] = e;
            rec(xvars, pos + 1, remaining - e, current, out);
            current[xvars[pos]] = 0;
        }
    }
    rec(xvars, 0, d, &mut current, &mut out);
    out.sort();
    out
}

/// Split a term monomial into its part supported on `xvars` and the rest.
fn split_monomial(m: &Monomial, xvars: &[usize]) -> (Monomial, Monomial) {
    let mut xs = vec![0u32; m.nvars()];
    let mut rest = m.0.clone();
    for &v in xvars {
        xs[v] = m.0[v];
        rest[v] = 0;
    }
    (Monomial(xs), Monomial(rest))
}

/// Macaulay resultant of `forms.len()` forms in the same number of
/// coordinate slots `xvars`, homogeneous in those slots of degrees `d_i`;
/// coefficients may involve the remaining (parameter) variables. Returns a
/// polynomial supported away from `xvars`.
pub fn macaulay_resultant(forms: &[Poly], xvars: &[usize]) -> Result<Poly> {
    let k = forms.len();
    if k == 0 || xvars.len() != k {
        return Err(Error::Invalid(
            "Macaulay resultant needs as many forms as coordinate variables".into(),
        ));
    }
    let nvars = forms[0].nvars();
    let mut degs = Vec::with_capacity(k);
    for f in forms {
        if f.nvars() != nvars {
            return Err(Error::NvarsMismatch(nvars, f.nvars()));
        }
        if f.is_zero() {
            return Ok(Poly::zero(nvars));
        }
        let mut it = f.terms().map(|(m, _)| split_monomial(m, xvars).0.total_degree());
        let d = it.next().unwrap();
        if !it.all(|e| e == d) {
            return Err(Error::NotHomogeneous);
        }
        if d == 0 {
            return Err(Error::ConstantInput);
        }
        degs.push(d);
    }

    // try coordinate permutations until the denominator minor is nonzero
    let mut order: Vec<usize> = (0..k).collect();
    for attempt in 0..24usize {
        let perm: Vec<usize> = order.clone();
        if let Some(res) = macaulay_attempt(forms, xvars, &degs, &perm)? {
            return Ok(res);
        }
        // next lexicographic permutation
        if !next_permutation(&mut order) {
            break;
        }
        let _ = attempt;
    }
    Err(Error::MacaulayDegenerate)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// One attempt with the coordinate roles assigned by `perm`:
/// role r is played by slot `xvars[perm[r]]` with degree `degs[perm[r]]`.
fn macaulay_attempt(
    forms: &[Poly],
    xvars: &[usize],
    degs: &[u32],
    perm: &[usize],
) -> Result<Option<Poly>> {
    let nvars = forms[0].nvars();
    let nu: u32 = degs.iter().map(|&d| d - 1).sum::<u32>() + 1;
    crate::limits::check_degree(nu)?;
    let cols = monomials_of_degree(nvars, xvars, nu);
    let col_index: BTreeMap<&Monomial, usize> =
        cols.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // class of a column monomial: first role r with x_{role r}^{d} dividing it
    let class_of = |m: &Monomial| -> usize {
        for (r, &pi) in perm.iter().enumerate() {
            if m.0[xvars[pi]] >= degs[pi] {
                return r;
            }
        }
        unreachable!("every monomial of degree nu is divisible by some x_i^{{d_i}}")
    };
    let reduced = |m: &Monomial| -> bool {
        perm.iter()
            .filter(|&&pi| m.0[xvars[pi]] >= degs[pi])
            .count()
            == 1
    };

    let zero = Poly::zero(nvars);
    let n = cols.len();
    let mut mat = vec![vec![zero; n]; n];
    for (row, cm) in cols.iter().enumerate() {
        let r = class_of(cm);
        let pi = perm[r];
        let mut shift = cm.clone();
        shift.0[xvars[pi]] -= degs[pi];
        for (tm, c) in forms[pi].terms() {
            let (xpart, rest) = split_monomial(tm, xvars);
            let colm = xpart.mul(&shift);
            let j = col_index[&colm];
            let add = Poly::from_terms(nvars, [(rest, c.clone())]);
            mat[row][j] = &mat[row][j] + &add;
        }
    }

    let big = det_bareiss(&mat);

    let sub_idx: Vec<usize> = (0..n).filter(|&i| !reduced(&cols[i])).collect();
    let small = if sub_idx.is_empty() {
        Poly::one(nvars)
    } else {
        let minor: Vec<Vec<Poly>> = sub_idx
            .iter()
            .map(|&i| sub_idx.iter().map(|&j| mat[i][j].clone()).collect())
            .collect();
        det_bareiss(&minor)
    };
    if small.is_zero() {
        return Ok(None);
    }
    let q = try_div_exact(&big, &small)
        .expect("Macaulay denominator divides the full determinant");
    Ok(Some(q))
}
