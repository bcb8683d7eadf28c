//! Exact division and divisibility order.

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Poly};

/// Exact quotient `num / den`, or `None` when the division leaves a
/// remainder. Single-divisor grevlex division: over a field this remainder
/// test is exact for honest divisors.
pub fn try_div_exact(num: &Poly, den: &Poly) -> Option<Poly> {
    assert_eq!(num.nvars(), den.nvars());
    assert!(!den.is_zero(), "division by zero");
    let ord = MonomialOrder::GrevLex;
    let (dm, dc) = den.leading_term(&ord).unwrap();
    let (dm, dc) = (dm.clone(), dc.clone());
    let mut rem = num.clone();
    let mut quo = Poly::zero(num.nvars());
    while !rem.is_zero() {
        let (rm, rc) = rem.leading_term(&ord).unwrap();
        let q = rm.checked_div(&dm)?;
        let c = rc / &dc;
        let t = Poly::from_terms(num.nvars(), [(q, c)]);
        quo = &quo + &t;
        rem = &rem - &(&t * den);
    }
    Some(quo)
}

pub fn divides(den: &Poly, num: &Poly) -> bool {
    try_div_exact(num, den).is_some()
}

/// Largest `k` with `den^k | num`. Errors on degenerate inputs.
pub fn divisibility_order(num: &Poly, den: &Poly) -> Result<u32> {
    if num.is_zero() || den.is_zero() {
        return Err(Error::ZeroInput);
    }
    if den.is_constant() {
        return Err(Error::ConstantInput);
    }
    // terminates: each exact division drops the total degree by deg(den) > 0
    let mut k = 0;
    let mut cur = num.clone();
    while let Some(q) = try_div_exact(&cur, den) {
        k += 1;
        cur = q;
    }
    Ok(k)
}
