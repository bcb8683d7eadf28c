//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms live in a `BTreeMap` keyed by grevlex-ordered monomials, so equality
//! is structural and iteration order is canonical. No zero coefficient is
//! ever stored.

pub mod det;
pub mod divide;
pub mod gcd;
pub mod modp;
pub mod monomial;
pub mod parse;
pub mod resultant;
pub mod univar;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use monomial::{Monomial, MonomialOrder};

/// Exact rational scalar; `num_rational` keeps it in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn scalar_int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn scalar_ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(nvars, i), Scalar::one());
        Poly { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(nvars: usize, it: I) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    /// `Some(d)` iff nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.total_degree();
        if it.all(|m| m.total_degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, point.len()));
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v = v * &point[i];
                }
            }
            total = total + v;
        }
        Ok(total)
    }

    pub fn derivative(&self, var: usize) -> Result<Poly> {
        if var >= self.nvars {
            return Err(Error::VarIndex(var, self.nvars));
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            k.0[var] = e - 1;
            out.add_term(k, c * Scalar::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// `p(F_0, ..., F_{m-1})`: substitute one polynomial per variable.
    /// The `F_i` must all live in a common ring.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, images.len()));
        }
        let target = match images.first() {
            Some(f) => f.nvars,
            None => return Ok(Poly::zero(0)),
        };
        for f in images {
            if f.nvars != target {
                return Err(Error::NvarsMismatch(target, f.nvars));
            }
        }
        // degree guardrail
        let dmax = images.iter().map(|f| f.total_degree()).max().unwrap_or(0);
        crate::limits::check_degree(self.total_degree().saturating_mul(dmax.max(1)))?;
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.checked_mul(&images[i].pow(e))?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Reinterpret in a ring with `extra` fresh variables appended.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        let nvars = self.nvars + extra;
        Poly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.extend(std::iter::repeat(0).take(extra));
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Apply a variable relabeling: slot `i` of the result ring receives
    /// old variable `perm[i]`... inverse view: old var `j` moves to the slot
    /// `s` with `perm[s] == j`. `perm` must be a bijection onto `0..nvars`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.nvars);
        let mut slot_of = vec![0usize; self.nvars];
        for (s, &old) in perm.iter().enumerate() {
            slot_of[old] = s;
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; self.nvars];
                    for (old, &exp) in m.0.iter().enumerate() {
                        e[slot_of[old]] = exp;
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop variable slots listed in `drop` (which must not occur in any
    /// term) and compress the rest, preserving relative order.
    pub fn drop_vars(&self, drop: &[usize]) -> Poly {
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !drop.contains(i)).collect();
        Poly {
            nvars: keep.len(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    for &d in drop {
                        assert_eq!(m.0[d], 0, "dropped variable occurs in term");
                    }
                    (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone())
                })
                .collect(),
        }
    }

    /// Substitute scalar values for a subset of variables, keeping the ring.
    pub fn substitute(&self, values: &[(usize, Scalar)]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = m.0.clone();
            for (var, val) in values {
                for _ in 0..e[*var] {
                    coeff = coeff * val;
                }
                e[*var] = 0;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Leading monomial with respect to `order`.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        match order {
            MonomialOrder::GrevLex => self.terms.keys().next_back(),
            _ => self
                .terms
                .keys()
                .max_by(|a, b| order.cmp(a, b)),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        let m = self.leading_monomial(order)?;
        Some((m, &self.terms[m]))
    }

    /// Coefficients as polynomials in the other variables, indexed by the
    /// exponent of `var`. Length is `degree_in(var) + 1`; entries keep the
    /// full ring with `var`-exponent zero.
    pub fn coeffs_in_var(&self, var: usize) -> Vec<Poly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(self.nvars); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut k = m.clone();
            k.0[var] = 0;
            out[e].add_term(k, c.clone());
        }
        out
    }

    /// Largest bit-size among numerators and denominators.
    pub fn coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Integer content times sign: the rational `c` such that `self / c`
    /// has coprime integer coefficients with positive grevlex-leading sign.
    pub fn canonical_unit(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut unit = Scalar::new(num_gcd, den_lcm);
        let lead = self.terms.values().next_back().unwrap();
        if (lead.numer().sign() == Sign::Minus) != (unit.numer().sign() == Sign::Minus) {
            unit = -unit;
        }
        Some(unit)
    }

    /// Primitive integer coefficients, positive grevlex-leading coefficient.
    /// Zero maps to zero.
    pub fn normalize(&self) -> Poly {
        match self.canonical_unit() {
            None => self.clone(),
            Some(u) => self.scale(&u.recip()),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || self.canonical_unit().map_or(false, |u| u.is_one())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_add(&-rhs).expect("ring mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn p(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn binomial_square() {
        let a = p("x0+x1", 2);
        let sq = a.pow(2);
        assert_eq!(sq, p("x0^2 + 2*x0*x1 + x1^2", 2));
    }

    #[test]
    fn eval_example() {
        let q = p("x0^2*x1", 3);
        let v = q
            .eval(&[scalar_int(2), scalar_int(3), scalar_int(1)])
            .unwrap();
        assert_eq!(v, scalar_int(12));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x0^3", 2).derivative(0).unwrap(), p("3*x0^2", 2));
        assert!(p("x1", 2).derivative(0).unwrap().is_zero());
        assert!(p("x0", 1).derivative(1).is_err());
    }

    #[test]
    fn euler_identity_homogeneous() {
        let f = p("2*x0^3 - 5*x0*x1*x2 + x2^3", 3);
        let d = f.homogeneous_degree().unwrap();
        let mut acc = Poly::zero(3);
        for i in 0..3 {
            acc = &acc + &(&Poly::var(3, i) * &f.derivative(i).unwrap());
        }
        assert_eq!(acc, f.scale(&scalar_int(d as i64)));
    }

    #[test]
    fn compose_power_map() {
        let f: Vec<Poly> = (0..3).map(|i| Poly::var(3, i).pow(2)).collect();
        assert_eq!(p("x0", 3).compose(&f).unwrap(), p("x0^2", 3));
        assert_eq!(
            p("x0*x1*x2", 3).compose(&f).unwrap(),
            p("x0^2*x1^2*x2^2", 3)
        );
    }

    #[test]
    fn normalize_is_primitive_and_sign_fixed() {
        let q = p("2/3*x0^2 - 4/3*x1^2", 2);
        let n = q.normalize();
        assert_eq!(n, p("x0^2 - 2*x1^2", 2));
        let neg = p("-2*x0", 1).normalize();
        assert_eq!(neg, p("x0", 1));
        assert!(n.is_normalized());
    }

    #[test]
    fn nvars_mismatch_is_an_error() {
        assert!(p("x0", 1).checked_add(&p("x0", 2)).is_err());
    }
}
