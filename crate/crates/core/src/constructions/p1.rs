//! Critical orbit portraits of self-maps of P^1.
//!
//! Everything is exact: critical points are certified rational roots of the
//! binary Jacobian, orbits are iterated in canonical projective coordinates,
//! and (period, tail) come from first-repetition detection.

use crate::dynamics::{Morphism, ProjPoint};
use crate::error::{Error, Result};
use crate::poly::univar::binary_form_rational_roots;
use crate::poly::{Poly, Scalar};

/// Tail-and-period data for every critical point of a P^1 map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct P1Portrait {
    /// (critical point, k_p period, ell_p tail).
    pub critical_points: Vec<(ProjPoint, u32, u32)>,
}

/// A rational map z -> z^d + c as a morphism of P^1.
pub fn polynomial_map(d: u32, c: &Scalar) -> Result<Morphism> {
    // [s^d + c t^d, t^d]
    let f0 = &Poly::var(2, 0).pow(d) + &Poly::var(2, 1).pow(d).scale(c);
    Morphism::new(1, d, vec![f0, Poly::var(2, 1).pow(d)])
}

/// Exact orbit of `p` under `f` with first-repetition cycle detection;
/// returns (period, tail).
pub fn orbit_type(f: &Morphism, p: &ProjPoint, max_steps: u32) -> Result<(u32, u32)> {
    let mut visited: Vec<ProjPoint> = vec![p.clone()];
    let mut cur = p.clone();
    for _ in 0..max_steps {
        cur = f.apply(&cur)?;
        if let Some(j) = visited.iter().position(|v| *v == cur) {
            let tail = j as u32;
            let period = visited.len() as u32 - tail;
            return Ok((period, tail));
        }
        visited.push(cur.clone());
    }
    Err(Error::OrbitBudgetExceeded(max_steps))
}

/// Portrait of all critical points; errors when any critical point is
/// irrational or any orbit exceeds the step budget.
pub fn critical_portrait_p1(f: &Morphism, max_steps: u32) -> Result<P1Portrait> {
    if f.n() != 1 {
        return Err(Error::Invalid("portraits are for maps of P^1".into()));
    }
    let jac = &(&f.coords()[0].derivative(0)? * &f.coords()[1].derivative(1)?)
        - &(&f.coords()[0].derivative(1)? * &f.coords()[1].derivative(0)?);
    assert!(!jac.is_zero());
    let total = 2 * (f.d() - 1);
    let roots = binary_form_rational_roots(&jac, 0, 1)?;
    let found: u32 = roots.iter().map(|(_, m)| m).sum();
    if found != total {
        return Err(Error::IrrationalCriticalPoint);
    }
    let mut critical_points = Vec::with_capacity(roots.len());
    for ((a, b), _) in roots {
        let p = ProjPoint::new(&[a, b])?;
        let (k, ell) = orbit_type(f, &p, max_steps)?;
        critical_points.push((p, k, ell));
    }
    Ok(P1Portrait { critical_points })
}

/// Eq-(2.1)-style prediction for the symmetric power: k = lcm of the k_p,
/// ell = max(1, max ell_p).
pub fn pcf_type_prediction(portrait: &P1Portrait) -> Result<crate::pcf::PcfType> {
    if portrait.critical_points.is_empty() {
        return Err(Error::ZeroInput);
    }
    let mut k = 1u64;
    let mut ell = 0u32;
    for (_, kp, lp) in &portrait.critical_points {
        k = num_integer::lcm(k, *kp as u64);
        ell = ell.max(*lp);
    }
    Ok(crate::pcf::PcfType {
        k: k as u32,
        ell: ell.max(1),
    })
}
