//! Post-critical orbits and PCF type detection.
//!
//! The orbit member f^{m}(C_f) is stored as a reduced hypersurface, so
//! set containment between orbit members is exact divisibility of squarefree
//! forms. PCF detection is a bounded search: absence means "no type within
//! (K, L)", never "not PCF".

use std::time::Instant;

use serde_json::{json, Value};

use crate::dynamics::ops::{critical_locus, image_hypersurface};
use crate::dynamics::{Hypersurface, Morphism};
use crate::error::{Error, Result};
use crate::poly::divide::try_div_exact;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PostCriticalOrbit {
    pub map: Morphism,
    /// Reduced C_f (the m = 0 stage).
    pub critical: Hypersurface,
    /// members[m] = reduced f^{m+1}(C_f).
    pub members: Vec<Hypersurface>,
    pub degrees: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PcfType {
    pub k: u32,
    pub ell: u32,
}

/// Witness pair for a detected type: V(later) is contained in V(earlier).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub later: Hypersurface,
    pub earlier: Hypersurface,
}

/// V(h1) is a subset of V(h2): for squarefree forms, h1 divides h2.
pub fn containment(h1: &Hypersurface, h2: &Hypersurface) -> bool {
    try_div_exact(h2.form(), h1.form()).is_some()
}

/// The first M images of the critical locus, with early stop once the new
/// member is contained in an earlier stage (cycle or eventual containment).
pub fn postcritical_orbit(f: &Morphism, m_max: u32) -> Result<PostCriticalOrbit> {
    let (_, critical) = critical_locus(f)?;
    let mut members: Vec<Hypersurface> = Vec::new();
    for _ in 0..m_max {
        let prev = members.last().unwrap_or(&critical);
        let next = image_hypersurface(f, prev)?;
        let seen = std::iter::once(&critical)
            .chain(members.iter())
            .any(|h| containment(&next, h));
        members.push(next);
        if seen {
            break;
        }
    }
    let degrees = members.iter().map(|h| h.degree()).collect();
    Ok(PostCriticalOrbit {
        map: f.clone(),
        critical,
        members,
        degrees,
    })
}

/// Orbit members with exact length `len`, cycling forward once an exact
/// repetition appears instead of recomputing images.
fn members_exact(f: &Morphism, len: usize) -> Result<(Hypersurface, Vec<Hypersurface>)> {
    let (_, critical) = critical_locus(f)?;
    let mut seq: Vec<Hypersurface> = vec![critical.clone()];
    while seq.len() < len + 1 {
        // exact repetition: extend periodically
        let last = seq.last().unwrap();
        if let Some(j) = seq.iter().position(|h| h == last) {
            if j + 1 < seq.len() {
                let period = seq.len() - 1 - j;
                let next = seq[j + (seq.len() - 1 - j) % period + 1].clone();
                seq.push(next);
                continue;
            }
        }
        let next = image_hypersurface(f, last)?;
        seq.push(next);
    }
    let critical = seq.remove(0);
    Ok((critical, seq))
}

/// Smallest tail ell in 0..=L, then smallest period k in 1..=K, with
/// f^{k+ell}(C_f) contained in f^{ell}(C_f).
pub fn detect_pcf_type(
    f: &Morphism,
    k_max: u32,
    l_max: u32,
) -> Result<Option<(PcfType, Certificate)>> {
    if k_max == 0 {
        return Err(Error::Invalid("period bound K must be positive".into()));
    }
    let len = (k_max + l_max) as usize;
    let (critical, members) = members_exact(f, len)?;
    let member_at = |i: i64| -> &Hypersurface {
        if i < 0 {
            &critical
        } else {
            &members[i as usize]
        }
    };
    for ell in 0..=l_max {
        for k in 1..=k_max {
            let later = member_at((k + ell) as i64 - 1);
            let earlier = member_at(ell as i64 - 1);
            if containment(later, earlier) {
                return Ok(Some((
                    PcfType { k, ell },
                    Certificate {
                        later: later.clone(),
                        earlier: earlier.clone(),
                    },
                )));
            }
        }
    }
    Ok(None)
}

/// Re-verify a detection result from its certificate and bounds alone.
pub fn verify_certificate(
    f: &Morphism,
    ty: PcfType,
    cert: &Certificate,
    k_max: u32,
    l_max: u32,
) -> Result<bool> {
    let len = (k_max + l_max) as usize;
    let (critical, members) = members_exact(f, len)?;
    let member_at = |i: i64| -> &Hypersurface {
        if i < 0 {
            &critical
        } else {
            &members[i as usize]
        }
    };
    let later = member_at((ty.k + ty.ell) as i64 - 1);
    let earlier = member_at(ty.ell as i64 - 1);
    if later != &cert.later || earlier != &cert.earlier || !containment(later, earlier) {
        return Ok(false);
    }
    for ell in 0..=l_max {
        for k in 1..=k_max {
            if (ell, k) >= (ty.ell, ty.k) {
                break;
            }
            if containment(member_at((k + ell) as i64 - 1), member_at(ell as i64 - 1)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// JSON report: degree sequence, containment matrix over the stages
/// [C_f, f(C_f), ...], detected type or null, bounds, seed, timings.
pub fn orbit_report(f: &Morphism, m_max: u32, k_max: u32, l_max: u32, seed: u64) -> Result<Value> {
    let t0 = Instant::now();
    let orbit = postcritical_orbit(f, m_max)?;
    let t_orbit = t0.elapsed().as_millis() as u64;

    let stages: Vec<&Hypersurface> = std::iter::once(&orbit.critical)
        .chain(orbit.members.iter())
        .collect();
    let matrix: Vec<Vec<bool>> = stages
        .iter()
        .map(|a| stages.iter().map(|b| containment(a, b)).collect())
        .collect();

    let t1 = Instant::now();
    let mut caps_hit: Vec<String> = Vec::new();
    let detected = match detect_pcf_type(f, k_max, l_max) {
        Ok(d) => d,
        Err(Error::ResourceCap(msg)) => {
            caps_hit.push(msg);
            None
        }
        Err(e) => return Err(e),
    };
    let t_detect = t1.elapsed().as_millis() as u64;

    Ok(json!({
        "n": f.n(),
        "d": f.d(),
        "map_hash": f.hash(),
        "degrees": orbit.degrees,
        "containment": matrix,
        "type": detected.as_ref().map(|(ty, _)| vec![ty.k, ty.ell]),
        "bounds": {"K": k_max, "L": l_max, "M": m_max},
        "seed": seed,
        "timings_ms": {"orbit": t_orbit, "detect": t_detect},
        "caps_hit": caps_hit,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::poly::Poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    fn power_map(n: usize, d: u32) -> Morphism {
        Morphism::new(n, d, (0..=n).map(|i| Poly::var(n + 1, i).pow(d)).collect()).unwrap()
    }

    #[test]
    fn containment_examples() {
        let a = Hypersurface::new(&q("x0", 2)).unwrap();
        let ab = Hypersurface::new(&q("x0*x1", 2)).unwrap();
        assert!(containment(&a, &ab));
        assert!(!containment(&ab, &a));
    }

    #[test]
    fn power_map_is_1_0() {
        let f = power_map(2, 2);
        let orbit = postcritical_orbit(&f, 4).unwrap();
        assert_eq!(orbit.members.len(), 1); // f(C_f) = C_f stops at once
        assert_eq!(orbit.degrees, vec![3]);
        let (ty, cert) = detect_pcf_type(&f, 6, 3).unwrap().unwrap();
        assert_eq!(ty, PcfType { k: 1, ell: 0 });
        assert!(verify_certificate(&f, ty, &cert, 6, 3).unwrap());
    }

    #[test]
    fn report_shape() {
        let f = power_map(2, 2);
        let r = orbit_report(&f, 4, 6, 3, 42).unwrap();
        assert_eq!(r["type"], serde_json::json!([1, 0]));
        assert_eq!(r["degrees"], serde_json::json!([3]));
        assert_eq!(r["bounds"]["K"], 6);
        assert!(r["caps_hit"].as_array().unwrap().is_empty());
        assert_eq!(r["map_hash"], serde_json::json!(f.hash()));
    }
}
