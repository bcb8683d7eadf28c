//! The explicit map families: power maps, symmetric powers, the non-PCF
//! family, and the minimally branched hyperplane construction.

pub mod hyperplane;
pub mod p1;
pub mod sympow;
pub mod verify;

use crate::dynamics::Morphism;
use crate::error::{Error, Result};
use crate::poly::{Poly, Scalar};

/// The d-power map [x0^d : ... : xn^d].
pub fn power_map(n: usize, d: u32) -> Result<Morphism> {
    if n < 1 || d < 2 {
        return Err(Error::Invalid("power map needs n >= 1, d >= 2".into()));
    }
    Morphism::new(n, d, (0..=n).map(|i| Poly::var(n + 1, i).pow(d)).collect())
}

/// The family f_t = [x0^d + t*x1^d, x1^d, ..., xn^d]; a morphism for every
/// rational t, and not PCF of any bounded type when the parameter's
/// phi-orbit never repeats.
pub fn nonpcf_family(n: usize, d: u32, t: &Scalar) -> Result<Morphism> {
    if n < 1 || d < 2 {
        return Err(Error::Invalid("family needs n >= 1, d >= 2".into()));
    }
    let nv = n + 1;
    let mut coords: Vec<Poly> = Vec::with_capacity(nv);
    let f0 = &Poly::var(nv, 0).pow(d) + &Poly::var(nv, 1).pow(d).scale(t);
    coords.push(f0);
    for i in 1..nv {
        coords.push(Poly::var(nv, i).pow(d));
    }
    Morphism::new(n, d, coords)
}

/// k-fold iterate of phi(t) = t^d + t.
pub fn phi_iterate(t: &Scalar, d: u32, k: u32) -> Scalar {
    let mut v = t.clone();
    for _ in 0..k {
        let mut pw = Scalar::from_integer(1.into());
        for _ in 0..d {
            pw = pw * &v;
        }
        v = pw + v;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::scalar_int;

    #[test]
    fn phi_orbit_of_one() {
        let vals: Vec<Scalar> = (1..=4).map(|k| phi_iterate(&scalar_int(1), 2, k)).collect();
        assert_eq!(
            vals,
            vec![scalar_int(2), scalar_int(6), scalar_int(42), scalar_int(1806)]
        );
    }

    #[test]
    fn family_is_always_a_morphism() {
        for t in [-2i64, -1, 0, 1, 5] {
            assert!(nonpcf_family(2, 2, &scalar_int(t)).is_ok());
        }
        assert!(nonpcf_family(3, 2, &scalar_int(1)).is_ok());
    }

    #[test]
    fn power_map_basics() {
        let f = power_map(2, 2).unwrap();
        assert_eq!(f.d(), 2);
        assert!(power_map(0, 2).is_err());
        assert!(power_map(2, 1).is_err());
    }
}
