//! Morphisms of projective space and their attached geometry.

pub mod factors;
pub mod ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::limits;
use crate::poly::gcd::squarefree_part;
use crate::poly::parse::format_poly;
use crate::poly::{Poly, Scalar};

/// A point of P^n in canonical coordinates: coprime integers, first nonzero
/// entry positive. Equality is equality of projective points.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<BigInt>,
}

impl ProjPoint {
    pub fn new(coords: &[Scalar]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroInput);
        }
        let mut den = BigInt::one();
        for c in coords {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        for c in &mut ints {
            *c = &*c / &g;
        }
        if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
            for c in &mut ints {
                *c = -c.clone();
            }
        }
        Ok(ProjPoint { coords: ints })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        let v: Vec<Scalar> = coords
            .iter()
            .map(|&c| Scalar::from_integer(BigInt::from(c)))
            .collect();
        ProjPoint::new(&v)
    }

    pub fn dim_ambient(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> Vec<Scalar> {
        self.coords
            .iter()
            .map(|c| Scalar::from_integer(c.clone()))
            .collect()
    }

    pub fn int_coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Index of a coordinate with maximal absolute value (always nonzero).
    pub fn pivot(&self) -> usize {
        let mut best = 0;
        for (i, c) in self.coords.iter().enumerate() {
            if c.abs() > self.coords[best].abs() {
                best = i;
            }
        }
        best
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

/// A reduced hypersurface of P^n: squarefree homogeneous form in canonical
/// normalization, so structural equality is equality of varieties.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypersurface {
    form: Poly,
}

impl Hypersurface {
    /// Reduce an arbitrary nonzero homogeneous form.
    pub fn new(form: &Poly) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::ZeroInput);
        }
        if form.is_constant() {
            return Err(Error::ConstantInput);
        }
        if form.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous);
        }
        Ok(Hypersurface {
            form: squarefree_part(form),
        })
    }

    pub fn form(&self) -> &Poly {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.form.total_degree()
    }

    pub fn n(&self) -> usize {
        self.form.nvars() - 1
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.form
            .eval(&p.coords())
            .map(|v| v.is_zero())
            .unwrap_or(false)
    }
}

/// An endomorphism of P^n of algebraic degree d, validated and canonically
/// scaled at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    n: usize,
    d: u32,
    coords: Vec<Poly>,
}

impl Morphism {
    pub fn new(n: usize, d: u32, coords: Vec<Poly>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::Invalid("need n >= 1 and d >= 1".into()));
        }
        if coords.len() != n + 1 {
            return Err(Error::NvarsMismatch(n + 1, coords.len()));
        }
        for c in &coords {
            if c.nvars() != n + 1 {
                return Err(Error::NvarsMismatch(n + 1, c.nvars()));
            }
            match c.homogeneous_degree() {
                None if c.is_zero() => return Err(Error::ZeroInput),
                None => return Err(Error::NotHomogeneous),
                Some(e) if e != d => {
                    return Err(Error::DegreeMismatch {
                        expected: d,
                        found: e,
                    })
                }
                Some(_) => {}
            }
        }
        // no common zero over the algebraic closure: nonvanishing Macaulay
        // resultant when it is defined, Groebner emptiness otherwise
        let xvars: Vec<usize> = (0..=n).collect();
        let empty = match crate::poly::resultant::macaulay_resultant(&coords, &xvars) {
            Ok(res) => !res.is_zero(),
            Err(Error::MacaulayDegenerate) => {
                Ideal::new(n + 1, coords.clone())?.projective_is_empty()?
            }
            Err(e) => return Err(e),
        };
        if !empty {
            return Err(Error::NotAMorphism);
        }
        Ok(Self::new_unchecked(n, d, coords))
    }

    /// For internal constructions whose morphism property is already
    /// guaranteed (compositions of validated morphisms).
    pub(crate) fn new_unchecked(n: usize, d: u32, coords: Vec<Poly>) -> Self {
        let coords = joint_normalize(coords);
        Morphism { n, d, coords }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let v = p.coords();
        let image: Result<Vec<Scalar>> = self.coords.iter().map(|c| c.eval(&v)).collect();
        ProjPoint::new(&image?)
    }

    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if self.n != inner.n {
            return Err(Error::NvarsMismatch(self.n, inner.n));
        }
        let d = self
            .d
            .checked_mul(inner.d)
            .ok_or_else(|| Error::ResourceCap("degree overflow in compose".into()))?;
        limits::check_degree(d)?;
        let coords: Result<Vec<Poly>> = self
            .coords
            .iter()
            .map(|c| c.compose(inner.coords()))
            .collect();
        Ok(Morphism::new_unchecked(self.n, d, coords?))
    }

    pub fn iterate(&self, m: u32) -> Result<Morphism> {
        if m == 0 {
            let id: Vec<Poly> = (0..=self.n).map(|i| Poly::var(self.n + 1, i)).collect();
            return Ok(Morphism::new_unchecked(self.n, 1, id));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Stable content hash of the canonical coordinate forms.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}|{}", self.n, self.d));
        for c in &self.coords {
            h.update("|");
            h.update(format_poly(c));
        }
        hex::encode(&h.finalize()[..16])
    }
}

/// Scale a coordinate tuple to jointly primitive integers, sign fixed by
/// the first nonzero coordinate's leading coefficient.
fn joint_normalize(coords: Vec<Poly>) -> Vec<Poly> {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for c in &coords {
        for (_, a) in c.terms() {
            den = den.lcm(a.denom());
            num = num.gcd(a.numer());
        }
    }
    if num.is_zero() {
        return coords;
    }
    let mut unit = Scalar::new(den, num);
    let lead_sign = coords.iter().find(|c| !c.is_zero()).map(|c| {
        c.leading_term(&crate::poly::MonomialOrder::GrevLex)
            .map(|(_, a)| a.is_negative())
            .unwrap_or(false)
    });
    if let Some(true) = lead_sign {
        unit = -unit;
    }
    coords.iter().map(|c| c.scale(&unit)).collect()
}

/// The fiber f^{-1}(target) as a divisor: distinct points with positive
/// multiplicities summing to d^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberDivisor {
    pub target: ProjPoint,
    pub points: Vec<(ProjPoint, u32)>,
}

impl FiberDivisor {
    pub fn total_multiplicity(&self) -> u32 {
        self.points.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, p: &ProjPoint) -> Option<u32> {
        self.points
            .iter()
            .find(|(q, _)| q == p)
            .map(|&(_, m)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn point_canonicalization() {
        let a = ProjPoint::new(&[
            crate::poly::scalar_ratio(1, 2),
            crate::poly::scalar_int(-1),
        ])
        .unwrap();
        let b = ProjPoint::from_ints(&[-1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(format!("{b}"), "[1 : -2]");
        assert!(ProjPoint::from_ints(&[0, 0]).is_err());
    }

    #[test]
    fn morphism_validation() {
        let power: Vec<Poly> = (0..3).map(|i| Poly::var(3, i).pow(2)).collect();
        assert!(Morphism::new(2, 2, power).is_ok());
        let bad = vec![q("x0^2", 3), q("x0*x1", 3), q("x2^2", 3)];
        assert!(matches!(Morphism::new(2, 2, bad), Err(Error::NotAMorphism)));
        let family = vec![q("x0^2 - x1^2", 3), q("x1^2", 3), q("x2^2", 3)];
        assert!(Morphism::new(2, 2, family).is_ok());
        let inhom = vec![q("x0^2 + x1", 3), q("x1^2", 3), q("x2^2", 3)];
        assert!(matches!(
            Morphism::new(2, 2, inhom),
            Err(Error::NotHomogeneous)
        ));
        let wrongdeg = vec![q("x0^3", 3), q("x1^2", 3), q("x2^2", 3)];
        assert!(matches!(
            Morphism::new(2, 2, wrongdeg),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn compose_and_iterate_degrees() {
        let f = Morphism::new(2, 2, (0..3).map(|i| Poly::var(3, i).pow(2)).collect()).unwrap();
        let f2 = f.iterate(2).unwrap();
        assert_eq!(f2.d(), 4);
        let quartic = Morphism::new(2, 4, (0..3).map(|i| Poly::var(3, i).pow(4)).collect()).unwrap();
        assert_eq!(f2, quartic);
    }

    #[test]
    fn stepwise_application_matches_composition() {
        let family = Morphism::new(
            2,
            2,
            vec![q("x0^2 - x1^2", 3), q("x1^2", 3), q("x2^2", 3)],
        )
        .unwrap();
        let p = ProjPoint::from_ints(&[0, 1, 1]).unwrap();
        let twice = family.apply(&family.apply(&p).unwrap()).unwrap();
        let f2 = family.iterate(2).unwrap();
        assert_eq!(f2.apply(&p).unwrap(), twice);
    }

    #[test]
    fn hypersurface_reduction_and_equality() {
        let h1 = Hypersurface::new(&q("x0^2*x1", 2)).unwrap();
        let h2 = Hypersurface::new(&q("-3*x0*x1", 2)).unwrap();
        assert_eq!(h1, h2);
        assert!(Hypersurface::new(&q("x0 + 1", 2)).is_err());
        assert!(Hypersurface::new(&q("5", 2)).is_err());
    }

    #[test]
    fn joint_scaling_is_canonical() {
        let a = Morphism::new(1, 2, vec![q("2*x0^2", 2), q("4*x1^2", 2)]).unwrap();
        let b = Morphism::new(1, 2, vec![q("1/2*x0^2", 2), q("x1^2", 2)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.hash(), b.hash());
    }
}
