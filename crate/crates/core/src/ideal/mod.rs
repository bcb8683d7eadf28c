//! Ideals of Q[x0..xn] and the operations built on Groebner bases.

pub mod groebner;
pub mod solve;

use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Poly};

pub use groebner::normal_form;

/// A finitely generated ideal with a per-order basis cache.
#[derive(Debug)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Poly>,
    cache: Mutex<Vec<(MonomialOrder, Vec<Poly>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            nvars: self.nvars,
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.generators == other.generators
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Poly>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ZeroInput);
        }
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::NvarsMismatch(nvars, g.nvars()));
            }
        }
        Ok(Ideal {
            nvars,
            generators,
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Reduced Groebner basis under `order`, computed once per order.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Vec<Poly>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some((_, b)) = cache.iter().find(|(o, _)| o == order) {
                return Ok(b.clone());
            }
        }
        let basis = groebner::groebner(&self.generators, order)?;
        let mut cache = self.cache.lock().unwrap();
        if !cache.iter().any(|(o, _)| o == order) {
            cache.push((order.clone(), basis.clone()));
        }
        Ok(basis)
    }

    pub fn contains_one(&self) -> Result<bool> {
        let b = self.groebner(&MonomialOrder::GrevLex)?;
        Ok(b.len() == 1 && b[0].is_constant() && !b[0].is_zero())
    }

    pub fn membership(&self, p: &Poly) -> Result<bool> {
        if p.nvars() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, p.nvars()));
        }
        let b = self.groebner(&MonomialOrder::GrevLex)?;
        Ok(normal_form(p, &b, &MonomialOrder::GrevLex)?.is_zero())
    }

    /// Rabinowitsch: p vanishes on V(I) iff 1 is in I + (1 - y*p).
    pub fn radical_membership(&self, p: &Poly) -> Result<bool> {
        if p.nvars() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, p.nvars()));
        }
        if p.is_zero() {
            return Ok(true);
        }
        let y = self.nvars;
        let mut gens: Vec<Poly> = self
            .generators
            .iter()
            .map(|g| g.extend_vars(1))
            .collect();
        let rab = &Poly::one(y + 1) - &(&Poly::var(y + 1, y) * &p.extend_vars(1));
        gens.push(rab);
        Ideal::new(y + 1, gens)?.contains_one()
    }

    /// Saturation (I : p^infinity) via a fresh inverse variable.
    pub fn saturation(&self, p: &Poly) -> Result<Ideal> {
        if p.is_zero() {
            return Err(Error::ZeroInput);
        }
        let y = self.nvars;
        let mut gens: Vec<Poly> = self
            .generators
            .iter()
            .map(|g| g.extend_vars(1))
            .collect();
        gens.push(&Poly::one(y + 1) - &(&Poly::var(y + 1, y) * &p.extend_vars(1)));
        let big = Ideal::new(y + 1, gens)?;
        let elim = big.elimination(&[y])?;
        if elim.generators.is_empty() {
            // saturated to the zero ideal: keep a zero generator placeholder
            return Ideal::new(self.nvars, vec![Poly::zero(self.nvars)]);
        }
        Ideal::new(self.nvars, elim.generators)
    }

    /// Elimination ideal: basis elements free of the `drop` variables,
    /// returned in the compressed ring on the remaining slots (relative
    /// order preserved).
    pub fn elimination(&self, drop: &[usize]) -> Result<Ideal> {
        for &v in drop {
            if v >= self.nvars {
                return Err(Error::VarIndex(v, self.nvars));
            }
        }
        if drop.len() >= self.nvars {
            return Err(Error::Invalid("cannot eliminate every variable".into()));
        }
        let order = MonomialOrder::elim(drop.iter().copied());
        let basis = self.groebner(&order)?;
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !drop.contains(i)).collect();
        let kept: Vec<Poly> = basis
            .into_iter()
            .filter(|g| drop.iter().all(|&v| g.degree_in(v) == 0))
            .map(|g| g.drop_vars(drop))
            .collect();
        let nv = keep.len();
        if kept.is_empty() {
            return Ideal::new(nv, vec![Poly::zero(nv)]);
        }
        Ideal::new(nv, kept)
    }

    /// Emptiness in P^{n-1}: every coordinate lies in the radical.
    pub fn projective_is_empty(&self) -> Result<bool> {
        for g in &self.generators {
            if !g.is_zero() && g.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous);
            }
        }
        for i in 0..self.nvars {
            if !self.radical_membership(&Poly::var(self.nvars, i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Affine Krull dimension of V(I); -1 for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        let basis = self.groebner(&MonomialOrder::GrevLex)?;
        if basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero() {
            return Ok(-1);
        }
        let leads: Vec<&crate::poly::Monomial> = basis
            .iter()
            .map(|g| g.leading_monomial(&MonomialOrder::GrevLex).unwrap())
            .collect();
        // largest independent set: no leading monomial supported inside S
        let n = self.nvars;
        assert!(n <= 24, "dimension by subset enumeration needs few variables");
        let mut best = 0i64;
        for mask in 0u32..(1u32 << n) {
            let size = mask.count_ones() as i64;
            if size <= best {
                continue;
            }
            let independent = leads.iter().all(|m| {
                m.0.iter()
                    .enumerate()
                    .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        Ok(best)
    }
}
