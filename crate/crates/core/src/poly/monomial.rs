//! Monomials and monomial orders.
//!
//! The intrinsic `Ord` on `Monomial` is graded reverse lexicographic, so a
//! `BTreeMap<Monomial, _>` iterates in ascending grevlex order and the last
//! entry is the grevlex leading term. Elimination orders are expressed
//! separately through [`MonomialOrder`] and consulted explicitly where the
//! active order matters (Groebner bases, leading-term extraction).

use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Exponent vector; one slot per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Grevlex comparison restricted to a subset of variable slots.
fn grevlex_on<'a, I>(a: &Monomial, b: &Monomial, idx: I) -> Ordering
where
    I: Iterator<Item = &'a usize> + DoubleEndedIterator + Clone,
{
    let da: u32 = idx.clone().map(|&i| a.0[i]).sum();
    let db: u32 = idx.clone().map(|&i| b.0[i]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the larger monomial has the smaller exponent at the
    // last position where they differ.
    for &i in idx.rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.0.len()).rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

/// The monomial orders the engine works with.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic on all variables.
    GrevLex,
    /// Block elimination order: the `eliminated` variables dominate
    /// (grevlex within the block), ties broken by grevlex on the rest.
    Block { eliminated: BTreeSet<usize> },
}

impl MonomialOrder {
    pub fn elim<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        MonomialOrder::Block {
            eliminated: vars.into_iter().collect(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block { eliminated } => {
                let kept: Vec<usize> = (0..a.0.len()).filter(|i| !eliminated.contains(i)).collect();
                let elim: Vec<usize> = eliminated.iter().copied().collect();
                match grevlex_on(a, b, elim.iter()) {
                    Ordering::Equal => grevlex_on(a, b, kept.iter()),
                    ord => ord,
                }
            }
        }
    }
}
