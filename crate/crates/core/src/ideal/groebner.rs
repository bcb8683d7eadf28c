//! Buchberger's algorithm with Gebauer-Moeller pair culling.
//!
//! Normal selection strategy, full inter-reduction at the end, and primitive
//! integer normalization after every reduction to keep coefficients small.
//! Output is deterministic for a fixed generator list and order.

use crate::error::Result;
use crate::limits;
use crate::poly::{Monomial, MonomialOrder, Poly, Scalar};

/// Full normal form of `p` modulo `basis` under `order`.
pub fn normal_form(p: &Poly, basis: &[Poly], order: &MonomialOrder) -> Result<Poly> {
    let nvars = p.nvars();
    let leads: Vec<(Monomial, Scalar)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("basis elements are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rem = Poly::zero(nvars);
    let mut cur = p.clone();
    while !cur.is_zero() {
        limits::check_bits(cur.coeff_bits())?;
        let (lm, lc) = {
            let (m, c) = cur.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        match leads.iter().position(|(gm, _)| gm.divides(&lm)) {
            Some(i) => {
                let q = lm.checked_div(&leads[i].0).unwrap();
                let coef = &lc / &leads[i].1;
                let t = Poly::from_terms(nvars, [(q, coef)]);
                cur = &cur - &(&t * &basis[i]);
            }
            None => {
                let t = Poly::from_terms(nvars, [(lm.clone(), lc)]);
                rem = &rem + &t;
                cur = &cur - &t;
            }
        }
    }
    Ok(rem)
}

fn spoly(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let tf = Poly::from_terms(f.nvars(), [(l.checked_div(fm).unwrap(), Scalar::one())]);
    let tg = Poly::from_terms(
        f.nvars(),
        [(l.checked_div(gm).unwrap(), fc / gc)],
    );
    &(&tf * f) - &(&tg * g)
}

use num_traits::One;

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Moeller update: fold generator `t` (index of the new element)
/// into the pair set.
fn update_pairs(
    pairs: &mut Vec<Pair>,
    basis: &[Poly],
    t: usize,
    order: &MonomialOrder,
) {
    let lt = |k: usize| basis[k].leading_monomial(order).unwrap();
    let new_lt = lt(t).clone();

    // cull old pairs strictly dominated by the newcomer
    pairs.retain(|p| {
        let l = &p.lcm;
        if !new_lt.divides(l) {
            return true;
        }
        let li = lt(p.i).lcm(&new_lt);
        let lj = lt(p.j).lcm(&new_lt);
        li == *l || lj == *l
    });

    // candidate new pairs
    let mut cand: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: lt(i).lcm(&new_lt),
        })
        .collect();
    // drop a candidate when another candidate's lcm properly divides it
    let keep: Vec<bool> = cand
        .iter()
        .enumerate()
        .map(|(a, pa)| {
            !cand.iter().enumerate().any(|(b, pb)| {
                a != b
                    && pb.lcm.divides(&pa.lcm)
                    && (pb.lcm != pa.lcm || b < a)
            })
        })
        .collect();
    let mut kept: Vec<Pair> = cand
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();
    // Buchberger's first criterion: coprime leading terms reduce to zero
    kept.retain(|p| !lt(p.i).is_coprime_with(&new_lt));
    pairs.extend(kept);
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
pub fn groebner(gens: &[Poly], order: &MonomialOrder) -> Result<Vec<Poly>> {
    let nvars = gens
        .first()
        .map(|g| g.nvars())
        .expect("at least one generator");
    let mut basis: Vec<Poly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        assert_eq!(g.nvars(), nvars);
        if g.is_zero() {
            continue;
        }
        let r = normal_form(g, &basis, order)?.normalize();
        if !r.is_zero() {
            basis.push(r);
            update_pairs(&mut pairs, &basis, basis.len() - 1, order);
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm under the order, then by indices
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, _)| k)
            .unwrap();
        let p = pairs.swap_remove(best);
        limits::check_degree(p.lcm.total_degree())?;
        let s = spoly(&basis[p.i], &basis[p.j], order);
        let r = normal_form(&s, &basis, order)?.normalize();
        if !r.is_zero() {
            basis.push(r);
            update_pairs(&mut pairs, &basis, basis.len() - 1, order);
        }
    }

    Ok(reduce_basis(basis, order))
}

/// Minimalize and fully reduce; sort ascending by leading monomial.
fn reduce_basis(mut basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    // minimal: drop elements whose leading term another element divides
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        let la = basis[a].leading_monomial(order).unwrap().clone();
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let lb = basis[b].leading_monomial(order).unwrap();
            if *lb == la {
                // identical leads: keep the earlier
                if b < a {
                    keep[a] = false;
                    break;
                }
            } else if lb.divides(&la) {
                keep[a] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // reduced: tail-reduce each element against the others
    let mut out = Vec::with_capacity(basis.len());
    for a in 0..basis.len() {
        let others: Vec<Poly> = basis
            .iter()
            .enumerate()
            .filter_map(|(b, g)| if b != a { Some(g.clone()) } else { None })
            .collect();
        let r = normal_form(&basis[a], &others, order)
            .expect("reduction of an existing element stays within caps")
            .normalize();
        if !r.is_zero() {
            out.push(r);
        }
    }
    out.sort_by(|f, g| {
        order.cmp(
            f.leading_monomial(order).unwrap(),
            g.leading_monomial(order).unwrap(),
        )
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn affine_pair() {
        // (x-1, y-x) -> {x-1, y-1}
        let g = groebner(&[q("x0 - 1", 2), q("x1 - x0", 2)], &MonomialOrder::GrevLex).unwrap();
        // ascending leading-term order: x1 precedes x0 in grevlex
        assert_eq!(g, vec![q("x1 - 1", 2), q("x0 - 1", 2)]);
    }

    #[test]
    fn principal_is_normalized_generator() {
        let g = groebner(&[q("2*x0^2 - 4*x1^2", 2)], &MonomialOrder::GrevLex).unwrap();
        assert_eq!(g, vec![q("x0^2 - 2*x1^2", 2)]);
    }

    #[test]
    fn spolys_reduce_to_zero() {
        let gens = [q("x0^2 + x1*x2", 3), q("x1^2 - x0*x2", 3), q("x0*x1 + x2^2", 3)];
        let ord = MonomialOrder::GrevLex;
        let g = groebner(&gens, &ord).unwrap();
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                let s = spoly(&g[a], &g[b], &ord);
                assert!(normal_form(&s, &g, &ord).unwrap().is_zero());
            }
        }
        // every original generator lies in the ideal
        for f in &gens {
            assert!(normal_form(f, &g, &ord).unwrap().is_zero());
        }
    }

    #[test]
    fn unit_ideal_collapses() {
        let g = groebner(&[q("x0", 1), q("x0 - 1", 1)], &MonomialOrder::GrevLex).unwrap();
        assert_eq!(g, vec![Poly::one(1)]);
    }

    #[test]
    fn elimination_order_finds_relation() {
        // eliminate x0 from (x1 - x0^2, x2 - x0^3): expect x1^3 - x2^2 among the kept part
        let ord = MonomialOrder::elim([0usize]);
        let g = groebner(&[q("x1 - x0^2", 3), q("x2 - x0^3", 3)], &ord).unwrap();
        let kept: Vec<&Poly> = g.iter().filter(|p| p.degree_in(0) == 0).collect();
        assert!(kept
            .iter()
            .any(|p| **p == q("x1^3 - x2^2", 3) || **p == q("x2^2 - x1^3", 3)));
    }
}
