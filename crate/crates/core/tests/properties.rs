//! Property tests for the polynomial kernel and the ideal engine.

use num_traits::{One, Signed};
use proptest::prelude::*;

use pncrit::poly::divide::{divisibility_order, try_div_exact};
use pncrit::poly::gcd::{gcd, squarefree_part};
use pncrit::poly::parse::{format_poly, parse_poly};
use pncrit::poly::resultant::{macaulay_resultant, sylvester_resultant};
use pncrit::ideal::{normal_form, Ideal};
use pncrit::{Monomial, MonomialOrder, Poly, Scalar};

fn scalar(c: i64) -> Scalar {
    Scalar::from_integer(c.into())
}

fn poly_from(nvars: usize, terms: Vec<(Vec<u32>, i64)>) -> Poly {
    let mut p = Poly::zero(nvars);
    for (exps, c) in terms {
        if c == 0 {
            continue;
        }
        let t = Poly::from_terms(nvars, [(Monomial(exps), scalar(c))]);
        p = &p + &t;
    }
    p
}

/// Sparse polynomial in `nvars` variables, per-variable degree <= max_deg.
fn small_poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), -6i64..=6),
        0..6,
    )
    .prop_map(move |terms| poly_from(nvars, terms))
}

fn nonzero_poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    small_poly(nvars, max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Homogeneous form of exact degree d (possibly zero).
fn homogeneous_form(nvars: usize, d: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0..nvars, d as usize), -4i64..=4),
        1..5,
    )
    .prop_map(move |terms| {
        let converted = terms
            .into_iter()
            .map(|(slots, c)| {
                let mut exps = vec![0u32; nvars];
                for s in slots {
                    exps[s] += 1;
                }
                (exps, c)
            })
            .collect();
        poly_from(nvars, converted)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(
        a in small_poly(3, 3),
        b in small_poly(3, 3),
        c in small_poly(3, 3),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Poly::zero(3));
    }

    #[test]
    fn parse_format_round_trip(p in small_poly(3, 4)) {
        prop_assume!(!p.is_zero());
        let text = format_poly(&p);
        prop_assert_eq!(parse_poly(&text, 3).unwrap(), p);
    }

    #[test]
    fn normalize_idempotent(p in nonzero_poly(3, 4)) {
        let n1 = p.normalize();
        prop_assert!(n1.is_normalized());
        prop_assert_eq!(n1.normalize(), n1.clone());
    }

    #[test]
    fn homogeneous_products(
        a in homogeneous_form(3, 2),
        b in homogeneous_form(3, 3),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.homogeneous_degree(), Some(5));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gcd_divides_and_cofactors_coprime(
        u in nonzero_poly(2, 2),
        a in nonzero_poly(2, 2),
        b in nonzero_poly(2, 2),
    ) {
        let p = &u * &a;
        let q = &u * &b;
        let g = gcd(&p, &q);
        // u divides the gcd, the gcd divides both inputs
        prop_assert!(try_div_exact(&g, &u.normalize()).is_some());
        let pc = try_div_exact(&p, &g).unwrap();
        let qc = try_div_exact(&q, &g).unwrap();
        prop_assert!(gcd(&pc, &qc).is_constant());
    }

    #[test]
    fn squarefree_part_laws(p in nonzero_poly(2, 3)) {
        prop_assume!(!p.is_constant());
        let s = squarefree_part(&p);
        prop_assert!(try_div_exact(&p, &s).is_some());
        let sq = &p * &p;
        prop_assert_eq!(squarefree_part(&sq), s);
    }

    #[test]
    fn divisibility_order_exact(
        p in nonzero_poly(2, 2),
        r in nonzero_poly(2, 2),
        k in 1u32..=3,
    ) {
        prop_assume!(!p.is_constant());
        prop_assume!(gcd(&p, &r).is_constant());
        let mut q = r.clone();
        for _ in 0..k {
            q = &q * &p;
        }
        let ord = divisibility_order(&q, &p.normalize()).unwrap();
        prop_assert_eq!(ord, k);
        // the defining property, checked by division
        let mut rem = q.clone();
        for _ in 0..k {
            rem = try_div_exact(&rem, &p.normalize()).unwrap();
        }
        prop_assert!(try_div_exact(&rem, &p.normalize()).is_none());
    }

    #[test]
    fn sylvester_multiplicative(
        g1 in homogeneous_form(2, 2),
        g2 in homogeneous_form(2, 2),
        h in homogeneous_form(2, 2),
    ) {
        prop_assume!(!g1.is_zero() && !g2.is_zero() && !h.is_zero());
        let lhs = sylvester_resultant(&(&g1 * &g2), &h, 0);
        let rhs = &sylvester_resultant(&g1, &h, 0) * &sylvester_resultant(&g2, &h, 0);
        // equal up to canonical sign
        prop_assert!(lhs == rhs || lhs == -&rhs);
    }
}

fn spoly(a: &Poly, b: &Poly, order: &MonomialOrder) -> Poly {
    let (ma, ca) = a.leading_term(order).unwrap();
    let (mb, cb) = b.leading_term(order).unwrap();
    let lcm: Vec<u32> = ma
        .0
        .iter()
        .zip(mb.0.iter())
        .map(|(x, y)| *x.max(y))
        .collect();
    let fa = Monomial(lcm.iter().zip(ma.0.iter()).map(|(l, x)| l - x).collect());
    let fb = Monomial(lcm.iter().zip(mb.0.iter()).map(|(l, x)| l - x).collect());
    let left = a.mul_monomial(&fa).scale(&(Scalar::one() / ca.clone()));
    let right = b.mul_monomial(&fb).scale(&(Scalar::one() / cb.clone()));
    &left - &right
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn groebner_spolys_reduce_to_zero(
        a in nonzero_poly(3, 2),
        b in nonzero_poly(3, 2),
        c in nonzero_poly(3, 2),
    ) {
        let order = MonomialOrder::GrevLex;
        let ideal = Ideal::new(3, vec![a, b, c]).unwrap();
        let basis = ideal.groebner(&order).unwrap();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = spoly(&basis[i], &basis[j], &order);
                let r = normal_form(&s, &basis, &order).unwrap();
                prop_assert!(r.is_zero(), "S({i},{j}) did not reduce");
            }
        }
    }

    #[test]
    fn elimination_permutation_equivariant(
        a in nonzero_poly(3, 2),
        b in nonzero_poly(3, 2),
    ) {
        // swapping the two surviving variables commutes with eliminating x0
        let ideal = Ideal::new(3, vec![a.clone(), b.clone()]).unwrap();
        let elim_then_swap: Vec<Poly> = ideal
            .elimination(&[0])
            .unwrap()
            .groebner(&MonomialOrder::GrevLex)
            .unwrap()
            .iter()
            .map(|p| p.permute_vars(&[1, 0]))
            .map(|p| p.normalize())
            .collect();
        let swapped = Ideal::new(
            3,
            vec![a.permute_vars(&[0, 2, 1]), b.permute_vars(&[0, 2, 1])],
        )
        .unwrap();
        let swap_then_elim: Vec<Poly> = swapped
            .elimination(&[0])
            .unwrap()
            .groebner(&MonomialOrder::GrevLex)
            .unwrap()
            .iter()
            .map(|p| p.normalize())
            .collect();
        let key = |ps: &[Poly]| {
            let mut v: Vec<String> = ps.iter().map(format_poly).collect();
            v.sort();
            v
        };
        prop_assert_eq!(key(&elim_then_swap), key(&swap_then_elim));
    }

    #[test]
    fn principal_ideal_dimension(p in nonzero_poly(3, 3)) {
        prop_assume!(!p.is_constant());
        let ideal = Ideal::new(3, vec![p]).unwrap();
        prop_assert_eq!(ideal.dimension().unwrap(), 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn macaulay_agrees_with_groebner_emptiness(
        f in homogeneous_form(3, 2),
        g in homogeneous_form(3, 2),
        h in homogeneous_form(3, 1),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let forms = vec![f, g, h];
        if let Ok(res) = macaulay_resultant(&forms, &[0, 1, 2]) {
            let ideal = Ideal::new(3, forms).unwrap();
            let empty = ideal.projective_is_empty().unwrap();
            prop_assert_eq!(!res.is_zero(), empty);
        }
    }
}

#[test]
fn resultant_abs_is_sign_insensitive() {
    // pin down the "canonical sign" caveat used above on one concrete case
    let f = parse_poly("x0^2 - x1^2", 2).unwrap();
    let g = parse_poly("x0 - x1", 2).unwrap();
    let h = parse_poly("x0 + 2*x1", 2).unwrap();
    let lhs = sylvester_resultant(&(&f * &g), &h, 0);
    let rhs = &sylvester_resultant(&f, &h, 0) * &sylvester_resultant(&g, &h, 0);
    let lt = lhs.leading_term(&MonomialOrder::GrevLex).unwrap().1.abs();
    let rt = rhs.leading_term(&MonomialOrder::GrevLex).unwrap().1.abs();
    assert_eq!(lt, rt);
}
