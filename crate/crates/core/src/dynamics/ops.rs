//! Geometry of a morphism: critical and branch loci, images and pullbacks
//! of hypersurfaces, fibers with multiplicity, fixed loci, smoothness, and
//! degree bookkeeping.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::{FiberDivisor, Hypersurface, Morphism, ProjPoint};
use crate::error::{Error, Result};
use crate::ideal::{solve::rational_zeros, Ideal};
use crate::limits;
use crate::poly::det::jacobian_determinant;
use crate::poly::divide::{divisibility_order, try_div_exact};
use crate::poly::gcd::{gcd, squarefree_part};
use crate::poly::resultant::macaulay_resultant;
use crate::poly::{Poly, Scalar};

/// Critical locus: the raw Jacobian determinant (degree (n+1)(d-1)) and its
/// reduced hypersurface.
pub fn critical_locus(f: &Morphism) -> Result<(Poly, Hypersurface)> {
    let raw = jacobian_determinant(f.coords())?;
    assert!(
        !raw.is_zero(),
        "Jacobian determinant vanishes identically for a morphism in characteristic 0"
    );
    let expected = (f.n() as u32 + 1) * (f.d() - 1);
    assert_eq!(raw.total_degree(), expected, "critical degree law");
    if f.d() == 1 {
        return Err(Error::Invalid("degree-1 maps have empty critical locus".into()));
    }
    Ok((raw.clone(), Hypersurface::new(&raw)?))
}

/// Pullback of a hypersurface form: composition with the coordinates.
pub fn pullback(f: &Morphism, h: &Hypersurface) -> Result<Poly> {
    h.form().compose(f.coords())
}

/// Reduced image f(V(H)) as a hypersurface.
///
/// The form splits as (product of coordinate hyperplanes) x (rest); images
/// of the pieces are computed separately and multiplied. Each piece has a
/// coordinate x_s not dividing it, so a single saturation by x_s removes
/// the cone-origin component without deleting honest components that lie
/// inside other coordinate hyperplanes.
pub fn image_hypersurface(f: &Morphism, h: &Hypersurface) -> Result<Hypersurface> {
    let nv = f.n() + 1;
    let mut rest = h.form().clone();
    let mut parts: Vec<Poly> = Vec::new();
    for i in 0..nv {
        let xi = Poly::var(nv, i);
        if let Some(q) = try_div_exact(&rest, &xi) {
            parts.push(xi);
            rest = q;
        }
    }
    if !rest.is_constant() {
        parts.push(rest);
    }
    let mut total = Poly::one(nv);
    for g in &parts {
        let hg = image_of_factor(f, g)?;
        total = &total * &hg;
    }
    let total = squarefree_part(&total);

    // contract checks
    let out = Hypersurface::new(&total)?;
    let pb = pullback(f, &out)?;
    if try_div_exact(&pb, h.form()).is_none() {
        return Err(Error::Invalid(
            "image containment check failed: H does not divide the pullback of its image".into(),
        ));
    }
    let bound = f.d().pow(f.n() as u32 - 1).saturating_mul(h.degree());
    if out.degree() > bound {
        return Err(Error::Invalid(format!(
            "image degree {} exceeds d^(n-1)*deg(H) = {}",
            out.degree(),
            bound
        )));
    }
    Ok(out)
}

/// Image of a hyperplane V(g) by implicitization: parametrize V(g) by
/// P^{n-1}, restrict f to the parameters, and take a Macaulay resultant of
/// the incidence forms y_i g_c - y_c g_i. The resultant vanishes exactly on
/// the image together with V(y_c) (the forms degenerate when y_c = 0 at a
/// zero of g_c), so stripping y_c powers leaves the image. Returns None
/// when the resultant degenerates; the caller falls back to the general
/// resultant path or elimination.
fn image_of_linear_factor(f: &Morphism, g: &Poly) -> Result<Option<Poly>> {
    let nv = f.n() + 1;
    let n = f.n();
    let coef: Vec<Scalar> = (0..nv)
        .map(|i| {
            let mut e = vec![Scalar::zero(); nv];
            e[i] = crate::poly::scalar_int(1);
            g.eval(&e)
        })
        .collect::<Result<_>>()?;
    let j = match coef.iter().position(|c| !c.is_zero()) {
        Some(j) => j,
        None => return Ok(None),
    };
    // x_i = u_(slot of i) for i != j, x_j solved from g = 0
    let mut param = vec![Poly::zero(n); nv];
    let mut xj = Poly::zero(n);
    let mut slot = 0usize;
    for i in 0..nv {
        if i == j {
            continue;
        }
        param[i] = Poly::var(n, slot);
        let ratio = -(&coef[i] / &coef[j]);
        xj = &xj + &Poly::var(n, slot).scale(&ratio);
        slot += 1;
    }
    param[j] = xj;
    let restricted: Vec<Poly> = f
        .coords()
        .iter()
        .map(|fi| fi.compose(&param))
        .collect::<Result<_>>()?;
    let c = match restricted.iter().position(|gi| !gi.is_zero()) {
        Some(c) => c,
        None => return Ok(None),
    };
    // ring: u_0..u_{n-1}, y_0..y_{nv-1}
    let big = n + nv;
    let gc = restricted[c].extend_vars(nv);
    let forms: Vec<Poly> = (0..nv)
        .filter(|&i| i != c)
        .map(|i| {
            let gi = restricted[i].extend_vars(nv);
            &(&Poly::var(big, n + i) * &gc) - &(&Poly::var(big, n + c) * &gi)
        })
        .collect();
    let uvars: Vec<usize> = (0..n).collect();
    let res = match macaulay_resultant(&forms, &uvars) {
        Ok(r) => r,
        Err(Error::MacaulayDegenerate) => return Ok(None),
        Err(e) => return Err(e),
    };
    if res.is_zero() {
        return Ok(None);
    }
    let mut h = res.drop_vars(&uvars);
    let yc = Poly::var(nv, c);
    while let Some(q) = try_div_exact(&h, &yc) {
        h = q;
    }
    if h.is_constant() {
        return Ok(None);
    }
    Ok(Some(squarefree_part(&h)))
}

/// Image of V(g) by implicitization: the Macaulay resultant in x of the
/// forms (g, y_i f_c - y_c f_i for i != c) vanishes exactly on
/// f(V(g)) u V(y_c). The spurious part: at y_c = 0 the forms have a common
/// zero on V(g) n V(f_c), nonempty for n >= 2; away from y_c = 0 a common
/// zero forces y ~ f(x) with x in V(g) since f has no base points. So
/// stripping y_c powers leaves the image. Returns None when the resultant
/// path degenerates; the caller falls back to elimination.
fn image_by_resultant(f: &Morphism, g: &Poly) -> Result<Option<Poly>> {
    let nv = f.n() + 1;
    if f.n() < 2 {
        return Ok(None);
    }
    let xvars: Vec<usize> = (0..nv).collect();
    for c in 0..nv {
        // ring: x_0..x_{nv-1}, y_0..y_{nv-1}
        let big = 2 * nv;
        let extend = |p: &Poly| p.extend_vars(nv);
        let mut forms = vec![extend(g)];
        for i in 0..nv {
            if i == c {
                continue;
            }
            forms.push(
                &(&Poly::var(big, nv + i) * &extend(&f.coords()[c]))
                    - &(&Poly::var(big, nv + c) * &extend(&f.coords()[i])),
            );
        }
        let res = match macaulay_resultant(&forms, &xvars) {
            Ok(r) => r,
            Err(Error::MacaulayDegenerate) => continue,
            Err(e) => return Err(e),
        };
        if res.is_zero() {
            continue;
        }
        let mut h = res.drop_vars(&xvars);
        let yc = Poly::var(nv, c);
        while let Some(q) = try_div_exact(&h, &yc) {
            h = q;
        }
        if h.is_constant() {
            continue;
        }
        return Ok(Some(squarefree_part(&h)));
    }
    Ok(None)
}

/// Image of one squarefree piece g with some coordinate x_s not dividing it.
fn image_of_factor(f: &Morphism, g: &Poly) -> Result<Poly> {
    let nv = f.n() + 1;
    if g.total_degree() == 1 && f.n() >= 2 {
        if let Some(h) = image_of_linear_factor(f, g)? {
            return Ok(h);
        }
    }
    if let Some(h) = image_by_resultant(f, g)? {
        return Ok(h);
    }
    let s = (0..nv)
        .find(|&i| try_div_exact(g, &Poly::var(nv, i)).is_none())
        .expect("a squarefree form cannot be divisible by every coordinate");
    // ring: x_0..x_{nv-1}, y_0..y_{nv-1}; the chart x_s = 1 is dense in
    // every component of V(g) since x_s does not divide g, so
    // dehomogenizing saturates the cone point for free
    let big = 2 * nv;
    let extend = |p: &Poly| p.extend_vars(nv);
    let mut gens: Vec<Poly> = vec![extend(g)];
    for i in 0..nv {
        for j in i + 1..nv {
            let m = &(&Poly::var(big, nv + i) * &extend(&f.coords()[j]))
                - &(&Poly::var(big, nv + j) * &extend(&f.coords()[i]));
            gens.push(m);
        }
    }
    let one = crate::poly::scalar_int(1);
    let gens: Vec<Poly> = gens
        .iter()
        .map(|p| p.substitute(&[(s, one.clone())]).drop_vars(&[s]))
        .filter(|p| !p.is_zero())
        .collect();
    let ideal = Ideal::new(big - 1, gens)?;
    let drop: Vec<usize> = (0..nv - 1).collect();
    let elim = ideal.elimination(&drop)?;
    let mut h = Poly::zero(nv);
    for p in elim.generators() {
        h = gcd(&h, p);
    }
    if h.is_zero() || h.is_constant() {
        return Err(Error::EliminationNotPrincipal(elim.generators().len()));
    }
    Ok(squarefree_part(&h))
}

/// Branch locus B_f = f(C_f), reduced.
pub fn branch_locus(f: &Morphism) -> Result<Hypersurface> {
    let (_, reduced) = critical_locus(f)?;
    image_hypersurface(f, &reduced)
}

/// Ramification multiplicity of f along the component(s) cut out by `c`:
/// the order of c in the pullback of the image of V(c).
pub fn multiplicity_along(f: &Morphism, c: &Poly) -> Result<u32> {
    let (raw, _) = critical_locus(f)?;
    if try_div_exact(&raw, c).is_none() {
        return Err(Error::Invalid(
            "factor does not divide the critical determinant".into(),
        ));
    }
    let h = image_hypersurface(f, &Hypersurface::new(c)?)?;
    let pb = pullback(f, &h)?;
    divisibility_order(&pb, &c.normalize())
}

/// Degree ratio d^{n-1} * deg(H) / deg(f(V(H))): the generic degree of the
/// restriction when V(H) is irreducible.
pub fn degree_ratio(f: &Morphism, h: &Hypersurface) -> Result<Scalar> {
    let img = image_hypersurface(f, h)?;
    let num = f.d().pow(f.n() as u32 - 1) as i64 * h.degree() as i64;
    Ok(crate::poly::scalar_ratio(num, img.degree() as i64))
}

/// Forms cutting out the fiber f^{-1}(q): q_j f_i - q_i f_j for i != j,
/// with j the pivot coordinate of q.
fn fiber_forms(f: &Morphism, q: &ProjPoint) -> Vec<Poly> {
    let j = q.pivot();
    let qc = q.coords();
    (0..=f.n())
        .filter(|&i| i != j)
        .map(|i| {
            let a = f.coords()[i].scale(&qc[j]);
            let b = f.coords()[j].scale(&qc[i]);
            (&a - &b).normalize()
        })
        .collect()
}

/// All rational points of the projective variety cut out by `forms`
/// (assumed finite), via chart-by-chart solving.
pub fn rational_points(forms: &[Poly]) -> Result<Vec<ProjPoint>> {
    let nv = forms[0].nvars();
    let mut out: BTreeSet<ProjPoint> = BTreeSet::new();
    for c in 0..nv {
        let affine: Vec<Poly> = forms
            .iter()
            .map(|g| g.substitute(&[(c, Scalar::from_integer(1.into()))]).drop_vars(&[c]))
            .collect();
        if affine.iter().all(|g| g.is_zero()) {
            return Err(Error::Invalid("variety is not finite".into()));
        }
        let ideal = Ideal::new(nv - 1, affine)?;
        for z in rational_zeros(&ideal)? {
            let mut coords = z;
            coords.insert(c, Scalar::from_integer(1.into()));
            out.insert(ProjPoint::new(&coords)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// The fiber of q as a divisor, with exact multiplicities from a hidden
/// variable resultant. Rational fiber points are found automatically;
/// `hints` may add points the chart search is not trusted to find.
pub fn fiber_divisor(
    f: &Morphism,
    q: &ProjPoint,
    hints: &[ProjPoint],
    seed: u64,
) -> Result<FiberDivisor> {
    let nv = f.n() + 1;
    let expected = f.d().pow(f.n() as u32);
    let forms = fiber_forms(f, q);

    let mut points: BTreeSet<ProjPoint> = rational_points(&forms)?.into_iter().collect();
    for hpt in hints {
        let img = f.apply(hpt)?;
        if img != *q {
            return Err(Error::Invalid(format!("hint {hpt} is not in the fiber")));
        }
        points.insert(hpt.clone());
    }
    let points: Vec<ProjPoint> = points.into_iter().collect();

    // hidden-variable u-resultant: eliminate x from the fiber forms plus
    // ell1(x) - t*ell2(x); multiplicities appear as root orders in t
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u_poly: Option<(Poly, Vec<Scalar>)> = None;
    let retries = limits::DEFAULT_FIBER_RETRIES;
    for _ in 0..retries {
        let l1: Vec<i64> = (0..nv).map(|_| rng.gen_range(-9..=9)).collect();
        let l2: Vec<i64> = (0..nv).map(|_| rng.gen_range(-9..=9)).collect();
        let lin = |coef: &[i64]| {
            let mut p = Poly::zero(nv + 1);
            for (i, &a) in coef.iter().enumerate() {
                p = &p + &Poly::var(nv + 1, i).scale(&crate::poly::scalar_int(a));
            }
            p
        };
        let ell1 = lin(&l1);
        let ell2 = lin(&l2);
        let t = Poly::var(nv + 1, nv);
        let l_form = &ell1 - &(&t * &ell2);
        if l_form.is_zero() {
            continue;
        }
        let mut sys: Vec<Poly> = forms.iter().map(|g| g.extend_vars(1)).collect();
        sys.push(l_form);
        let xvars: Vec<usize> = (0..nv).collect();
        let u = match macaulay_resultant(&sys, &xvars) {
            Ok(u) => u,
            Err(Error::MacaulayDegenerate) => continue,
            Err(e) => return Err(e),
        };
        if u.is_zero() || u.degree_in(nv) != expected {
            continue;
        }
        // each known point must see a finite, collision-free t-value
        let vals: Result<Vec<Scalar>> = points
            .iter()
            .map(|p| {
                let c = p.coords();
                let v2 = ell2.eval(&pad(&c))?;
                if v2.is_zero() {
                    return Err(Error::GenericityExhausted(0));
                }
                let v1 = ell1.eval(&pad(&c))?;
                Ok(v1 / v2)
            })
            .collect();
        let vals = match vals {
            Ok(v) => v,
            Err(_) => continue,
        };
        let mut distinct = vals.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != vals.len() {
            continue;
        }
        u_poly = Some((u.drop_vars(&xvars), vals));
        break;
    }
    let (u, vals) = u_poly.ok_or(Error::GenericityExhausted(retries))?;

    let mut fiber_points = Vec::with_capacity(points.len());
    let mut found = 0u32;
    for (p, tv) in points.iter().zip(vals) {
        let lin = &Poly::var(1, 0) - &Poly::constant(1, tv);
        let m = divisibility_order(&u, &lin)?;
        assert!(m >= 1, "known fiber point must be a root of the u-resultant");
        found += m;
        fiber_points.push((p.clone(), m));
    }
    if found != expected {
        return Err(Error::IrrationalFiberPoint {
            found,
            expected,
        });
    }

    // Lemma 5.2 sanity: multiplicity 1 exactly off the critical locus
    let (raw, _) = critical_locus(f)?;
    for (p, m) in &fiber_points {
        let on_crit = raw.eval(&p.coords())?.is_zero();
        if (*m == 1) == on_crit {
            return Err(Error::Invalid(format!(
                "fiber point {p} has multiplicity {m} but critical membership {on_crit}"
            )));
        }
    }

    fiber_points.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(FiberDivisor {
        target: q.clone(),
        points: fiber_points,
    })
}

fn pad(c: &[Scalar]) -> Vec<Scalar> {
    let mut v = c.to_vec();
    v.push(Scalar::from_integer(0.into()));
    v
}

/// Fixed locus via the 2x2 minors x_j f_i - x_i f_j.
pub fn fixed_locus(f: &Morphism) -> Result<(Ideal, i64, Option<Vec<ProjPoint>>)> {
    if f.d() < 2 {
        return Err(Error::Invalid("fixed locus analysis needs d >= 2".into()));
    }
    let nv = f.n() + 1;
    let mut gens = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            let m = &(&Poly::var(nv, j) * &f.coords()[i]) - &(&Poly::var(nv, i) * &f.coords()[j]);
            gens.push(m.normalize());
        }
    }
    let ideal = Ideal::new(nv, gens.clone())?;
    // affine cone dimension; the cone over a nonempty projective set has
    // dimension >= 1, so the origin never dominates and no irrelevant
    // saturation is needed for the dimension count
    let dim = ideal.dimension()?;
    let proj_dim = dim - 1;
    let points = if proj_dim == 0 {
        let pts = rational_points(&gens)?;
        let bound = (f.d() as u64 + 1).pow(f.n() as u32);
        if (pts.len() as u64) > bound {
            return Err(Error::Invalid(format!(
                "{} fixed points exceed the bound (d+1)^n = {bound}",
                pts.len()
            )));
        }
        Some(pts)
    } else {
        None
    };
    Ok((ideal, proj_dim, points))
}

/// Smoothness of a hypersurface: the form and its gradient have no common
/// projective zero. The gradient system is nv forms in nv variables, so the
/// Macaulay resultant decides it directly (by Euler's relation a common
/// gradient zero lies on the hypersurface); Groebner is the fallback.
pub fn smoothness_check(h: &Hypersurface) -> Result<bool> {
    let nv = h.n() + 1;
    let partials: Vec<Poly> = (0..nv)
        .map(|i| h.form().derivative(i))
        .collect::<Result<_>>()?;
    let xvars: Vec<usize> = (0..nv).collect();
    match macaulay_resultant(&partials, &xvars) {
        Ok(res) => return Ok(!res.is_zero()),
        Err(Error::MacaulayDegenerate) | Err(Error::ConstantInput) => {}
        Err(e) => return Err(e),
    }
    let mut gens = vec![h.form().clone()];
    gens.extend(partials);
    Ideal::new(nv, gens)?.projective_is_empty()
}

/// Genus of a smooth plane curve of degree e: (e-1)(e-2)/2.
pub fn plane_curve_genus(h: &Hypersurface) -> Result<u64> {
    if h.n() != 2 {
        return Err(Error::Invalid("genus formula applies to plane curves".into()));
    }
    if !smoothness_check(h)? {
        return Err(Error::NotSmooth);
    }
    let e = h.degree() as u64;
    Ok((e - 1) * (e - 2) / 2)
}

/// Gradient of a form at a point.
pub fn gradient_at(form: &Poly, p: &ProjPoint) -> Result<Vec<Scalar>> {
    let c = p.coords();
    (0..form.nvars())
        .map(|i| form.derivative(i)?.eval(&c))
        .collect()
}

/// Local multiplicity of the hypersurface V(form) at a point p on it:
/// translate p to the origin of an affine chart and take the lowest total
/// degree among the surviving terms. Multiplicity 1 means smooth point.
pub fn local_multiplicity(form: &Poly, p: &ProjPoint) -> Result<u32> {
    let nv = form.nvars();
    let c = p.coords();
    let m = c
        .iter()
        .rposition(|v| !v.is_zero())
        .ok_or_else(|| Error::Invalid("zero point".into()))?;
    let scale = &c[m];
    let mut images = Vec::with_capacity(nv);
    for i in 0..nv {
        if i == m {
            images.push(Poly::one(nv));
        } else {
            let a = &c[i] / scale;
            images.push(&Poly::var(nv, i) + &Poly::one(nv).scale(&a));
        }
    }
    let local = form.compose(&images)?;
    if local.is_zero() {
        return Err(Error::Invalid("form vanishes identically".into()));
    }
    Ok(local
        .terms()
        .map(|(mono, _)| mono.total_degree())
        .min()
        .unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str, n: usize) -> Poly {
        parse_poly(s, n).unwrap()
    }

    fn power_map(n: usize, d: u32) -> Morphism {
        Morphism::new(n, d, (0..=n).map(|i| Poly::var(n + 1, i).pow(d)).collect()).unwrap()
    }

    fn family_t1() -> Morphism {
        Morphism::new(
            2,
            2,
            vec![q("x0^2 + x1^2", 3), q("x1^2", 3), q("x2^2", 3)],
        )
        .unwrap()
    }

    #[test]
    fn critical_loci() {
        let (raw, red) = critical_locus(&power_map(2, 3)).unwrap();
        assert_eq!(raw.total_degree(), 6);
        assert_eq!(red, Hypersurface::new(&q("x0*x1*x2", 3)).unwrap());
        let (raw1, red1) = critical_locus(&family_t1()).unwrap();
        assert_eq!(raw1.total_degree(), 3);
        assert_eq!(red1, Hypersurface::new(&q("x0*x1*x2", 3)).unwrap());
    }

    #[test]
    fn images_of_hyperplanes() {
        let f = power_map(2, 2);
        let h0 = Hypersurface::new(&q("x0", 3)).unwrap();
        assert_eq!(image_hypersurface(&f, &h0).unwrap(), h0);
        let diag = Hypersurface::new(&q("x0 - x1", 3)).unwrap();
        assert_eq!(image_hypersurface(&f, &diag).unwrap(), diag);
        // f_1 = [x0^2 + x1^2, x1^2, x2^2]: [0:x1:x2] -> [x1^2 : x1^2 : x2^2],
        // so the image of {x0=0} is {x0 = x1}
        let img = image_hypersurface(&family_t1(), &h0).unwrap();
        assert_eq!(img, Hypersurface::new(&q("x0 - x1", 3)).unwrap());
    }

    #[test]
    fn branch_loci() {
        let f = power_map(2, 2);
        assert_eq!(
            branch_locus(&f).unwrap(),
            Hypersurface::new(&q("x0*x1*x2", 3)).unwrap()
        );
        // images of the coordinate planes of f_1: {x0=x1}, {x0=0}... compute
        let b = branch_locus(&family_t1()).unwrap();
        let expect = &(&q("x0 - x1", 3) * &q("x1", 3)) * &q("x2", 3);
        assert_eq!(b, Hypersurface::new(&expect).unwrap());
    }

    #[test]
    fn multiplicity_and_ratio() {
        let f = power_map(2, 2);
        assert_eq!(multiplicity_along(&f, &q("x0", 3)).unwrap(), 2);
        let f3 = power_map(2, 3);
        assert_eq!(multiplicity_along(&f3, &q("x1", 3)).unwrap(), 3);
        let diag = Hypersurface::new(&q("x0 - x1", 3)).unwrap();
        assert_eq!(
            degree_ratio(&f, &diag).unwrap(),
            crate::poly::scalar_int(2)
        );
        let h0 = Hypersurface::new(&q("x0", 3)).unwrap();
        assert_eq!(
            degree_ratio(&family_t1(), &h0).unwrap(),
            crate::poly::scalar_int(2)
        );
    }

    #[test]
    fn fiber_divisors_power_map() {
        let f = power_map(2, 2);
        let q1 = ProjPoint::from_ints(&[1, 1, 1]).unwrap();
        let fd = fiber_divisor(&f, &q1, &[], 7).unwrap();
        assert_eq!(fd.points.len(), 4);
        assert!(fd.points.iter().all(|(_, m)| *m == 1));
        assert_eq!(fd.total_multiplicity(), 4);
        let q0 = ProjPoint::from_ints(&[0, 0, 1]).unwrap();
        let fd0 = fiber_divisor(&f, &q0, &[], 7).unwrap();
        assert_eq!(fd0.points, vec![(q0.clone(), 4)]);
    }

    #[test]
    fn fiber_irrational_detected() {
        // q = [2:1] on P^1 under z^2: fiber is x0^2 = 2 x1^2, irrational
        let f = power_map(1, 2);
        let target = ProjPoint::from_ints(&[2, 1]).unwrap();
        match fiber_divisor(&f, &target, &[], 3) {
            Err(Error::IrrationalFiberPoint { found, expected }) => {
                assert_eq!((found, expected), (0, 2));
            }
            other => panic!("expected IrrationalFiberPoint, got {other:?}"),
        }
    }

    #[test]
    fn fixed_loci() {
        let f1 = power_map(1, 2);
        let (_, dim, pts) = fixed_locus(&f1).unwrap();
        assert_eq!(dim, 0);
        let pts = pts.unwrap();
        assert_eq!(pts.len(), 3);
        let f2 = power_map(2, 2);
        let (_, dim2, pts2) = fixed_locus(&f2).unwrap();
        assert_eq!(dim2, 0);
        assert_eq!(pts2.unwrap().len(), 7);
        let (_, dimf, _) = fixed_locus(&family_t1()).unwrap();
        assert_eq!(dimf, 0);
    }

    #[test]
    fn smoothness_and_genus() {
        let triple = Hypersurface::new(&q("x0*x1*x2", 3)).unwrap();
        assert!(!smoothness_check(&triple).unwrap());
        let fermat = Hypersurface::new(&q("x0^3 + x1^3 + x2^3", 3)).unwrap();
        assert!(smoothness_check(&fermat).unwrap());
        assert_eq!(plane_curve_genus(&fermat).unwrap(), 1);
        let conic = Hypersurface::new(&q("x0^2 + x1^2 - x2^2", 3)).unwrap();
        assert_eq!(plane_curve_genus(&conic).unwrap(), 0);
        assert!(matches!(plane_curve_genus(&triple), Err(Error::NotSmooth)));
    }
}
