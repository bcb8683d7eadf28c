//! The hyperplane construction: a degree-d self-map of P^n whose coordinate
//! forms are products of linear forms, built so that the distinguished point
//! q = [0 : ... : 0 : 1] has fiber e*q + (d^n - e) distinct simple points.
//!
//! The linear forms are chosen inductively. Where the source argument only
//! needs "a form not vanishing at finitely many points" (existence over an
//! infinite field), we enumerate integer dual vectors in growing boxes, with
//! the seed permuting the visiting order inside each box shell, so the result
//! is reproducible.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::{Morphism, ProjPoint};
use crate::error::{Error, Result};
use crate::poly::{scalar_int, Poly, Scalar};

const MAX_SHELL_RADIUS: i64 = 12;

/// An index map sigma: {1..n} -> {1..d} labeling one branch of the fiber
/// system L_{1,sigma(1)} = ... = L_{n,sigma(n)} = 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IndexMap {
    pub sigma: Vec<u32>,
}

/// The constructed map together with its minimally branched fiber data:
/// fiber_divisor(map, q) = e*p + simple points, all distinct.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BranchWitness {
    pub map: Morphism,
    pub q: ProjPoint,
    pub p: ProjPoint,
    pub simple_points: Vec<ProjPoint>,
    pub e: u32,
}

/// Affine linear form c[0]*X_1 + ... + c[n-1]*X_n + c[n].
type AffForm = Vec<Scalar>;

fn eval_aff(form: &AffForm, pt: &[Scalar]) -> Scalar {
    let n = pt.len();
    let mut v = form[n].clone();
    for i in 0..n {
        v = v + form[i].clone() * &pt[i];
    }
    v
}

/// Solve the n x n affine system rows[k] . (X, 1) = 0; None when singular.
fn solve_aff(rows: &[AffForm], n: usize) -> Option<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.clone()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].clone();
        for j in col..=n {
            m[col][j] = m[col][j].clone() / &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..=n {
                    let delta = factor.clone() * &m[col][j];
                    m[r][j] = m[r][j].clone() - delta;
                }
            }
        }
    }
    Some((0..n).map(|i| -m[i][n].clone()).collect())
}

fn rank(vectors: &[&[Scalar]], width: usize) -> usize {
    let mut m: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.to_vec()).collect();
    let mut r = 0;
    for col in 0..width {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        for i in r + 1..m.len() {
            if !m[i][col].is_zero() {
                let factor = m[i][col].clone() / &m[r][col];
                for j in col..width {
                    let delta = factor.clone() * &m[r][j];
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// Integer vectors of sup-norm exactly `radius` in `dim` slots, primitive and
/// sign-normalized, in an rng-shuffled but deterministic order.
fn shell(dim: usize, radius: i64, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    let width = 2 * radius + 1;
    let count = (width as u64).pow(dim as u32);
    for idx in 0..count {
        let mut v = Vec::with_capacity(dim);
        let mut rem = idx;
        for _ in 0..dim {
            v.push(rem as i64 % width - radius);
            rem /= width as u64;
        }
        if v.iter().map(|a| a.abs()).max() != Some(radius) {
            continue;
        }
        let lead = v.iter().find(|a| **a != 0).copied().unwrap_or(0);
        if lead < 0 {
            continue;
        }
        let g = v.iter().fold(0i64, |acc, a| num_integer::gcd(acc, a.abs()));
        if g != 1 {
            continue;
        }
        out.push(v);
    }
    out.shuffle(rng);
    out
}

fn to_scalars(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&a| scalar_int(a)).collect()
}

/// Homogenize an affine form using x_n as the hyperplane at infinity.
fn homogenize(form: &AffForm, n: usize) -> Poly {
    let nv = n + 1;
    let mut p = Poly::zero(nv);
    for (i, c) in form.iter().enumerate() {
        p = &p + &Poly::var(nv, if i < n { i } else { n }).scale(c);
    }
    p
}

/// The general-position forms L_{1,2..e} through q: every n-subset of the
/// chosen forms plus the coordinate forms must have full rank.
fn forms_through_q(n: usize, e: u32, rng: &mut ChaCha8Rng) -> Result<Vec<AffForm>> {
    if n == 1 {
        // on P^1 the only line through q is X_1 = 0 itself, so the branch
        // order comes from a repeated factor X_1^e in f_1
        let mut f = vec![Scalar::zero(); 2];
        f[0] = scalar_int(1);
        return Ok(vec![f; (e - 1) as usize]);
    }
    if e == 2 && n == 2 {
        // the classical choice X_1 - X_2; fine exactly when n = 2
        let mut f = vec![Scalar::zero(); n + 1];
        f[0] = scalar_int(1);
        f[1] = scalar_int(-1);
        return Ok(vec![f]);
    }
    // For n >= 3 the X_1 - X_2 choice is degenerate: X_1 and X_1 - X_2 cut
    // the plane {X_1 = X_2 = 0}, which sits inside {X_2 = 0}, so every later
    // system with sigma(2) = 1 would duplicate its solution across
    // sigma(1) = 1 and 2. The general-position search below forces every
    // coefficient of the chosen forms to be nonzero, which rules that out.
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let coord: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = scalar_int(1);
            v
        })
        .collect();
    let mut radius = 1;
    while chosen.len() < (e - 1) as usize {
        if radius > MAX_SHELL_RADIUS {
            return Err(Error::SearchExhausted);
        }
        for cand in shell(n, radius, rng) {
            let cv = to_scalars(&cand);
            let mut pool: Vec<&[Scalar]> = coord.iter().map(|v| v.as_slice()).collect();
            pool.extend(chosen.iter().map(|v| v.as_slice()));
            if !subsets_full_rank(&pool, &cv, n) {
                continue;
            }
            chosen.push(cv);
            if chosen.len() == (e - 1) as usize {
                break;
            }
        }
        radius += 1;
    }
    Ok(chosen
        .into_iter()
        .map(|mut v| {
            v.push(Scalar::zero());
            v
        })
        .collect())
}

/// Every n-subset of pool + cand that contains cand has rank n.
fn subsets_full_rank(pool: &[&[Scalar]], cand: &[Scalar], n: usize) -> bool {
    fn rec<'a>(
        pool: &[&'a [Scalar]],
        start: usize,
        picked: &mut Vec<&'a [Scalar]>,
        need: usize,
        cand: &[Scalar],
        n: usize,
    ) -> bool {
        if picked.len() == need {
            let mut vecs: Vec<&[Scalar]> = picked.clone();
            vecs.push(cand);
            return rank(&vecs, n) == n;
        }
        for i in start..pool.len() {
            picked.push(pool[i]);
            let ok = rec(pool, i + 1, picked, need, cand, n);
            picked.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(pool, 0, &mut Vec::new(), n - 1, cand, n)
}

/// Build the minimally branched map of the given shape. The seed only
/// reorders the candidate search; every output is checked the same way.
pub fn hyperplane_construction(n: usize, d: u32, e: u32, seed: u64) -> Result<BranchWitness> {
    if n < 1 || d < 2 || e < 2 || e > d {
        return Err(Error::Invalid(
            "hyperplane construction needs n >= 1, d >= 2, 2 <= e <= d".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // rows 0..n of affine linear forms; row i holds the factors of f_{i+1}
    let mut rows: Vec<Vec<AffForm>> = (0..n)
        .map(|i| {
            let mut f = vec![Scalar::zero(); n + 1];
            f[i] = scalar_int(1);
            vec![f]
        })
        .collect();
    rows[0].extend(forms_through_q(n, e, &mut rng)?);

    // solved points, indexed by sigma over the currently available columns
    let origin = vec![Scalar::zero(); n];
    let mut solved: Vec<(IndexMap, Vec<Scalar>)> = Vec::new();
    for j in 1..=e {
        let mut sigma = vec![1u32; n];
        sigma[0] = j;
        let sys: Vec<AffForm> = (0..n).map(|i| rows[i][sigma[i] as usize - 1].clone()).collect();
        let pt = solve_aff(&sys, n).ok_or(Error::Invalid(
            "initial forms through q are degenerate".into(),
        ))?;
        if pt != origin {
            return Err(Error::Invalid("initial collision point is not q".into()));
        }
        solved.push((IndexMap { sigma }, pt));
    }

    while let Some(t) = (0..n).find(|&i| rows[i].len() < d as usize) {
        let mut placed = false;
        let mut radius = 1;
        'search: while radius <= MAX_SHELL_RADIUS {
            for cand in shell(n + 1, radius, &mut rng) {
                let form = to_scalars(&cand);
                if solved.iter().any(|(_, p)| eval_aff(&form, p).is_zero()) {
                    continue;
                }
                // proper intersection and freshness of every new sigma
                let mut new_points: Vec<(IndexMap, Vec<Scalar>)> = Vec::new();
                let mut ok = true;
                for rest in sigma_grid(&rows, t) {
                    let mut sigma = rest.clone();
                    sigma[t] = rows[t].len() as u32 + 1;
                    let sys: Vec<AffForm> = (0..n)
                        .map(|i| {
                            if i == t {
                                form.clone()
                            } else {
                                rows[i][sigma[i] as usize - 1].clone()
                            }
                        })
                        .collect();
                    let Some(pt) = solve_aff(&sys, n) else {
                        ok = false;
                        break;
                    };
                    if solved.iter().any(|(_, p)| *p == pt)
                        || new_points.iter().any(|(_, p)| *p == pt)
                    {
                        ok = false;
                        break;
                    }
                    new_points.push((IndexMap { sigma }, pt));
                }
                if !ok {
                    continue;
                }
                rows[t].push(form);
                solved.extend(new_points);
                placed = true;
                break 'search;
            }
            radius += 1;
        }
        if !placed {
            return Err(Error::SearchExhausted);
        }
    }

    // distinctness table: e copies of q, everything else distinct
    let at_q: Vec<&IndexMap> = solved
        .iter()
        .filter(|(_, p)| *p == origin)
        .map(|(s, _)| s)
        .collect();
    if at_q.len() != e as usize {
        return Err(Error::Invalid("collision pattern is not e copies of q".into()));
    }
    let others: Vec<&Vec<Scalar>> = solved
        .iter()
        .filter(|(_, p)| *p != origin)
        .map(|(_, p)| p)
        .collect();
    let expected = (d as u64).pow(n as u32) - e as u64;
    if others.len() as u64 != expected {
        return Err(Error::Invalid("wrong simple point count".into()));
    }
    for a in 0..others.len() {
        for b in a + 1..others.len() {
            if others[a] == others[b] {
                return Err(Error::Invalid("duplicate simple point".into()));
            }
        }
    }

    let nv = n + 1;
    let mut coords: Vec<Poly> = rows
        .iter()
        .map(|row| {
            row.iter()
                .fold(Poly::one(nv), |acc, form| &acc * &homogenize(form, n))
        })
        .collect();
    coords.push(Poly::var(nv, n).pow(d));
    let map = Morphism::new(n, d, coords)?;

    let proj = |aff: &[Scalar]| -> Result<ProjPoint> {
        let mut c = aff.to_vec();
        c.push(scalar_int(1));
        ProjPoint::new(&c)
    };
    let q = proj(&origin)?;
    let simple_points: Result<Vec<ProjPoint>> = others.iter().map(|p| proj(p)).collect();
    Ok(BranchWitness {
        map,
        p: q.clone(),
        q,
        simple_points: simple_points?,
        e,
    })
}

/// All sigma with sigma(i) over the filled columns of row i, slot t frozen
/// at a placeholder.
fn sigma_grid(rows: &[Vec<AffForm>], t: usize) -> Vec<Vec<u32>> {
    let n = rows.len();
    let mut out: Vec<Vec<u32>> = vec![vec![0; n]];
    for i in 0..n {
        let reach: Vec<u32> = if i == t {
            vec![0]
        } else {
            (1..=rows[i].len() as u32).collect()
        };
        out = out
            .into_iter()
            .flat_map(|base| {
                reach.iter().map(move |&j| {
                    let mut s = base.clone();
                    s[i] = j;
                    s
                })
            })
            .collect();
    }
    out
}
