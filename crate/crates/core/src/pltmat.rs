//! Matrices over K acting as pseudo-linear transformations, companion
//! matrices, (S,D)-similarity and the metro equation
//! C_h·X − S(X)·C_g − D(X) = U.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algset;
use crate::error::{Error, Result};
use crate::ground::{Ctx, Deriv, Elem, Family, QPoly, RatFn, RingCtx};
use crate::matrix::MatK;
use crate::orepoly::OrePoly;

/// T_A(v) = S(v)·A + D(v) for a row vector v.
pub fn t_action(a: &MatK, v: &[Elem]) -> Result<Vec<Elem>> {
    if !a.is_square() || v.len() != a.rows() {
        return Err(Error::ShapeMismatch("T_A needs a square matrix and a matching row".into()));
    }
    let k = a.ctx();
    for e in v {
        k.check(e)?;
    }
    let sv = MatK::from_fn(k, 1, v.len(), |_, j| k.s(&v[j]));
    let prod = sv.mul(a)?;
    Ok((0..v.len()).map(|j| k.add(prod.get(0, j), &k.d(&v[j]))).collect())
}

/// L_A(u) = A·S⁻¹(u) − D(S⁻¹(u)) for a column vector u.
pub fn l_action(a: &MatK, u: &[Elem]) -> Result<Vec<Elem>> {
    if !a.is_square() || u.len() != a.rows() {
        return Err(Error::ShapeMismatch("L_A needs a square matrix and a matching column".into()));
    }
    let k = a.ctx();
    let su: Vec<Elem> = u.iter().map(|e| k.s_inv(e)).collect::<Result<_>>()?;
    let col = MatK::from_fn(k, su.len(), 1, |i, _| su[i].clone());
    let prod = a.mul(&col)?;
    Ok((0..u.len()).map(|i| k.sub(prod.get(i, 0), &k.d(&su[i]))).collect())
}

/// S(P)·A·P⁻¹ + D(P)·P⁻¹.
pub fn sd_transform(a: &MatK, p: &MatK) -> Result<MatK> {
    let pinv = p.inverse()?;
    sd_transform_with_inverse(a, p, &pinv)
}

pub(crate) fn sd_transform_with_inverse(a: &MatK, p: &MatK, pinv: &MatK) -> Result<MatK> {
    p.s().mul(a)?.add(&p.d())?.mul(pinv)
}

/// A·P = S(P)·B + D(P): P is the matrix of a morphism between the modules of A and B.
pub fn morphism_check(p: &MatK, a: &MatK, b: &MatK) -> Result<bool> {
    if a.cols() != p.rows() || p.cols() != b.rows() {
        return Err(Error::ShapeMismatch("morphism check dimensions".into()));
    }
    Ok(a.mul(p)? == p.s().mul(b)?.add(&p.d())?)
}

/// C_f: ones on the superdiagonal, last row −a_0, …, −a_{n−1}.
pub fn companion(f: &OrePoly) -> Result<MatK> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let k = f.ctx();
    let n = f.deg();
    Ok(MatK::from_fn(k, n, n, |i, j| {
        if i + 1 == n {
            k.neg(&f.coeff(j))
        } else if j == i + 1 {
            k.one()
        } else {
            k.zero()
        }
    }))
}

/// C(p_r, …, p_1): block upper-bidiagonal with C_{p_1}, …, C_{p_r} on the
/// diagonal and a single 1 in the bottom-left corner of each coupling block.
/// The factors are listed in product order, so the matrix describes p_r⋯p_1.
pub fn companion_chain(ctx: &Ctx, factors: &[OrePoly]) -> Result<MatK> {
    let blocks: Vec<MatK> = factors.iter().rev().map(companion).collect::<Result<_>>()?;
    let mut m = MatK::block_diag(ctx, &blocks);
    let mut offset = 0;
    for b in blocks.iter().take(blocks.len().saturating_sub(1)) {
        let end = offset + b.rows();
        if b.rows() > 0 {
            m.set(end - 1, end, ctx.one());
        }
        offset = end;
    }
    Ok(m)
}

/// Rows: coordinates of t^j·(p_{k−1}⋯p_1), j < deg p_k, k = 1…r, in the
/// basis 1, t, …, t^{n−1}. sd_transform(C_f, P) is the chain matrix.
pub fn chain_basis(ctx: &Ctx, factors: &[OrePoly]) -> Result<MatK> {
    let n: usize = factors.iter().map(OrePoly::deg).sum();
    let mut rows = Vec::with_capacity(n);
    let mut prefix = OrePoly::one(ctx);
    for p in factors.iter().rev() {
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut cur = prefix.clone();
        for _ in 0..p.deg() {
            rows.push((0..n).map(|i| cur.coeff(i)).collect::<Vec<_>>());
            cur = cur.t_times();
        }
        prefix = p.mul(&prefix);
    }
    MatK::from_rows(ctx, rows)
}

/// Whether sd_transform(C_f, P) = C_g, i.e. P witnesses the similarity of f and g.
pub fn similar_polys(f: &OrePoly, g: &OrePoly, p: &MatK) -> Result<bool> {
    if f.deg() != g.deg() {
        return Ok(false);
    }
    let (cf, cg) = (companion(f)?, companion(g)?);
    if p.rows() != cf.rows() || !p.is_square() || !p.is_invertible() {
        return Ok(false);
    }
    morphism_check(p, &cg, &cf)
}

/// Exhaustive witness search for f ∼ g over a finite K (degree ≤ 3).
pub fn similarity_witness(f: &OrePoly, g: &OrePoly) -> Result<Option<MatK>> {
    let k = f.ctx();
    if f.deg() != g.deg() {
        return Ok(None);
    }
    let n = f.deg();
    if n > 3 {
        return Err(Error::capability("similarity witness search is capped at size 3"));
    }
    let elems = k.elements()?;
    let q = elems.len() as u64;
    let total = q.checked_pow((n * n) as u32).ok_or(Error::capability("search too large"))?;
    let (cf, cg) = (companion(f)?, companion(g)?);
    for mut idx in 0..total {
        let p = MatK::from_fn(k, n, n, |_, _| {
            let e = elems[(idx % q) as usize].clone();
            idx /= q;
            e
        });
        if morphism_check(&p, &cg, &cf)? && p.is_invertible() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// C_h·X − S(X)·C_g − D(X).
pub fn metro_residual(ch: &MatK, cg: &MatK, x: &MatK) -> Result<MatK> {
    ch.mul(x)?.sub(&x.s().mul(cg)?)?.sub(&x.d())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetroVerdict {
    Solved(MatK),
    NoSolution,
    /// The bounded ansatz was exhausted without deciding.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetroInstance {
    pub g: OrePoly,
    pub h: OrePoly,
    /// n×l with a single 1 at (row n, column 1).
    pub u: MatK,
    pub verdict: MetroVerdict,
}

impl MetroInstance {
    pub fn solution(&self) -> Option<&MatK> {
        match &self.verdict {
            MetroVerdict::Solved(x) => Some(x),
            _ => None,
        }
    }

    /// Independent re-substitution of the solution.
    pub fn verify(&self) -> Result<bool> {
        match &self.verdict {
            MetroVerdict::Solved(x) => {
                Ok(metro_residual(&companion(&self.h)?, &companion(&self.g)?, x)? == self.u)
            }
            _ => Ok(true),
        }
    }
}

/// e_{n,1} of shape n×l.
pub fn metro_unit(ctx: &Ctx, n: usize, l: usize) -> MatK {
    let mut u = MatK::zeros(ctx, n, l);
    if n > 0 && l > 0 {
        u.set(n - 1, 0, ctx.one());
    }
    u
}

/// Default numerator degree bound of the ℚ(x) ansatz.
pub fn default_ansatz_bound(g: &OrePoly, h: &OrePoly) -> usize {
    2 * (g.deg() + h.deg())
}

pub fn metro_solve(g: &OrePoly, h: &OrePoly) -> Result<MetroInstance> {
    metro_solve_with(g, h, None)
}

/// Solves C_h·X − S(X)·C_g − D(X) = e_{n,1} with n = deg h, l = deg g.
pub fn metro_solve_with(g: &OrePoly, h: &OrePoly, ansatz_bound: Option<usize>) -> Result<MetroInstance> {
    let k = g.ctx();
    if k != h.ctx() {
        return Err(Error::MixedContexts);
    }
    let (ch, cg) = (companion(h)?, companion(g)?);
    let u = metro_unit(k, ch.rows(), cg.rows());
    let bound = ansatz_bound.unwrap_or_else(|| default_ansatz_bound(g, h));
    let verdict = solve_sylvester(&ch, &cg, &u, bound)?;
    let inst = MetroInstance {
        g: g.clone(),
        h: h.clone(),
        u,
        verdict,
    };
    if !inst.verify()? {
        return Err(Error::InvariantBreach("metro solution does not re-substitute".into()));
    }
    Ok(inst)
}

/// Solves A·X − S(X)·B − D(X) = U for X over any supported context.
pub fn solve_sylvester(a: &MatK, b: &MatK, u: &MatK, ansatz_bound: usize) -> Result<MetroVerdict> {
    let k = a.ctx();
    let (n, l) = (a.rows(), b.rows());
    if u.rows() != n || u.cols() != l {
        return Err(Error::ShapeMismatch("right-hand side of the metro equation".into()));
    }
    if n == 0 || l == 0 {
        return Ok(MetroVerdict::Solved(MatK::zeros(k, n, l)));
    }
    if let Some(lb) = k.linear_base() {
        let f = |xs: &[Elem]| -> Result<Vec<Elem>> {
            let x = MatK::from_fn(k, n, l, |i, j| xs[i * l + j].clone());
            Ok(metro_residual(a, b, &x)?.entries().to_vec())
        };
        return Ok(match lb.solve(n * l, f, u.entries())? {
            Some(xs) => MetroVerdict::Solved(MatK::from_fn(k, n, l, |i, j| xs[i * l + j].clone())),
            None => MetroVerdict::NoSolution,
        });
    }
    if matches!(k.family(), Family::RationalFunctions) && *k.deriv() == Deriv::DdX {
        return rational_ansatz(a, b, u, ansatz_bound);
    }
    Err(Error::capability(format!("metro equation over {k}")))
}

fn ratfn(e: &Elem) -> &RatFn {
    match e {
        Elem::RatFn(r) => r,
        _ => unreachable!("rational function entry"),
    }
}

/// Over ℚ(x) with D = d/dx: X = N/Q with Q = L^k (L the common denominator of
/// A and B, k ≤ 2) and deg N ≤ bound; the polynomial identity is linear in the
/// coefficients of N.
fn rational_ansatz(a: &MatK, b: &MatK, u: &MatK, bound: usize) -> Result<MetroVerdict> {
    let k = a.ctx();
    let (n, l) = (a.rows(), b.rows());
    let lden = a
        .entries()
        .iter()
        .chain(b.entries())
        .chain(u.entries())
        .fold(QPoly::one(), |acc, e| {
            let d = ratfn(e).den();
            acc.mul(&d.div_rem(&acc.gcd(d)).0)
        });
    let poly_of = |e: &Elem| {
        let r = ratfn(e);
        r.num().mul(&lden.div_rem(r.den()).0)
    };
    let ahat: Vec<QPoly> = a.entries().iter().map(poly_of).collect();
    let bhat: Vec<QPoly> = b.entries().iter().map(poly_of).collect();
    let uhat: Vec<QPoly> = u.entries().iter().map(poly_of).collect();
    let qctx = RingCtx::rationals();
    for power in 0..=2usize {
        let q = lden.pow(power);
        let dq = q.derivative();
        let qq = q.mul(&q);
        // Multiplying by L·Q²: Â N Q − N B̂ Q − L(N'Q − N Q') = Û Q².
        let nunk = n * l * (bound + 1);
        let mut columns: Vec<Vec<QPoly>> = Vec::with_capacity(nunk);
        for i0 in 0..n {
            for j0 in 0..l {
                for p in 0..=bound {
                    let mono = QPoly::x().pow(p);
                    let dmono = mono.derivative();
                    let mut out = vec![QPoly::zero(); n * l];
                    // (Â N)_{i,j0} = Â_{i,i0} x^p
                    for i in 0..n {
                        let t = ahat[i * n + i0].mul(&mono).mul(&q);
                        out[i * l + j0] = out[i * l + j0].add(&t);
                    }
                    // (N B̂)_{i0,j} = x^p B̂_{j0,j}
                    for j in 0..l {
                        let t = mono.mul(&bhat[j0 * l + j]).mul(&q);
                        out[i0 * l + j] = out[i0 * l + j].sub(&t);
                    }
                    let dterm = dmono.mul(&q).sub(&mono.mul(&dq)).mul(&lden);
                    out[i0 * l + j0] = out[i0 * l + j0].sub(&dterm);
                    columns.push(out);
                }
            }
        }
        let target: Vec<QPoly> = uhat.iter().map(|p| p.mul(&qq)).collect();
        let width = columns
            .iter()
            .flatten()
            .chain(&target)
            .filter_map(QPoly::degree)
            .max()
            .map_or(1, |d| d + 1);
        let coeff = |p: &QPoly, m: usize| -> Elem {
            Elem::Rational(p.coeffs().get(m).cloned().unwrap_or_else(BigRational::zero))
        };
        let rows = n * l * width;
        let mat = MatK::from_fn(&qctx, rows, nunk, |r, c| coeff(&columns[c][r / width], r % width));
        let rhs: Vec<Elem> = (0..rows).map(|r| coeff(&target[r / width], r % width)).collect();
        if let Some(sol) = mat.solve(&rhs)? {
            let x = MatK::from_fn(k, n, l, |i, j| {
                let base = (i * l + j) * (bound + 1);
                let num = QPoly::new(
                    (0..=bound)
                        .map(|p| match &sol[base + p] {
                            Elem::Rational(r) => r.clone(),
                            _ => unreachable!(),
                        })
                        .collect(),
                );
                Elem::RatFn(RatFn::new(num, q.clone()))
            });
            if metro_residual(a, b, &x)? == *u {
                return Ok(MetroVerdict::Solved(x));
            }
            return Err(Error::InvariantBreach("ansatz solution does not re-substitute".into()));
        }
    }
    Ok(MetroVerdict::Unknown)
}

/// (x, y) with x·g + h·y = 1, deg y < deg g, deg x < deg h, if one exists.
pub fn cofactor_search(g: &OrePoly, h: &OrePoly) -> Result<Option<(OrePoly, OrePoly)>> {
    let k = g.ctx();
    if k != h.ctx() {
        return Err(Error::MixedContexts);
    }
    if g.is_zero() || h.is_zero() {
        return Err(Error::Precondition("cofactor search needs nonzero polynomials".into()));
    }
    let (l, n) = (g.deg(), h.deg());
    if l == 0 {
        return Ok(Some((OrePoly::constant(k, k.inv(&g.lc())?), OrePoly::zero(k))));
    }
    let Some(lb) = k.linear_base() else {
        return Err(Error::capability(format!("cofactor search over {k}")));
    };
    let width = n + l;
    let f = |v: &[Elem]| -> Result<Vec<Elem>> {
        let x = OrePoly::new(k, v[..n].to_vec());
        let y = OrePoly::new(k, v[n..].to_vec());
        let s = x.mul(g).add(&h.mul(&y));
        Ok((0..width).map(|i| s.coeff(i)).collect())
    };
    let mut target = vec![k.zero(); width];
    target[0] = k.one();
    Ok(lb.solve(n + l, f, &target)?.map(|v| {
        let x = OrePoly::new(k, v[..n].to_vec());
        let y = OrePoly::new(k, v[n..].to_vec());
        debug_assert!(x.mul(g).add(&h.mul(&y)).is_one());
        (x, y)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWReport {
    /// Whether g·h is Wedderburn; `None` when the metro verdict is unknown.
    pub verdict: Option<bool>,
    pub metro: MetroInstance,
    /// is_wedderburn(g·h) computed independently on finite rings.
    pub direct: Option<bool>,
}

/// For Wedderburn g and h: g·h is Wedderburn iff the metro equation is solvable.
pub fn product_w_check(g: &OrePoly, h: &OrePoly, ansatz_bound: Option<usize>) -> Result<ProductWReport> {
    let k = g.ctx();
    if k.is_finite() {
        for p in [g, h] {
            if !algset::is_wedderburn(p)? {
                return Err(Error::Precondition(format!("{p} is not a Wedderburn polynomial")));
            }
        }
    }
    let metro = metro_solve_with(g, h, ansatz_bound)?;
    let verdict = match metro.verdict {
        MetroVerdict::Solved(_) => Some(true),
        MetroVerdict::NoSolution => Some(false),
        MetroVerdict::Unknown => None,
    };
    let direct = if k.is_finite() || k.is_classical() {
        algset::is_wedderburn(&g.mul(h)).ok()
    } else {
        None
    };
    if let (Some(v), Some(d)) = (verdict, direct) {
        if v != d {
            return Err(Error::InvariantBreach(format!(
                "metro solvability {v} disagrees with the root count {d}"
            )));
        }
    }
    Ok(ProductWReport { verdict, metro, direct })
}

/// Monic irreducible right divisors of f (finite K).
pub fn irreducible_right_divisors(f: &OrePoly) -> Result<Vec<OrePoly>> {
    let k = f.ctx();
    let mut out: Vec<OrePoly> = Vec::new();
    for d in 1..=f.deg() {
        for p in OrePoly::monic_of_degree(k, d)? {
            if !f.right_divisible_by(&p) {
                continue;
            }
            // irreducible iff no right divisor of smaller positive degree
            if out.iter().any(|q| q.deg() < d && p.right_divisible_by(q)) {
                continue;
            }
            let reducible = (1..d).any(|e| {
                OrePoly::monic_of_degree(k, e)
                    .map(|cands| cands.iter().any(|q| p.right_divisible_by(q)))
                    .unwrap_or(false)
            });
            if !reducible {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// R·f is an intersection of maximal left ideals: the llcm of the irreducible
/// right divisors of f is f itself.
pub fn fully_reducible_check(f: &OrePoly) -> Result<bool> {
    let k = f.ctx();
    if f.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    if !k.is_finite() {
        return Err(Error::capability("divisor enumeration needs a finite ring"));
    }
    if f.deg() == 0 {
        return Ok(true);
    }
    let divs = irreducible_right_divisors(f)?;
    let mut m = OrePoly::one(k);
    for p in &divs {
        m = m.llcm(p)?.0;
    }
    Ok(m == f.monic())
}

/// Product p_r⋯p_1 of factors listed in product order.
pub fn chain_product(ctx: &Ctx, factors: &[OrePoly]) -> OrePoly {
    factors.iter().fold(OrePoly::one(ctx), |acc, p| acc.mul(p))
}

/// (−1)^i x^i / i! for i = 1…m over ℚ(x).
pub fn alternating_exponential_row(ctx: &Ctx, m: usize) -> Result<Vec<Elem>> {
    let mut out = Vec::with_capacity(m);
    let mut fact = BigInt::one();
    for i in 1..=m {
        fact *= BigInt::from(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = BigRational::new(BigInt::from(sign), fact.clone());
        let p = QPoly::x().pow(i).scale(&c);
        let e = Elem::RatFn(RatFn::from_poly(p));
        ctx.check(&e)?;
        out.push(e);
    }
    Ok(out)
}
