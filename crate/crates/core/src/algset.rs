//! Algebraic sets, minimal polynomials, ranks and Wedderburn polynomials.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ground::{self, Ctx, Elem, Family, Quat};
use crate::matrix::MatK;
use crate::orepoly::OrePoly;

/// A finite set of points of K, kept in insertion order without repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicSet {
    ctx: Ctx,
    points: Vec<Elem>,
}

impl AlgebraicSet {
    pub fn new(ctx: &Ctx, points: Vec<Elem>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for p in points {
            ctx.check(&p)?;
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        Ok(AlgebraicSet {
            ctx: ctx.clone(),
            points: out,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn points(&self) -> &[Elem] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPolyResult {
    pub f: OrePoly,
    pub rank: usize,
    pub p_basis: Vec<Elem>,
}

/// Minimal polynomial of a finite list of points, adjoining one point at a
/// time: f ← (t − b^{f(b)})·f whenever f(b) ≠ 0.
pub fn min_poly(ctx: &Ctx, points: &[Elem]) -> Result<MinPolyResult> {
    let mut f = OrePoly::one(ctx);
    let mut basis = Vec::new();
    for b in points {
        ctx.check(b)?;
        let v = f.eval_value(b);
        if ctx.is_zero(&v) {
            continue;
        }
        let root = ctx.conj(b, &v)?;
        f = OrePoly::linear(ctx, &root).mul(&f);
        basis.push(b.clone());
    }
    Ok(MinPolyResult {
        rank: basis.len(),
        f,
        p_basis: basis,
    })
}

pub fn rank(ctx: &Ctx, points: &[Elem]) -> Result<usize> {
    Ok(min_poly(ctx, points)?.rank)
}

/// True iff the listed points are P-independent (rank equals the list length).
pub fn p_independent(ctx: &Ctx, points: &[Elem]) -> Result<bool> {
    Ok(rank(ctx, points)? == points.len())
}

/// Greedy maximal P-independent sublist, in input order.
pub fn p_basis(ctx: &Ctx, points: &[Elem]) -> Result<Vec<Elem>> {
    Ok(min_poly(ctx, points)?.p_basis)
}

/// V(b_1, …, b_n): row i holds N_i(b_1), …, N_i(b_n).
pub fn vandermonde(ctx: &Ctx, points: &[Elem]) -> MatK {
    let n = points.len();
    let cols: Vec<Vec<Elem>> = points
        .iter()
        .map(|b| OrePoly::n_sequence(ctx, b, n.saturating_sub(1)))
        .collect();
    MatK::from_fn(ctx, n, n, |i, j| cols[j][i].clone())
}

pub fn vandermonde_invertible(ctx: &Ctx, points: &[Elem]) -> bool {
    vandermonde(ctx, points).is_invertible()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassKind {
    /// All roots in the class are listed in `members`.
    Enumerated,
    /// Quaternion class given by reduced trace and norm; `members` holds a representative.
    Described { trace: BigRational, norm: BigRational },
}

/// The roots of f lying in one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootClass {
    pub members: Vec<Elem>,
    pub kind: ClassKind,
    /// Dimension of E(f, a) over the centralizer of a representative a.
    pub e_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pub f: OrePoly,
    pub side: Side,
    /// Explicit roots (for described classes, one representative each).
    pub roots: Vec<Elem>,
    pub classes: Vec<RootClass>,
}

impl RootSet {
    /// rk V(f) as the sum of the class e-space dimensions.
    pub fn rank(&self) -> usize {
        self.classes.iter().map(|c| c.e_dim).sum()
    }

    pub fn is_complete_listing(&self) -> bool {
        self.classes.iter().all(|c| c.kind == ClassKind::Enumerated)
    }
}

fn is_root(f: &OrePoly, a: &Elem, side: Side) -> Result<bool> {
    let k = f.ctx();
    Ok(match side {
        Side::Right => k.is_zero(&f.eval_value(a)),
        Side::Left => k.is_zero(&f.left_eval(a)?),
    })
}

/// Exhaustive e-space dimension over a finite K: |ker λ_{f,a}| = |C(a)|^dim.
pub fn e_space_dim(f: &OrePoly, a: &Elem, side: Side) -> Result<usize> {
    let k = f.ctx();
    let elems = k.elements()?;
    let mut kernel = 1u64;
    let mut cent = 1u64;
    for x in elems.iter().skip(1) {
        let ax = match side {
            Side::Right => k.conj(a, x)?,
            Side::Left => k.left_conj(a, x)?,
        };
        if ax == *a {
            cent += 1;
        }
        if is_root(f, &ax, side)? {
            kernel += 1;
        }
    }
    let mut dim = 0;
    let mut size = 1u64;
    while size < kernel {
        size *= cent;
        dim += 1;
    }
    if size != kernel {
        return Err(Error::InvariantBreach(format!(
            "|E| = {kernel} is not a power of |C| = {cent}"
        )));
    }
    Ok(dim)
}

/// Elements of E(f, a) = {x : f(a^x) = 0} ∪ {0} (finite K).
pub fn e_space(f: &OrePoly, a: &Elem) -> Result<Vec<Elem>> {
    let k = f.ctx();
    let mut out = vec![k.zero()];
    for x in k.elements()?.into_iter().skip(1) {
        if k.is_zero(&f.lambda_value(a, &x)) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Splits `roots` into conjugacy classes, first appearance first.
fn split_classes(ctx: &Ctx, roots: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    'next: for r in roots {
        for c in classes.iter_mut() {
            if ctx.same_class(&c[0], r)? {
                c.push(r.clone());
                continue 'next;
            }
        }
        classes.push(vec![r.clone()]);
    }
    Ok(classes)
}

/// The complete root set of f on the given side.
///
/// Supported: finite K (enumeration), classical ℚ (rational root test) and
/// classical ℍ_ℚ for rational polynomials of degree ≤ 2.
pub fn roots(f: &OrePoly, side: Side) -> Result<RootSet> {
    let k = f.ctx();
    if f.is_zero() {
        return Err(Error::Precondition("every element is a root of 0".into()));
    }
    if side == Side::Left && !k.has_inverse() {
        return Err(Error::MapNotAvailable("S^-1"));
    }
    match k.family() {
        Family::Finite(_) => {
            let mut found = Vec::new();
            for a in k.elements()? {
                if is_root(f, &a, side)? {
                    found.push(a);
                }
            }
            let classes = split_classes(k, &found)?
                .into_iter()
                .map(|members| {
                    let e_dim = e_space_dim(f, &members[0], side)?;
                    Ok(RootClass {
                        members,
                        kind: ClassKind::Enumerated,
                        e_dim,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(RootSet {
                f: f.clone(),
                side,
                roots: found,
                classes,
            })
        }
        Family::Rational => {
            let coeffs: Vec<BigRational> = f
                .coeffs()
                .iter()
                .map(|c| match c {
                    Elem::Rational(r) => r.clone(),
                    _ => unreachable!(),
                })
                .collect();
            let found: Vec<Elem> = rational_roots(&coeffs)?.into_iter().map(Elem::Rational).collect();
            Ok(singleton_classes(f, side, found))
        }
        Family::Quaternions if k.is_classical() => quaternion_roots(f, side),
        _ => Err(Error::capability(format!("root finding over {k}"))),
    }
}

fn singleton_classes(f: &OrePoly, side: Side, found: Vec<Elem>) -> RootSet {
    RootSet {
        f: f.clone(),
        side,
        classes: found
            .iter()
            .map(|r| RootClass {
                members: vec![r.clone()],
                kind: ClassKind::Enumerated,
                e_dim: 1,
            })
            .collect(),
        roots: found,
    }
}

fn central_coeffs(f: &OrePoly) -> Option<Vec<BigRational>> {
    f.coeffs()
        .iter()
        .map(|c| match c {
            Elem::Quat(q) if q.is_central() => Some(q.0[0].clone()),
            _ => None,
        })
        .collect()
}

/// Roots of a rational polynomial of degree ≤ 2 in classical ℍ_ℚ.
fn quaternion_roots(f: &OrePoly, side: Side) -> Result<RootSet> {
    let k = f.ctx();
    let Some(c) = central_coeffs(f) else {
        return Err(Error::capability("quaternion roots need rational coefficients"));
    };
    if c.len() > 3 {
        return Err(Error::capability("quaternion roots only up to degree 2"));
    }
    let rational: Vec<Elem> = rational_roots(&c)?
        .into_iter()
        .map(|r| Elem::Quat(Quat::scalar(r)))
        .collect();
    if c.len() < 3 || !rational.is_empty() {
        return Ok(singleton_classes(f, side, rational));
    }
    // t² + bt + c with no rational root: roots are −b/2 + p with p pure, |p|² = c − b²/4.
    let lc = c[2].clone();
    let b = &c[1] / &lc;
    let cc = &c[0] / &lc;
    let two = BigRational::from_integer(2.into());
    let r = &cc - &b * &b / (&two * &two);
    if !r.is_positive() || !sum_of_three_rational_squares(&r) {
        return Ok(singleton_classes(f, side, Vec::new()));
    }
    let p = ground::pure_quaternion_with_norm(&r)
        .ok_or_else(|| Error::capability("no small representative for the root class"))?;
    let rep = Quat::scalar(-&b / &two).add(&p);
    let rep = Elem::Quat(rep);
    debug_assert!(k.is_zero(&f.eval_value(&rep)));
    Ok(RootSet {
        f: f.clone(),
        side,
        roots: vec![rep.clone()],
        classes: vec![RootClass {
            members: vec![rep],
            kind: ClassKind::Described { trace: -b, norm: cc },
            e_dim: 2,
        }],
    })
}

/// Legendre: n/d is a sum of three rational squares iff n·d is not 4^a(8b+7).
pub fn sum_of_three_rational_squares(r: &BigRational) -> bool {
    if r.is_negative() {
        return false;
    }
    let mut n = r.numer() * r.denom();
    if n.is_zero() {
        return true;
    }
    let four = BigInt::from(4);
    while (&n % &four).is_zero() {
        n /= &four;
    }
    n % BigInt::from(8) != BigInt::from(7)
}

fn small_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let limit = BigInt::from(1_000_000u32);
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if d > limit {
            return Err(Error::capability("coefficient too large for the rational root test"));
        }
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Distinct rational roots of Σ c_i x^i, in increasing order.
pub fn rational_roots(c: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut c: Vec<BigRational> = c.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if c[0].is_zero() {
        out.push(BigRational::zero());
        while c.first().is_some_and(Zero::is_zero) {
            c.remove(0);
        }
    }
    if c.len() > 1 {
        let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| (x * &den).to_integer()).collect();
        let eval = |x: &BigRational| c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a);
        for p in small_divisors(&ints[0])? {
            for q in small_divisors(ints.last().unwrap())? {
                for s in [1, -1] {
                    let cand = BigRational::new(&p * s, q.clone());
                    if eval(&cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// rk V(f) = deg f, decided from the complete root set.
pub fn is_wedderburn(f: &OrePoly) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(roots(f, Side::Right)?.rank() == f.deg())
}

/// Outcome of a Wedderburn test; `definitive` is false for certificate mode,
/// which can prove but never refute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnVerdict {
    pub is_w: bool,
    pub definitive: bool,
    pub rank: usize,
    pub degree: usize,
    pub roots: Option<RootSet>,
}

/// Certificate mode: true when the supplied roots are roots of f and span rank deg f.
pub fn is_wedderburn_certified(f: &OrePoly, candidates: &[Elem]) -> Result<WedderburnVerdict> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let k = f.ctx();
    for c in candidates {
        k.check(c)?;
        if !k.is_zero(&f.eval_value(c)) {
            return Err(Error::Precondition(format!("{c} is not a root of {f}")));
        }
    }
    let rank = rank(k, candidates)?;
    Ok(WedderburnVerdict {
        is_w: rank == f.deg(),
        definitive: rank == f.deg(),
        rank,
        degree: f.deg(),
        roots: None,
    })
}

pub fn wedderburn_report(f: &OrePoly) -> Result<WedderburnVerdict> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let rs = roots(f, Side::Right)?;
    let rank = rs.rank();
    Ok(WedderburnVerdict {
        is_w: rank == f.deg(),
        definitive: true,
        rank,
        degree: f.deg(),
        roots: Some(rs),
    })
}

/// Δ̄ = V(f_Δ) (finite K).
pub fn closure(ctx: &Ctx, points: &[Elem]) -> Result<Vec<Elem>> {
    if !ctx.is_finite() {
        return Err(Error::capability("closure needs a finite ring"));
    }
    let f = min_poly(ctx, points)?.f;
    Ok(roots(&f, Side::Right)?.roots)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProductReport {
    /// rk V(gh)
    pub lhs: usize,
    /// rk V(h)
    pub rank_vh: usize,
    /// rk(im φ_h ∩ V(g))
    pub rank_intersection: usize,
    pub holds: bool,
}

/// Both sides of rk V(gh) = rk V(h) + rk(φ_h(K ∖ V(h)) ∩ V(g)) (finite K).
pub fn rank_product_report(g: &OrePoly, h: &OrePoly) -> Result<RankProductReport> {
    let k = g.ctx();
    let elems = k.elements()?;
    let gh = g.mul(h);
    let mut v_gh = Vec::new();
    let mut v_h = Vec::new();
    let mut image = HashSet::new();
    for x in &elems {
        let hx = h.eval_value(x);
        if k.is_zero(&hx) {
            v_h.push(x.clone());
        } else {
            image.insert(k.conj(x, &hx)?);
        }
        if k.is_zero(&gh.eval_value(x)) {
            v_gh.push(x.clone());
        }
    }
    let inter: Vec<Elem> = elems
        .iter()
        .filter(|y| image.contains(*y) && k.is_zero(&g.eval_value(y)))
        .cloned()
        .collect();
    let lhs = rank(k, &v_gh)?;
    let rank_vh = rank(k, &v_h)?;
    let rank_intersection = rank(k, &inter)?;
    Ok(RankProductReport {
        lhs,
        rank_vh,
        rank_intersection,
        holds: lhs == rank_vh + rank_intersection,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImageReport {
    pub image: Vec<Elem>,
    pub image_rank: usize,
    pub rank: usize,
    /// rk(Δ̄ ∩ V(h))
    pub rank_closure_meet: usize,
    pub holds: bool,
}

/// Both sides of rk φ_h(Δ) = rk Δ − rk(Δ̄ ∩ V(h)) for Δ disjoint from V(h).
pub fn phi_image_report(h: &OrePoly, points: &[Elem]) -> Result<PhiImageReport> {
    let k = h.ctx();
    let mut image = Vec::new();
    for b in points {
        let v = h.phi_value(b).map_err(|_| {
            Error::Precondition(format!("{b} is a root of {h}"))
        })?;
        if !image.contains(&v) {
            image.push(v);
        }
    }
    let mp = min_poly(k, points)?;
    let rank_closure_meet = if k.is_finite() {
        let cl = roots(&mp.f, Side::Right)?.roots;
        let meet: Vec<Elem> = cl.into_iter().filter(|y| k.is_zero(&h.eval_value(y))).collect();
        rank(k, &meet)?
    } else {
        // Δ̄ ∩ V(h) = V(d) with d the right gcd; d right-divides the W-polynomial f_Δ.
        if h.is_zero() {
            mp.rank
        } else {
            mp.f.rgcd(h)?.deg()
        }
    };
    let image_rank = rank(k, &image)?;
    Ok(PhiImageReport {
        holds: image_rank + rank_closure_meet == mp.rank,
        image,
        image_rank,
        rank: mp.rank,
        rank_closure_meet,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::RingCtx;

    fn f4() -> Ctx {
        RingCtx::finite(2, 2, 1, None).unwrap()
    }

    fn hq(a: i64, b: i64, c: i64, d: i64) -> Elem {
        Elem::Quat(Quat::from_ints(a, b, c, d))
    }

    #[test]
    fn min_poly_examples() {
        let k = f4();
        let w = k.generator().unwrap();
        let mp = min_poly(&k, &[k.one(), w.clone()]).unwrap();
        assert_eq!(mp.f, OrePoly::new(&k, vec![k.one(), k.zero(), k.one()]));
        assert_eq!(mp.rank, 2);

        let h = RingCtx::quaternions();
        let mp = min_poly(&h, &[hq(0, 1, 0, 0), hq(0, 0, 1, 0)]).unwrap();
        assert_eq!(mp.f, OrePoly::new(&h, vec![h.one(), h.zero(), h.one()]));

        let qx = RingCtx::rational_functions(true);
        let x = qx.generator().unwrap();
        let y = qx.add(&x, &qx.inv(&x).unwrap());
        let mp = min_poly(&qx, &[x.clone(), y]).unwrap();
        assert_eq!(mp.f, OrePoly::linear(&qx, &x).pow(2));
    }

    #[test]
    fn independence_examples() {
        let k = f4();
        let w = k.generator().unwrap();
        assert!(p_independent(&k, &[k.one(), w.clone()]).unwrap());
        let h = RingCtx::quaternions();
        let ijk = [hq(0, 1, 0, 0), hq(0, 0, 1, 0), hq(0, 0, 0, 1)];
        assert!(!p_independent(&h, &ijk).unwrap());
        assert_eq!(p_basis(&h, &ijk).unwrap().len(), 2);
        assert!(!vandermonde_invertible(&h, &ijk));
        assert!(vandermonde_invertible(&k, &[k.one(), w.clone()]));
        assert!(!vandermonde_invertible(&k, &[w.clone(), w.clone()]));
        let v = vandermonde(&k, &[k.one(), w.clone()]);
        assert_eq!(v.to_string(), "[[1,1],[1,w]]");
    }

    #[test]
    fn root_examples() {
        let k = f4();
        let w = k.generator().unwrap();
        let f = OrePoly::new(&k, vec![k.one(), k.zero(), k.one()]);
        let rs = roots(&f, Side::Right).unwrap();
        assert_eq!(rs.roots, vec![k.one(), w.clone(), k.mul(&w, &w)]);
        assert_eq!(rs.classes.len(), 1);
        assert_eq!(rs.classes[0].e_dim, 2);
        let t2 = OrePoly::monomial(&k, k.one(), 2);
        let rs = roots(&t2, Side::Right).unwrap();
        assert_eq!(rs.roots, vec![k.zero()]);
        assert_eq!(rs.rank(), 1);
        assert!(is_wedderburn(&f).unwrap());
        assert!(!is_wedderburn(&t2).unwrap());

        let h = RingCtx::quaternions();
        let f = OrePoly::new(&h, vec![h.from_int(2), h.zero(), h.one()]);
        let rs = roots(&f, Side::Right).unwrap();
        assert_eq!(rs.roots, vec![hq(0, 1, 1, 0)]);
        assert_eq!(
            rs.classes[0].kind,
            ClassKind::Described {
                trace: BigRational::zero(),
                norm: BigRational::from_integer(2.into())
            }
        );
        assert!(is_wedderburn(&f).unwrap());
        // t² + 7 has no quaternion root with rational coordinates
        let f7 = OrePoly::new(&h, vec![h.from_int(7), h.zero(), h.one()]);
        assert!(roots(&f7, Side::Right).unwrap().roots.is_empty());
    }

    #[test]
    fn certificate_mode() {
        let qx = RingCtx::rational_functions(true);
        let x = qx.generator().unwrap();
        let y = qx.add(&x, &qx.inv(&x).unwrap());
        let f = OrePoly::linear(&qx, &x).pow(2);
        let v = is_wedderburn_certified(&f, &[x, y]).unwrap();
        assert!(v.is_w && v.definitive);
        assert!(matches!(is_wedderburn(&f), Err(Error::Capability(_))));
    }

    #[test]
    fn closure_examples() {
        let k = f4();
        let w = k.generator().unwrap();
        assert_eq!(closure(&k, &[k.one(), w.clone()]).unwrap(), vec![k.one(), w.clone(), k.mul(&w, &w)]);
        assert!(closure(&k, &[]).unwrap().is_empty());
        assert_eq!(closure(&k, &[k.zero()]).unwrap(), vec![k.zero()]);
    }

    #[test]
    fn rank_report_examples() {
        let k = f4();
        let t1 = OrePoly::new(&k, vec![k.one(), k.one()]);
        let r = rank_product_report(&t1, &t1).unwrap();
        assert_eq!((r.lhs, r.rank_vh, r.rank_intersection), (2, 1, 1));
        let t = OrePoly::t(&k);
        let r = rank_product_report(&t, &t).unwrap();
        assert_eq!((r.lhs, r.rank_vh, r.rank_intersection), (1, 1, 0));
        let r = rank_product_report(&t1, &OrePoly::one(&k)).unwrap();
        assert_eq!((r.lhs, r.rank_vh, r.rank_intersection), (1, 0, 1));
    }

    #[test]
    fn phi_image_examples() {
        let h = RingCtx::quaternions();
        let tk = OrePoly::new(&h, vec![hq(0, 0, 0, 1), h.one()]);
        let r = phi_image_report(&tk, &[hq(0, 1, 0, 0), hq(0, -1, 0, 0)]).unwrap();
        assert_eq!(r.image, vec![hq(0, 0, 0, 1)]);
        assert_eq!((r.image_rank, r.rank, r.rank_closure_meet), (1, 2, 1));
        assert!(r.holds);

        let k = f4();
        let w = k.generator().unwrap();
        let h = OrePoly::linear(&k, &w);
        let r = phi_image_report(&h, &[k.one()]).unwrap();
        assert_eq!((r.image_rank, r.rank, r.rank_closure_meet), (1, 1, 0));
        assert!(matches!(phi_image_report(&h, &[w]), Err(Error::Precondition(_))));
    }

    #[test]
    fn rational_root_test() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        // 2x^3 - 3x^2 + x = x(2x - 1)(x - 1)
        let r = rational_roots(&[q(0, 1), q(1, 1), q(-3, 1), q(2, 1)]).unwrap();
        assert_eq!(r, vec![q(0, 1), q(1, 2), q(1, 1)]);
        assert!(rational_roots(&[q(1, 1), q(0, 1), q(1, 1)]).unwrap().is_empty());
        assert!(sum_of_three_rational_squares(&q(2, 1)));
        assert!(!sum_of_three_rational_squares(&q(7, 1)));
        assert!(!sum_of_three_rational_squares(&q(28, 1)));
        assert!(!sum_of_three_rational_squares(&q(7, 4)));
    }
}
