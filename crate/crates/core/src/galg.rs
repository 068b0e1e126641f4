//! G-algebraic sets for a finite group G of automorphisms of K (classical
//! case S = id, D = 0): orbits, stabilizer classes, G-minimal polynomials.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::algset::{self, Side};
use crate::canon;
use crate::error::{Error, Result};
use crate::ground::{Ctx, Elem, Family, Quat};
use crate::orepoly::OrePoly;
use crate::pltmat;

/// Largest group the closure will build.
pub const MAX_GROUP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Aut {
    Identity,
    /// a ↦ a^{p^k}
    Frobenius(u32),
    /// a ↦ u a u⁻¹, with u scaled so its first nonzero component is 1
    Inner(Quat),
}

impl fmt::Display for Aut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Aut::Identity => f.write_str("id"),
            Aut::Frobenius(k) => write!(f, "frob^{k}"),
            Aut::Inner(u) => write!(f, "inner({u})"),
        }
    }
}

fn normalize_unit(u: &Quat) -> Quat {
    let lead = u.0.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(|| BigRational::from_integer(1.into()));
    u.scale(&(BigRational::from_integer(1.into()) / lead))
}

/// A finite group of automorphisms of a classical ring context.
#[derive(Clone, Debug)]
pub struct AutGroupCtx {
    ctx: Ctx,
    generators: Vec<Aut>,
    elements: Vec<Aut>,
}

impl AutGroupCtx {
    pub fn new(ctx: &Ctx, generators: Vec<Aut>) -> Result<Self> {
        if !ctx.is_classical() {
            return Err(Error::Precondition("automorphism groups need S = id, D = 0".into()));
        }
        let mut g = AutGroupCtx {
            ctx: ctx.clone(),
            generators: Vec::new(),
            elements: Vec::new(),
        };
        for a in generators {
            let a = g.normalize(a)?;
            if a != Aut::Identity && !g.generators.contains(&a) {
                g.generators.push(a);
            }
        }
        g.elements = g.closure()?;
        Ok(g)
    }

    /// ⟨Frob^k⟩ on 𝔽_{p^m}.
    pub fn frobenius(ctx: &Ctx, k: u32) -> Result<Self> {
        AutGroupCtx::new(ctx, vec![Aut::Frobenius(k)])
    }

    /// ⟨Int(u)⟩ on ℍ_ℚ.
    pub fn inner(ctx: &Ctx, u: Quat) -> Result<Self> {
        AutGroupCtx::new(ctx, vec![Aut::Inner(u)])
    }

    pub fn trivial(ctx: &Ctx) -> Result<Self> {
        AutGroupCtx::new(ctx, Vec::new())
    }

    fn normalize(&self, a: Aut) -> Result<Aut> {
        match (a, self.ctx.family()) {
            (Aut::Identity, _) => Ok(Aut::Identity),
            (Aut::Frobenius(k), Family::Finite(f)) => {
                let k = k % f.m() as u32;
                Ok(if k == 0 { Aut::Identity } else { Aut::Frobenius(k) })
            }
            (Aut::Inner(u), Family::Quaternions) => {
                if u.is_zero() {
                    return Err(Error::ZeroConjugator);
                }
                Ok(if u.is_central() { Aut::Identity } else { Aut::Inner(normalize_unit(&u)) })
            }
            (a, _) => Err(Error::InvalidRing(format!("{a} is not an automorphism of {}", self.ctx))),
        }
    }

    pub fn compose(&self, a: &Aut, b: &Aut) -> Result<Aut> {
        let c = match (a, b) {
            (Aut::Identity, x) | (x, Aut::Identity) => x.clone(),
            (Aut::Frobenius(x), Aut::Frobenius(y)) => Aut::Frobenius(x + y),
            (Aut::Inner(u), Aut::Inner(v)) => Aut::Inner(u.mul(v)),
            _ => return Err(Error::MixedContexts),
        };
        self.normalize(c)
    }

    pub fn inverse(&self, a: &Aut) -> Result<Aut> {
        match a {
            Aut::Identity => Ok(Aut::Identity),
            Aut::Frobenius(k) => {
                let m = self.ctx.finite_field().map_or(1, |f| f.m() as u32);
                self.normalize(Aut::Frobenius(m - k % m))
            }
            Aut::Inner(u) => self.normalize(Aut::Inner(u.conj())),
        }
    }

    fn closure(&self) -> Result<Vec<Aut>> {
        let mut els = vec![Aut::Identity];
        let mut seen: HashSet<Aut> = els.iter().cloned().collect();
        let mut i = 0;
        while i < els.len() {
            for g in &self.generators {
                let c = self.compose(&els[i], g)?;
                if seen.insert(c.clone()) {
                    if els.len() >= MAX_GROUP {
                        return Err(Error::capability("automorphism group is infinite or too large"));
                    }
                    els.push(c);
                }
            }
            i += 1;
        }
        Ok(els)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Aut] {
        &self.generators
    }

    pub fn elements(&self) -> &[Aut] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn apply(&self, s: &Aut, a: &Elem) -> Result<Elem> {
        self.ctx.check(a)?;
        match (s, a) {
            (Aut::Identity, _) => Ok(a.clone()),
            (Aut::Frobenius(k), Elem::Fq(c)) => {
                let f = self.ctx.finite_field().expect("Frobenius on a finite field");
                Ok(Elem::Fq(f.frobenius(c, *k)))
            }
            (Aut::Inner(u), Elem::Quat(q)) => {
                let inv = u.inv().ok_or(Error::ZeroConjugator)?;
                Ok(Elem::Quat(u.mul(q).mul(&inv)))
            }
            _ => Err(Error::MixedContexts),
        }
    }

    /// Membership in K^G.
    pub fn is_fixed(&self, a: &Elem) -> Result<bool> {
        for g in &self.generators {
            if self.apply(g, a)? != *a {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Group axioms on the closure, and orbit sums landing in K^G.
    pub fn self_test<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Result<()> {
        let set: HashSet<&Aut> = self.elements.iter().collect();
        for a in &self.elements {
            if !set.contains(&self.inverse(a)?) {
                return Err(Error::InvariantBreach(format!("{a} has no inverse in G")));
            }
            for b in &self.elements {
                if !set.contains(&self.compose(a, b)?) {
                    return Err(Error::InvariantBreach("G is not closed".into()));
                }
            }
        }
        for _ in 0..samples {
            let x = self.ctx.random_elem(rng);
            let mut sum = self.ctx.zero();
            for s in &self.elements {
                sum = self.ctx.add(&sum, &self.apply(s, &x)?);
            }
            for s in &self.elements {
                if self.apply(s, &sum)? != sum {
                    return Err(Error::InvariantBreach(format!("{s} moves the fixed element {sum}")));
                }
            }
        }
        Ok(())
    }

    /// G.Δ without repetitions, in order of first appearance.
    pub fn orbit_of_set(&self, points: &[Elem]) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for a in points {
            for s in &self.elements {
                let b = self.apply(s, a)?;
                if seen.insert(b.clone()) {
                    out.push(b);
                }
            }
        }
        Ok(out)
    }
}

/// G.a split along the cosets of the stabilizer-class subgroup G_a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub a: Elem,
    pub orbit: Vec<Elem>,
    /// G_a = {σ : σ(a) conjugate to a}
    pub stabilizer: Vec<Aut>,
    pub cosets: Vec<Aut>,
    /// σ_i(G_a.a), one per coset representative
    pub pieces: Vec<Vec<Elem>>,
}

impl OrbitDecomposition {
    pub fn index(&self) -> usize {
        self.cosets.len()
    }
}

pub fn orbit(g: &AutGroupCtx, a: &Elem) -> Result<OrbitDecomposition> {
    let k = g.ctx();
    let orbit = g.orbit_of_set(std::slice::from_ref(a))?;
    let mut stabilizer = Vec::new();
    for s in g.elements() {
        if k.same_class(&g.apply(s, a)?, a)? {
            stabilizer.push(s.clone());
        }
    }
    let stab: HashSet<&Aut> = stabilizer.iter().collect();
    let mut cosets: Vec<Aut> = Vec::new();
    'next: for s in g.elements() {
        for c in &cosets {
            if stab.contains(&g.compose(&g.inverse(c)?, s)?) {
                continue 'next;
            }
        }
        cosets.push(s.clone());
    }
    let ga_a: Vec<Elem> = stabilizer.iter().map(|s| g.apply(s, a)).collect::<Result<_>>()?;
    let mut pieces = Vec::new();
    let mut covered = HashSet::new();
    for c in &cosets {
        let mut piece = Vec::new();
        for b in &ga_a {
            let v = g.apply(c, b)?;
            if !piece.contains(&v) {
                piece.push(v);
            }
        }
        for v in &piece {
            if !covered.insert(v.clone()) {
                return Err(Error::InvariantBreach(format!("{v} lies in two orbit pieces")));
            }
        }
        pieces.push(piece);
    }
    if covered.len() != orbit.len() || !g.order().is_multiple_of(stabilizer.len()) {
        return Err(Error::InvariantBreach("orbit pieces do not partition G.a".into()));
    }
    Ok(OrbitDecomposition {
        a: a.clone(),
        orbit,
        stabilizer,
        cosets,
        pieces,
    })
}

/// f_{Δ,G}: the minimal polynomial of G.Δ, which has coefficients in K^G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPolyResult {
    pub f: OrePoly,
    pub fixed_coefficients: bool,
    pub degree: usize,
    pub factorization: Option<Vec<OrePoly>>,
}

pub fn g_min_poly(g: &AutGroupCtx, points: &[Elem]) -> Result<GPolyResult> {
    let k = g.ctx();
    let set = g.orbit_of_set(points)?;
    let f = algset::min_poly(k, &set)?.f;
    for c in f.coeffs() {
        if !g.is_fixed(c)? {
            return Err(Error::InvariantBreach(format!("coefficient {c} of {f} is not G-fixed")));
        }
    }
    let factorization = canon::linear_split(&f).ok().flatten();
    Ok(GPolyResult {
        degree: f.deg(),
        f,
        fixed_coefficients: true,
        factorization,
    })
}

/// rk(G.a) = (G:G_a)·rk(G_a.a)
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank_orbit: usize,
    pub index: usize,
    pub rank_piece: usize,
}

pub fn rank_report(g: &AutGroupCtx, a: &Elem) -> Result<RankReport> {
    let od = orbit(g, a)?;
    let rank_orbit = g_min_poly(g, std::slice::from_ref(a))?.degree;
    let rank_piece = algset::rank(g.ctx(), &od.pieces[0])?;
    let r = RankReport {
        rank_orbit,
        index: od.index(),
        rank_piece,
    };
    if r.rank_orbit != r.index * r.rank_piece {
        return Err(Error::InvariantBreach(format!(
            "rank {} != {} * {}",
            r.rank_orbit, r.index, r.rank_piece
        )));
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fullness {
    Full,
    NotFull,
    Unknown,
}

impl fmt::Display for Fullness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fullness::Full => "full",
            Fullness::NotFull => "not-full",
            Fullness::Unknown => "unknown",
        })
    }
}

/// Whether V(f_Δ) = Δ.
pub fn is_full(ctx: &Ctx, points: &[Elem]) -> Result<Fullness> {
    let set = algset::AlgebraicSet::new(ctx, points.to_vec())?;
    let f = algset::min_poly(ctx, set.points())?.f;
    if ctx.is_finite() {
        let v = algset::roots(&f, Side::Right)?;
        let a: HashSet<&Elem> = v.roots.iter().collect();
        let b: HashSet<&Elem> = set.points().iter().collect();
        return Ok(if a == b { Fullness::Full } else { Fullness::NotFull });
    }
    if ctx.is_commutative() && ctx.is_classical() {
        // f_Δ = Π (t − a) over a field
        return Ok(Fullness::Full);
    }
    match algset::roots(&f, Side::Right) {
        Ok(v) if v.is_complete_listing() => {
            let a: HashSet<&Elem> = v.roots.iter().collect();
            let b: HashSet<&Elem> = set.points().iter().collect();
            Ok(if a == b { Fullness::Full } else { Fullness::NotFull })
        }
        // an infinite conjugacy class of roots against a finite Δ
        Ok(_) => Ok(Fullness::NotFull),
        Err(Error::Capability(_)) => Ok(Fullness::Unknown),
        Err(e) => Err(e),
    }
}

/// The fixed field K^G, where it is a commutative field we compute in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedField {
    Finite(Vec<Elem>),
    Rationals,
    /// ℚ(v) ⊂ ℍ_ℚ with v pure, v² = −n
    Quadratic(Quat),
}

pub fn fixed_field(g: &AutGroupCtx) -> Result<FixedField> {
    let k = g.ctx();
    match k.family() {
        Family::Finite(_) => {
            let mut els = Vec::new();
            for a in k.elements()? {
                if g.is_fixed(&a)? {
                    els.push(a);
                }
            }
            Ok(FixedField::Finite(els))
        }
        Family::Rational => Ok(FixedField::Rationals),
        Family::Quaternions => {
            let pures: Vec<Quat> = g
                .generators()
                .iter()
                .filter_map(|a| match a {
                    Aut::Inner(u) => Some(Quat::new(BigRational::zero(), u.0[1].clone(), u.0[2].clone(), u.0[3].clone())),
                    _ => None,
                })
                .collect();
            let Some(v) = pures.first() else {
                return Err(Error::capability("the fixed ring of the trivial group on HQ is not commutative"));
            };
            if pures.iter().all(|p| p.mul(v) == v.mul(p)) {
                Ok(FixedField::Quadratic(v.clone()))
            } else {
                Ok(FixedField::Rationals)
            }
        }
        Family::RationalFunctions => Err(Error::capability(format!("fixed fields over {k}"))),
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// A square root of z inside ℚ(v), v pure with v² = −n.
fn sqrt_in_quadratic(z: &Quat, v: &Quat) -> Option<Quat> {
    let n = v.norm();
    let p = z.0[0].clone();
    let lead = (1..4).find(|&i| !v.0[i].is_zero())?;
    let q = &z.0[lead] / &v.0[lead];
    let two = BigRational::from_integer(BigInt::from(2));
    let mut candidates = Vec::new();
    if q.is_zero() {
        if let Some(x) = rational_sqrt(&p) {
            candidates.push(Quat::scalar(x));
        }
        if let Some(y) = rational_sqrt(&(-&p / &n)) {
            candidates.push(v.scale(&y));
        }
    } else if let Some(r) = rational_sqrt(&(&p * &p + &n * &q * &q)) {
        if let Some(x) = rational_sqrt(&((&p + &r) / &two)) {
            if !x.is_zero() {
                let y = &q / (&two * &x);
                candidates.push(Quat::scalar(x).add(&v.scale(&y)));
            }
        }
    }
    candidates.into_iter().find(|s| s.mul(s) == *z)
}

/// Irreducibility of f in K^G[t].
pub fn irreducible_over_fixed(g: &AutGroupCtx, f: &OrePoly) -> Result<bool> {
    let k = g.ctx();
    for c in f.coeffs() {
        if !g.is_fixed(c)? {
            return Err(Error::Precondition(format!("{f} does not have G-fixed coefficients")));
        }
    }
    let n = f.deg();
    if f.is_zero() || n == 0 {
        return Err(Error::Precondition("irreducibility of a constant".into()));
    }
    if n == 1 {
        return Ok(true);
    }
    let f = f.monic();
    match fixed_field(g)? {
        FixedField::Finite(els) => {
            let q = els.len() as u64;
            let total: u64 = (1..=n / 2).map(|d| q.saturating_pow(d as u32)).sum();
            if total > 1_000_000 {
                return Err(Error::capability("factor search over the fixed field is too large"));
            }
            for d in 1..=n / 2 {
                let count = q.pow(d as u32);
                for idx in 0..count {
                    let mut x = idx;
                    let mut c: Vec<Elem> = (0..d)
                        .map(|_| {
                            let e = els[(x % q) as usize].clone();
                            x /= q;
                            e
                        })
                        .collect();
                    c.push(k.one());
                    if f.right_divisible_by(&OrePoly::new(k, c)) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        FixedField::Rationals => {
            if n > 3 {
                return Err(Error::capability("irreducibility over Q beyond degree 3"));
            }
            let c: Vec<BigRational> = f
                .coeffs()
                .iter()
                .map(|e| match e {
                    Elem::Rational(r) => Ok(r.clone()),
                    Elem::Quat(q) if q.is_central() => Ok(q.0[0].clone()),
                    _ => Err(Error::Precondition(format!("{e} is not rational"))),
                })
                .collect::<Result<_>>()?;
            Ok(algset::rational_roots(&c)?.is_empty())
        }
        FixedField::Quadratic(v) => {
            if n > 2 {
                return Err(Error::capability("irreducibility over a quadratic field beyond degree 2"));
            }
            let quat = |e: &Elem| match e {
                Elem::Quat(q) => q.clone(),
                _ => unreachable!("quaternion coefficients"),
            };
            let b = quat(&f.coeffs()[1]);
            let c = quat(&f.coeffs()[0]);
            let disc = b.mul(&b).sub(&c.scale(&BigRational::from_integer(BigInt::from(4))));
            Ok(sqrt_in_quadratic(&disc, &v).is_none())
        }
    }
}

/// Linear factorization of a central f of degree ≤ 2 over ℍ_ℚ, trying the
/// caller's hints as roots first. Factors are in product order.
pub fn central_factorize(f: &OrePoly, hints: &[Elem]) -> Result<Option<Vec<OrePoly>>> {
    let k = f.ctx();
    if !matches!(k.family(), Family::Quaternions) || !k.is_classical() {
        return Err(Error::Precondition("central factorization works over classical HQ".into()));
    }
    if !f.coeffs().iter().all(|c| matches!(c, Elem::Quat(q) if q.is_central())) {
        return Err(Error::Precondition(format!("{f} has non-central coefficients")));
    }
    if f.deg() > 2 {
        return Err(Error::capability("central factorization beyond degree 2"));
    }
    let f = f.monic();
    if f.deg() <= 1 {
        return Ok(Some(if f.deg() == 0 { Vec::new() } else { vec![f] }));
    }
    let mut candidates: Vec<Elem> = hints.to_vec();
    candidates.extend(algset::roots(&f, Side::Right)?.roots);
    let Some(b) = candidates.into_iter().find(|b| k.is_zero(&f.eval_value(b))) else {
        return Ok(None);
    };
    let lin = OrePoly::linear(k, &b);
    let (q, r) = f.right_div_rem(&lin);
    let factors = vec![q, lin];
    if !r.is_zero() || pltmat::chain_product(k, &factors) != f {
        return Err(Error::InvariantBreach(format!("{f} does not re-multiply")));
    }
    Ok(Some(factors))
}
