//! Ground division rings K together with their (S, D) structure.
//!
//! Four exactly representable families are supported: ℚ, finite fields
//! 𝔽_{p^m}, the rational function field ℚ(x) and the rational quaternions
//! ℍ_ℚ. A [`RingCtx`] bundles the family with an endomorphism S and an
//! S-derivation D, i.e. a map with `D(ab) = S(a)D(b) + D(a)b`.

pub mod fq;
mod linear;
pub mod qpoly;
pub mod quat;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::MatK;

pub use fq::FiniteField;
pub use linear::LinearBase;
pub use qpoly::{QPoly, RatFn};
pub use quat::Quat;

/// An element of one of the supported division rings, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Rational(BigRational),
    Fq(Vec<u32>),
    RatFn(RatFn),
    Quat(Quat),
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Rational(r) => write!(f, "{r}"),
            Elem::Fq(c) => {
                let terms: Vec<(usize, BigRational)> = c
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (i, BigRational::from_integer(v.into())))
                    .collect();
                f.write_str(&qpoly::fmt_rational_terms(&terms, "w"))
            }
            Elem::RatFn(r) => write!(f, "{r}"),
            Elem::Quat(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Rational,
    Finite(FiniteField),
    RationalFunctions,
    Quaternions,
}

/// The endomorphism S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endo {
    Identity,
    /// a ↦ a^{p^k}
    Frobenius(u32),
    /// a ↦ u a u⁻¹
    Inner { unit: Quat, inverse: Quat },
}

/// The S-derivation D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Deriv {
    Zero,
    /// d/dx on ℚ(x)
    DdX,
    /// a ↦ S(a)β − βa, which is β(S − id) on commutative rings.
    Inner(Elem),
}

/// Which structure map to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureMap {
    S,
    SInv,
    D,
    /// δ = −D∘S⁻¹
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// The ambient triple (K, S, D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCtx {
    family: Family,
    endo: Endo,
    deriv: Deriv,
    has_inverse: bool,
}

pub type Ctx = Arc<RingCtx>;

/// Certificate that `value = a^c = S(c)·a·c⁻¹ + D(c)·c⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjWitness {
    pub base: Elem,
    pub conjugator: Elem,
    pub value: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstantField {
    /// Subfield of a finite field with the given number of elements.
    Finite { order: u64 },
    Rationals,
}

/// Basis of C^{S,D}(a) over the constant subfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerBasis {
    pub center: Elem,
    pub constants: ConstantField,
    pub basis: Vec<Elem>,
}

/// Residue bound used by the ℚ(x) conjugacy semi-decision.
pub const DEFAULT_LOG_DERIVATIVE_BOUND: i64 = 16;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RingCtx {
    pub fn rationals() -> Ctx {
        Arc::new(RingCtx {
            family: Family::Rational,
            endo: Endo::Identity,
            deriv: Deriv::Zero,
            has_inverse: true,
        })
    }

    /// 𝔽_{p^m} with S = Frobenius^frob and D = β(S − id) when `beta` is given.
    pub fn finite(p: u32, m: usize, frob: u32, beta: Option<Elem>) -> Result<Ctx> {
        let field = FiniteField::new(p, m)?;
        if frob as usize >= m {
            return Err(Error::InvalidRing(format!(
                "Frobenius power {frob} must be below the extension degree {m}"
            )));
        }
        let endo = if frob == 0 {
            Endo::Identity
        } else {
            Endo::Frobenius(frob)
        };
        let deriv = match beta {
            None => Deriv::Zero,
            Some(b) => {
                if !matches!(&b, Elem::Fq(c) if field.is_valid(c)) {
                    return Err(Error::NotInRing(b.to_string()));
                }
                if frob == 0 {
                    return Err(Error::InvalidRing(
                        "beta(S - id) vanishes when S is the identity".into(),
                    ));
                }
                if matches!(&b, Elem::Fq(c) if field.is_zero(c)) {
                    Deriv::Zero
                } else {
                    Deriv::Inner(b)
                }
            }
        };
        Ok(Arc::new(RingCtx {
            family: Family::Finite(field),
            endo,
            deriv,
            has_inverse: true,
        }))
    }

    /// ℚ(x) with S = id and D = d/dx (or D = 0).
    pub fn rational_functions(ddx: bool) -> Ctx {
        Arc::new(RingCtx {
            family: Family::RationalFunctions,
            endo: Endo::Identity,
            deriv: if ddx { Deriv::DdX } else { Deriv::Zero },
            has_inverse: true,
        })
    }

    /// Classical ℍ_ℚ (S = id, D = 0).
    pub fn quaternions() -> Ctx {
        Arc::new(RingCtx {
            family: Family::Quaternions,
            endo: Endo::Identity,
            deriv: Deriv::Zero,
            has_inverse: true,
        })
    }

    /// ℍ_ℚ with S = Int(u) and D(a) = S(a)β − βa.
    pub fn quaternions_twisted(inner: Option<Quat>, beta: Option<Quat>) -> Result<Ctx> {
        let endo = match inner {
            None => Endo::Identity,
            Some(u) => {
                let inverse = u.inv().ok_or(Error::DivisionByZero)?;
                Endo::Inner { unit: u, inverse }
            }
        };
        let deriv = match beta {
            Some(b) if !b.is_zero() => Deriv::Inner(Elem::Quat(b)),
            _ => Deriv::Zero,
        };
        Ok(Arc::new(RingCtx {
            family: Family::Quaternions,
            endo,
            deriv,
            has_inverse: true,
        }))
    }

    /// Copy of this context in which S⁻¹ is treated as unavailable.
    pub fn without_inverse(&self) -> Ctx {
        let mut c = self.clone();
        c.has_inverse = false;
        Arc::new(c)
    }

    /// Same ground ring with S = id and D = 0.
    pub fn classical(&self) -> Ctx {
        Arc::new(RingCtx {
            family: self.family.clone(),
            endo: Endo::Identity,
            deriv: Deriv::Zero,
            has_inverse: true,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn endo(&self) -> &Endo {
        &self.endo
    }

    pub fn deriv(&self) -> &Deriv {
        &self.deriv
    }

    pub fn has_inverse(&self) -> bool {
        self.has_inverse
    }

    pub fn finite_field(&self) -> Option<&FiniteField> {
        match &self.family {
            Family::Finite(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.family, Family::Finite(_))
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self.family, Family::Quaternions)
    }

    /// S = id and D = 0.
    pub fn is_classical(&self) -> bool {
        self.endo == Endo::Identity && self.deriv == Deriv::Zero
    }

    pub fn characteristic(&self) -> u32 {
        self.finite_field().map_or(0, |f| f.p())
    }

    /// Number of elements, `None` for infinite rings.
    pub fn cardinality(&self) -> Option<u64> {
        self.finite_field().map(|f| f.order())
    }

    // ---- elements ----

    pub fn zero(&self) -> Elem {
        match &self.family {
            Family::Rational => Elem::Rational(BigRational::zero()),
            Family::Finite(f) => Elem::Fq(f.zero()),
            Family::RationalFunctions => Elem::RatFn(RatFn::zero()),
            Family::Quaternions => Elem::Quat(Quat::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.from_rational(&rat(n)).expect("integers embed in every supported ring")
    }

    /// Image of a rational number; fails in characteristic p when the
    /// denominator is divisible by p.
    pub fn from_rational(&self, r: &BigRational) -> Result<Elem> {
        Ok(match &self.family {
            Family::Rational => Elem::Rational(r.clone()),
            Family::Finite(f) => {
                let p = BigInt::from(f.p());
                let n = r.numer().mod_floor(&p);
                let d = r.denom().mod_floor(&p);
                let to_u = |b: &BigInt| -> i64 { b.try_into().expect("reduced mod p") };
                let num = f.from_int(to_u(&n));
                let den = f.from_int(to_u(&d));
                Elem::Fq(f.mul(&num, &f.inv(&den)?))
            }
            Family::RationalFunctions => Elem::RatFn(RatFn::from_poly(QPoly::constant(r.clone()))),
            Family::Quaternions => Elem::Quat(Quat::scalar(r.clone())),
        })
    }

    /// The distinguished generator: w for 𝔽_{p^m}, x for ℚ(x).
    pub fn generator(&self) -> Result<Elem> {
        match &self.family {
            Family::Finite(f) => Ok(Elem::Fq(f.generator())),
            Family::RationalFunctions => Ok(Elem::RatFn(RatFn::from_poly(QPoly::x()))),
            _ => Err(Error::capability("this ring has no named generator")),
        }
    }

    /// Validates that `a` is a canonical element of this ring.
    pub fn check(&self, a: &Elem) -> Result<()> {
        let ok = match (&self.family, a) {
            (Family::Rational, Elem::Rational(_)) => true,
            (Family::Finite(f), Elem::Fq(c)) => f.is_valid(c),
            (Family::RationalFunctions, Elem::RatFn(r)) => {
                *r == RatFn::new(r.num().clone(), r.den().clone())
            }
            (Family::Quaternions, Elem::Quat(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::MixedContexts)
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rational(r) => r.is_zero(),
            Elem::Fq(c) => c.iter().all(|&v| v == 0),
            Elem::RatFn(r) => r.is_zero(),
            Elem::Quat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.family, a, b) {
            (_, Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x + y),
            (Family::Finite(f), Elem::Fq(x), Elem::Fq(y)) => Elem::Fq(f.add(x, y)),
            (_, Elem::RatFn(x), Elem::RatFn(y)) => Elem::RatFn(x.add(y)),
            (_, Elem::Quat(x), Elem::Quat(y)) => Elem::Quat(x.add(y)),
            _ => panic!("mixed ring elements: {a} + {b}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&self.family, a) {
            (_, Elem::Rational(x)) => Elem::Rational(-x),
            (Family::Finite(f), Elem::Fq(x)) => Elem::Fq(f.neg(x)),
            (_, Elem::RatFn(x)) => Elem::RatFn(x.neg()),
            (_, Elem::Quat(x)) => Elem::Quat(x.neg()),
            _ => panic!("element {a} does not belong to this ring"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.family, a, b) {
            (Family::Finite(f), Elem::Fq(x), Elem::Fq(y)) => Elem::Fq(f.sub(x, y)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.family, a, b) {
            (_, Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x * y),
            (Family::Finite(f), Elem::Fq(x), Elem::Fq(y)) => Elem::Fq(f.mul(x, y)),
            (_, Elem::RatFn(x), Elem::RatFn(y)) => Elem::RatFn(x.mul(y)),
            (_, Elem::Quat(x), Elem::Quat(y)) => Elem::Quat(x.mul(y)),
            _ => panic!("mixed ring elements: {a} * {b}"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        match (&self.family, a) {
            (_, Elem::Rational(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Elem::Rational(x.recip()))
                }
            }
            (Family::Finite(f), Elem::Fq(x)) => Ok(Elem::Fq(f.inv(x)?)),
            (_, Elem::RatFn(x)) => x.inv().map(Elem::RatFn).ok_or(Error::DivisionByZero),
            (_, Elem::Quat(x)) => x.inv().map(Elem::Quat).ok_or(Error::DivisionByZero),
            _ => Err(Error::MixedContexts),
        }
    }

    /// a·b⁻¹
    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, e: u64) -> Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Checked binary arithmetic on validated operands.
    pub fn arith(&self, op: ArithOp, a: &Elem, b: &Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
        }
    }

    // ---- structure maps ----

    pub fn s(&self, a: &Elem) -> Elem {
        match (&self.endo, &self.family, a) {
            (Endo::Identity, _, _) => a.clone(),
            (Endo::Frobenius(k), Family::Finite(f), Elem::Fq(x)) => Elem::Fq(f.frobenius(x, *k)),
            (Endo::Inner { unit, inverse }, _, Elem::Quat(x)) => {
                Elem::Quat(unit.mul(x).mul(inverse))
            }
            _ => panic!("element {a} does not belong to this ring"),
        }
    }

    pub fn s_inv(&self, a: &Elem) -> Result<Elem> {
        if !self.has_inverse {
            return Err(Error::MapNotAvailable("S^-1"));
        }
        Ok(match (&self.endo, &self.family, a) {
            (Endo::Identity, _, _) => a.clone(),
            (Endo::Frobenius(k), Family::Finite(f), Elem::Fq(x)) => {
                let back = (f.m() as u32 - k) % f.m() as u32;
                Elem::Fq(f.frobenius(x, back))
            }
            (Endo::Inner { unit, inverse }, _, Elem::Quat(x)) => {
                Elem::Quat(inverse.mul(x).mul(unit))
            }
            _ => return Err(Error::MixedContexts),
        })
    }

    /// S applied `k` times.
    pub fn s_pow(&self, a: &Elem, k: usize) -> Elem {
        (0..k).fold(a.clone(), |acc, _| self.s(&acc))
    }

    pub fn s_inv_pow(&self, a: &Elem, k: usize) -> Result<Elem> {
        (0..k).try_fold(a.clone(), |acc, _| self.s_inv(&acc))
    }

    pub fn d(&self, a: &Elem) -> Elem {
        match (&self.deriv, a) {
            (Deriv::Zero, _) => self.zero(),
            (Deriv::DdX, Elem::RatFn(r)) => Elem::RatFn(r.derivative()),
            (Deriv::Inner(beta), _) => self.sub(&self.mul(&self.s(a), beta), &self.mul(beta, a)),
            _ => panic!("element {a} does not belong to this ring"),
        }
    }

    /// δ = −D∘S⁻¹, a right S⁻¹-derivation.
    pub fn delta(&self, a: &Elem) -> Result<Elem> {
        Ok(self.neg(&self.d(&self.s_inv(a)?)))
    }

    pub fn apply_map(&self, which: StructureMap, a: &Elem) -> Result<Elem> {
        self.check(a)?;
        match which {
            StructureMap::S => Ok(self.s(a)),
            StructureMap::SInv => self.s_inv(a),
            StructureMap::D => Ok(self.d(a)),
            StructureMap::Delta => self.delta(a),
        }
    }

    // ---- (S,D)-conjugation ----

    /// a^c = S(c)·a·c⁻¹ + D(c)·c⁻¹ (c must be nonzero).
    pub fn conj(&self, a: &Elem, c: &Elem) -> Result<Elem> {
        let ci = self.inv(c).map_err(|_| Error::ZeroConjugator)?;
        Ok(self.add(
            &self.mul(&self.mul(&self.s(c), a), &ci),
            &self.mul(&self.d(c), &ci),
        ))
    }

    pub fn conjugate(&self, a: &Elem, c: &Elem) -> Result<ConjWitness> {
        self.check(a)?;
        self.check(c)?;
        let value = self.conj(a, c)?;
        Ok(ConjWitness {
            base: a.clone(),
            conjugator: c.clone(),
            value,
        })
    }

    /// Recomputes a witness from scratch.
    pub fn verify_witness(&self, w: &ConjWitness) -> bool {
        self.conj(&w.base, &w.conjugator)
            .is_ok_and(|v| v == w.value)
    }

    /// ^c a = c·a·S⁻¹(c⁻¹) + c·δ(c⁻¹), the conjugation attached to (δ, S⁻¹).
    pub fn left_conj(&self, a: &Elem, c: &Elem) -> Result<Elem> {
        let ci = self.inv(c).map_err(|_| Error::ZeroConjugator)?;
        Ok(self.add(
            &self.mul(&self.mul(c, a), &self.s_inv(&ci)?),
            &self.mul(c, &self.delta(&ci)?),
        ))
    }

    /// Quaternion normal form ρ(a) = u⁻¹(a + β): a^c = u·cρ(a)c⁻¹ − β.
    fn quat_rho(&self, a: &Elem) -> Quat {
        let Elem::Quat(q) = a else {
            panic!("not a quaternion: {a}")
        };
        let shifted = match &self.deriv {
            Deriv::Inner(Elem::Quat(b)) => q.add(b),
            _ => q.clone(),
        };
        match &self.endo {
            Endo::Inner { inverse, .. } => inverse.mul(&shifted),
            _ => shifted,
        }
    }

    /// Some nonzero c with a^c = b, if one exists.
    pub fn find_conjugator(&self, a: &Elem, b: &Elem) -> Result<Option<Elem>> {
        self.find_conjugator_bounded(a, b, DEFAULT_LOG_DERIVATIVE_BOUND)
    }

    pub fn find_conjugator_bounded(&self, a: &Elem, b: &Elem, bound: i64) -> Result<Option<Elem>> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Ok(Some(self.one()));
        }
        match &self.family {
            Family::Finite(_) => {
                for c in self.elements()?.into_iter().skip(1) {
                    if self.conj(a, &c)? == *b {
                        return Ok(Some(c));
                    }
                }
                Ok(None)
            }
            Family::Rational => Ok(None),
            Family::RationalFunctions => {
                if self.deriv == Deriv::Zero {
                    return Ok(None);
                }
                let (Elem::RatFn(x), Elem::RatFn(y)) = (a, b) else {
                    return Err(Error::MixedContexts);
                };
                Ok(log_derivative_witness(&y.sub(x), bound)?.map(Elem::RatFn))
            }
            Family::Quaternions => {
                let (ra, rb) = (self.quat_rho(a), self.quat_rho(b));
                // c ↦ ρ(b)c − cρ(a) is ℚ-linear; any nonzero kernel vector works.
                let q = RingCtx::rationals();
                let basis = [Quat::one(), Quat::i(), Quat::j(), Quat::k()];
                let cols: Vec<Quat> = basis.iter().map(|e| rb.mul(e).sub(&e.mul(&ra))).collect();
                let rows: Vec<Vec<Elem>> = (0..4)
                    .map(|r| cols.iter().map(|c| Elem::Rational(c.0[r].clone())).collect())
                    .collect();
                let m = MatK::from_rows(&q, rows)?;
                Ok(m.nullspace().into_iter().next().map(|v| {
                    let comps: [BigRational; 4] = std::array::from_fn(|n| match &v[n] {
                        Elem::Rational(r) => r.clone(),
                        _ => unreachable!(),
                    });
                    Elem::Quat(Quat(comps))
                }))
            }
        }
    }

    /// Whether b lies in the (S,D)-conjugacy class Δ(a).
    pub fn same_class(&self, a: &Elem, b: &Elem) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        match &self.family {
            Family::Finite(_) => Ok(self.find_conjugator(a, b)?.is_some()),
            Family::Rational => Ok(a == b),
            Family::RationalFunctions => {
                if self.deriv == Deriv::Zero {
                    return Ok(a == b);
                }
                match self.find_conjugator(a, b)? {
                    Some(_) => Ok(true),
                    None => Ok(false),
                }
            }
            Family::Quaternions => {
                let (ra, rb) = (self.quat_rho(a), self.quat_rho(b));
                if ra.is_central() || rb.is_central() {
                    return Ok(ra == rb);
                }
                Ok(ra.trace() == rb.trace() && ra.norm() == rb.norm())
            }
        }
    }

    /// Δ(a) listed exhaustively (finite rings only), sorted canonically.
    pub fn class_members(&self, a: &Elem) -> Result<Vec<Elem>> {
        let mut out: Vec<Elem> = self
            .elements()?
            .into_iter()
            .skip(1)
            .map(|c| self.conj(a, &c))
            .collect::<Result<HashSet<_>>>()?
            .into_iter()
            .collect();
        out.sort();
        Ok(out)
    }

    /// Elements of the constant subfield {λ : S(λ) = λ, D(λ) = 0} (finite rings).
    pub fn constant_subfield(&self) -> Result<Vec<Elem>> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|l| self.s(l) == *l && self.is_zero(&self.d(l)))
            .collect())
    }

    /// C^{S,D}(a) listed exhaustively (finite rings only), zero included.
    pub fn centralizer_elements(&self, a: &Elem) -> Result<Vec<Elem>> {
        let mut out = vec![self.zero()];
        for x in self.elements()?.into_iter().skip(1) {
            if self.conj(a, &x)? == *a {
                out.push(x);
            }
        }
        Ok(out)
    }

    pub fn centralizer_basis(&self, a: &Elem) -> Result<CentralizerBasis> {
        self.check(a)?;
        match &self.family {
            Family::Finite(_) => {
                let consts = self.constant_subfield()?;
                let members = self.centralizer_elements(a)?;
                let mut span: HashSet<Elem> = HashSet::from([self.zero()]);
                let mut basis = Vec::new();
                for x in members {
                    if span.contains(&x) {
                        continue;
                    }
                    let mut next = HashSet::new();
                    for s in &span {
                        for l in &consts {
                            next.insert(self.add(s, &self.mul(&x, l)));
                        }
                    }
                    span = next;
                    basis.push(x);
                }
                Ok(CentralizerBasis {
                    center: a.clone(),
                    constants: ConstantField::Finite {
                        order: consts.len() as u64,
                    },
                    basis,
                })
            }
            Family::Rational => Ok(CentralizerBasis {
                center: a.clone(),
                constants: ConstantField::Rationals,
                basis: vec![self.one()],
            }),
            Family::Quaternions => {
                let rho = self.quat_rho(a);
                let basis = if rho.is_central() {
                    [Quat::one(), Quat::i(), Quat::j(), Quat::k()]
                        .into_iter()
                        .map(Elem::Quat)
                        .collect()
                } else {
                    vec![self.one(), Elem::Quat(rho)]
                };
                Ok(CentralizerBasis {
                    center: a.clone(),
                    constants: ConstantField::Rationals,
                    basis,
                })
            }
            Family::RationalFunctions => Err(Error::capability(
                "centralizers over Q(x) are not computable here",
            )),
        }
    }

    /// Every element exactly once, ordered by index with 0 first and 1 second.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        match &self.family {
            Family::Finite(f) => Ok(f.elements().map(Elem::Fq).collect()),
            _ => Err(Error::InfiniteContext),
        }
    }

    /// Uniform element for finite rings; small-height element otherwise.
    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let small = |rng: &mut R| BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
        match &self.family {
            Family::Rational => Elem::Rational(small(rng)),
            Family::Finite(f) => Elem::Fq(f.from_index(rng.gen_range(0..f.order()))),
            Family::RationalFunctions => {
                let dn = rng.gen_range(0..=2);
                let dd = rng.gen_range(0..=2);
                let num = QPoly::new((0..=dn).map(|_| small(rng)).collect());
                let mut den = QPoly::new((0..=dd).map(|_| small(rng)).collect());
                if den.is_zero() {
                    den = QPoly::one();
                }
                Elem::RatFn(RatFn::new(num, den))
            }
            Family::Quaternions => Elem::Quat(Quat(std::array::from_fn(|_| small(rng)))),
        }
    }

    /// Checks the homomorphism, twisted Leibniz and inverse laws on random samples.
    pub fn self_test<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Result<()> {
        if self.s(&self.one()) != self.one() {
            return Err(Error::InvariantBreach("S(1) != 1".into()));
        }
        for _ in 0..samples {
            let a = self.random_elem(rng);
            let b = self.random_elem(rng);
            let ab = self.mul(&a, &b);
            if self.s(&ab) != self.mul(&self.s(&a), &self.s(&b)) {
                return Err(Error::InvariantBreach(format!("S(ab) != S(a)S(b) at a={a}, b={b}")));
            }
            if self.s(&self.add(&a, &b)) != self.add(&self.s(&a), &self.s(&b)) {
                return Err(Error::InvariantBreach(format!("S not additive at a={a}, b={b}")));
            }
            let leibniz = self.add(&self.mul(&self.s(&a), &self.d(&b)), &self.mul(&self.d(&a), &b));
            if self.d(&ab) != leibniz {
                return Err(Error::InvariantBreach(format!("twisted Leibniz fails at a={a}, b={b}")));
            }
            if self.has_inverse && self.s(&self.s_inv(&a)?) != a {
                return Err(Error::InvariantBreach(format!("S(S^-1(a)) != a at a={a}")));
            }
        }
        Ok(())
    }

    /// The prime or rational subfield over which S and D are linear, with coordinates.
    pub fn linear_base(&self) -> Option<LinearBase> {
        LinearBase::for_ctx(self)
    }
}

/// c with c'/c = r, found among c = ∏ gcd(M, N − kM')^k with |k| ≤ bound.
///
/// Definitive `None` when r is not proper or has a repeated pole; a capability
/// error when the residue search is exhausted without covering every pole.
pub fn log_derivative_witness(r: &RatFn, bound: i64) -> Result<Option<RatFn>> {
    if r.is_zero() {
        return Ok(Some(RatFn::one()));
    }
    let (n, m) = (r.num(), r.den());
    if n.degree() >= m.degree() {
        return Ok(None);
    }
    let dm = m.derivative();
    if m.gcd(&dm).degree() != Some(0) {
        return Ok(None);
    }
    let mut covered = QPoly::one();
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for k in (1..=bound).flat_map(|k| [k, -k]) {
        let g = m.gcd(&n.sub(&dm.scale(&rat(k))));
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        covered = covered.mul(&g);
        if k > 0 {
            num = num.mul(&g.pow(k as usize));
        } else {
            den = den.mul(&g.pow((-k) as usize));
        }
        if covered.degree() == m.degree() {
            let c = RatFn::new(num, den);
            let check = c.derivative().mul(&c.inv().expect("nonzero"));
            if check != *r {
                return Err(Error::InvariantBreach("logarithmic derivative witness".into()));
            }
            return Ok(Some(c));
        }
    }
    Err(Error::capability(format!(
        "conjugacy over Q(x): residue search up to {bound} exhausted"
    )))
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Rational => f.write_str("Q"),
            Family::Finite(ff) => {
                let frob = match self.endo {
                    Endo::Frobenius(k) => k,
                    _ => 0,
                };
                write!(f, "GF({}^{}; frob={frob}", ff.p(), ff.m())?;
                if let Deriv::Inner(b) = &self.deriv {
                    write!(f, "; beta={b}")?;
                }
                f.write_str(")")
            }
            Family::RationalFunctions => match self.deriv {
                Deriv::DdX => f.write_str("Qx; d/dx"),
                _ => f.write_str("Qx"),
            },
            Family::Quaternions => {
                f.write_str("HQ")?;
                if let Endo::Inner { unit, .. } = &self.endo {
                    write!(f, "; inner={unit}")?;
                }
                if let Deriv::Inner(b) = &self.deriv {
                    write!(f, "; beta={b}")?;
                }
                Ok(())
            }
        }
    }
}

/// Integer n ≥ 0 as a sum of three squares, by search.
pub(crate) fn three_squares(n: &BigInt) -> Option<[BigInt; 3]> {
    let limit: i64 = n.sqrt().try_into().ok()?;
    if limit > 20_000 {
        return None;
    }
    for a in 0..=limit {
        let ra = n - BigInt::from(a * a);
        if ra.is_negative() {
            break;
        }
        let lb: i64 = ra.sqrt().try_into().ok()?;
        for b in 0..=lb.min(a) {
            let rb = &ra - BigInt::from(b * b);
            if rb.is_negative() {
                break;
            }
            let c = rb.sqrt();
            if &c * &c == rb && c <= BigInt::from(b) {
                return Some([BigInt::from(a), BigInt::from(b), c]);
            }
        }
    }
    None
}

/// A pure quaternion p with p² = −r (i.e. |p|² = r > 0), smallest first coordinate first.
pub(crate) fn pure_quaternion_with_norm(r: &BigRational) -> Option<Quat> {
    if !r.is_positive() {
        return None;
    }
    // r = n/d; find |v|² = n·d, then divide by d.
    let nd = r.numer() * r.denom();
    let [a, b, c] = three_squares(&nd)?;
    let d = BigRational::from_integer(r.denom().clone());
    let mk = |v: BigInt| BigRational::from_integer(v) / &d;
    Some(Quat::new(BigRational::zero(), mk(a), mk(b), mk(c)))
}
