//! Skew polynomials in R = K[t; S, D] with t·a = S(a)t + D(a).
//!
//! Coefficients are stored on the left: `coeffs[i]` is a_i in Σ a_i t^i.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ground::{Ctx, Elem};

#[derive(Clone, Debug)]
pub struct OrePoly {
    ctx: Ctx,
    coeffs: Vec<Elem>,
}

impl PartialEq for OrePoly {
    fn eq(&self, o: &Self) -> bool {
        self.coeffs == o.coeffs
    }
}

impl Eq for OrePoly {}

impl Hash for OrePoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// f(a) together with the sequence N_0(a), …, N_n(a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalTrace {
    pub point: Elem,
    pub n_values: Vec<Elem>,
    pub value: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Phi,
    Lambda,
}

/// A value of φ_h(x) = x^{h(x)} or λ_{h,a}(x) = h(a^x)·x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapPoint {
    pub kind: MapKind,
    pub h: OrePoly,
    pub a: Option<Elem>,
    pub x: Elem,
    pub value: Elem,
}

impl OrePoly {
    /// Trims trailing zeros; entries are assumed to belong to `ctx`.
    pub fn new(ctx: &Ctx, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ctx.is_zero(c)) {
            coeffs.pop();
        }
        OrePoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    /// Like [`OrePoly::new`] but validates every coefficient.
    pub fn from_coeffs(ctx: &Ctx, coeffs: Vec<Elem>) -> Result<Self> {
        for c in &coeffs {
            ctx.check(c)?;
        }
        Ok(OrePoly::new(ctx, coeffs))
    }

    pub fn zero(ctx: &Ctx) -> Self {
        OrePoly::new(ctx, Vec::new())
    }

    pub fn one(ctx: &Ctx) -> Self {
        OrePoly::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &Ctx, a: Elem) -> Self {
        OrePoly::new(ctx, vec![a])
    }

    pub fn t(ctx: &Ctx) -> Self {
        OrePoly::monomial(ctx, ctx.one(), 1)
    }

    /// a·t^n
    pub fn monomial(ctx: &Ctx, a: Elem, n: usize) -> Self {
        let mut c = vec![ctx.zero(); n];
        c.push(a);
        OrePoly::new(ctx, c)
    }

    /// t − a
    pub fn linear(ctx: &Ctx, a: &Elem) -> Self {
        OrePoly::new(ctx, vec![ctx.neg(a), ctx.one()])
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 = 0 for the zero polynomial, for size bookkeeping.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.ctx.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.ctx.is_one(c))
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn lc(&self) -> Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ctx.zero())
    }

    fn same_ctx(&self, o: &OrePoly) -> Result<()> {
        if self.ctx != o.ctx {
            return Err(Error::MixedContexts);
        }
        Ok(())
    }

    pub fn add(&self, o: &OrePoly) -> OrePoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        OrePoly::new(
            &self.ctx,
            (0..n).map(|i| self.ctx.add(&self.coeff(i), &o.coeff(i))).collect(),
        )
    }

    pub fn neg(&self) -> OrePoly {
        OrePoly::new(&self.ctx, self.coeffs.iter().map(|c| self.ctx.neg(c)).collect())
    }

    pub fn sub(&self, o: &OrePoly) -> OrePoly {
        self.add(&o.neg())
    }

    /// a·f
    pub fn scale_left(&self, a: &Elem) -> OrePoly {
        OrePoly::new(&self.ctx, self.coeffs.iter().map(|c| self.ctx.mul(a, c)).collect())
    }

    /// t·f = Σ S(a_i) t^{i+1} + D(a_i) t^i
    pub fn t_times(&self) -> OrePoly {
        let k = &self.ctx;
        let mut out = vec![k.zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] = k.add(&out[i + 1], &k.s(a));
            out[i] = k.add(&out[i], &k.d(a));
        }
        OrePoly::new(k, out)
    }

    pub fn mul(&self, o: &OrePoly) -> OrePoly {
        let k = &self.ctx;
        let mut acc = OrePoly::zero(k);
        let mut ti_g = o.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                ti_g = ti_g.t_times();
            }
            if !k.is_zero(a) {
                acc = acc.add(&ti_g.scale_left(a));
            }
        }
        acc
    }

    pub fn try_mul(&self, o: &OrePoly) -> Result<OrePoly> {
        self.same_ctx(o)?;
        Ok(self.mul(o))
    }

    pub fn pow(&self, e: usize) -> OrePoly {
        (0..e).fold(OrePoly::one(&self.ctx), |acc, _| acc.mul(self))
    }

    /// Left-normalizes to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> OrePoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.ctx.inv(&self.lc()).expect("leading coefficient is nonzero");
        self.scale_left(&inv)
    }

    /// f = q·g + r for any nonzero g.
    pub(crate) fn right_div_rem(&self, g: &OrePoly) -> (OrePoly, OrePoly) {
        let k = &self.ctx;
        let dg = g.degree().expect("nonzero divisor");
        let mut r = self.clone();
        let mut q = vec![k.zero(); self.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = r.degree().filter(|&d| d >= dg) {
            let shift = dr - dg;
            let lead = k.s_pow(&g.lc(), shift);
            let c = k.div(&r.lc(), &lead).expect("leading coefficient is nonzero");
            let term = OrePoly::monomial(k, c.clone(), shift);
            r = r.sub(&term.mul(g));
            q[shift] = k.add(&q[shift], &c);
            debug_assert!(r.degree().is_none_or(|d| d < dr));
        }
        (OrePoly::new(k, q), r)
    }

    /// f = g·q + r for any nonzero g (needs S⁻¹).
    pub(crate) fn left_div_rem(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        let k = &self.ctx;
        let dg = g.degree().expect("nonzero divisor");
        let ginv = k.inv(&g.lc())?;
        let mut r = self.clone();
        let mut q = vec![k.zero(); self.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = r.degree().filter(|&d| d >= dg) {
            let shift = dr - dg;
            let c = k.s_inv_pow(&k.mul(&ginv, &r.lc()), dg)?;
            let term = OrePoly::monomial(k, c.clone(), shift);
            r = r.sub(&g.mul(&term));
            q[shift] = k.add(&q[shift], &c);
            debug_assert!(r.degree().is_none_or(|d| d < dr));
        }
        Ok((OrePoly::new(k, q), r))
    }

    fn check_divisor(&self, g: &OrePoly) -> Result<()> {
        self.same_ctx(g)?;
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(())
    }

    /// (q, r) with f = q·g + r, deg r < deg g; g must be monic.
    pub fn right_divmod(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check_divisor(g)?;
        Ok(self.right_div_rem(g))
    }

    /// (q, r) with f = g·q + r, deg r < deg g; g must be monic and S invertible.
    pub fn left_divmod(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check_divisor(g)?;
        if !self.ctx.has_inverse() {
            return Err(Error::MapNotAvailable("S^-1"));
        }
        self.left_div_rem(g)
    }

    /// Whether g divides f on the right (f ∈ R·g).
    pub fn right_divisible_by(&self, g: &OrePoly) -> bool {
        self.right_div_rem(g).1.is_zero()
    }

    /// Whether g divides f on the left (f ∈ g·R).
    pub fn left_divisible_by(&self, g: &OrePoly) -> Result<bool> {
        Ok(self.left_div_rem(g)?.1.is_zero())
    }

    /// N_0(a), …, N_n(a) with N_{i+1}(a) = S(N_i(a))·a + D(N_i(a)).
    pub fn n_sequence(ctx: &Ctx, a: &Elem, n: usize) -> Vec<Elem> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(ctx.one());
        for i in 0..n {
            let prev = &out[i];
            out.push(ctx.add(&ctx.mul(&ctx.s(prev), a), &ctx.d(prev)));
        }
        out
    }

    /// f(a) = Σ a_i N_i(a).
    pub fn eval_value(&self, a: &Elem) -> Elem {
        let k = &self.ctx;
        let ns = OrePoly::n_sequence(k, a, self.deg());
        let v = self
            .coeffs
            .iter()
            .zip(&ns)
            .fold(k.zero(), |acc, (c, n)| k.add(&acc, &k.mul(c, n)));
        debug_assert_eq!(
            v,
            self.right_div_rem(&OrePoly::linear(k, a)).1.coeff(0),
            "remainder and N-sequence evaluations disagree"
        );
        v
    }

    /// Evaluation with both routes (N-sequence and remainder) cross-checked.
    pub fn eval(&self, a: &Elem) -> Result<EvalTrace> {
        self.ctx.check(a)?;
        let k = &self.ctx;
        let n_values = OrePoly::n_sequence(k, a, self.deg());
        let value = self
            .coeffs
            .iter()
            .zip(&n_values)
            .fold(k.zero(), |acc, (c, n)| k.add(&acc, &k.mul(c, n)));
        let rem = self.right_div_rem(&OrePoly::linear(k, a)).1.coeff(0);
        if rem != value {
            return Err(Error::InvariantBreach("evaluation routes disagree".into()));
        }
        Ok(EvalTrace {
            point: a.clone(),
            n_values,
            value,
        })
    }

    /// Remainder of left division by t − a; zero iff a is a left root.
    pub fn left_eval(&self, a: &Elem) -> Result<Elem> {
        if !self.ctx.has_inverse() {
            return Err(Error::MapNotAvailable("S^-1"));
        }
        Ok(self.left_div_rem(&OrePoly::linear(&self.ctx, a))?.1.coeff(0))
    }

    /// φ_h(x) = x^{h(x)}, undefined when h(x) = 0.
    pub fn phi_value(&self, x: &Elem) -> Result<Elem> {
        let hx = self.eval_value(x);
        if self.ctx.is_zero(&hx) {
            return Err(Error::UndefinedPoint(format!("h({x}) = 0")));
        }
        self.ctx.conj(x, &hx)
    }

    pub fn phi(&self, x: &Elem) -> Result<MapPoint> {
        self.ctx.check(x)?;
        Ok(MapPoint {
            kind: MapKind::Phi,
            h: self.clone(),
            a: None,
            x: x.clone(),
            value: self.phi_value(x)?,
        })
    }

    /// λ_{h,a}(x) = h(a^x)·x, extended by 0 ↦ 0.
    pub fn lambda_value(&self, a: &Elem, x: &Elem) -> Elem {
        let k = &self.ctx;
        if k.is_zero(x) {
            return k.zero();
        }
        let ax = k.conj(a, x).expect("x is nonzero");
        k.mul(&self.eval_value(&ax), x)
    }

    pub fn lambda(&self, a: &Elem, x: &Elem) -> Result<MapPoint> {
        self.ctx.check(a)?;
        self.ctx.check(x)?;
        if self.ctx.is_zero(x) {
            return Err(Error::Precondition("lambda needs a nonzero argument".into()));
        }
        Ok(MapPoint {
            kind: MapKind::Lambda,
            h: self.clone(),
            a: Some(a.clone()),
            x: x.clone(),
            value: self.lambda_value(a, x),
        })
    }

    /// (d, u, v) with u·f + v·g = d, d monic and R·f + R·g = R·d.
    pub fn rgcd_ext(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly, OrePoly)> {
        self.same_ctx(g)?;
        if self.is_zero() && g.is_zero() {
            return Err(Error::Precondition("right gcd of two zero polynomials".into()));
        }
        let k = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), g.clone());
        let (mut u0, mut u1) = (OrePoly::one(k), OrePoly::zero(k));
        let (mut v0, mut v1) = (OrePoly::zero(k), OrePoly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.right_div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        let c = k.inv(&r0.lc())?;
        Ok((r0.scale_left(&c), u0.scale_left(&c), v0.scale_left(&c)))
    }

    /// Monic right gcd.
    pub fn rgcd(&self, g: &OrePoly) -> Result<OrePoly> {
        Ok(self.rgcd_ext(g)?.0)
    }

    /// (m, f_cof, g_cof) with m monic, R·m = R·f ∩ R·g and m = f_cof·g = g_cof·f.
    pub fn llcm(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly, OrePoly)> {
        self.same_ctx(g)?;
        if self.is_zero() || g.is_zero() {
            return Err(Error::Precondition("left lcm needs nonzero polynomials".into()));
        }
        let k = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), g.clone());
        let (mut u0, mut u1) = (OrePoly::one(k), OrePoly::zero(k));
        let (mut v0, mut v1) = (OrePoly::zero(k), OrePoly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.right_div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        // u1·f + v1·g = 0 and u1·f generates R·f ∩ R·g.
        let m = u1.mul(self);
        let c = k.inv(&m.lc())?;
        let g_cof = u1.scale_left(&c);
        let f_cof = v1.scale_left(&c).neg();
        let m = m.scale_left(&c);
        debug_assert_eq!(f_cof.mul(g), m);
        Ok((m, f_cof, g_cof))
    }

    /// f^q: the monic left factor with R·f ∩ R·q = R·f^q·q (q monic), defined
    /// when R·q + R·f = R.
    pub fn transform(&self, q: &OrePoly) -> Result<OrePoly> {
        self.same_ctx(q)?;
        if !self.rgcd(q)?.is_one() {
            return Err(Error::NotCoprime);
        }
        let (_, f_cof, _) = self.llcm(q)?;
        Ok(f_cof.monic())
    }

    /// Coefficients b_i of the right form f = Σ t^i b_i.
    pub fn right_coeffs(&self) -> Result<Vec<Elem>> {
        let k = &self.ctx;
        let mut rest = self.clone();
        let mut out = vec![k.zero(); self.coeffs.len()];
        while let Some(d) = rest.degree() {
            let b = k.s_inv_pow(&rest.lc(), d)?;
            rest = rest.sub(&OrePoly::t(k).pow(d).mul(&OrePoly::constant(k, b.clone())));
            out[d] = b;
        }
        Ok(out)
    }

    /// Σ t^i b_i
    pub fn from_right_coeffs(ctx: &Ctx, b: &[Elem]) -> OrePoly {
        let t = OrePoly::t(ctx);
        let mut acc = OrePoly::zero(ctx);
        let mut ti = OrePoly::one(ctx);
        for c in b {
            acc = acc.add(&ti.mul(&OrePoly::constant(ctx, c.clone())));
            ti = ti.mul(&t);
        }
        acc
    }

    /// Every monic polynomial of degree exactly `d` over a finite K.
    pub fn monic_of_degree(ctx: &Ctx, d: usize) -> Result<Vec<OrePoly>> {
        let elems = ctx.elements()?;
        let q = elems.len();
        let total = q.checked_pow(d as u32).ok_or(Error::capability("enumeration too large"))?;
        Ok((0..total)
            .map(|mut idx| {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push(elems[idx % q].clone());
                    idx /= q;
                }
                c.push(ctx.one());
                OrePoly::new(ctx, c)
            })
            .collect())
    }

    /// Every polynomial of degree ≤ `d` (zero included) over a finite K.
    pub fn all_up_to_degree(ctx: &Ctx, d: usize) -> Result<Vec<OrePoly>> {
        let elems = ctx.elements()?;
        let q = elems.len();
        let total = q.checked_pow(d as u32 + 1).ok_or(Error::capability("enumeration too large"))?;
        Ok((0..total)
            .map(|mut idx| {
                let c = (0..=d)
                    .map(|_| {
                        let e = elems[idx % q].clone();
                        idx /= q;
                        e
                    })
                    .collect();
                OrePoly::new(ctx, c)
            })
            .collect())
    }
}

fn is_atomic(s: &str) -> bool {
    !s.contains(' ') && !s.starts_with('-')
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.ctx;
        let nonzero: Vec<(usize, &Elem)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !k.is_zero(c))
            .collect();
        if nonzero.is_empty() {
            return f.write_str("0");
        }
        let single = nonzero.len() == 1;
        let mut out = String::new();
        for (pos, (i, c)) in nonzero.into_iter().enumerate() {
            let s = c.to_string();
            let neg_atomic = s.strip_prefix('-').filter(|r| is_atomic(r));
            let tpow = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            // (sign, magnitude) of the rendered term
            let (neg, body) = if i == 0 {
                match neg_atomic {
                    Some(r) => (true, r.to_string()),
                    None if is_atomic(&s) || single => (false, s),
                    None => (false, format!("({s})")),
                }
            } else if s == "1" {
                (false, tpow)
            } else if let Some(r) = neg_atomic {
                (true, if r == "1" { tpow } else { format!("{r}*{tpow}") })
            } else if is_atomic(&s) {
                (false, format!("{s}*{tpow}"))
            } else {
                (false, format!("({s})*{tpow}"))
            };
            match (pos, neg) {
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (0, false) => out.push_str(&body),
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{Quat, RingCtx};

    fn f4() -> Ctx {
        RingCtx::finite(2, 2, 1, None).unwrap()
    }

    fn p(ctx: &Ctx, c: &[Elem]) -> OrePoly {
        OrePoly::new(ctx, c.to_vec())
    }

    #[test]
    fn multiplication_examples() {
        let k = f4();
        let (o, l) = (k.one(), k.zero());
        let w = k.generator().unwrap();
        let t1 = p(&k, &[o.clone(), o.clone()]);
        assert_eq!(t1.mul(&t1), p(&k, &[o.clone(), l.clone(), o.clone()]));
        let tw = OrePoly::t(&k).mul(&OrePoly::constant(&k, w.clone()));
        assert_eq!(tw, OrePoly::monomial(&k, k.mul(&w, &w), 1));

        let qx = RingCtx::rational_functions(true);
        let x = qx.generator().unwrap();
        let txx = OrePoly::t(&qx).mul(&OrePoly::constant(&qx, x.clone()));
        assert_eq!(txx, p(&qx, &[qx.one(), x]));
    }

    #[test]
    fn division_examples() {
        let k = f4();
        let (o, l) = (k.one(), k.zero());
        let w = k.generator().unwrap();
        let w2 = k.mul(&w, &w);
        let f = p(&k, &[o.clone(), l.clone(), o.clone()]);
        let g = p(&k, &[w.clone(), o.clone()]);
        assert_eq!(f.right_divmod(&g).unwrap(), (p(&k, &[w2.clone(), o.clone()]), OrePoly::zero(&k)));
        // (t + w)(t + w^2) = t^2 + 1 as well
        assert_eq!(f.left_divmod(&g).unwrap(), (p(&k, &[w2, o.clone()]), OrePoly::zero(&k)));
        assert_eq!(g.right_divmod(&g).unwrap(), (OrePoly::one(&k), OrePoly::zero(&k)));
        let nonmonic = p(&k, &[o.clone(), w.clone()]);
        assert_eq!(f.right_divmod(&nonmonic), Err(Error::NotMonic));
        let no_inv = k.without_inverse();
        let f2 = OrePoly::new(&no_inv, f.coeffs().to_vec());
        let g2 = OrePoly::new(&no_inv, g.coeffs().to_vec());
        assert_eq!(f2.left_divmod(&g2), Err(Error::MapNotAvailable("S^-1")));

        let h = RingCtx::quaternions();
        let i = Elem::Quat(Quat::i());
        let t2p1 = p(&h, &[h.one(), h.zero(), h.one()]);
        let (q, r) = t2p1.right_divmod(&OrePoly::linear(&h, &i)).unwrap();
        assert_eq!(q, p(&h, &[i, h.one()]));
        assert!(r.is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let k = f4();
        let w = k.generator().unwrap();
        let f = p(&k, &[k.one(), k.zero(), k.one()]);
        let tr = f.eval(&w).unwrap();
        assert_eq!(tr.value, k.zero());
        assert_eq!(tr.n_values[2], k.one());

        let qx = RingCtx::rational_functions(true);
        let x = qx.generator().unwrap();
        let t2 = OrePoly::monomial(&qx, qx.one(), 2);
        assert_eq!(t2.eval(&x).unwrap().value, qx.add(&qx.mul(&x, &x), &qx.one()));
    }

    #[test]
    fn phi_and_lambda_examples() {
        let h = RingCtx::quaternions();
        let (i, k) = (Elem::Quat(Quat::i()), Elem::Quat(Quat::k()));
        let tk = p(&h, &[k.clone(), h.one()]);
        assert_eq!(tk.phi(&i).unwrap().value, k);
        assert_eq!(tk.phi(&h.neg(&i)).unwrap().value, k);
        assert!(matches!(
            OrePoly::linear(&h, &i).phi(&i),
            Err(Error::UndefinedPoint(_))
        ));

        let f = f4();
        let w = f.generator().unwrap();
        let t1 = p(&f, &[f.one(), f.one()]);
        assert_eq!(t1.lambda(&f.one(), &w).unwrap().value, f.one());
        let inner = t1.lambda_value(&f.one(), &w);
        assert_eq!(t1.mul(&t1).lambda_value(&f.one(), &w), t1.lambda_value(&f.one(), &inner));
    }

    #[test]
    fn gcd_and_lcm_examples() {
        let k = f4();
        let w = k.generator().unwrap();
        let w2 = k.mul(&w, &w);
        let a = p(&k, &[k.one(), k.one()]);
        let b = p(&k, &[w.clone(), k.one()]);
        let (d, u, v) = a.rgcd_ext(&b).unwrap();
        assert!(d.is_one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), d);
        let (m, a_cof, _) = a.llcm(&b).unwrap();
        assert_eq!(m, p(&k, &[k.one(), k.zero(), k.one()]));
        assert_eq!(a_cof, p(&k, &[w2.clone(), k.one()]));
        assert_eq!(a.transform(&b).unwrap(), p(&k, &[w2, k.one()]));

        let h = RingCtx::quaternions();
        let (i, j) = (Elem::Quat(Quat::i()), Elem::Quat(Quat::j()));
        let (m, _, _) = OrePoly::linear(&h, &i).llcm(&OrePoly::linear(&h, &j)).unwrap();
        assert_eq!(m, p(&h, &[h.one(), h.zero(), h.one()]));
        let t2p1 = p(&h, &[h.one(), h.zero(), h.one()]);
        assert_eq!(t2p1.rgcd(&OrePoly::linear(&h, &i)).unwrap(), OrePoly::linear(&h, &i));
        let (d, u, v) = a.rgcd_ext(&OrePoly::zero(&k)).unwrap();
        assert_eq!((d, u, v), (a.clone(), OrePoly::one(&k), OrePoly::zero(&k)));
    }

    #[test]
    fn linear_llcm_formula() {
        // llcm(t − a, t − b) = (t − a^{a−b})(t − b) for a ≠ b
        let qx = RingCtx::rational_functions(true);
        let x = qx.generator().unwrap();
        let a = x.clone();
        let b = qx.add(&x, &qx.one());
        let (m, f_cof, _) = OrePoly::linear(&qx, &a).llcm(&OrePoly::linear(&qx, &b)).unwrap();
        let c = qx.sub(&a, &b);
        let expect = OrePoly::linear(&qx, &qx.conj(&a, &c).unwrap());
        assert_eq!(f_cof, expect);
        assert_eq!(m, expect.mul(&OrePoly::linear(&qx, &b)));
    }

    #[test]
    fn transform_by_constant_is_conjugation() {
        let h = RingCtx::quaternions_twisted(Some(Quat::from_ints(1, 0, 1, 1)), Some(Quat::i())).unwrap();
        let a = Elem::Quat(Quat::from_ints(1, 2, 0, -1));
        let c = Elem::Quat(Quat::from_ints(0, 1, 3, 0));
        let f = OrePoly::linear(&h, &a);
        let got = f.transform(&OrePoly::constant(&h, c.clone())).unwrap();
        assert_eq!(got, OrePoly::linear(&h, &h.conj(&a, &c).unwrap()));
        assert_eq!(f.transform(&OrePoly::one(&h)).unwrap(), f);
    }

    #[test]
    fn right_form_round_trip() {
        let f9 = RingCtx::finite(3, 2, 1, None).unwrap();
        let k = RingCtx::finite(3, 2, 1, Some(f9.generator().unwrap())).unwrap();
        for f in OrePoly::all_up_to_degree(&k, 2).unwrap().into_iter().step_by(37) {
            let b = f.right_coeffs().unwrap();
            assert_eq!(OrePoly::from_right_coeffs(&k, &b), f);
        }
    }

    #[test]
    fn display() {
        let k = f4();
        let w = k.generator().unwrap();
        let w1 = k.add(&w, &k.one());
        assert_eq!(p(&k, &[w.clone(), w1, k.one()]).to_string(), "t^2 + (w + 1)*t + w");
        let qx = RingCtx::rational_functions(true);
        let x = qx.generator().unwrap();
        let f = OrePoly::linear(&qx, &x).pow(2);
        assert_eq!(f.to_string(), "t^2 - 2*x*t + (x^2 - 1)");
        let h = RingCtx::quaternions();
        assert_eq!(OrePoly::linear(&h, &Elem::Quat(Quat::i())).to_string(), "t - i");
        assert_eq!(OrePoly::zero(&h).to_string(), "0");
        assert_eq!(OrePoly::constant(&k, k.add(&w, &k.one())).to_string(), "w + 1");
    }
}
