//! Invariant factors of tI − A over R, (S,D)-diagonalization and
//! triangulation with verified witnesses, linear splitting and spectra.

use std::collections::HashSet;
use std::fmt;

use crate::algset::{self, ClassKind, RootSet, Side};
use crate::error::{Error, Result};
use crate::ground::{Ctx, Elem, Family, Quat};
use crate::matrix::MatK;
use crate::orepoly::OrePoly;
use crate::pltmat;

/// Dense matrix over R = K[t; S, D].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    ctx: Ctx,
    rows: usize,
    cols: usize,
    data: Vec<OrePoly>,
}

impl PolyMat {
    pub fn zeros(ctx: &Ctx, rows: usize, cols: usize) -> Self {
        PolyMat {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![OrePoly::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = PolyMat::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, OrePoly::one(ctx));
        }
        m
    }

    /// tI − A
    pub fn characteristic(a: &MatK) -> Self {
        let k = a.ctx();
        let n = a.rows();
        let mut m = PolyMat::zeros(k, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut p = OrePoly::constant(k, k.neg(a.get(i, j)));
                if i == j {
                    p = p.add(&OrePoly::t(k));
                }
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &OrePoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: OrePoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &PolyMat) -> Result<PolyMat> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch("polynomial matrix product".into()));
        }
        let mut out = PolyMat::zeros(&self.ctx, self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = OrePoly::zero(&self.ctx);
                for l in 0..self.cols {
                    let a = self.get(i, l);
                    if !a.is_zero() {
                        acc = acc.add(&a.mul(o.get(l, j)));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i ← row_i − q·row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &OrePoly) {
        for c in 0..self.cols {
            let v = self.get(i, c).sub(&q.mul(self.get(j, c)));
            self.set(i, c, v);
        }
    }

    /// col_j ← col_j − col_i·q
    fn col_sub(&mut self, j: usize, i: usize, q: &OrePoly) {
        for r in 0..self.rows {
            let v = self.get(r, j).sub(&self.get(r, i).mul(q));
            self.set(r, j, v);
        }
    }

    /// row_i ← c·row_i
    fn row_scale(&mut self, i: usize, c: &Elem) {
        for col in 0..self.cols {
            let v = self.get(i, col).scale_left(c);
            self.set(i, col, v);
        }
    }

    /// col_i ← col_i·c
    fn col_scale(&mut self, i: usize, c: &OrePoly) {
        for r in 0..self.rows {
            let v = self.get(r, i).mul(c);
            self.set(r, i, v);
        }
    }
}

impl fmt::Display for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// P·(tI − A)·Q = diag(e_1, …, e_n) with P, Q unimodular and stored inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobsonForm {
    pub p: PolyMat,
    pub p_inv: PolyMat,
    pub q: PolyMat,
    pub q_inv: PolyMat,
    pub diag: Vec<OrePoly>,
    /// Number of non-unit diagonal entries.
    pub r: usize,
}

impl JacobsonForm {
    /// The non-unit entries e_1, …, e_r.
    pub fn invariant_factors(&self) -> Vec<OrePoly> {
        self.diag.iter().filter(|e| !e.is_unit()).cloned().collect()
    }

    /// The last invariant factor e_r.
    pub fn last(&self) -> Option<&OrePoly> {
        self.diag.last().filter(|e| !e.is_unit())
    }

    /// Re-checks every structural invariant from scratch.
    pub fn verify(&self, a: &MatK) -> Result<()> {
        let k = a.ctx();
        let n = a.rows();
        let m = PolyMat::characteristic(a);
        let mut d = PolyMat::zeros(k, n, n);
        for (i, e) in self.diag.iter().enumerate() {
            d.set(i, i, e.clone());
        }
        let id = PolyMat::identity(k, n);
        let checks = [
            (self.p.mul(&m)?.mul(&self.q)? == d, "P(tI - A)Q = diag"),
            (self.p.mul(&self.p_inv)? == id, "P P^-1 = I"),
            (self.p_inv.mul(&self.p)? == id, "P^-1 P = I"),
            (self.q.mul(&self.q_inv)? == id, "Q Q^-1 = I"),
            (self.q_inv.mul(&self.q)? == id, "Q^-1 Q = I"),
        ];
        for (ok, what) in checks {
            if !ok {
                return Err(Error::InvariantBreach(what.into()));
            }
        }
        for w in self.diag.windows(2) {
            if !two_sided_divides(&w[0], &w[1])? {
                return Err(Error::InvariantBreach(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        if self.diag.iter().map(OrePoly::deg).sum::<usize>() != n {
            return Err(Error::InvariantBreach("degrees of the invariant factors".into()));
        }
        Ok(())
    }
}

/// b ∈ R·a ∩ a·R
pub fn two_sided_divides(a: &OrePoly, b: &OrePoly) -> Result<bool> {
    Ok(b.right_divisible_by(a) && b.left_divisible_by(a)?)
}

struct Elim {
    m: PolyMat,
    p: PolyMat,
    p_inv: PolyMat,
    q: PolyMat,
    q_inv: PolyMat,
}

impl Elim {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap_rows(a, b);
            self.p.swap_rows(a, b);
            self.p_inv.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap_cols(a, b);
            self.q.swap_cols(a, b);
            self.q_inv.swap_rows(a, b);
        }
    }

    fn row_sub(&mut self, i: usize, j: usize, c: &OrePoly) {
        self.m.row_sub(i, j, c);
        self.p.row_sub(i, j, c);
        // P⁻¹ ← P⁻¹(I + E_ij c): col_j += col_i·c
        self.p_inv.col_sub(j, i, &c.neg());
    }

    fn col_sub(&mut self, j: usize, i: usize, c: &OrePoly) {
        self.m.col_sub(j, i, c);
        self.q.col_sub(j, i, c);
        // Q⁻¹ ← (I + E_ij c)Q⁻¹: row_i += c·row_j
        self.q_inv.row_sub(i, j, &c.neg());
    }

    fn row_scale(&mut self, i: usize, c: &Elem) -> Result<()> {
        let k = self.m.ctx.clone();
        let ci = k.inv(c)?;
        self.m.row_scale(i, c);
        self.p.row_scale(i, c);
        self.p_inv.col_scale(i, &OrePoly::constant(&k, ci));
        Ok(())
    }

    /// Diagonalizes the principal block [lo, hi) assuming everything outside
    /// it in those rows and columns is already zero.
    fn eliminate(&mut self, lo: usize, hi: usize) -> Result<()> {
        for k in lo..hi {
            loop {
                let mut best: Option<(usize, usize, usize)> = None;
                for i in k..hi {
                    for j in k..hi {
                        let e = self.m.get(i, j);
                        if let Some(d) = e.degree() {
                            if best.is_none_or(|(bd, _, _)| d < bd) {
                                best = Some((d, i, j));
                            }
                        }
                    }
                }
                let Some((_, bi, bj)) = best else {
                    return Err(Error::InvariantBreach("tI - A became singular".into()));
                };
                self.swap_rows(k, bi);
                self.swap_cols(k, bj);
                let piv = self.m.get(k, k).clone();
                let mut clean = true;
                for i in k + 1..hi {
                    let e = self.m.get(i, k);
                    if e.is_zero() {
                        continue;
                    }
                    let (qq, r) = e.right_div_rem(&piv);
                    self.row_sub(i, k, &qq);
                    clean &= r.is_zero();
                }
                for j in k + 1..hi {
                    let e = self.m.get(k, j);
                    if e.is_zero() {
                        continue;
                    }
                    let (qq, r) = e.left_div_rem(&piv)?;
                    self.col_sub(j, k, &qq);
                    clean &= r.is_zero();
                }
                if clean {
                    break;
                }
            }
            let lc = self.m.get(k, k).lc();
            if !self.m.ctx.is_one(&lc) {
                let inv = self.m.ctx.inv(&lc)?;
                self.row_scale(k, &inv)?;
            }
        }
        Ok(())
    }

    /// Repairs two-sided divisibility between neighbours; each repair
    /// lowers the degree of the earlier entry, so the loop terminates.
    fn fix_divisibility(&mut self, n: usize) -> Result<()> {
        'scan: loop {
            for i in 0..n.saturating_sub(1) {
                let a = self.m.get(i, i).clone();
                let b = self.m.get(i + 1, i + 1).clone();
                if !b.left_divisible_by(&a)? {
                    // [[a, b], [0, b]]: the row entry b reduces by left division.
                    self.row_sub(i, i + 1, &OrePoly::one(&self.m.ctx).neg());
                } else if !b.right_divisible_by(&a) {
                    // [[a, 0], [b, b]]: the column entry b reduces by right division.
                    self.col_sub(i, i + 1, &OrePoly::one(&self.m.ctx).neg());
                } else {
                    continue;
                }
                self.eliminate(i, i + 2)?;
                continue 'scan;
            }
            return Ok(());
        }
    }
}

/// Jacobson normal form of tI − A (needs S⁻¹).
pub fn jacobson_form(a: &MatK) -> Result<JacobsonForm> {
    let k = a.ctx();
    if !a.is_square() {
        return Err(Error::ShapeMismatch("tI - A needs a square matrix".into()));
    }
    if !k.has_inverse() {
        return Err(Error::MapNotAvailable("S^-1"));
    }
    let n = a.rows();
    let mut el = Elim {
        m: PolyMat::characteristic(a),
        p: PolyMat::identity(k, n),
        p_inv: PolyMat::identity(k, n),
        q: PolyMat::identity(k, n),
        q_inv: PolyMat::identity(k, n),
    };
    el.eliminate(0, n)?;
    el.fix_divisibility(n)?;
    let diag: Vec<OrePoly> = (0..n).map(|i| el.m.get(i, i).clone()).collect();
    let jf = JacobsonForm {
        r: diag.iter().filter(|e| !e.is_unit()).count(),
        p: el.p,
        p_inv: el.p_inv,
        q: el.q,
        q_inv: el.q_inv,
        diag,
    };
    jf.verify(a)?;
    Ok(jf)
}

pub fn invariant_factors(a: &MatK) -> Result<Vec<OrePoly>> {
    Ok(jacobson_form(a)?.invariant_factors())
}

/// Right-module presentation built from L_A on unit columns: column k is
/// t·e_k − L_A(e_k).
pub fn right_module_presentation(a: &MatK) -> Result<PolyMat> {
    let k = a.ctx();
    let n = a.rows();
    let mut m = PolyMat::zeros(k, n, n);
    for c in 0..n {
        let mut e = vec![k.zero(); n];
        e[c] = k.one();
        let la = pltmat::l_action(a, &e)?;
        for r in 0..n {
            let mut p = OrePoly::constant(k, k.neg(&la[r]));
            if r == c {
                p = p.add(&OrePoly::t(k));
            }
            m.set(r, c, p);
        }
    }
    Ok(m)
}

/// Degrees of the non-unit invariant factors of the right-module presentation.
pub fn right_invariant_degrees(a: &MatK) -> Result<Vec<usize>> {
    let k = a.ctx();
    let n = a.rows();
    let mut el = Elim {
        m: right_module_presentation(a)?,
        p: PolyMat::identity(k, n),
        p_inv: PolyMat::identity(k, n),
        q: PolyMat::identity(k, n),
        q_inv: PolyMat::identity(k, n),
    };
    el.eliminate(0, n)?;
    el.fix_divisibility(n)?;
    Ok((0..n).map(|i| el.m.get(i, i).deg()).filter(|&d| d > 0).collect())
}

/// r·v = Σ r_m T_A^m(v)
fn act(a: &MatK, r: &OrePoly, v: &[Elem]) -> Result<Vec<Elem>> {
    let k = a.ctx();
    let mut acc = vec![k.zero(); v.len()];
    let mut cur = v.to_vec();
    for (m, c) in r.coeffs().iter().enumerate() {
        if m > 0 {
            cur = pltmat::t_action(a, &cur)?;
        }
        if !k.is_zero(c) {
            for (x, y) in acc.iter_mut().zip(&cur) {
                *x = k.add(x, &k.mul(c, y));
            }
        }
    }
    Ok(acc)
}

/// W with sd_transform(A, W) = diag(C_{e_1}, …, C_{e_r}).
pub fn module_basis(a: &MatK, jf: &JacobsonForm) -> Result<(MatK, Vec<OrePoly>)> {
    let k = a.ctx();
    let n = a.rows();
    let mut rows = Vec::with_capacity(n);
    let mut blocks = Vec::new();
    for (i, e) in jf.diag.iter().enumerate() {
        if e.is_unit() {
            continue;
        }
        let mut u = vec![k.zero(); n];
        for c in 0..n {
            let mut unit = vec![k.zero(); n];
            unit[c] = k.one();
            let part = act(a, jf.q_inv.get(i, c), &unit)?;
            for (x, y) in u.iter_mut().zip(&part) {
                *x = k.add(x, y);
            }
        }
        for _ in 0..e.deg() {
            rows.push(u.clone());
            u = pltmat::t_action(a, &u)?;
        }
        blocks.push(e.clone());
    }
    let w = MatK::from_rows(k, rows)?;
    let comps: Vec<MatK> = blocks.iter().map(pltmat::companion).collect::<Result<_>>()?;
    let expect = MatK::block_diag(k, &comps);
    if pltmat::sd_transform(a, &w)? != expect {
        return Err(Error::InvariantBreach("module basis does not split A".into()));
    }
    Ok((w, blocks))
}

/// Explicit roots usable as P-basis candidates (conjugates of class representatives included).
fn root_candidates(rs: &RootSet) -> Result<Vec<Elem>> {
    let k = rs.f.ctx();
    let mut out = Vec::new();
    for c in &rs.classes {
        out.extend(c.members.iter().cloned());
        if matches!(c.kind, ClassKind::Described { .. }) {
            let rep = &c.members[0];
            for q in [Quat::i(), Quat::j(), Quat::k(), Quat::from_ints(1, 1, 0, 0), Quat::from_ints(1, 0, 1, 0)] {
                out.push(k.conj(rep, &Elem::Quat(q))?);
            }
        }
    }
    Ok(out)
}

/// Some P-basis of V(f) of size deg f, if f is Wedderburn.
pub fn wedderburn_basis(f: &OrePoly) -> Result<Option<Vec<Elem>>> {
    let rs = algset::roots(f, Side::Right)?;
    if rs.rank() != f.deg() {
        return Ok(None);
    }
    let basis = algset::p_basis(f.ctx(), &root_candidates(&rs)?)?;
    if basis.len() != f.deg() {
        return Err(Error::InvariantBreach(format!("no explicit P-basis of V({f})")));
    }
    Ok(Some(basis))
}

/// (P, S(P)AP⁻¹ + D(P)P⁻¹) with diagonal result, when one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalWitness {
    pub p: MatK,
    pub result: MatK,
}

pub fn is_sd_diagonalizable(a: &MatK) -> Result<bool> {
    let jf = jacobson_form(a)?;
    match jf.last() {
        None => Ok(true),
        Some(e) => algset::is_wedderburn(e),
    }
}

/// Diagonalization witness assembled from Vandermonde blocks of the invariant factors.
pub fn diagonalize(a: &MatK) -> Result<Option<CanonicalWitness>> {
    let k = a.ctx();
    let jf = jacobson_form(a)?;
    if let Some(e) = jf.last() {
        if !algset::is_wedderburn(e)? {
            return Ok(None);
        }
    }
    let (w, blocks) = module_basis(a, &jf)?;
    let mut vinvs = Vec::new();
    for e in &blocks {
        let basis = wedderburn_basis(e)?
            .ok_or_else(|| Error::InvariantBreach(format!("invariant factor {e} is not Wedderburn")))?;
        vinvs.push(algset::vandermonde(k, &basis).inverse()?);
    }
    let p = MatK::block_diag(k, &vinvs).mul(&w)?;
    let result = pltmat::sd_transform(a, &p)?;
    if !result.is_diagonal() {
        return Err(Error::InvariantBreach("diagonalization witness failed".into()));
    }
    Ok(Some(CanonicalWitness { p, result }))
}

/// Factors t − a_n, …, t − a_1 (product order) of a monic f, if f splits.
pub fn linear_split(f: &OrePoly) -> Result<Option<Vec<OrePoly>>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let k = f.ctx();
    if f.deg() == 0 {
        return Ok(Some(Vec::new()));
    }
    if f.deg() == 1 {
        return Ok(Some(vec![f.clone()]));
    }
    let rs = algset::roots(f, Side::Right)?;
    let mut tried = HashSet::new();
    for a in root_candidates(&rs)? {
        if !tried.insert(a.clone()) {
            continue;
        }
        let lin = OrePoly::linear(k, &a);
        let (q, r) = f.right_div_rem(&lin);
        debug_assert!(r.is_zero());
        if let Some(mut rest) = linear_split(&q)? {
            rest.push(lin);
            debug_assert_eq!(pltmat::chain_product(k, &rest), *f);
            return Ok(Some(rest));
        }
        if !k.is_finite() {
            // over infinite rings the candidates all lie in few classes; one failure is final
            break;
        }
    }
    Ok(None)
}

pub fn is_sd_triangularizable(a: &MatK) -> Result<bool> {
    let jf = jacobson_form(a)?;
    match jf.last() {
        None => Ok(true),
        Some(e) => Ok(linear_split(e)?.is_some()),
    }
}

/// Triangulation witness assembled from chain bases of linear splittings.
pub fn triangularize(a: &MatK) -> Result<Option<CanonicalWitness>> {
    let k = a.ctx();
    let jf = jacobson_form(a)?;
    if let Some(e) = jf.last() {
        if linear_split(e)?.is_none() {
            return Ok(None);
        }
    }
    let (w, blocks) = module_basis(a, &jf)?;
    let mut parts = Vec::new();
    for e in &blocks {
        let factors = linear_split(e)?
            .ok_or_else(|| Error::InvariantBreach(format!("invariant factor {e} does not split")))?;
        parts.push(pltmat::chain_basis(k, &factors)?);
    }
    let p = MatK::block_diag(k, &parts).mul(&w)?;
    let result = pltmat::sd_transform(a, &p)?;
    if !result.is_upper_triangular() {
        return Err(Error::InvariantBreach("triangulation witness failed".into()));
    }
    Ok(Some(CanonicalWitness { p, result }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecMethod {
    Brute,
    ViaRoots,
}

/// An eigenvalue with a nonzero eigenvector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigen {
    pub value: Elem,
    pub vector: Vec<Elem>,
}

/// Left eigenvalues (T_A(v) = αv) and right eigenvalues (L_A(u) = uβ).
///
/// Over finite rings every eigenvalue is listed; otherwise one
/// representative per class. `complete` is false for the ℚ grid probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub method: SpecMethod,
    pub lspec: Vec<Eigen>,
    pub rspec: Vec<Eigen>,
    pub complete: bool,
}

impl SpectrumReport {
    pub fn lvalues(&self) -> Vec<Elem> {
        self.lspec.iter().map(|e| e.value.clone()).collect()
    }

    pub fn rvalues(&self) -> Vec<Elem> {
        self.rspec.iter().map(|e| e.value.clone()).collect()
    }
}

/// Cap on |K|^n for exhaustive eigenvector enumeration.
pub const MAX_ENUM: u64 = 1 << 20;

pub fn spectra(a: &MatK, method: SpecMethod) -> Result<SpectrumReport> {
    spectra_capped(a, method, MAX_ENUM)
}

pub fn spectra_capped(a: &MatK, method: SpecMethod, max_enum: u64) -> Result<SpectrumReport> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("spectra need a square matrix".into()));
    }
    match method {
        SpecMethod::Brute => spectra_brute(a, max_enum),
        SpecMethod::ViaRoots => spectra_via_roots(a),
    }
}

fn eigen_of(a: &MatK, v: &[Elem], left: bool) -> Result<Option<Elem>> {
    let k = a.ctx();
    let Some(j) = v.iter().position(|e| !k.is_zero(e)) else {
        return Ok(None);
    };
    let img = if left {
        pltmat::t_action(a, v)?
    } else {
        pltmat::l_action(a, v)?
    };
    let vj_inv = k.inv(&v[j])?;
    let val = if left {
        k.mul(&img[j], &vj_inv)
    } else {
        k.mul(&vj_inv, &img[j])
    };
    let ok = v.iter().zip(&img).all(|(x, y)| {
        let scaled = if left { k.mul(&val, x) } else { k.mul(x, &val) };
        scaled == *y
    });
    Ok(ok.then_some(val))
}

fn push_eigen(list: &mut Vec<Eigen>, seen: &mut HashSet<Elem>, value: Elem, v: &[Elem]) {
    if seen.insert(value.clone()) {
        list.push(Eigen {
            value,
            vector: v.to_vec(),
        });
    }
}

fn spectra_brute(a: &MatK, max_enum: u64) -> Result<SpectrumReport> {
    let k = a.ctx();
    let n = a.rows();
    let (mut l, mut r) = (Vec::new(), Vec::new());
    let (mut ls, mut rs) = (HashSet::new(), HashSet::new());
    let grid: Vec<Elem>;
    let complete;
    if k.is_finite() {
        grid = k.elements()?;
        complete = true;
    } else if matches!(k.family(), Family::Rational) {
        grid = (-2..=2).map(|v| k.from_int(v)).collect();
        complete = false;
    } else {
        return Err(Error::capability(format!("brute-force spectra over {k}")));
    }
    let q = grid.len() as u64;
    let total = q
        .checked_pow(n as u32)
        .filter(|&t| t <= max_enum)
        .ok_or_else(|| Error::capability("eigenvector enumeration exceeds the cap"))?;
    for idx in 1..total {
        let mut x = idx;
        let v: Vec<Elem> = (0..n)
            .map(|_| {
                let e = grid[(x % q) as usize].clone();
                x /= q;
                e
            })
            .collect();
        if v.iter().all(|e| k.is_zero(e)) {
            continue;
        }
        if let Some(val) = eigen_of(a, &v, true)? {
            push_eigen(&mut l, &mut ls, val, &v);
        }
        if let Some(val) = eigen_of(a, &v, false)? {
            push_eigen(&mut r, &mut rs, val, &v);
        }
    }
    sort_by_index(k, &mut l);
    sort_by_index(k, &mut r);
    Ok(SpectrumReport {
        method: SpecMethod::Brute,
        lspec: l,
        rspec: r,
        complete,
    })
}

fn sort_by_index(ctx: &Ctx, list: &mut [Eigen]) {
    if let Some(f) = ctx.finite_field() {
        list.sort_by_key(|e| match &e.value {
            Elem::Fq(c) => f.index_of(c),
            _ => 0,
        });
    } else {
        list.sort_by(|x, y| x.value.cmp(&y.value));
    }
}

/// A nonzero eigenvector for a claimed eigenvalue, by linear algebra.
fn eigenvector(a: &MatK, val: &Elem, left: bool) -> Result<Vec<Elem>> {
    let k = a.ctx();
    let n = a.rows();
    let lb = k
        .linear_base()
        .ok_or_else(|| Error::capability(format!("eigenvectors over {k}")))?;
    let f = |v: &[Elem]| -> Result<Vec<Elem>> {
        let img = if left {
            pltmat::t_action(a, v)?
        } else {
            pltmat::l_action(a, v)?
        };
        Ok(v.iter()
            .zip(&img)
            .map(|(x, y)| {
                let s = if left { k.mul(val, x) } else { k.mul(x, val) };
                k.sub(y, &s)
            })
            .collect())
    };
    lb.kernel(n, f)?
        .into_iter()
        .find(|v| v.iter().any(|e| !k.is_zero(e)))
        .ok_or_else(|| Error::InvariantBreach(format!("{val} has no eigenvector")))
}

fn spectra_via_roots(a: &MatK) -> Result<SpectrumReport> {
    let k = a.ctx();
    let jf = jacobson_form(a)?;
    let Some(er) = jf.last().cloned() else {
        return Ok(SpectrumReport {
            method: SpecMethod::ViaRoots,
            lspec: Vec::new(),
            rspec: Vec::new(),
            complete: true,
        });
    };
    let mut sides = Vec::new();
    for (side, left) in [(Side::Left, true), (Side::Right, false)] {
        let rs = algset::roots(&er, side)?;
        let mut values = Vec::new();
        let mut seen = HashSet::new();
        for class in &rs.classes {
            let reps = if k.is_finite() {
                k.class_members(&class.members[0])?
            } else {
                vec![class.members[0].clone()]
            };
            for v in reps {
                if seen.insert(v.clone()) {
                    values.push(v);
                }
            }
        }
        let mut list = values
            .into_iter()
            .map(|v| {
                let vector = eigenvector(a, &v, left)?;
                Ok(Eigen { value: v, vector })
            })
            .collect::<Result<Vec<_>>>()?;
        sort_by_index(k, &mut list);
        sides.push(list);
    }
    let rspec = sides.pop().unwrap_or_default();
    let lspec = sides.pop().unwrap_or_default();
    Ok(SpectrumReport {
        method: SpecMethod::ViaRoots,
        lspec,
        rspec,
        complete: true,
    })
}

/// Number of conjugacy classes among the given values.
pub fn class_count(ctx: &Ctx, values: &[Elem]) -> Result<usize> {
    let mut reps: Vec<Elem> = Vec::new();
    'next: for v in values {
        for r in &reps {
            if ctx.same_class(r, v)? {
                continue 'next;
            }
        }
        reps.push(v.clone());
    }
    Ok(reps.len())
}

/// V(g^q) = φ_q(V(g)) for q with R·q + R·g = R.
pub fn transport_roots(q: &OrePoly, vg: &RootSet) -> Result<RootSet> {
    let g = &vg.f;
    if !g.rgcd(q)?.is_one() {
        return Err(Error::NotCoprime);
    }
    let f = g.transform(q)?;
    let mut roots = Vec::new();
    for a in &vg.roots {
        let v = q
            .phi_value(a)
            .map_err(|_| Error::InvariantBreach(format!("q vanishes at the root {a}")))?;
        if !roots.contains(&v) {
            roots.push(v);
        }
    }
    let classes = vg
        .classes
        .iter()
        .map(|c| {
            let members = c
                .members
                .iter()
                .map(|m| q.phi_value(m))
                .collect::<Result<Vec<_>>>()?;
            let kind = match &c.kind {
                ClassKind::Enumerated => ClassKind::Enumerated,
                ClassKind::Described { .. } => {
                    let Elem::Quat(rep) = &members[0] else {
                        unreachable!("described classes are quaternion classes")
                    };
                    ClassKind::Described {
                        trace: rep.trace(),
                        norm: rep.norm(),
                    }
                }
            };
            Ok(algset::RootClass {
                members,
                kind,
                e_dim: c.e_dim,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootSet {
        f,
        side: Side::Right,
        roots,
        classes,
    })
}
