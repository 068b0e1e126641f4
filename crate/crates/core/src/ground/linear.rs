//! K viewed as a finite-dimensional vector space over a central subfield B
//! (𝔽_p inside 𝔽_{p^m}, ℚ inside ℍ_ℚ, K itself when K is a field with S = id,
//! D = 0). S and D are B-linear in all of these cases, so additive equations
//! in unknowns from K become linear systems over B.

use num_rational::BigRational;

use super::{Ctx, Deriv, Elem, Endo, Family, Quat, RingCtx};
use crate::error::Result;
use crate::matrix::MatK;

#[derive(Clone, Debug)]
pub struct LinearBase {
    ground: Ctx,
    base: Ctx,
    dim: usize,
}

impl LinearBase {
    pub(crate) fn for_ctx(ctx: &RingCtx) -> Option<LinearBase> {
        let ground = std::sync::Arc::new(ctx.clone());
        let (base, dim) = match ctx.family() {
            Family::Finite(f) => (RingCtx::finite(f.p(), 1, 0, None).ok()?, f.m()),
            Family::Rational => (RingCtx::rationals(), 1),
            Family::Quaternions => (RingCtx::rationals(), 4),
            Family::RationalFunctions => {
                if *ctx.endo() != Endo::Identity || *ctx.deriv() != Deriv::Zero {
                    return None;
                }
                (ctx.classical(), 1)
            }
        };
        Some(LinearBase { ground, base, dim })
    }

    pub fn base(&self) -> &Ctx {
        &self.base
    }

    /// Dimension of K over B.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self, a: &Elem) -> Vec<Elem> {
        match a {
            Elem::Fq(c) => c.iter().map(|&v| Elem::Fq(vec![v])).collect(),
            Elem::Quat(q) => q.0.iter().cloned().map(Elem::Rational).collect(),
            other => vec![other.clone()],
        }
    }

    pub fn from_coords(&self, c: &[Elem]) -> Elem {
        match self.ground.family() {
            Family::Finite(_) => Elem::Fq(
                c.iter()
                    .map(|e| match e {
                        Elem::Fq(v) => v[0],
                        _ => unreachable!("prime field coordinate"),
                    })
                    .collect(),
            ),
            Family::Quaternions => {
                let r: [BigRational; 4] = std::array::from_fn(|n| match &c[n] {
                    Elem::Rational(r) => r.clone(),
                    _ => unreachable!("rational coordinate"),
                });
                Elem::Quat(Quat(r))
            }
            _ => c[0].clone(),
        }
    }

    /// K-basis over B.
    pub fn basis(&self) -> Vec<Elem> {
        (0..self.dim)
            .map(|n| {
                let mut c = vec![self.base.zero(); self.dim];
                c[n] = self.base.one();
                self.from_coords(&c)
            })
            .collect()
    }

    /// Matrix over B of an additive, B-linear map F: K^n → K^m, with columns
    /// indexed by the B-coordinates of the input.
    fn assemble<F>(&self, n: usize, f: &F) -> Result<MatK>
    where
        F: Fn(&[Elem]) -> Result<Vec<Elem>>,
    {
        let basis = self.basis();
        let zero = self.ground.zero();
        let mut cols: Vec<Vec<Elem>> = Vec::with_capacity(n * self.dim);
        for k in 0..n {
            for b in &basis {
                let mut x = vec![zero.clone(); n];
                x[k] = b.clone();
                let y = f(&x)?;
                cols.push(y.iter().flat_map(|e| self.coords(e)).collect());
            }
        }
        let rows = cols.first().map_or(0, Vec::len);
        Ok(MatK::from_fn(&self.base, rows, cols.len(), |i, j| cols[j][i].clone()))
    }

    fn unflatten(&self, v: &[Elem]) -> Vec<Elem> {
        v.chunks(self.dim).map(|c| self.from_coords(c)).collect()
    }

    /// Some x ∈ K^n with F(x) = target, where F is additive and B-linear.
    pub fn solve<F>(&self, n: usize, f: F, target: &[Elem]) -> Result<Option<Vec<Elem>>>
    where
        F: Fn(&[Elem]) -> Result<Vec<Elem>>,
    {
        let m = self.assemble(n, &f)?;
        let rhs: Vec<Elem> = target.iter().flat_map(|e| self.coords(e)).collect();
        if m.rows() == 0 {
            return Ok(Some(vec![self.ground.zero(); n]));
        }
        Ok(m.solve(&rhs)?.map(|x| self.unflatten(&x)))
    }

    /// B-basis of ker F ⊆ K^n.
    pub fn kernel<F>(&self, n: usize, f: F) -> Result<Vec<Vec<Elem>>>
    where
        F: Fn(&[Elem]) -> Result<Vec<Elem>>,
    {
        let m = self.assemble(n, &f)?;
        if m.rows() == 0 {
            let id = MatK::identity(&self.base, n * self.dim);
            return Ok(id.to_rows().iter().map(|r| self.unflatten(r)).collect());
        }
        Ok(m.nullspace().iter().map(|v| self.unflatten(v)).collect())
    }
}
