//! Dense matrices over a ground division ring.
//!
//! Row reduction uses left row operations only (left scalar multiples of rows
//! added to other rows), which is what makes rank, invertibility and kernels
//! meaningful over a noncommutative K.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{Ctx, Elem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatK {
    ctx: Ctx,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl MatK {
    pub fn zeros(ctx: &Ctx, rows: usize, cols: usize) -> Self {
        MatK {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = MatK::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn diag(ctx: &Ctx, entries: &[Elem]) -> Self {
        let mut m = MatK::zeros(ctx, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_fn(ctx: &Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatK {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from rows, validating shape and entries.
    pub fn from_rows(ctx: &Ctx, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("rows have different lengths".into()));
        }
        let data: Vec<Elem> = rows.into_iter().flatten().collect();
        for e in &data {
            ctx.check(e)?;
        }
        Ok(MatK {
            ctx: ctx.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    fn same_shape(&self, o: &MatK) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &MatK) -> Result<MatK> {
        self.same_shape(o)?;
        Ok(self.zip_with(o, |a, b| self.ctx.add(a, b)))
    }

    pub fn sub(&self, o: &MatK) -> Result<MatK> {
        self.same_shape(o)?;
        Ok(self.zip_with(o, |a, b| self.ctx.sub(a, b)))
    }

    fn zip_with(&self, o: &MatK, f: impl Fn(&Elem, &Elem) -> Elem) -> MatK {
        MatK {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> MatK {
        self.map(|a| self.ctx.neg(a))
    }

    pub fn mul(&self, o: &MatK) -> Result<MatK> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let k = &self.ctx;
        Ok(MatK::from_fn(k, self.rows, o.cols, |i, j| {
            (0..self.cols).fold(k.zero(), |acc, l| {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    acc
                } else {
                    k.add(&acc, &k.mul(a, o.get(l, j)))
                }
            })
        }))
    }

    /// Entrywise image under `f`.
    pub fn map(&self, f: impl Fn(&Elem) -> Elem) -> MatK {
        MatK {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Elem) -> Result<Elem>) -> Result<MatK> {
        Ok(MatK {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// S applied entrywise.
    pub fn s(&self) -> MatK {
        self.map(|a| self.ctx.s(a))
    }

    /// D applied entrywise.
    pub fn d(&self) -> MatK {
        self.map(|a| self.ctx.d(a))
    }

    pub fn s_inv(&self) -> Result<MatK> {
        self.try_map(|a| self.ctx.s_inv(a))
    }

    pub fn transpose(&self) -> MatK {
        MatK::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.ctx.is_zero(a))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.ctx.is_zero(self.get(i, j))))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.ctx.is_zero(self.get(i, j))))
    }

    pub fn diagonal(&self) -> Vec<Elem> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Reduced row echelon form by left row operations, with pivot columns.
    pub fn rref(&self) -> (MatK, Vec<usize>) {
        let k = &self.ctx;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = k.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = k.mul(&inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || k.is_zero(m.get(i, c)) {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = k.sub(m.get(i, j), &k.mul(&f, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row rank (the dimension of the left row space).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Two-sided inverse via reduction of [A | I].
    pub fn inverse(&self) -> Result<MatK> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = MatK::from_fn(&self.ctx, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.ctx.one()
            } else {
                self.ctx.zero()
            }
        });
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(MatK::from_fn(&self.ctx, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Some column x with A·x = b, if the system is consistent.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch("right-hand side length".into()));
        }
        let n = self.cols;
        let aug = MatK::from_fn(&self.ctx, self.rows, n + 1, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, piv) = aug.rref();
        if piv.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = vec![self.ctx.zero(); n];
        for (row, &c) in piv.iter().enumerate() {
            x[c] = r.get(row, n).clone();
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel {v : A·v = 0} (a right K-space).
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        let k = &self.ctx;
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![k.zero(); self.cols];
                v[f] = k.one();
                for (row, &c) in piv.iter().enumerate() {
                    v[c] = k.neg(r.get(row, f));
                }
                v
            })
            .collect()
    }

    /// Block-diagonal assembly.
    pub fn block_diag(ctx: &Ctx, blocks: &[MatK]) -> MatK {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = MatK::zeros(ctx, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl fmt::Display for MatK {
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
