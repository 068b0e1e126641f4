//! Arithmetic in 𝔽_{p^m} = 𝔽_p[w]/(μ(w)) for a fixed monic irreducible μ.
//!
//! Elements are coefficient vectors of length exactly `m` (index i is the
//! coefficient of w^i) with entries in `0..p`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u32,
    m: usize,
    /// Monic modulus, low-to-high, length m + 1.
    modulus: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Monic polynomials over 𝔽_p of the given degree, in lexicographic order of
/// their low-to-high coefficient vectors (constant term varies fastest).
fn monic_polys(p: u32, deg: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg as u32);
    (0..count).map(move |mut idx| {
        let mut v = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            v.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        v.push(1);
        v
    })
}

fn poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let v = (r[shift + i] as u64 + (p - lead) as u64 * bc as u64) % p as u64;
                r[shift + i] = v as u32;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for g in monic_polys(p, d) {
            if poly_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// 𝔽_{p^m} with the first monic irreducible of degree m in
    /// lexicographic order as modulus.
    pub fn new(p: u32, m: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidRing("extension degree must be >= 1".into()));
        }
        let size = (p as u64).checked_pow(m as u32);
        if size.is_none_or(|q| q > 1 << 24) {
            return Err(Error::InvalidRing(format!("field GF({p}^{m}) is too large")));
        }
        let modulus = monic_polys(p, m)
            .find(|f| is_irreducible(p, f))
            .expect("irreducible polynomials exist in every degree");
        Ok(FiniteField { p, m, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m as u32)
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.m]
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub fn generator(&self) -> Vec<u32> {
        let mut v = self.zero();
        if self.m > 1 {
            v[1] = 1;
        } else {
            // w is a root of the linear modulus w + c0, i.e. w = -c0.
            v[0] = (self.p - self.modulus[0]) % self.p;
        }
        v
    }

    pub fn from_int(&self, n: i64) -> Vec<u32> {
        let mut v = self.zero();
        v[0] = n.rem_euclid(self.p as i64) as u32;
        v
    }

    pub fn is_valid(&self, a: &[u32]) -> bool {
        a.len() == self.m && a.iter().all(|&c| c < self.p)
    }

    pub fn is_zero(&self, a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn neg(&self, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| (x + self.p - y) % self.p).collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut r = poly_rem(self.p, &prod, &self.modulus);
        r.resize(self.m, 0);
        r
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        a.iter().map(|&x| ((x as u64 * c as u64) % p) as u32).collect()
    }

    pub fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &[u32]) -> Result<Vec<u32>> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// a ↦ a^{p^k}.
    pub fn frobenius(&self, a: &[u32], k: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        for _ in 0..(k as usize % self.m) {
            r = self.pow(&r, self.p as u64);
        }
        r
    }

    pub fn index_of(&self, a: &[u32]) -> u64 {
        a.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn from_index(&self, mut idx: u64) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            v.push((idx % self.p as u64) as u32);
            idx /= self.p as u64;
        }
        v
    }

    /// All elements, ordered by index (0 first, then 1, ...).
    pub fn elements(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_are_the_expected_ones() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn omega_squared_is_omega_plus_one() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let w = f4.generator();
        assert_eq!(f4.mul(&w, &w), vec![1, 1]);
        assert_eq!(f4.frobenius(&w, 1), vec![1, 1]);
    }

    #[test]
    fn inverses_and_enumeration() {
        let f9 = FiniteField::new(3, 2).unwrap();
        let all: Vec<_> = f9.elements().collect();
        assert_eq!(all.len(), 9);
        for a in all.iter().skip(1) {
            let ai = f9.inv(a).unwrap();
            assert_eq!(f9.mul(a, &ai), f9.one());
        }
        assert!(f9.inv(&f9.zero()).is_err());
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(FiniteField::new(4, 1).is_err());
    }
}
