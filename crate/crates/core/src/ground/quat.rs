//! Rational Hamilton quaternions ℍ_ℚ.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qpoly::fmt_rational_terms;

/// w + x·i + y·j + z·k with rational components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quat(pub [BigRational; 4]);

impl Quat {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Quat([w, x, y, z])
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |n: i64| BigRational::from_integer(n.into());
        Quat([r(w), r(x), r(y), r(z)])
    }

    pub fn scalar(c: BigRational) -> Self {
        Quat([c, BigRational::zero(), BigRational::zero(), BigRational::zero()])
    }

    pub fn zero() -> Self {
        Quat::scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Quat::scalar(BigRational::one())
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// True when the element lies in the center ℚ.
    pub fn is_central(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        Quat(std::array::from_fn(|n| &self.0[n] + &o.0[n]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quat(std::array::from_fn(|n| &self.0[n] - &o.0[n]))
    }

    pub fn neg(&self) -> Self {
        Quat(std::array::from_fn(|n| -&self.0[n]))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Quat(std::array::from_fn(|n| &self.0[n] * c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quat([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    pub fn conj(&self) -> Self {
        Quat([
            self.0[0].clone(),
            -&self.0[1],
            -&self.0[2],
            -&self.0[3],
        ])
    }

    /// Reduced norm w² + x² + y² + z².
    pub fn norm(&self) -> BigRational {
        self.0.iter().map(|c| c * c).fold(BigRational::zero(), |a, b| a + b)
    }

    /// Reduced trace 2w.
    pub fn trace(&self) -> BigRational {
        &self.0[0] + &self.0[0]
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(self.conj().scale(&self.norm().recip()))
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Printed high-to-low by the shared helper, so list k first.
        let names = ["", "i", "j", "k"];
        let mut out = String::new();
        let mut first = true;
        for n in 0..4 {
            let c = &self.0[n];
            if c.is_zero() {
                continue;
            }
            let term = if n == 0 {
                fmt_rational_terms(&[(0, c.clone())], "")
            } else {
                fmt_rational_terms(&[(1, c.clone())], names[n])
            };
            if first {
                out.push_str(&term);
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        if first {
            out.push('0');
        }
        f.write_str(&out)
    }
}
