//! Exact computations with skew polynomials K[t; S, D] over division rings:
//! evaluation, algebraic sets and ranks, Wedderburn polynomials, companion
//! matrices and pseudo-linear maps, invariant factors with diagonalization
//! and triangulation witnesses, spectra, and G-algebraic sets.

pub mod algset;
pub mod canon;
pub mod error;
pub mod galg;
pub mod ground;
pub mod matrix;
pub mod orepoly;
pub mod pltmat;

pub use error::{Error, Result};
pub use ground::{Ctx, Elem, Quat, RingCtx};
pub use matrix::MatK;
pub use orepoly::OrePoly;
