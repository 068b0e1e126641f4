#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wedderburn::{Ctx, Elem, MatK, OrePoly, RingCtx};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn f4() -> Ctx {
    RingCtx::finite(2, 2, 1, None).unwrap()
}

pub fn f4_classical() -> Ctx {
    RingCtx::finite(2, 2, 0, None).unwrap()
}

/// 𝔽₄ with S = Frobenius and D = ω(S − id).
pub fn f4_derived() -> Ctx {
    let k = f4();
    RingCtx::finite(2, 2, 1, Some(k.generator().unwrap())).unwrap()
}

pub fn f8() -> Ctx {
    RingCtx::finite(2, 3, 1, None).unwrap()
}

pub fn f9_derived() -> Ctx {
    let k = RingCtx::finite(3, 2, 1, None).unwrap();
    RingCtx::finite(3, 2, 1, Some(k.generator().unwrap())).unwrap()
}

/// The finite contexts the exhaustive suites run over.
pub fn finite_family() -> Vec<Ctx> {
    vec![f4_classical(), f4(), f4_derived(), f8()]
}

pub fn poly(k: &Ctx, c: &[i64]) -> OrePoly {
    OrePoly::new(k, c.iter().map(|&v| k.from_int(v)).collect())
}

pub fn monic_up_to(k: &Ctx, d: usize) -> Vec<OrePoly> {
    (0..=d).flat_map(|n| OrePoly::monic_of_degree(k, n).unwrap()).collect()
}

pub fn nonzero(k: &Ctx) -> Vec<Elem> {
    k.elements().unwrap().into_iter().filter(|e| !k.is_zero(e)).collect()
}

pub fn all_matrices(k: &Ctx, n: usize) -> Vec<MatK> {
    let els = k.elements().unwrap();
    let q = els.len();
    let total = q.pow((n * n) as u32);
    (0..total)
        .map(|mut idx| {
            MatK::from_fn(k, n, n, |_, _| {
                let e = els[idx % q].clone();
                idx /= q;
                e
            })
        })
        .collect()
}

pub fn invertible_matrices(k: &Ctx, n: usize) -> Vec<MatK> {
    all_matrices(k, n).into_iter().filter(MatK::is_invertible).collect()
}

pub fn random_matrix<R: rand::Rng>(k: &Ctx, n: usize, rng: &mut R) -> MatK {
    MatK::from_fn(k, n, n, |_, _| k.random_elem(rng))
}
