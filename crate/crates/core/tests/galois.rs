mod common;

use common::*;
use wedderburn::galg::{self, Aut, AutGroupCtx};
use wedderburn::{Elem, OrePoly, Quat, RingCtx};

/// Minimal polynomial of a over 𝔽_p from the first linear dependency among
/// 1, a, a², … in prime-field coordinates.
fn oracle_min_poly(k: &wedderburn::Ctx, a: &Elem) -> Vec<u32> {
    let f = k.finite_field().unwrap();
    let p = f.p();
    let m = f.m();
    let coords = |e: &Elem| match e {
        Elem::Fq(c) => c.clone(),
        _ => unreachable!(),
    };
    let inv = |x: u32| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut powers = vec![k.one()];
    loop {
        let d = powers.len() - 1;
        // columns: coordinates of a^0..a^d; look for a kernel vector with last entry 1.
        let mut rows: Vec<Vec<u32>> = (0..m)
            .map(|i| powers.iter().map(|e| coords(e)[i]).collect())
            .collect();
        let cols = d + 1;
        let mut piv = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(s) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, s);
            let iv = inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = *x * iv % p;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let fct = rows[i][c];
                    for j in 0..cols {
                        rows[i][j] = (rows[i][j] + p * p - fct * rows[r][j] % p) % p;
                    }
                }
            }
            piv.push(c);
            r += 1;
        }
        if !piv.contains(&d) {
            let mut out = vec![0; cols];
            out[d] = 1;
            for (row, &c) in piv.iter().enumerate() {
                out[c] = (p - rows[row][d]) % p;
            }
            return out;
        }
        powers.push(k.mul(powers.last().unwrap(), a));
    }
}

#[test]
fn galois_consistency_f16() {
    let k = RingCtx::finite(2, 4, 0, None).unwrap();
    let g = AutGroupCtx::frobenius(&k, 1).unwrap();
    assert_eq!(g.order(), 4);
    for a in k.elements().unwrap() {
        let f = galg::g_min_poly(&g, std::slice::from_ref(&a)).unwrap();
        let expect = oracle_min_poly(&k, &a);
        let got: Vec<u32> = f
            .f
            .coeffs()
            .iter()
            .map(|c| match c {
                Elem::Fq(v) => {
                    assert!(v[1..].iter().all(|&x| x == 0));
                    v[0]
                }
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(got, expect, "{a}");
        let r = galg::rank_report(&g, &a).unwrap();
        assert_eq!(r.rank_orbit, r.index * r.rank_piece);
    }
}

#[test]
fn coset_class_correspondence() {
    let h = RingCtx::quaternions();
    let groups = vec![
        AutGroupCtx::inner(&h, Quat::i()).unwrap(),
        AutGroupCtx::new(&h, vec![Aut::Inner(Quat::i()), Aut::Inner(Quat::j())]).unwrap(),
        AutGroupCtx::inner(&h, Quat::from_ints(1, 1, 0, 0)).unwrap(),
        AutGroupCtx::frobenius(&RingCtx::finite(2, 4, 0, None).unwrap(), 1).unwrap(),
        AutGroupCtx::frobenius(&RingCtx::finite(3, 2, 0, None).unwrap(), 1).unwrap(),
    ];
    let quats = [
        Quat::from_ints(0, 0, 1, 0),
        Quat::from_ints(0, 1, 1, 0),
        Quat::from_ints(1, 2, -1, 3),
        Quat::from_ints(2, 0, 0, 0),
    ];
    for g in &groups {
        let k = g.ctx();
        let points: Vec<Elem> = if k.is_finite() {
            k.elements().unwrap()
        } else {
            quats.iter().cloned().map(Elem::Quat).collect()
        };
        for a in &points {
            let od = galg::orbit(g, a).unwrap();
            assert_eq!(g.order() % od.stabilizer.len(), 0);
            assert_eq!(od.index() * od.stabilizer.len(), g.order());
            let stab: std::collections::HashSet<&Aut> = od.stabilizer.iter().collect();
            for s in g.elements() {
                for t in g.elements() {
                    let same_coset = stab.contains(&g.compose(&g.inverse(s).unwrap(), t).unwrap());
                    let same_class = k.same_class(&g.apply(s, a).unwrap(), &g.apply(t, a).unwrap()).unwrap();
                    assert_eq!(same_coset, same_class);
                }
            }
            let f = galg::g_min_poly(g, std::slice::from_ref(a)).unwrap();
            assert!(f.fixed_coefficients);
            for c in f.f.coeffs() {
                assert!(g.is_fixed(c).unwrap());
            }
            galg::rank_report(g, a).unwrap();
        }
        let mut r = rng(5);
        g.self_test(&mut r, 10).unwrap();
    }
}

/// irreducible over K^G ⇔ every root b in K has f_{G.b} = f
#[test]
fn irreducibility_criterion() {
    for (p, m, k_step) in [(2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 4, 2), (3, 2, 1)] {
        let k = RingCtx::finite(p, m, 0, None).unwrap();
        let g = AutGroupCtx::frobenius(&k, k_step).unwrap();
        let galg::FixedField::Finite(fixed) = galg::fixed_field(&g).unwrap() else {
            unreachable!()
        };
        let q = fixed.len();
        for d in 1..=3usize {
            for idx in 0..q.pow(d as u32) {
                let mut x = idx;
                let mut c: Vec<Elem> = (0..d)
                    .map(|_| {
                        let e = fixed[x % q].clone();
                        x /= q;
                        e
                    })
                    .collect();
                c.push(k.one());
                let f = OrePoly::new(&k, c);
                let irr = galg::irreducible_over_fixed(&g, &f).unwrap();
                let crit = k
                    .elements()
                    .unwrap()
                    .iter()
                    .filter(|b| k.is_zero(&f.eval_value(b)))
                    .all(|b| galg::g_min_poly(&g, std::slice::from_ref(b)).unwrap().f == f);
                assert_eq!(irr, crit, "{f} over GF({p}^{m}) step {k_step}");
            }
        }
    }
}

#[test]
fn quaternion_fixed_field_irreducibility() {
    let h = RingCtx::quaternions();
    let g = AutGroupCtx::inner(&h, Quat::i()).unwrap();
    let q = |a, b| Elem::Quat(Quat::from_ints(a, b, 0, 0));
    // (t − (1+i))(t − (2−i)) = t² − 3t + (3 + i)
    let red = OrePoly::new(&h, vec![q(3, 1), q(-3, 0), h.one()]);
    assert!(!galg::irreducible_over_fixed(&g, &red).unwrap());
    for (c, irr) in [(1, false), (2, true), (-1, false), (-2, true), (4, false)] {
        let f = OrePoly::new(&h, vec![q(c, 0), h.zero(), h.one()]);
        assert_eq!(galg::irreducible_over_fixed(&g, &f).unwrap(), irr, "t^2 + {c}");
    }
    // t² − 2i: (1 + i)² = 2i
    let f = OrePoly::new(&h, vec![q(0, -2), h.zero(), h.one()]);
    assert!(!galg::irreducible_over_fixed(&g, &f).unwrap());
}
