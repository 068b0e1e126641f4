mod common;

use std::collections::HashSet;

use common::*;
use wedderburn::algset::{self, Side};
use wedderburn::{Elem, OrePoly};

fn right_factorizations(f: &OrePoly) -> Vec<(OrePoly, OrePoly)> {
    let k = f.ctx();
    let mut out = Vec::new();
    for d in 1..f.deg() {
        for h in OrePoly::monic_of_degree(k, d).unwrap() {
            let (g, r) = f.right_divmod(&h).unwrap();
            if r.is_zero() {
                out.push((g, h));
            }
        }
    }
    out
}

#[test]
fn factors_of_wedderburn_polynomials() {
    for k in [f4_classical(), f4(), f4_derived()] {
        let mut checked = 0;
        for f in monic_up_to(&k, 3) {
            if !algset::is_wedderburn(&f).unwrap() {
                continue;
            }
            for (g, h) in right_factorizations(&f) {
                assert!(algset::is_wedderburn(&g).unwrap(), "{g} from {f}");
                assert!(algset::is_wedderburn(&h).unwrap(), "{h} from {f}");
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn rank_of_products() {
    for k in [f4(), f4_derived()] {
        let ps = monic_up_to(&k, 2);
        for g in &ps {
            for h in &ps {
                let rep = algset::rank_product_report(g, h).unwrap();
                assert!(rep.holds, "{g} * {h}");
                let gh = g.mul(h);
                let r = |p: &OrePoly| algset::roots(p, Side::Right).unwrap().rank();
                assert_eq!(rep.lhs, r(&gh));
                assert!(r(&gh) <= r(g) + r(h));
            }
        }
    }
}

/// |ker λ_{gh,a}| = |ker λ_{h,a}| · |im λ_{h,a} ∩ ker λ_{g,a}|
#[test]
fn kernel_dimension_lemma() {
    for k in [f4(), f4_derived()] {
        let els = k.elements().unwrap();
        let ps = monic_up_to(&k, 2);
        for g in &ps {
            for h in ps.iter().step_by(2) {
                let gh = g.mul(h);
                for a in &els {
                    let ker = |p: &OrePoly| -> HashSet<Elem> {
                        els.iter().filter(|x| k.is_zero(&p.lambda_value(a, x))).cloned().collect()
                    };
                    let im: HashSet<Elem> = els.iter().map(|x| h.lambda_value(a, x)).collect();
                    let meet = im.intersection(&ker(g)).count();
                    assert_eq!(ker(&gh).len(), ker(h).len() * meet);
                }
            }
        }
    }
}

#[test]
fn amitsur_bound() {
    let k = f9_derived();
    let zero = k.zero();
    for f in monic_up_to(&k, 3) {
        let d = algset::e_space_dim(&f, &zero, Side::Right).unwrap();
        assert!(d <= f.deg(), "{f}: {d}");
    }
}

#[test]
fn e_space_dimension_counts() {
    let k = f4();
    for f in monic_up_to(&k, 2) {
        for a in k.elements().unwrap() {
            let e = algset::e_space(&f, &a).unwrap();
            let d = algset::e_space_dim(&f, &a, Side::Right).unwrap();
            let c = k.centralizer_elements(&a).unwrap().len();
            assert_eq!(e.len(), c.pow(d as u32));
        }
    }
}

#[test]
fn min_poly_of_closure() {
    for k in [f4(), f4_derived(), f8()] {
        let els = k.elements().unwrap();
        let n = els.len();
        for mask in 1u32..(1 << n) {
            if n > 4 && mask % 7 != 0 {
                continue;
            }
            let pts: Vec<Elem> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| els[i].clone()).collect();
            let mp = algset::min_poly(&k, &pts).unwrap();
            for p in &pts {
                assert!(k.is_zero(&mp.f.eval_value(p)));
            }
            assert_eq!(mp.f.deg(), mp.rank);
            let cl = algset::closure(&k, &pts).unwrap();
            assert_eq!(algset::min_poly(&k, &cl).unwrap().f, mp.f);
        }
    }
}

#[test]
fn wedderburn_iff_min_poly_of_roots() {
    for k in [f4(), f4_derived()] {
        for f in monic_up_to(&k, 3) {
            let rs = algset::roots(&f, Side::Right).unwrap();
            let w = algset::is_wedderburn(&f).unwrap();
            if rs.roots.is_empty() {
                assert_eq!(w, f.deg() == 0);
                continue;
            }
            let mp = algset::min_poly(&k, &rs.roots).unwrap();
            assert_eq!(w, mp.f == f);
            assert_eq!(rs.rank(), mp.rank);
        }
    }
}

#[test]
fn left_roots_match_left_evaluation() {
    let k = f4_derived();
    for f in monic_up_to(&k, 2) {
        let rs = algset::roots(&f, Side::Left).unwrap();
        for a in k.elements().unwrap() {
            let is_root = k.is_zero(&f.left_eval(&a).unwrap());
            assert_eq!(is_root, rs.roots.contains(&a));
        }
    }
}
