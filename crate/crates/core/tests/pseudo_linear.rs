mod common;

use common::*;
use rand::Rng;
use wedderburn::algset;
use wedderburn::pltmat::{self, MetroVerdict};
use wedderburn::{MatK, OrePoly};

#[test]
fn pseudo_linearity() {
    let mut rng = rng(11);
    for k in [f4(), f4_derived(), f9_derived()] {
        for _ in 0..40 {
            let a = random_matrix(&k, 3, &mut rng);
            let v: Vec<_> = (0..3).map(|_| k.random_elem(&mut rng)).collect();
            let tv = pltmat::t_action(&a, &v).unwrap();
            for alpha in k.elements().unwrap() {
                let av: Vec<_> = v.iter().map(|x| k.mul(&alpha, x)).collect();
                let lhs = pltmat::t_action(&a, &av).unwrap();
                let rhs: Vec<_> = tv
                    .iter()
                    .zip(&v)
                    .map(|(t, x)| k.add(&k.mul(&k.s(&alpha), t), &k.mul(&k.d(&alpha), x)))
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn basis_change_consistency() {
    let mut rng = rng(12);
    for k in [f4(), f4_derived()] {
        for f in monic_up_to(&k, 3).into_iter().filter(|f| f.deg() > 0) {
            let cf = pltmat::companion(&f).unwrap();
            let n = f.deg();
            let mut found = 0;
            while found < 3 {
                let p = random_matrix(&k, n, &mut rng);
                if !p.is_invertible() {
                    continue;
                }
                let b = pltmat::sd_transform(&cf, &p).unwrap();
                assert!(pltmat::morphism_check(&p, &b, &cf).unwrap());
                found += 1;
            }
        }
    }
}

#[test]
fn companion_of_a_product() {
    for k in [f4(), f4_derived()] {
        let ps: Vec<_> = monic_up_to(&k, 2).into_iter().filter(|p| p.deg() > 0).collect();
        for g in &ps {
            for h in &ps {
                let factors = [g.clone(), h.clone()];
                let gh = g.mul(h);
                let c = pltmat::companion(&gh).unwrap();
                let p = pltmat::chain_basis(&k, &factors).unwrap();
                let chain = pltmat::companion_chain(&k, &factors).unwrap();
                assert!(p.is_invertible());
                assert!(pltmat::morphism_check(&p, &chain, &c).unwrap());
                assert_eq!(pltmat::sd_transform(&c, &p).unwrap(), chain);
            }
        }
    }
}

#[test]
fn wedderburn_companions_diagonalize() {
    for k in [f4(), f4_derived()] {
        for f in monic_up_to(&k, 3) {
            if f.deg() == 0 || !algset::is_wedderburn(&f).unwrap() {
                continue;
            }
            let rs = algset::roots(&f, algset::Side::Right).unwrap();
            let basis = algset::p_basis(&k, &rs.roots).unwrap();
            let v = algset::vandermonde(&k, &basis);
            let c = pltmat::companion(&f).unwrap();
            let d = MatK::diag(&k, &basis);
            assert_eq!(c.mul(&v).unwrap(), v.s().mul(&d).unwrap().add(&v.d()).unwrap());
        }
    }
}

/// Block split of [[C_h, U], [0, C_g]] ⇔ 1 ∈ Rg + hR ⇔ gh Wedderburn (for W inputs).
#[test]
fn metro_and_cofactor_agree() {
    for k in [f4(), f4_derived()] {
        let ps: Vec<_> = monic_up_to(&k, 2).into_iter().filter(|p| p.deg() > 0).collect();
        for g in &ps {
            for h in &ps {
                let m = pltmat::metro_solve(g, h).unwrap();
                assert!(m.verify().unwrap());
                let solved = matches!(m.verdict, MetroVerdict::Solved(_));
                assert_ne!(m.verdict, MetroVerdict::Unknown);
                let cof = pltmat::cofactor_search(g, h).unwrap();
                assert_eq!(solved, cof.is_some(), "{g} / {h}");
                if let Some((x, y)) = cof {
                    assert!(x.mul(g).add(&h.mul(&y)).is_one());
                }
                if algset::is_wedderburn(g).unwrap() && algset::is_wedderburn(h).unwrap() {
                    assert_eq!(solved, algset::is_wedderburn(&g.mul(h)).unwrap());
                }
            }
        }
    }
}

#[test]
fn metro_solutions_re_substitute() {
    let mut rng = rng(13);
    let k = f9_derived();
    let ps: Vec<OrePoly> = monic_up_to(&k, 2).into_iter().filter(|p| p.deg() > 0).collect();
    for _ in 0..60 {
        let g = &ps[rng.gen_range(0..ps.len())];
        let h = &ps[rng.gen_range(0..ps.len())];
        let m = pltmat::metro_solve(g, h).unwrap();
        if let Some(x) = m.solution() {
            let r = pltmat::metro_residual(&pltmat::companion(h).unwrap(), &pltmat::companion(g).unwrap(), x).unwrap();
            assert_eq!(r, m.u);
        }
    }
}

#[test]
fn fully_reducible_matches_wedderburn() {
    for k in [f4(), f4_derived()] {
        for f in monic_up_to(&k, 3).into_iter().filter(|f| f.deg() > 0) {
            let w = algset::is_wedderburn(&f).unwrap();
            let fr = pltmat::fully_reducible_check(&f).unwrap();
            if w {
                assert!(fr, "{f}");
            }
        }
    }
}
