//! The twelve acceptance criteria, each with its time limit. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use wedderburn::algset::{self, Side};
use wedderburn::canon::{self, SpecMethod};
use wedderburn::galg::{self, AutGroupCtx, FixedField, Fullness};
use wedderburn::pltmat::{self, MetroVerdict};
use wedderburn::{Ctx, Elem, MatK, OrePoly, Quat, RingCtx};
use wedderburn_cli::{parse_elem, parse_matrix, parse_poly, parse_ring};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn f4() -> Ctx {
    RingCtx::finite(2, 2, 1, None).unwrap()
}

fn monic_of(k: &Ctx, degs: std::ops::RangeInclusive<usize>) -> Vec<OrePoly> {
    degs.flat_map(|d| OrePoly::monic_of_degree(k, d).unwrap()).collect()
}

fn poly(k: &Ctx, c: &[Elem]) -> OrePoly {
    OrePoly::new(k, c.to_vec())
}

fn seeded_family(n: usize) -> Vec<MatK> {
    let k = f4();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let els = k.elements().unwrap();
    (0..n)
        .map(|_| MatK::from_fn(&k, 2, 2, |_, _| els[rng.gen_range(0..els.len())].clone()))
        .collect()
}

fn c1_keystone() -> Check {
    let k = f4();
    let w = k.generator().unwrap();
    let w2 = k.mul(&w, &w);
    let f = poly(&k, &[k.one(), k.zero(), k.one()]);
    ensure!(algset::is_wedderburn(&f).unwrap(), "t^2 + 1 not Wedderburn");
    let rs = algset::roots(&f, Side::Right).unwrap();
    let got: HashSet<Elem> = rs.roots.iter().cloned().collect();
    let want: HashSet<Elem> = [k.one(), w.clone(), w2].into_iter().collect();
    ensure!(got == want, "V(t^2 + 1) = {:?}", rs.roots);
    ensure!(rs.rank() == 2, "rank {}", rs.rank());
    let c = pltmat::companion(&f).unwrap();
    let expect = MatK::from_rows(&k, vec![vec![k.zero(), k.one()], vec![k.one(), k.zero()]]).unwrap();
    ensure!(c == expect, "companion {c}");
    let pts = [k.one(), w.clone()];
    let v = algset::vandermonde(&k, &pts);
    let lhs = c.mul(&v).unwrap();
    let rhs = v.s().mul(&MatK::diag(&k, &pts)).unwrap();
    ensure!(lhs == rhs, "C_f V = {lhs}, S(V) diag = {rhs}");
    Ok(())
}

fn c2_first_rank() -> Check {
    let k = f4();
    let ps = monic_of(&k, 1..=2);
    let mut pairs = 0;
    for g in &ps {
        for h in &ps {
            let r = algset::rank_product_report(g, h).unwrap();
            ensure!(r.holds && r.lhs == r.rank_vh + r.rank_intersection, "{g}, {h}: {r:?}");
            pairs += 1;
        }
    }
    ensure!(pairs == 400, "{pairs} pairs");
    Ok(())
}

fn c3_factor_theorem() -> Check {
    let k = f4();
    let mut checked = 0;
    for f in monic_of(&k, 1..=3) {
        if !algset::is_wedderburn(&f).unwrap() {
            continue;
        }
        for h in monic_of(&k, 1..=f.deg() - 1) {
            let (g, r) = f.right_divmod(&h).unwrap();
            if !r.is_zero() {
                continue;
            }
            ensure!(g.mul(&h) == f, "{g} * {h} != {f}");
            ensure!(
                algset::is_wedderburn(&g).unwrap() && algset::is_wedderburn(&h).unwrap(),
                "{f} = ({g})({h}) has a non-W factor"
            );
            checked += 1;
        }
    }
    ensure!(checked > 0, "no factorizations found");
    Ok(())
}

fn c4_metro() -> Check {
    let k = f4();
    let ws: Vec<OrePoly> = monic_of(&k, 1..=2)
        .into_iter()
        .filter(|p| algset::is_wedderburn(p).unwrap())
        .collect();
    for g in &ws {
        for h in &ws {
            let m = pltmat::metro_solve(g, h).unwrap();
            ensure!(m.verdict != MetroVerdict::Unknown, "{g}, {h}: unknown");
            let solved = m.solution().is_some();
            if let Some(x) = m.solution() {
                let r = pltmat::metro_residual(&pltmat::companion(h).unwrap(), &pltmat::companion(g).unwrap(), x)
                    .unwrap();
                ensure!(r == m.u, "{g}, {h}: residual");
            }
            let w = algset::is_wedderburn(&g.mul(h)).unwrap();
            let cof = pltmat::cofactor_search(g, h).unwrap();
            if let Some((x, y)) = &cof {
                ensure!(x.mul(g).add(&h.mul(y)).is_one(), "{g}, {h}: cofactor identity");
            }
            ensure!(solved == w && w == cof.is_some(), "{g}, {h}: metro {solved}, W {w}, cofactor {}", cof.is_some());
        }
    }
    Ok(())
}

fn c5_rational_functions() -> Check {
    let qx = RingCtx::rational_functions(true);
    let x = qx.generator().unwrap();
    let h = OrePoly::linear(&qx, &x);
    for n in 2..=5 {
        // (t − x)^n = (t − x)^{n−1}·(t − x), the left factor W by the previous step
        let g = h.pow(n - 1);
        let r = pltmat::product_w_check(&g, &h, None).unwrap();
        ensure!(r.verdict == Some(true), "n = {n}: {:?}", r.verdict);
        let sol = r.metro.solution().ok_or(format!("n = {n}: no solution"))?;
        let res = pltmat::metro_residual(&pltmat::companion(&h).unwrap(), &pltmat::companion(&g).unwrap(), sol)
            .unwrap();
        ensure!(res == r.metro.u, "n = {n}: residual");
        let cg = pltmat::companion_chain(&qx, &vec![h.clone(); n - 1]).unwrap();
        let y = pltmat::alternating_exponential_row(&qx, n - 1).unwrap();
        let ym = MatK::from_rows(&qx, vec![y]).unwrap();
        let chain = pltmat::metro_residual(&pltmat::companion(&h).unwrap(), &cg, &ym).unwrap();
        ensure!(chain == pltmat::metro_unit(&qx, 1, n - 1), "n = {n}: chain equations");
    }
    Ok(())
}

fn c6_canonical_forms() -> Check {
    for a in seeded_family(500) {
        let k = a.ctx();
        let jf = canon::jacobson_form(&a).map_err(|e| format!("{a}: {e}"))?;
        let mut d = canon::PolyMat::zeros(k, 2, 2);
        for (i, e) in jf.diag.iter().enumerate() {
            d.set(i, i, e.clone());
        }
        let id = canon::PolyMat::identity(k, 2);
        let char = canon::PolyMat::characteristic(&a);
        ensure!(jf.p.mul(&char).unwrap().mul(&jf.q).unwrap() == d, "{a}: P(tI - A)Q");
        ensure!(jf.p.mul(&jf.p_inv).unwrap() == id && jf.p_inv.mul(&jf.p).unwrap() == id, "{a}: P inverse");
        ensure!(jf.q.mul(&jf.q_inv).unwrap() == id && jf.q_inv.mul(&jf.q).unwrap() == id, "{a}: Q inverse");
        ensure!(canon::two_sided_divides(&jf.diag[0], &jf.diag[1]).unwrap(), "{a}: e_1 does not divide e_2");
        ensure!(jf.diag.iter().map(OrePoly::deg).sum::<usize>() == 2, "{a}: degree sum");
    }
    Ok(())
}

fn closure(k: &Ctx, pts: &[Elem]) -> BTreeSet<Elem> {
    pts.iter().flat_map(|p| k.class_members(p).unwrap()).collect()
}

fn c7_spectra() -> Check {
    for a in seeded_family(500) {
        let k = a.ctx();
        let s = canon::spectra(&a, SpecMethod::Brute).unwrap();
        ensure!(s.complete, "{a}: incomplete");
        let jf = canon::jacobson_form(&a).unwrap();
        let (rv, lv) = match jf.last() {
            Some(er) => (
                closure(k, &algset::roots(er, Side::Right).unwrap().roots),
                closure(k, &algset::roots(er, Side::Left).unwrap().roots),
            ),
            None => (BTreeSet::new(), BTreeSet::new()),
        };
        ensure!(s.rvalues().into_iter().collect::<BTreeSet<_>>() == rv, "{a}: rspec");
        ensure!(s.lvalues().into_iter().collect::<BTreeSet<_>>() == lv, "{a}: lspec");
        let mut all = s.lvalues();
        all.extend(s.rvalues());
        let er = jf.last().map_or(0, OrePoly::deg);
        ensure!(canon::class_count(k, &all).unwrap() <= er, "{a}: class count above deg e_r");
    }
    Ok(())
}

fn c8_diagonalization() -> Check {
    let k = f4();
    let c1 = pltmat::companion(&poly(&k, &[k.one(), k.zero(), k.one()])).unwrap();
    let c0 = pltmat::companion(&OrePoly::monomial(&k, k.one(), 2)).unwrap();
    let w = canon::diagonalize(&c1).unwrap().ok_or("companion(t^2 + 1) not diagonalized")?;
    ensure!(pltmat::sd_transform(&c1, &w.p).unwrap() == w.result && w.result.is_diagonal(), "diag witness");
    ensure!(canon::diagonalize(&c0).unwrap().is_none(), "companion(t^2) diagonalized");
    let t = canon::triangularize(&c0).unwrap().ok_or("companion(t^2) not triangularized")?;
    ensure!(
        pltmat::sd_transform(&c0, &t.p).unwrap() == t.result && t.result.is_upper_triangular(),
        "triangulation witness"
    );
    Ok(())
}

fn c9_quaternions() -> Check {
    let h = RingCtx::quaternions();
    let g = AutGroupCtx::inner(&h, Quat::i()).unwrap();
    let q = |a, b, c, d| Elem::Quat(Quat::from_ints(a, b, c, d));
    let fj = galg::g_min_poly(&g, &[q(0, 0, 1, 0)]).unwrap().f;
    let t2 = |c| poly(&h, &[h.from_int(c), h.zero(), h.one()]);
    ensure!(fj == t2(1), "f_G.j = {fj}");
    let fs = galg::central_factorize(&fj, &[q(0, 1, 0, 0)]).unwrap().ok_or("no central factorization")?;
    let want = vec![poly(&h, &[q(0, 1, 0, 0), h.one()]), poly(&h, &[q(0, -1, 0, 0), h.one()])];
    ensure!(fs == want, "factors {fs:?}");
    ensure!(fs[0].mul(&fs[1]) == fj, "re-multiplication");
    let ij = q(0, 1, 1, 0);
    let f = galg::g_min_poly(&g, std::slice::from_ref(&ij)).unwrap().f;
    ensure!(f == t2(2), "f_G.(i+j) = {f}");
    ensure!(galg::fixed_field(&g).unwrap() == FixedField::Quadratic(Quat::i()), "fixed field");
    ensure!(galg::irreducible_over_fixed(&g, &f).unwrap(), "t^2 + 2 reducible over Q(i)");
    let orbit = g.orbit_of_set(&[ij]).unwrap();
    ensure!(galg::is_full(&h, &orbit).unwrap() == Fullness::NotFull, "fullness");
    Ok(())
}

/// Minimal polynomial over F_p from prime-field linear algebra on 1, a, a², …
fn oracle_min_poly(k: &Ctx, a: &Elem) -> Vec<u32> {
    let f = k.finite_field().unwrap();
    let (p, m) = (f.p(), f.m());
    let coords = |e: &Elem| match e {
        Elem::Fq(c) => c.clone(),
        _ => unreachable!(),
    };
    let inv = |x: u32| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut powers = vec![k.one()];
    loop {
        let cols = powers.len();
        let mut rows: Vec<Vec<u32>> = (0..m).map(|i| powers.iter().map(|e| coords(e)[i]).collect()).collect();
        let mut piv = Vec::new();
        for c in 0..cols {
            let r = piv.len();
            let Some(s) = (r..m).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, s);
            let iv = inv(rows[r][c]);
            rows[r].iter_mut().for_each(|x| *x = *x * iv % p);
            for i in 0..m {
                if i != r && rows[i][c] != 0 {
                    let fct = rows[i][c];
                    for j in 0..cols {
                        rows[i][j] = (rows[i][j] + p * p - fct * rows[r][j] % p) % p;
                    }
                }
            }
            piv.push(c);
        }
        let d = cols - 1;
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

fn c10_galois() -> Check {
    let k = RingCtx::finite(2, 4, 0, None).unwrap();
    let g = AutGroupCtx::frobenius(&k, 1).unwrap();
    let els = k.elements().unwrap();
    ensure!(els.len() == 16, "|K| = {}", els.len());
    for a in &els {
        let f = galg::g_min_poly(&g, std::slice::from_ref(a)).unwrap().f;
        let got: Vec<u32> = f
            .coeffs()
            .iter()
            .map(|c| match c {
                Elem::Fq(v) if v[1..].iter().all(|&x| x == 0) => Ok(v[0]),
                _ => Err(format!("{a}: coefficient {c} outside F2")),
            })
            .collect::<Result<_, _>>()?;
        ensure!(got == oracle_min_poly(&k, a), "{a}: {f}");
        let r = galg::rank_report(&g, a).map_err(|e| e.to_string())?;
        ensure!(r.rank_orbit == r.index * r.rank_piece, "{a}: {r:?}");
    }
    Ok(())
}

fn c11_amitsur() -> Check {
    let base = RingCtx::finite(3, 2, 1, None).unwrap();
    let k = RingCtx::finite(3, 2, 1, Some(base.generator().unwrap())).unwrap();
    let zero = k.zero();
    for f in monic_of(&k, 0..=3) {
        let d = algset::e_space_dim(&f, &zero, Side::Right).unwrap();
        ensure!(d <= f.deg(), "{f}: dim {d}");
    }
    Ok(())
}

const CORPUS: &[(&str, &str, &str)] = &[
    ("ring", "", "Q"),
    ("ring", "", "Qx"),
    ("ring", "", "Qx; d/dx"),
    ("ring", "", "GF(2^2; frob=1)"),
    ("ring", "", "GF(2^4; frob=0)"),
    ("ring", "", "GF(3^2; frob=1; beta=w)"),
    ("ring", "", "GF(5^1; frob=0)"),
    ("ring", "", "HQ"),
    ("ring", "", "HQ; inner=1 + i; beta=j"),
    ("elem", "Q", "0"),
    ("elem", "Q", "-7"),
    ("elem", "Q", "3/2"),
    ("elem", "GF(2^2; frob=1)", "w"),
    ("elem", "GF(2^2; frob=1)", "w + 1"),
    ("elem", "GF(3^2; frob=1; beta=w)", "2*w + 1"),
    ("elem", "GF(2^4; frob=0)", "w^3 + w + 1"),
    ("elem", "GF(5^1; frob=0)", "4"),
    ("elem", "Qx; d/dx", "x^2 - 1"),
    ("elem", "Qx; d/dx", "1/2*x"),
    ("elem", "Qx; d/dx", "(x + 1)/(x^2 + 2)"),
    ("elem", "Qx; d/dx", "(-3)/(x - 1)"),
    ("elem", "HQ", "1/2 + 3*i - j + 2/3*k"),
    ("elem", "HQ", "-k"),
    ("elem", "HQ", "i + j"),
    ("poly", "Q", "0"),
    ("poly", "Q", "t"),
    ("poly", "Q", "t^2 - 3*t + 2"),
    ("poly", "Q", "-1/2*t^3 + 5"),
    ("poly", "GF(2^2; frob=1)", "t^2 + 1"),
    ("poly", "GF(2^2; frob=1)", "t^2 + (w + 1)*t + w"),
    ("poly", "GF(2^2; frob=1)", "w*t + (w + 1)"),
    ("poly", "GF(3^2; frob=1; beta=w)", "t^3 + 2*w*t + 1"),
    ("poly", "GF(2^4; frob=0)", "t^4 + w^3*t + (w^2 + 1)"),
    ("poly", "Qx; d/dx", "t^2 - 2*x*t + (x^2 - 1)"),
    ("poly", "Qx; d/dx", "t - x"),
    ("poly", "Qx", "((1)/(x + 1))*t^2 + x"),
    ("poly", "HQ", "t^2 + 1"),
    ("poly", "HQ", "t + i"),
    ("poly", "HQ", "(1 + i)*t^2 + (j - k)*t + 2"),
    ("poly", "HQ; inner=1 + i; beta=j", "t^2 - 3*t + (3 + i)"),
    ("matrix", "GF(2^2; frob=1)", "[[0,1],[1,0]]"),
    ("matrix", "GF(2^2; frob=1)", "[[w,1],[0,w + 1]]"),
    ("matrix", "GF(3^2; frob=1; beta=w)", "[[2*w,1,0],[0,1,w],[1,1,1]]"),
    ("matrix", "Q", "[[1/2,-3],[0,7]]"),
    ("matrix", "Qx; d/dx", "[[x,1],[0,x^2 + 1]]"),
    ("matrix", "HQ", "[[i,0],[0,j]]"),
    ("matrix", "HQ", "[[1 + k,1/2],[-i,0]]"),
    ("matrix", "Q", "[[5]]"),
    ("matrix", "GF(5^1; frob=0)", "[[1,2],[3,4]]"),
    ("matrix", "HQ; inner=1 + i; beta=j", "[[0,1],[1,0]]"),
];

fn c12_cli() -> Check {
    ensure!(CORPUS.len() >= 50, "corpus of {}", CORPUS.len());
    for &(kind, ring, text) in CORPUS {
        let printed = if kind == "ring" {
            parse_ring(text).map(|k| k.to_string())
        } else {
            let k = parse_ring(ring).map_err(|e| e.to_string())?;
            match kind {
                "elem" => parse_elem(text, &k).map(|e| e.to_string()),
                "poly" => parse_poly(text, &k).map(|p| p.to_string()),
                _ => parse_matrix(text, &k).map(|m| m.to_string()),
            }
        }
        .map_err(|e| format!("{text}: {e}"))?;
        ensure!(printed == text, "{kind} '{text}' printed as '{printed}'");
    }
    let script = [
        "wcheck --ring 'GF(2^2; frob=1)' 't^2 + 1'",
        "diag --ring 'GF(2^2; frob=1)' '[[0,1],[1,0]]'",
        "triang --ring 'GF(2^2; frob=1)' '[[0,0],[1,0]]'",
        "invfactors --ring 'GF(3^2; frob=1; beta=w)' '[[w,1,0],[0,1,w],[1,1,1]]'",
        "spec --ring 'GF(2^2; frob=1; beta=w)' '[[w,1],[0,1]]'",
        "metro --ring 'Qx; d/dx' '(t - x)^2' 't - x'",
        "gminpoly --ring HQ --group 'Id,Int(i)' '{j}'",
        "gminpoly --ring HQ --group 'Id,Int(i)' '{i + j}'",
        "roots --ring HQ 't^2 + 1'",
        "rankreport --ring 'GF(2^4; frob=0)' --group Frob w",
        "llcm --ring Q 't - 1' 't - 2'",
        "selftest --ring 'HQ; inner=1 + i; beta=j' --seed 7",
    ]
    .join("\n");
    let run = || -> Result<Vec<u8>, String> {
        use std::io::Write;
        let mut child = Command::new(env!("CARGO_BIN_EXE_wedd"))
            .args(["--json", "batch"])
            .stdin(std::process::Stdio::piped())
            .stdout(std::process::Stdio::piped())
            .spawn()
            .map_err(|e| e.to_string())?;
        child.stdin.take().unwrap().write_all(script.as_bytes()).map_err(|e| e.to_string())?;
        let out = child.wait_with_output().map_err(|e| e.to_string())?;
        ensure!(out.status.code() == Some(0), "batch exit {:?}", out.status.code());
        Ok(out.stdout)
    };
    let first = run()?;
    ensure!(first.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count() == 12, "report count");
    for _ in 0..2 {
        ensure!(run()? == first, "JSON differs between runs");
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 12] = [
        ("F4 keystone", 1, c1_keystone),
        ("first rank theorem, 400 pairs", 10, c2_first_rank),
        ("factor theorem", 30, c3_factor_theorem),
        ("metro / W product / cofactor", 30, c4_metro),
        ("Q(x) (t - x)^n chain", 5, c5_rational_functions),
        ("Jacobson forms, 500 matrices", 60, c6_canonical_forms),
        ("spectra", 120, c7_spectra),
        ("diagonalization witnesses", 1, c8_diagonalization),
        ("quaternion G suite", 1, c9_quaternions),
        ("Galois consistency F16/F2", 5, c10_galois),
        ("Amitsur bound F9", 30, c11_amitsur),
        ("CLI round trip and determinism", 5, c12_cli),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let r = r.and_then(|()| {
            if took <= Duration::from_secs(limit) {
                Ok(())
            } else {
                Err(format!("over the {limit} s limit"))
            }
        });
        match r {
            Ok(()) => println!("PASS {:>2} {name} ({:.2} s)", i + 1, took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2} s): {e}", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
