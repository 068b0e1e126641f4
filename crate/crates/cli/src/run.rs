//! Command definitions and dispatch.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;

use wedderburn::algset::{self, Side};
use wedderburn::canon::{self, PolyMat, SpecMethod};
use wedderburn::galg::{self, AutGroupCtx, FixedField};
use wedderburn::pltmat::{self, MetroInstance, MetroVerdict};
use wedderburn::{Ctx, Elem, MatK, OrePoly};

use crate::parse;
use crate::report::{error_json, Report, Status, Value};
use crate::CliError;

#[derive(Parser, Debug, Clone)]
#[command(name = "wedd", version, about = "Exact computations with skew polynomials in K[t;S,D]")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Options {
    /// Q | GF(p^m; frob=k[; beta=b]) | Qx[; d/dx] | HQ[; inner=u][; beta=b]
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Automorphism generators, e.g. "Frob" or "Id,Int(i)"
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Numerator degree bound for the Q(x) metro ansatz
    #[arg(long, global = true)]
    pub ansatz_bound: Option<usize>,
    /// Cap on |K|^n for brute-force eigenvector enumeration
    #[arg(long, global = true)]
    pub max_enum: Option<u64>,
}

impl Options {
    /// Flags given on a batch line win over the outer invocation.
    fn over(self, outer: &Options) -> Options {
        Options {
            ring: self.ring.or_else(|| outer.ring.clone()),
            group: self.group.or_else(|| outer.group.clone()),
            json: self.json || outer.json,
            seed: self.seed.or(outer.seed),
            ansatz_bound: self.ansatz_bound.or(outer.ansatz_bound),
            max_enum: self.max_enum.or(outer.max_enum),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Roots,
}

// Positional arguments accept a leading '-' ("-1", "-t + w"); `@path` reads the file.
#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Right evaluation f(a) with the N_i sequence
    Eval {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// f = g·q + r
    DivmodLeft {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// f = q·g + r
    DivmodRight {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Right gcd with Bézout cofactors
    Rgcd {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Least left common multiple
    Llcm {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Minimal polynomial of a finite set {a, b, ...}
    Minpoly { set: String },
    Roots {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Left roots instead of right roots
        #[arg(long)]
        left: bool,
    },
    /// Wedderburn test
    Wcheck {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Full reducibility (finite rings)
    Fullred {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    Companion {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Metro equation for the product g·h
    Metro {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Whether g·h is Wedderburn, for Wedderburn g and h
    Prodw {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Invariant factors of tI - A
    Invfactors { a: String },
    /// (S,D)-diagonalization with witness
    Diag { a: String },
    /// (S,D)-triangulation with witness
    Triang { a: String },
    /// Left and right spectra
    Spec {
        a: String,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Orbit of a under the group, split along the stabilizer cosets
    Gorbit {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Minimal polynomial of the orbit of a set
    Gminpoly { set: String },
    /// Irreducibility over the fixed field
    Girr {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// rk(G.a) = (G:G_a)·rk(G_a.a)
    Rankreport {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Randomized structural self-test of the ring (and group)
    Selftest {
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Read one command per line from stdin
    Batch,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Mul { .. } => "mul",
            Command::DivmodLeft { .. } => "divmod-left",
            Command::DivmodRight { .. } => "divmod-right",
            Command::Rgcd { .. } => "rgcd",
            Command::Llcm { .. } => "llcm",
            Command::Minpoly { .. } => "minpoly",
            Command::Roots { .. } => "roots",
            Command::Wcheck { .. } => "wcheck",
            Command::Fullred { .. } => "fullred",
            Command::Companion { .. } => "companion",
            Command::Metro { .. } => "metro",
            Command::Prodw { .. } => "prodw",
            Command::Invfactors { .. } => "invfactors",
            Command::Diag { .. } => "diag",
            Command::Triang { .. } => "triang",
            Command::Spec { .. } => "spec",
            Command::Gorbit { .. } => "gorbit",
            Command::Gminpoly { .. } => "gminpoly",
            Command::Girr { .. } => "girr",
            Command::Rankreport { .. } => "rankreport",
            Command::Selftest { .. } => "selftest",
            Command::Batch => "batch",
        }
    }

    fn inputs(&self) -> Vec<String> {
        match self {
            Command::Eval { f, a } => vec![f.clone(), a.clone()],
            Command::Mul { f, g }
            | Command::DivmodLeft { f, g }
            | Command::DivmodRight { f, g }
            | Command::Rgcd { f, g }
            | Command::Llcm { f, g } => vec![f.clone(), g.clone()],
            Command::Metro { g, h } | Command::Prodw { g, h } => vec![g.clone(), h.clone()],
            Command::Roots { f, left } => {
                let mut v = vec![f.clone()];
                if *left {
                    v.push("--left".into());
                }
                v
            }
            Command::Spec { a, method } => vec![a.clone(), format!("--method={}", method_name(*method))],
            Command::Minpoly { set } | Command::Gminpoly { set } => vec![set.clone()],
            Command::Wcheck { f } | Command::Fullred { f } | Command::Companion { f } | Command::Girr { f } => {
                vec![f.clone()]
            }
            Command::Invfactors { a }
            | Command::Diag { a }
            | Command::Triang { a }
            | Command::Gorbit { a }
            | Command::Rankreport { a } => vec![a.clone()],
            Command::Selftest { samples } => vec![format!("--samples={samples}")],
            Command::Batch => Vec::new(),
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Roots => "roots",
    }
}

fn load(src: &str) -> Result<String, CliError> {
    match src.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::usage(format!("cannot read {path}: {e}"))),
        None => Ok(src.to_string()),
    }
}

struct Session<'a> {
    ctx: Ctx,
    opts: &'a Options,
}

impl Session<'_> {
    fn poly(&self, s: &str) -> Result<OrePoly, CliError> {
        parse::parse_poly(&load(s)?, &self.ctx)
    }

    fn elem(&self, s: &str) -> Result<Elem, CliError> {
        parse::parse_elem(&load(s)?, &self.ctx)
    }

    fn matrix(&self, s: &str) -> Result<MatK, CliError> {
        parse::parse_matrix(&load(s)?, &self.ctx)
    }

    fn set(&self, s: &str) -> Result<Vec<Elem>, CliError> {
        parse::parse_set(&load(s)?, &self.ctx)
    }

    fn group(&self) -> Result<AutGroupCtx, CliError> {
        let spec = self
            .opts
            .group
            .as_deref()
            .ok_or_else(|| CliError::usage("--group is required for this command"))?;
        let gens = parse::parse_group(spec, &self.ctx)?;
        Ok(AutGroupCtx::new(&self.ctx, gens)?)
    }
}

#[derive(Default)]
struct Out {
    result: Vec<(String, Value)>,
    verified: Option<bool>,
    negative: bool,
}

impl Out {
    fn put(&mut self, k: &str, v: Value) {
        self.result.push((k.to_string(), v));
    }
}

fn polymat(m: &PolyMat) -> Value {
    Value::List(
        (0..m.rows())
            .map(|i| Value::List((0..m.cols()).map(|j| Value::Poly(m.get(i, j).clone())).collect()))
            .collect(),
    )
}

fn fixed_field_name(g: &AutGroupCtx) -> Result<String, CliError> {
    Ok(match galg::fixed_field(g)? {
        FixedField::Finite(els) => {
            let p = g.ctx().characteristic() as usize;
            let mut d = 0;
            let mut q = 1;
            while q < els.len() {
                q *= p;
                d += 1;
            }
            format!("GF({p}^{d})")
        }
        FixedField::Rationals => "Q".into(),
        FixedField::Quadratic(v) => format!("Q({v})"),
    })
}

fn metro_checks(inst: &MetroInstance) -> Result<Option<bool>, CliError> {
    Ok(match &inst.verdict {
        MetroVerdict::Solved(x) => Some(
            pltmat::metro_residual(&pltmat::companion(&inst.h)?, &pltmat::companion(&inst.g)?, x)? == inst.u,
        ),
        _ => None,
    })
}

fn metro_verdict(v: &MetroVerdict) -> Value {
    Value::str(match v {
        MetroVerdict::Solved(_) => "solved",
        MetroVerdict::NoSolution => "no-solution",
        MetroVerdict::Unknown => "unknown",
    })
}

fn witness_checks(a: &MatK, w: &canon::CanonicalWitness, shape: fn(&MatK) -> bool) -> Result<bool, CliError> {
    Ok(w.p.is_invertible() && pltmat::sd_transform(a, &w.p)? == w.result && shape(&w.result))
}

fn jacobson_checks(a: &MatK, jf: &canon::JacobsonForm) -> Result<bool, CliError> {
    let k = a.ctx();
    let n = a.rows();
    let mut d = PolyMat::zeros(k, n, n);
    for (i, e) in jf.diag.iter().enumerate() {
        d.set(i, i, e.clone());
    }
    let id = PolyMat::identity(k, n);
    let ok = jf.p.mul(&PolyMat::characteristic(a))?.mul(&jf.q)? == d
        && jf.p.mul(&jf.p_inv)? == id
        && jf.q.mul(&jf.q_inv)? == id
        && jf.diag.iter().map(OrePoly::deg).sum::<usize>() == n;
    let mut div = true;
    for w in jf.diag.windows(2) {
        div &= canon::two_sided_divides(&w[0], &w[1])?;
    }
    Ok(ok && div)
}

/// Runs one command against its options and builds the report.
pub fn execute(cmd: &Command, opts: &Options) -> Result<Report, CliError> {
    let ring_spec = opts
        .ring
        .as_deref()
        .ok_or_else(|| CliError::usage("--ring is required"))?;
    let ctx = parse::parse_ring(ring_spec)?;
    let s = Session { ctx: ctx.clone(), opts };
    let k = &ctx;
    let mut o = Out::default();
    match cmd {
        Command::Eval { f, a } => {
            let (f, a) = (s.poly(f)?, s.elem(a)?);
            let tr = f.eval(&a)?;
            let (_, r) = f.right_divmod(&OrePoly::linear(k, &a))?;
            o.put("value", Value::Elem(tr.value.clone()));
            o.put("n_values", Value::vector(&tr.n_values));
            o.verified = Some(r.coeff(0) == tr.value);
        }
        Command::Mul { f, g } => {
            let (f, g) = (s.poly(f)?, s.poly(g)?);
            let p = f.mul(&g);
            o.put("degree", Value::opt(p.degree(), Value::int));
            o.put("product", Value::Poly(p));
        }
        Command::DivmodLeft { f, g } | Command::DivmodRight { f, g } => {
            let (f, g) = (s.poly(f)?, s.poly(g)?);
            let right = matches!(cmd, Command::DivmodRight { .. });
            let (q, r) = if right { f.right_divmod(&g)? } else { f.left_divmod(&g)? };
            let back = if right { q.mul(&g) } else { g.mul(&q) };
            o.verified = Some(back.add(&r) == f && (r.is_zero() || r.deg() < g.deg()));
            o.put("quotient", Value::Poly(q));
            o.put("remainder", Value::Poly(r));
        }
        Command::Rgcd { f, g } => {
            let (f, g) = (s.poly(f)?, s.poly(g)?);
            let (d, u, v) = f.rgcd_ext(&g)?;
            o.verified = Some(
                u.mul(&f).add(&v.mul(&g)) == d && f.right_divisible_by(&d) && g.right_divisible_by(&d),
            );
            o.put("rgcd", Value::Poly(d));
            o.put("u", Value::Poly(u));
            o.put("v", Value::Poly(v));
        }
        Command::Llcm { f, g } => {
            let (f, g) = (s.poly(f)?, s.poly(g)?);
            let (m, fc, gc) = f.llcm(&g)?;
            o.verified = Some(fc.mul(&g) == m && gc.mul(&f) == m);
            o.put("llcm", Value::Poly(m));
            // llcm = over_g·g = over_f·f
            o.put("over_f", Value::Poly(gc));
            o.put("over_g", Value::Poly(fc));
        }
        Command::Minpoly { set } => {
            let pts = s.set(set)?;
            let r = algset::min_poly(k, &pts)?;
            o.verified =
                Some(r.f.is_monic() && r.f.deg() == r.rank && pts.iter().all(|p| k.is_zero(&r.f.eval_value(p))));
            o.put("minpoly", Value::Poly(r.f));
            o.put("rank", Value::int(r.rank));
            o.put("p_basis", Value::elems(&r.p_basis));
        }
        Command::Roots { f, left } => {
            let f = s.poly(f)?;
            let side = if *left { Side::Left } else { Side::Right };
            let rs = algset::roots(&f, side)?;
            let mut ok = true;
            for r in &rs.roots {
                let v = if *left { f.left_eval(r)? } else { f.eval_value(r) };
                ok &= k.is_zero(&v);
            }
            o.put("roots", Value::elems(&rs.roots));
            o.put("rank", Value::int(rs.rank()));
            o.put("complete", Value::Bool(rs.is_complete_listing()));
            o.put("classes", classes(&rs));
            o.verified = Some(ok);
        }
        Command::Wcheck { f } => {
            let f = s.poly(f)?;
            let v = algset::wedderburn_report(&f)?;
            o.put("verdict", Value::Bool(v.is_w));
            o.put("rank", Value::int(v.rank));
            o.put("degree", Value::int(v.degree));
            if let Some(rs) = &v.roots {
                o.put("roots", Value::elems(&rs.roots));
                o.verified = Some(rs.roots.iter().all(|r| k.is_zero(&f.eval_value(r))));
            }
            o.negative = !v.is_w;
        }
        Command::Fullred { f } => {
            let f = s.poly(f)?;
            let b = pltmat::fully_reducible_check(&f)?;
            o.put("fully_reducible", Value::Bool(b));
            o.put("irreducible_right_divisors", Value::polys(&pltmat::irreducible_right_divisors(&f)?));
            o.negative = !b;
        }
        Command::Companion { f } => {
            let f = s.poly(f)?;
            o.put("companion", Value::Matrix(pltmat::companion(&f)?));
        }
        Command::Metro { g, h } => {
            let (g, h) = (s.poly(g)?, s.poly(h)?);
            let inst = pltmat::metro_solve_with(&g, &h, opts.ansatz_bound)?;
            o.put("verdict", metro_verdict(&inst.verdict));
            o.put("solution", Value::opt(inst.solution().cloned(), Value::Matrix));
            o.verified = metro_checks(&inst)?;
            o.negative = inst.solution().is_none();
        }
        Command::Prodw { g, h } => {
            let (g, h) = (s.poly(g)?, s.poly(h)?);
            let r = pltmat::product_w_check(&g, &h, opts.ansatz_bound)?;
            o.put("verdict", r.verdict.map_or(Value::str("unknown"), Value::Bool));
            o.put("metro", metro_verdict(&r.metro.verdict));
            o.put("direct", Value::opt(r.direct, Value::Bool));
            o.put("solution", Value::opt(r.metro.solution().cloned(), Value::Matrix));
            o.put("product", Value::Poly(g.mul(&h)));
            o.verified = metro_checks(&r.metro)?;
            o.negative = r.verdict != Some(true);
        }
        Command::Invfactors { a } => {
            let a = s.matrix(a)?;
            let jf = canon::jacobson_form(&a)?;
            o.put("invariant_factors", Value::polys(&jf.invariant_factors()));
            o.put("diagonal", Value::polys(&jf.diag));
            o.put("p", polymat(&jf.p));
            o.put("q", polymat(&jf.q));
            o.verified = Some(jacobson_checks(&a, &jf)?);
        }
        Command::Diag { a } | Command::Triang { a } => {
            let a = s.matrix(a)?;
            let diag = matches!(cmd, Command::Diag { .. });
            let w = if diag { canon::diagonalize(&a)? } else { canon::triangularize(&a)? };
            o.put("verdict", Value::Bool(w.is_some()));
            match w {
                Some(w) => {
                    let shape: fn(&MatK) -> bool = if diag { MatK::is_diagonal } else { MatK::is_upper_triangular };
                    o.verified = Some(witness_checks(&a, &w, shape)?);
                    if diag {
                        o.put("diagonal", Value::vector(&w.result.diagonal()));
                    }
                    o.put("p", Value::Matrix(w.p));
                    o.put("result", Value::Matrix(w.result));
                }
                None => o.negative = true,
            }
        }
        Command::Spec { a, method } => {
            let a = s.matrix(a)?;
            let m = match method {
                Method::Brute => SpecMethod::Brute,
                Method::Roots => SpecMethod::ViaRoots,
            };
            let r = canon::spectra_capped(&a, m, opts.max_enum.unwrap_or(canon::MAX_ENUM))?;
            let mut ok = true;
            for e in &r.lspec {
                let av: Vec<Elem> = e.vector.iter().map(|x| k.mul(&e.value, x)).collect();
                ok &= e.vector.iter().any(|x| !k.is_zero(x)) && pltmat::t_action(&a, &e.vector)? == av;
            }
            for e in &r.rspec {
                let ub: Vec<Elem> = e.vector.iter().map(|x| k.mul(x, &e.value)).collect();
                ok &= e.vector.iter().any(|x| !k.is_zero(x)) && pltmat::l_action(&a, &e.vector)? == ub;
            }
            let eig = |v: &[canon::Eigen]| {
                Value::List(
                    v.iter()
                        .map(|e| {
                            Value::Map(vec![
                                ("value".into(), Value::Elem(e.value.clone())),
                                ("vector".into(), Value::vector(&e.vector)),
                            ])
                        })
                        .collect(),
                )
            };
            o.put("lvalues", Value::elems(&r.lvalues()));
            o.put("rvalues", Value::elems(&r.rvalues()));
            o.put("complete", Value::Bool(r.complete));
            o.put("lspec", eig(&r.lspec));
            o.put("rspec", eig(&r.rspec));
            o.verified = Some(ok);
        }
        Command::Gorbit { a } => {
            let g = s.group()?;
            let a = s.elem(a)?;
            let od = galg::orbit(&g, &a)?;
            let orbit: HashSet<&Elem> = od.orbit.iter().collect();
            let union: HashSet<&Elem> = od.pieces.iter().flatten().collect();
            o.verified = Some(orbit == union && od.index() * od.stabilizer.len() == g.order());
            o.put("group_order", Value::int(g.order()));
            o.put("orbit", Value::elems(&od.orbit));
            o.put("stabilizer", Value::Set(od.stabilizer.iter().map(|s| Value::str(s.to_string())).collect()));
            o.put("index", Value::int(od.index()));
            o.put("cosets", Value::List(od.cosets.iter().map(|s| Value::str(s.to_string())).collect()));
            o.put("pieces", Value::List(od.pieces.iter().map(|p| Value::elems(p)).collect()));
        }
        Command::Gminpoly { set } => {
            let g = s.group()?;
            let pts = s.set(set)?;
            let r = galg::g_min_poly(&g, &pts)?;
            let orbit = g.orbit_of_set(&pts)?;
            let central = galg::central_factorize(&r.f, &pts).ok().flatten();
            let mut ok = orbit.iter().all(|p| k.is_zero(&r.f.eval_value(p)));
            for c in r.f.coeffs() {
                ok &= g.is_fixed(c)?;
            }
            for fs in r.factorization.iter().chain(central.iter()) {
                ok &= pltmat::chain_product(k, fs) == r.f;
            }
            o.put("minpoly", Value::Poly(r.f.clone()));
            o.put("degree", Value::int(r.degree));
            o.put("over", Value::str(fixed_field_name(&g)?));
            o.put("orbit", Value::elems(&orbit));
            o.put("fullness", Value::str(galg::is_full(k, &orbit)?.to_string()));
            o.put("factorization", Value::opt(r.factorization, |f| Value::polys(&f)));
            o.put("central_factorization", Value::opt(central, |f| Value::polys(&f)));
            o.verified = Some(ok);
        }
        Command::Girr { f } => {
            let g = s.group()?;
            let f = s.poly(f)?;
            let b = galg::irreducible_over_fixed(&g, &f)?;
            o.put("irreducible", Value::Bool(b));
            o.put("over", Value::str(fixed_field_name(&g)?));
            o.negative = !b;
        }
        Command::Rankreport { a } => {
            let g = s.group()?;
            let a = s.elem(a)?;
            let r = galg::rank_report(&g, &a)?;
            o.verified = Some(r.rank_orbit == r.index * r.rank_piece);
            o.put("rank_orbit", Value::int(r.rank_orbit));
            o.put("index", Value::int(r.index));
            o.put("rank_piece", Value::int(r.rank_piece));
        }
        Command::Selftest { samples } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed.unwrap_or(0));
            k.self_test(&mut rng, *samples)?;
            if opts.group.is_some() {
                s.group()?.self_test(&mut rng, *samples)?;
            }
            o.put("samples", Value::int(*samples));
            o.put("seed", Value::Int(opts.seed.unwrap_or(0) as i64));
            o.put("passed", Value::Bool(true));
        }
        Command::Batch => return Err(CliError::usage("batch cannot be nested")),
    }
    if o.verified == Some(false) {
        return Err(wedderburn::Error::InvariantBreach(format!("{} witness failed re-verification", cmd.name())).into());
    }
    Ok(Report {
        command: cmd.name().to_string(),
        args: cmd.inputs(),
        ring: ctx.to_string(),
        result: o.result,
        verified: o.verified,
        status: if o.negative { Status::Negative } else { Status::Ok },
    })
}

fn classes(rs: &algset::RootSet) -> Value {
    Value::List(
        rs.classes
            .iter()
            .map(|c| {
                let mut kv = vec![
                    ("members".into(), Value::elems(&c.members)),
                    ("e_dim".into(), Value::int(c.e_dim)),
                ];
                match &c.kind {
                    algset::ClassKind::Enumerated => kv.push(("kind".into(), Value::str("enumerated"))),
                    algset::ClassKind::Described { trace, norm } => {
                        kv.push(("kind".into(), Value::str("described")));
                        kv.push(("trace".into(), Value::str(trace.to_string())));
                        kv.push(("norm".into(), Value::str(norm.to_string())));
                    }
                }
                Value::Map(kv)
            })
            .collect(),
    )
}

fn emit(cmd: &str, r: Result<Report, CliError>, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    // write failures on stdout/stderr have nowhere to be reported
    match r {
        Ok(rep) => {
            if json {
                let _ = writeln!(out, "{}", rep.to_json());
            } else {
                let _ = write!(out, "{}", rep.to_text());
            }
            rep.exit_code()
        }
        Err(e) => {
            if json {
                let _ = writeln!(out, "{}", error_json(cmd, &e));
            } else {
                let _ = writeln!(err, "error[{}]: {e}", e.code());
            }
            1
        }
    }
}

fn worst(a: i32, b: i32) -> i32 {
    match (a, b) {
        (1, _) | (_, 1) => 1,
        (2, _) | (_, 2) => 2,
        _ => 0,
    }
}

fn batch(outer: &Options, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut code = 0;
    let mut line = String::new();
    loop {
        line.clear();
        match input.read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(err, "error[E_USAGE]: {e}");
                return 1;
            }
        }
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let parsed = shell_words::split(text)
            .map_err(|e| CliError::usage(e.to_string()))
            .and_then(|toks| {
                Cli::try_parse_from(std::iter::once("wedd".to_string()).chain(toks))
                    .map_err(|e| CliError::usage(e.to_string().trim().to_string()))
            });
        let c = match parsed {
            Ok(cli) => {
                let opts = cli.opts.over(outer);
                emit(cli.command.name(), execute(&cli.command, &opts), opts.json, out, err)
            }
            Err(e) => emit("batch", Err(e), outer.json, out, err),
        };
        code = worst(code, c);
    }
    code
}

/// Entry point with injectable streams; returns the process exit code.
pub fn main_with(args: Vec<String>, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match &cli.command {
        Command::Batch => batch(&cli.opts, input, out, err),
        c => emit(c.name(), execute(c, &cli.opts), cli.opts.json, out, err),
    }
}
