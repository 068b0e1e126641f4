//! Ring declarations, automorphism groups and the expression grammar for
//! elements, skew polynomials, matrices and finite sets.

use num_bigint::BigInt;
use num_rational::BigRational;

use wedderburn::galg::Aut;
use wedderburn::ground::{Family, QPoly, RatFn};
use wedderburn::{Ctx, Elem, MatK, OrePoly, Quat, RingCtx};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Num(digits.parse().expect("decimal digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|&(_, c)| c).collect())));
        } else if "+-*/^()[]{},".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(CliError::syntax(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a Ctx,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &str, ctx: &'a Ctx) -> Result<Self, CliError> {
        Ok(Parser {
            ctx,
            toks: lex(src)?,
            at: 0,
            end: src.len(),
        })
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(CliError::syntax(self.pos(), format!("expected '{c}'")))
        }
    }

    fn finish(&self) -> Result<(), CliError> {
        if self.at < self.toks.len() {
            return Err(CliError::syntax(self.pos(), "trailing input"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<OrePoly, CliError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<OrePoly, CliError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                if d.deg() > 0 {
                    return Err(CliError::syntax(pos, "division by a polynomial in t"));
                }
                let inv = self.ctx.inv(&d.coeff(0)).map_err(|_| CliError::syntax(pos, "division by zero"))?;
                acc = acc.mul(&OrePoly::constant(self.ctx, inv));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<OrePoly, CliError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(CliError::syntax(pos, "expected an exponent"));
            };
            self.at += 1;
            let e: usize = n.try_into().map_err(|_| CliError::syntax(pos, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<OrePoly, CliError> {
        let pos = self.pos();
        let k = self.ctx;
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                let e = k.from_rational(&BigRational::from_integer(n)).map_err(CliError::Core)?;
                Ok(OrePoly::constant(k, e))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                let c = |e: Elem| Ok(OrePoly::constant(k, e));
                let absent = || CliError::Core(wedderburn::Error::NotInRing(format!("'{name}' over {k}")));
                match (name.as_str(), k.family()) {
                    ("t", _) => Ok(OrePoly::t(k)),
                    ("w", Family::Finite(f)) if f.m() > 1 => c(k.generator().map_err(CliError::Core)?),
                    ("x", Family::RationalFunctions) => c(Elem::RatFn(RatFn::from_poly(QPoly::x()))),
                    ("i", Family::Quaternions) => c(Elem::Quat(Quat::i())),
                    ("j", Family::Quaternions) => c(Elem::Quat(Quat::j())),
                    ("k", Family::Quaternions) => c(Elem::Quat(Quat::k())),
                    ("w" | "x" | "i" | "j" | "k", _) => Err(absent()),
                    _ => Err(CliError::syntax(pos, format!("unknown symbol '{name}'"))),
                }
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(CliError::syntax(pos, "expected a number, a symbol or '('")),
        }
    }

    fn scalar(&mut self) -> Result<Elem, CliError> {
        let pos = self.pos();
        let p = self.expr()?;
        if p.deg() > 0 {
            return Err(CliError::syntax(pos, "expected an element, found a polynomial in t"));
        }
        Ok(p.coeff(0))
    }

    fn list(&mut self, open: char, close: char) -> Result<Vec<Elem>, CliError> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.scalar()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }
}

pub fn parse_poly(src: &str, ctx: &Ctx) -> Result<OrePoly, CliError> {
    let mut p = Parser::new(src, ctx)?;
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

pub fn parse_elem(src: &str, ctx: &Ctx) -> Result<Elem, CliError> {
    let mut p = Parser::new(src, ctx)?;
    let v = p.scalar()?;
    p.finish()?;
    Ok(v)
}

/// `[[a,b],[c,d]]`
pub fn parse_matrix(src: &str, ctx: &Ctx) -> Result<MatK, CliError> {
    let mut p = Parser::new(src, ctx)?;
    p.expect('[')?;
    let mut rows = Vec::new();
    if !p.eat(']') {
        loop {
            let pos = p.pos();
            let row = p.list('[', ']')?;
            if rows.first().is_some_and(|r: &Vec<Elem>| r.len() != row.len()) {
                return Err(CliError::syntax(pos, "rows of different lengths"));
            }
            rows.push(row);
            if p.eat(']') {
                break;
            }
            p.expect(',')?;
        }
    }
    p.finish()?;
    MatK::from_rows(ctx, rows).map_err(CliError::Core)
}

/// `{a, b, ...}`
pub fn parse_set(src: &str, ctx: &Ctx) -> Result<Vec<Elem>, CliError> {
    let mut p = Parser::new(src, ctx)?;
    let v = p.list('{', '}')?;
    p.finish()?;
    Ok(v)
}

fn parse_u32(s: &str, what: &str, pos: usize) -> Result<u32, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::syntax(pos, format!("expected an integer for {what}")))
}

fn quat_of(e: Elem) -> Quat {
    match e {
        Elem::Quat(q) => q,
        _ => unreachable!("parsed over HQ"),
    }
}

/// `Q` | `GF(p^m; frob=k[; beta=b])` | `Qx` | `Qx; d/dx` | `HQ[; inner=u][; beta=b]`
pub fn parse_ring(spec: &str) -> Result<Ctx, CliError> {
    let s = spec.trim();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "Q" => return Ok(RingCtx::rationals()),
        "Qx" => return Ok(RingCtx::rational_functions(false)),
        "Qx;d/dx" => return Ok(RingCtx::rational_functions(true)),
        _ => {}
    }
    if let Some(inner) = compact.strip_prefix("GF(") {
        let Some(inner) = inner.strip_suffix(')') else {
            return Err(CliError::syntax(spec.len(), "expected ')'"));
        };
        let mut parts = inner.split(';');
        let head = parts.next().unwrap_or_default();
        let (p, m) = head
            .split_once('^')
            .ok_or_else(|| CliError::syntax(3, "expected p^m"))?;
        let p = parse_u32(p, "p", 3)?;
        let m = parse_u32(m, "m", 3)? as usize;
        let mut frob = 0;
        let mut beta_src = None;
        for part in parts {
            let pos = spec.find(part.split('=').next().unwrap_or(part)).unwrap_or(0);
            match part.split_once('=') {
                Some(("frob", v)) => frob = parse_u32(v, "frob", pos)?,
                Some(("beta", v)) => beta_src = Some((v.to_string(), pos)),
                _ => return Err(CliError::syntax(pos, format!("unknown option '{part}'"))),
            }
        }
        let base = RingCtx::finite(p, m, 0, None).map_err(CliError::Core)?;
        let beta = match beta_src {
            Some((b, pos)) => Some(parse_elem(&b, &base).map_err(|e| e.shift(pos))?),
            None => None,
        };
        return RingCtx::finite(p, m, frob, beta).map_err(CliError::Core);
    }
    if compact == "HQ" || compact.starts_with("HQ;") {
        let base = RingCtx::quaternions();
        let mut inner = None;
        let mut beta = None;
        for part in compact.split(';').skip(1) {
            let pos = spec.find(part.split('=').next().unwrap_or(part)).unwrap_or(0);
            match part.split_once('=') {
                Some(("inner", v)) => inner = Some(quat_of(parse_elem(v, &base)?)),
                Some(("beta", v)) => beta = Some(quat_of(parse_elem(v, &base)?)),
                _ => return Err(CliError::syntax(pos, format!("unknown option '{part}'"))),
            }
        }
        if inner.as_ref().is_some_and(Quat::is_central) {
            inner = None;
        }
        return RingCtx::quaternions_twisted(inner, beta).map_err(CliError::Core);
    }
    Err(CliError::syntax(0, format!("unknown ring '{s}'")))
}

/// Comma-separated generators: `Id`, `Frob`, `Frob^k`, `Int(u)`.
pub fn parse_group(spec: &str, ctx: &Ctx) -> Result<Vec<Aut>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut items = Vec::new();
    for (i, c) in spec.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push((start, &spec[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push((start, &spec[start..]));
    for (pos, item) in items {
        let it = item.trim();
        let a = if it == "Id" {
            Aut::Identity
        } else if it == "Frob" {
            Aut::Frobenius(1)
        } else if let Some(k) = it.strip_prefix("Frob^") {
            Aut::Frobenius(parse_u32(k, "Frob^k", pos)?)
        } else if let Some(u) = it.strip_prefix("Int(").and_then(|r| r.strip_suffix(')')) {
            Aut::Inner(quat_of(parse_elem(u, ctx).map_err(|e| e.shift(pos + 4))?))
        } else {
            return Err(CliError::syntax(pos, format!("unknown automorphism '{it}'")));
        };
        out.push(a);
    }
    Ok(out)
}
