//! Text format for polynomials and ideal files.
//!
//! ```text
//! poly    := ['-'] term (('+'|'-') term)*
//! term    := coeff ('*' varpow)* | varpow ('*' varpow)*
//! varpow  := ident ('^' nat)?
//! coeff   := int ('/' nat)?
//! ```
//!
//! An ideal file starts with a header such as
//! `ring: x0..x4 over QQ order grevlex` (variables may also be listed as
//! `x,y,z`), followed by one polynomial per line. `#` starts a comment.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::RingError;
use crate::field::{Field, FieldElement};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, RingError> {
        Err(RingError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<&'a str, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn ident(&mut self) -> Result<(usize, &'a str), RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable or coefficient");
        }
        Ok((start, std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")))
    }
}

/// Parse a polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, RingError> {
    let mut lx = Lexer::new(text);
    let field = ring.field();
    let mut terms = Vec::new();
    let mut negative = lx.eat(b'-');
    if !negative {
        lx.eat(b'+');
    }
    loop {
        let (c, m) = parse_term(&mut lx, ring)?;
        terms.push((if negative { field.neg(&c) } else { c }, m));
        match lx.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(ch) => return lx.err(format!("unexpected `{}`", ch as char)),
        }
        lx.pos += 1;
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(lx: &mut Lexer<'_>, ring: &Arc<Ring>) -> Result<(FieldElement, Monomial), RingError> {
    let field = ring.field();
    let mut exps = vec![0u32; ring.nvars()];
    let coeff = match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let start = lx.pos;
            let num: BigInt = lx.digits()?.parse().expect("digits parse");
            let den: BigInt = if lx.eat(b'/') { lx.digits()?.parse().expect("digits parse") } else { BigInt::one() };
            let value = field.from_fraction(&num, &den).map_err(|e| match e {
                RingError::InvalidCoefficient(m) => RingError::Syntax { pos: start, msg: m },
                other => other,
            })?;
            if !lx.eat(b'*') {
                return Ok((value, Monomial::one(ring.nvars())));
            }
            value
        }
        _ => field.one(),
    };
    loop {
        let (start, name) = lx.ident()?;
        let idx = ring.var_index(name).ok_or_else(|| {
            if name.as_bytes()[0].is_ascii_digit() {
                RingError::Syntax { pos: start, msg: "coefficient must come first in a term".into() }
            } else {
                RingError::UnknownVariable(name.to_string())
            }
        })?;
        let e: u32 = if lx.eat(b'^') {
            let pos = lx.pos;
            lx.digits()?
                .parse()
                .map_err(|_| RingError::Syntax { pos, msg: "exponent too large".into() })?
        } else {
            1
        };
        exps[idx] = exps[idx]
            .checked_add(e)
            .filter(|&v| v <= u16::MAX as u32)
            .ok_or(RingError::ExponentOverflow(u16::MAX as u32 + 1))?;
        if !lx.eat(b'*') {
            break;
        }
    }
    Ok((coeff, Monomial::new(&exps)?))
}

/// Canonical text for a polynomial; `parse_polynomial` inverts it.
pub fn print_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let ring = f.ring();
    let field = ring.field();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let neg = t.coeff.is_negative(&field);
        let abs = if neg { field.neg(&t.coeff) } else { t.coeff.clone() };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = print_monomial(&t.mono, ring.vars());
        if t.mono.is_one() {
            out.push_str(&abs.render(&field));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&abs.render(&field));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

pub fn print_monomial(m: &Monomial, vars: &[String]) -> String {
    if m.is_one() {
        return "1".into();
    }
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{e}", vars[i]) })
        .collect();
    parts.join("*")
}

/// Contents of an ideal file.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial>,
}

/// Parse the `ring:` header line.
pub fn parse_header(line: &str) -> Result<Arc<Ring>, RingError> {
    let bad = |msg: &str| RingError::Syntax { pos: 0, msg: msg.to_string() };
    let rest = line.trim().strip_prefix("ring:").ok_or_else(|| bad("header must start with `ring:`"))?;
    let words: Vec<&str> = rest.split_whitespace().collect();
    let mut vars = None;
    let mut field = Field::Rationals;
    let mut order = MonomialOrder::Grevlex;
    let mut i = 0;
    while i < words.len() {
        match words[i] {
            "over" => {
                field = words.get(i + 1).ok_or_else(|| bad("missing field after `over`"))?.parse()?;
                i += 2;
            }
            "order" => {
                order = words.get(i + 1).ok_or_else(|| bad("missing order after `order`"))?.parse()?;
                i += 2;
            }
            w if vars.is_none() => {
                vars = Some(expand_vars(w)?);
                i += 1;
            }
            w => return Err(bad(&format!("unexpected `{w}` in header"))),
        }
    }
    Ring::new(vars.ok_or_else(|| bad("header lists no variables"))?, field, order)
}

/// `x0..x4` expands to `x0, x1, x2, x3, x4`; `x,y,z` is taken literally.
fn expand_vars(spec: &str) -> Result<Vec<String>, RingError> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let split = |s: &str| {
            let digits = s.trim_start_matches(|c: char| !c.is_ascii_digit());
            let prefix = &s[..s.len() - digits.len()];
            digits.parse::<usize>().ok().map(|n| (prefix.to_string(), n))
        };
        match (split(lo), split(hi)) {
            (Some((p, a)), Some((q, b))) if p == q && a <= b && !p.is_empty() => {
                Ok((a..=b).map(|i| format!("{p}{i}")).collect())
            }
            _ => Err(RingError::InvalidRing(format!("cannot expand variable range `{spec}`"))),
        }
    } else {
        Ok(spec.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect())
    }
}

/// Parse a whole ideal file. Syntax errors carry the byte offset into `text`.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, RingError> {
    let mut ring = None;
    let mut generators = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let shift = |e: RingError| match e {
            RingError::Syntax { pos, msg } => RingError::Syntax { pos: line_start + pos, msg },
            other => other,
        };
        match &ring {
            None => ring = Some(parse_header(line).map_err(shift)?),
            Some(r) => {
                let f = parse_polynomial(line, r).map_err(shift)?;
                if !f.is_zero() {
                    generators.push(f);
                }
            }
        }
    }
    let ring = ring.ok_or(RingError::Syntax { pos: 0, msg: "missing `ring:` header".into() })?;
    Ok(IdealFile { ring, generators })
}

/// Render an ideal file that `parse_ideal_file` reads back.
pub fn print_ideal_file(ring: &Ring, generators: &[Polynomial]) -> String {
    let order = match ring.order() {
        MonomialOrder::Block(_) => MonomialOrder::Grevlex,
        o => o.clone(),
    };
    let mut out = format!("ring: {} over {} order {}\n", ring.vars().join(","), ring.field(), order);
    for g in generators {
        out.push_str(&print_polynomial(g));
        out.push('\n');
    }
    out
}
