//! Text grammar for rings, polynomials, ideals and 1-forms.
//!
//! ```text
//! ring  := "ring" names ["params" names] ["order" ("grevlex" | "lex" | "elim(" k ")")]
//! names := item ("," item)*         item := ident | ident ".." ident   (x0..x3)
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*          division only by nonzero constants
//! unary := ("-" | "+") unary | power
//! power := atom ["^" integer]
//! atom  := integer | variable | parameter | "d"variable | "(" expr ")"
//! ```
//!
//! Multiplication must be written explicitly; `2x` or `x y` is an error.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::param::ParamPoly;
use super::polynomial::Polynomial;
use super::ring::{MonomialOrder, Ring, RingRef};
use super::{PolyError, Q};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    DotDot,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::DotDot => "`..`".into(),
        Tok::Eof => "end of input".into(),
    }
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> PolyError {
    PolyError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, PolyError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, line: tl, col: tc });
            i += 1;
            col += 1;
            continue;
        }
        if c == '.' && chars.get(i + 1) == Some(&'.') {
            out.push(Token {
                tok: Tok::DotDot,
                line: tl,
                col: tc,
            });
            i += 2;
            col += 2;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                tok: Tok::Int(text.parse().expect("digits")),
                line: tl,
                col: tc,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: tl,
                col: tc,
            });
            continue;
        }
        return Err(err(tl, tc, format!("unexpected character `{c}`")));
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// Result of evaluating an expression: a scalar polynomial or a 1-form
/// `sum_i A_i dx_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(ParamPoly),
    Form(Vec<ParamPoly>),
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, msg: impl Into<String>) -> PolyError {
        let t = self.peek();
        err(t.line, t.col, msg)
    }

    fn expect_eof(&self) -> Result<(), PolyError> {
        match &self.peek().tok {
            Tok::Eof => Ok(()),
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => Err(self.error_here(format!(
                "implicit multiplication is not allowed; insert `*` before {}",
                describe(&self.peek().tok)
            ))),
            other => Err(self.error_here(format!("unexpected {}", describe(other)))),
        }
    }

    fn expr(&mut self) -> Result<Value, PolyError> {
        let mut acc = self.term()?;
        loop {
            let (line, col) = (self.peek().line, self.peek().col);
            let negate = match self.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.next();
            let rhs = self.term()?;
            acc = combine_add(acc, rhs, negate).map_err(|m| err(line, col, m))?;
        }
    }

    fn term(&mut self) -> Result<Value, PolyError> {
        let mut acc = self.unary()?;
        loop {
            let (line, col) = (self.peek().line, self.peek().col);
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = combine_mul(acc, rhs).map_err(|m| err(line, col, m))?;
                }
                Tok::Slash => {
                    self.next();
                    let rhs = self.unary()?;
                    let c =
                        constant_of(&rhs).ok_or_else(|| err(line, col, "division is only allowed by a constant"))?;
                    if c.is_zero() {
                        return Err(err(line, col, "division by zero"));
                    }
                    acc = scale_value(acc, &c.recip());
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                    return Err(self.error_here(format!(
                        "implicit multiplication is not allowed; insert `*` before {}",
                        describe(&self.peek().tok)
                    )));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value, PolyError> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                let v = self.unary()?;
                Ok(scale_value(v, &-Q::one()))
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, PolyError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let t = self.next();
        let e: u32 = match &t.tok {
            Tok::Int(n) => u32::try_from(n)
                .ok()
                .filter(|&e| e <= u16::MAX as u32)
                .ok_or_else(|| err(t.line, t.col, "exponent too large"))?,
            other => {
                return Err(err(
                    t.line,
                    t.col,
                    format!("exponent must be a nonnegative integer, found {}", describe(other)),
                ))
            }
        };
        match base {
            Value::Scalar(p) => match p.as_polynomial() {
                Some(poly) => Ok(Value::Scalar(ParamPoly::from_poly(poly.pow(e)))),
                None if e == 0 => Ok(Value::Scalar(ParamPoly::from_poly(Polynomial::one(self.ring)))),
                None if e == 1 => Ok(Value::Scalar(p)),
                None => Err(err(
                    caret.line,
                    caret.col,
                    "powers of parameter-dependent expressions are not affine in the parameters",
                )),
            },
            Value::Form(_) => Err(err(caret.line, caret.col, "cannot raise a 1-form to a power")),
        }
    }

    fn atom(&mut self) -> Result<Value, PolyError> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok(Value::Scalar(ParamPoly::from_poly(Polynomial::constant(
                self.ring,
                Q::from_integer(n),
            )))),
            Tok::Ident(name) => self.identifier(&name, t.line, t.col),
            Tok::LParen => {
                let v = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(err(
                        close.line,
                        close.col,
                        format!("expected `)`, found {}", describe(&close.tok)),
                    ));
                }
                Ok(v)
            }
            other => Err(err(
                t.line,
                t.col,
                format!("expected a number, variable or `(`, found {}", describe(&other)),
            )),
        }
    }

    fn identifier(&self, name: &str, line: usize, col: usize) -> Result<Value, PolyError> {
        if let Some(i) = self.ring.var_index(name) {
            return Ok(Value::Scalar(ParamPoly::from_poly(Polynomial::var(self.ring, i))));
        }
        if let Some(k) = self.ring.param_index(name) {
            return Ok(Value::Scalar(ParamPoly::param(self.ring, k)));
        }
        if let Some(i) = name.strip_prefix('d').and_then(|v| self.ring.var_index(v)) {
            let mut parts = vec![ParamPoly::zero(self.ring); self.ring.nvars()];
            parts[i] = ParamPoly::from_poly(Polynomial::one(self.ring));
            return Ok(Value::Form(parts));
        }
        Err(err(line, col, format!("unknown variable `{name}`")))
    }
}

fn constant_of(v: &Value) -> Option<Q> {
    match v {
        Value::Scalar(p) => {
            let poly = p.as_polynomial()?;
            if poly.is_zero() {
                Some(Q::zero())
            } else if poly.is_constant() {
                Some(poly.leading_coeff().cloned().unwrap_or_else(Q::zero))
            } else {
                None
            }
        }
        Value::Form(_) => None,
    }
}

fn scale_value(v: Value, c: &Q) -> Value {
    match v {
        Value::Scalar(p) => Value::Scalar(p.scale(c)),
        Value::Form(parts) => Value::Form(parts.iter().map(|p| p.scale(c)).collect()),
    }
}

fn combine_add(a: Value, b: Value, negate: bool) -> Result<Value, String> {
    let b = if negate { scale_value(b, &-Q::one()) } else { b };
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x.try_add(&y).map_err(|e| e.to_string())?)),
        (Value::Form(x), Value::Form(y)) => Ok(Value::Form(
            x.iter()
                .zip(y.iter())
                .map(|(p, q)| p.try_add(q))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?,
        )),
        _ => Err("cannot add a polynomial and a 1-form".into()),
    }
}

fn combine_mul(a: Value, b: Value) -> Result<Value, String> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x.try_mul(&y).map_err(|e| e.to_string())?)),
        (Value::Scalar(s), Value::Form(parts)) | (Value::Form(parts), Value::Scalar(s)) => Ok(Value::Form(
            parts
                .iter()
                .map(|p| p.try_mul(&s))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?,
        )),
        (Value::Form(_), Value::Form(_)) => Err("product of two 1-forms is not supported".into()),
    }
}

/// Parse an expression that may be a polynomial or a 1-form.
pub fn parse_value(src: &str, ring: &RingRef) -> Result<Value, PolyError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, ring };
    if p.peek().tok == Tok::Eof {
        return Err(p.error_here("empty expression"));
    }
    let v = p.expr()?;
    p.expect_eof()?;
    Ok(v)
}

/// Parse a polynomial whose coefficients may be affine in the parameters.
pub fn parse_param_poly(src: &str, ring: &RingRef) -> Result<ParamPoly, PolyError> {
    match parse_value(src, ring)? {
        Value::Scalar(p) => Ok(p),
        Value::Form(_) => Err(err(1, 1, "expected a polynomial, found a 1-form")),
    }
}

/// Parse a parameter-free polynomial.
pub fn parse_poly(src: &str, ring: &RingRef) -> Result<Polynomial, PolyError> {
    let p = parse_param_poly(src, ring)?;
    p.as_polynomial()
        .cloned()
        .ok_or_else(|| err(1, 1, "parameters are not allowed here"))
}

/// Parse a 1-form `(A0)*dx0 + ... + (An)*dxn` into its coefficient vector.
pub fn parse_form(src: &str, ring: &RingRef) -> Result<Vec<ParamPoly>, PolyError> {
    match parse_value(src, ring)? {
        Value::Form(parts) => Ok(parts),
        Value::Scalar(p) if p.is_zero() => Ok(vec![ParamPoly::zero(ring); ring.nvars()]),
        Value::Scalar(_) => Err(err(1, 1, "expected a 1-form such as `y*dx - x*dy`")),
    }
}

/// Parse a list of parameter-free generators separated by commas at the top
/// level (line breaks inside the list are allowed).
pub fn parse_ideal(src: &str, ring: &RingRef) -> Result<Vec<Polynomial>, PolyError> {
    let mut gens = Vec::new();
    for (text, line, col) in split_top_level(src) {
        if text.trim().is_empty() {
            continue;
        }
        let p = parse_poly(&text, ring).map_err(|e| shift(e, line, col))?;
        gens.push(p);
    }
    Ok(gens)
}

fn shift(e: PolyError, line: usize, col: usize) -> PolyError {
    match e {
        PolyError::Parse { line: l, col: c, msg } => PolyError::Parse {
            line: line + l - 1,
            col: if l == 1 { col + c - 1 } else { c },
            msg,
        },
        other => other,
    }
}

/// Pieces of `src` split at commas of parenthesis depth zero, with the
/// line/column at which each piece starts.
fn split_top_level(src: &str) -> Vec<(String, usize, usize)> {
    let mut out = Vec::new();
    let (mut depth, mut line, mut col) = (0i32, 1usize, 1usize);
    let (mut cur, mut start) = (String::new(), (1usize, 1usize));
    for ch in src.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push((std::mem::take(&mut cur), start.0, start.1));
            col += 1;
            start = (line, col);
            continue;
        }
        cur.push(ch);
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    out.push((cur, start.0, start.1));
    out
}

/// Parse a rational literal such as `-3/2` or `5`.
pub fn parse_rational(src: &str) -> Result<Q, PolyError> {
    let s = src.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err(1, 1, format!("invalid rational `{s}`")))?;
    let d: BigInt = den.parse().map_err(|_| err(1, 1, format!("invalid rational `{s}`")))?;
    if d.is_zero() {
        return Err(err(1, 1, "zero denominator"));
    }
    Ok(Q::new(n, d))
}

/// Parse a ring declaration such as `ring x0..x3 params t0..t5 order grevlex`.
pub fn parse_ring(src: &str) -> Result<RingRef, PolyError> {
    let toks = tokenize(src)?;
    let mut pos = 0usize;
    let at = |pos: usize| &toks[pos.min(toks.len() - 1)];
    let keyword = |pos: usize, kw: &str| matches!(&at(pos).tok, Tok::Ident(s) if s == kw);

    if !keyword(pos, "ring") {
        let t = at(pos);
        return Err(err(t.line, t.col, "ring declaration must start with `ring`"));
    }
    pos += 1;
    let vars = parse_names(&toks, &mut pos)?;
    let mut params = Vec::new();
    let mut order = MonomialOrder::Grevlex;
    loop {
        if keyword(pos, "params") {
            pos += 1;
            params = parse_names(&toks, &mut pos)?;
        } else if keyword(pos, "order") {
            pos += 1;
            order = parse_order(&toks, &mut pos)?;
        } else if at(pos).tok == Tok::Eof {
            break;
        } else {
            let t = at(pos);
            return Err(err(
                t.line,
                t.col,
                format!(
                    "expected `params`, `order` or end of declaration, found {}",
                    describe(&t.tok)
                ),
            ));
        }
    }
    Ring::new(vars, params, order).map_err(|e| match e {
        PolyError::Ring(msg) => err(1, 1, msg),
        other => other,
    })
}

fn parse_names(toks: &[Token], pos: &mut usize) -> Result<Vec<String>, PolyError> {
    let mut names = Vec::new();
    loop {
        let t = &toks[*pos];
        let first = match &t.tok {
            Tok::Ident(s) if s != "params" && s != "order" => s.clone(),
            other => {
                return Err(err(
                    t.line,
                    t.col,
                    format!("expected a variable name, found {}", describe(other)),
                ))
            }
        };
        *pos += 1;
        if toks[*pos].tok == Tok::DotDot {
            *pos += 1;
            let t2 = &toks[*pos];
            let last = match &t2.tok {
                Tok::Ident(s) => s.clone(),
                other => {
                    return Err(err(
                        t2.line,
                        t2.col,
                        format!("expected the end of a range, found {}", describe(other)),
                    ))
                }
            };
            *pos += 1;
            let range = expand_range(&first, &last)
                .ok_or_else(|| err(t.line, t.col, format!("invalid range `{first}..{last}`")))?;
            names.extend(range);
        } else {
            names.push(first);
        }
        if toks[*pos].tok == Tok::Comma {
            *pos += 1;
        } else {
            return Ok(names);
        }
    }
}

fn split_index(s: &str) -> Option<(&str, u32)> {
    let idx = s.find(|c: char| c.is_ascii_digit())?;
    let (prefix, digits) = s.split_at(idx);
    if prefix.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((prefix, digits.parse().ok()?))
}

fn expand_range(first: &str, last: &str) -> Option<Vec<String>> {
    let (p1, a) = split_index(first)?;
    let (p2, b) = split_index(last)?;
    if p1 != p2 || a > b {
        return None;
    }
    Some((a..=b).map(|i| format!("{p1}{i}")).collect())
}

fn parse_order(toks: &[Token], pos: &mut usize) -> Result<MonomialOrder, PolyError> {
    let t = &toks[*pos];
    *pos += 1;
    match &t.tok {
        Tok::Ident(s) if s == "grevlex" => Ok(MonomialOrder::Grevlex),
        Tok::Ident(s) if s == "lex" => Ok(MonomialOrder::Lex),
        Tok::Ident(s) if s == "elim" => {
            let bad = |t: &Token| err(t.line, t.col, "expected `elim(k)`");
            if toks[*pos].tok != Tok::LParen {
                return Err(bad(&toks[*pos]));
            }
            let k = match &toks[*pos + 1].tok {
                Tok::Int(n) => usize::try_from(n).map_err(|_| bad(&toks[*pos + 1]))?,
                _ => return Err(bad(&toks[*pos + 1])),
            };
            if toks[*pos + 2].tok != Tok::RParen {
                return Err(bad(&toks[*pos + 2]));
            }
            *pos += 3;
            Ok(MonomialOrder::BlockElim(k))
        }
        other => Err(err(
            t.line,
            t.col,
            format!("unknown monomial order {}", describe(other)),
        )),
    }
}
