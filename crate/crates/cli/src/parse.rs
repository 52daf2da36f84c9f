//! Polynomial text <-> SparsePoly.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | variable | 't' | '(' expr ')'
//! ```
//!
//! Variables are x1..xN; with N <= 3 the aliases x, y, z name x1, x2, x3.
//! `t` is the generator of F_q over F_p. Integers are reduced mod p^m.

use fqzeta::algebra::{poly_pow, Elem, GaloisRing, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("expression too large: {0}")]
    TooLarge(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), start));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// What an identifier stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Var(usize),
    Generator,
}

/// Resolves x1..xN, the aliases x, y, z for N <= 3, and t.
pub fn standard_symbol(name: &str, nvars: usize) -> Option<Symbol> {
    if name == "t" {
        return Some(Symbol::Generator);
    }
    if nvars <= 3 {
        if let Some(i) = ["x", "y", "z"].iter().position(|&a| a == name) {
            return (i < nvars).then_some(Symbol::Var(i));
        }
    }
    let idx: usize = name.strip_prefix('x')?.parse().ok()?;
    (1..=nvars).contains(&idx).then(|| Symbol::Var(idx - 1))
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a GaloisRing,
    nvars: usize,
    resolve: &'a dyn Fn(&str) -> Option<Symbol>,
    max_terms: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<SparsePoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg(self.ring) } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t, self.ring);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t, self.ring);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f, self.ring);
            if acc.num_terms() > self.max_terms {
                return Err(ParseError::TooLarge(format!("more than {} terms", self.max_terms)));
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Tok::Int(digits)) = self.peek().cloned() else {
            return self.err("expected an integer exponent after '^'");
        };
        let k: u64 = match digits.parse() {
            Ok(k) if k <= u32::MAX as u64 => k,
            _ => return self.err("exponent too large"),
        };
        self.pos += 1;
        poly_pow(&base, k, self.ring, self.max_terms).map_err(|e| ParseError::TooLarge(e.to_string()))
    }

    fn atom(&mut self) -> Result<SparsePoly, ParseError> {
        let pos = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.pos += 1;
                let c = reduce_digits(&digits, self.ring);
                Ok(SparsePoly::constant(self.nvars, c, self.ring))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match (self.resolve)(&name) {
                    Some(Symbol::Var(i)) => Ok(SparsePoly::var(i, self.nvars, self.ring)),
                    Some(Symbol::Generator) => Ok(SparsePoly::constant(self.nvars, self.ring.generator(), self.ring)),
                    None => Err(ParseError::UnknownVariable { name, pos }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, a variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Decimal digits reduced mod p^m.
fn reduce_digits(digits: &str, ring: &GaloisRing) -> Elem {
    let pm = ring.pm() as u128;
    let v = digits
        .bytes()
        .fold(0u128, |acc, b| (acc * 10 + (b - b'0') as u128) % pm);
    ring.from_int(v as i64)
}

/// Parses with a custom symbol table.
pub fn parse_with(
    text: &str,
    ring: &GaloisRing,
    nvars: usize,
    resolve: &dyn Fn(&str) -> Option<Symbol>,
    max_terms: usize,
) -> Result<SparsePoly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        ring,
        nvars,
        resolve,
        max_terms,
    };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

/// Parses a polynomial in x1..xN over `ring`.
pub fn parse_poly(text: &str, ring: &GaloisRing, nvars: usize) -> Result<SparsePoly, ParseError> {
    parse_with(text, ring, nvars, &|name| standard_symbol(name, nvars), 10_000_000)
}

/// Parses a field element, e.g. `3` or `(t+1)`.
pub fn parse_elem(text: &str, ring: &GaloisRing) -> Result<Elem, ParseError> {
    let f = parse_with(text, ring, 0, &|name| standard_symbol(name, 0), 10_000)?;
    Ok(f.constant_term(ring))
}

/// Parses a modulus such as `t^2+t+1` into coefficients mod p, constant first.
pub fn parse_modulus(text: &str, prime_field: &GaloisRing) -> Result<Vec<u64>, ParseError> {
    let f = parse_with(
        text,
        prime_field,
        1,
        &|name| (name == "t" || name == "x").then_some(Symbol::Var(0)),
        10_000,
    )?;
    let deg = f.total_degree().unwrap_or(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in f.terms() {
        out[m.exps()[0] as usize] = prime_field.to_int(c).expect("prime field element");
    }
    Ok(out)
}

fn var_name(i: usize, nvars: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// An element as an integer if it lies in Z/p^m, else as `(t-polynomial)`.
pub fn render_elem(c: &Elem, ring: &GaloisRing) -> String {
    if let Some(v) = ring.to_int(c) {
        return v.to_string();
    }
    let parts: Vec<String> = c
        .coords()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| match (i, a) {
            (0, a) => a.to_string(),
            (1, 1) => "t".to_string(),
            (1, a) => format!("{a}*t"),
            (i, 1) => format!("t^{i}"),
            (i, a) => format!("{a}*t^{i}"),
        })
        .collect();
    format!("({})", parts.join("+"))
}

/// Text that [`parse_poly`] reads back to the same polynomial; terms in
/// decreasing graded-lex order.
pub fn render_poly(f: &SparsePoly, ring: &GaloisRing) -> String {
    let n = f.nvars();
    let terms: Vec<String> = f
        .terms()
        .rev()
        .map(|(m, c)| {
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &u)| u > 0)
                .map(|(i, &u)| {
                    if u == 1 {
                        var_name(i, n)
                    } else {
                        format!("{}^{u}", var_name(i, n))
                    }
                })
                .collect();
            if mono.is_empty() {
                render_elem(c, ring)
            } else if ring.is_one(c) {
                mono.join("*")
            } else {
                format!("{}*{}", render_elem(c, ring), mono.join("*"))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
