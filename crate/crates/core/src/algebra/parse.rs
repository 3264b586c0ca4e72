//! Parser for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ['^' exponent]
//! atom   := int ['/' int] | ident | 'x' '[' int ']' '[' int ']' | '(' expr ')'
//! exponent := int | '(' int ')'
//! ```
//!
//! Named identifiers map to level-0 jet variables by their position in the
//! ambient variable list. Multiplication is always explicit.

use std::fmt;

use num_bigint::BigInt;

use super::field::FieldSpec;
use super::monomial::JetVar;
use super::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    Expected(&'static str),
    NegativeExponent,
    UnknownVariable(String),
    NotInField(String),
    BadIndex(String),
}

/// A parse failure at byte offset `pos` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.kind)
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::NegativeExponent => write!(f, "negative exponent"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable '{v}'"),
            ParseErrorKind::NotInField(c) => write!(f, "coefficient {c} is not in the field"),
            ParseErrorKind::BadIndex(s) => write!(f, "invalid jet index {s}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Naming scheme: the ordered ambient variables and the field.
#[derive(Clone, Debug)]
pub struct ParseContext {
    pub field: FieldSpec,
    pub vars: Vec<String>,
}

impl ParseContext {
    pub fn new(field: FieldSpec, vars: Vec<String>) -> Self {
        ParseContext { field, vars }
    }

    /// `n` anonymous coordinates, reachable only as `x[i][j]`.
    pub fn jets_only(field: FieldSpec, n: usize) -> Self {
        ParseContext { field, vars: (1..=n).map(|j| format!("#{j}")).collect() }
    }

    pub fn ambient_dimension(&self) -> usize {
        self.vars.len()
    }
}

pub fn parse_poly(text: &str, ctx: &ParseContext) -> Result<Poly, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ctx };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(ParseErrorKind::UnexpectedChar(p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a ParseContext,
}

impl<'a> Parser<'a> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { pos: self.pos, kind }
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

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(self.error(ParseErrorKind::Expected(what))),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let field = self.ctx.field;
        let mut acc = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        debug_assert_eq!(acc.field(), field);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let parenthesized = self.peek() == Some(b'(');
        if parenthesized {
            self.pos += 1;
        }
        match self.peek() {
            Some(b'-') => return Err(self.error(ParseErrorKind::NegativeExponent)),
            Some(c) if c.is_ascii_digit() => {}
            Some(_) => return Err(self.error(ParseErrorKind::Expected("a nonnegative integer exponent"))),
            None => return Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
        let start = self.pos;
        let digits = self.digits();
        let e: u32 = digits
            .parse()
            .map_err(|_| ParseError { pos: start, kind: ParseErrorKind::Expected("an exponent below 2^32") })?;
        if parenthesized {
            self.expect(b')', "')'")?;
        }
        Ok(e)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(self.digits().parse().expect("digits form an integer")),
            Some(_) => Err(self.error(ParseErrorKind::Expected("an integer"))),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let field = self.ctx.field;
        let start = match self.peek() {
            None => return Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(_) => self.pos,
        };
        let c = self.src[start];
        if c.is_ascii_digit() {
            let num = self.integer()?;
            let mut den = BigInt::from(1);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                den = self.integer()?;
            }
            let value = field.from_ratio(&num, &den).map_err(|_| ParseError {
                pos: start,
                kind: ParseErrorKind::NotInField(format!("{num}/{den}")),
            })?;
            return Ok(Poly::constant(field, value));
        }
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(b')', "')'")?;
            return Ok(inner);
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
            if name == "x" && self.peek() == Some(b'[') {
                return self.jet_var(start);
            }
            return match self.ctx.vars.iter().position(|v| *v == name) {
                Some(j) => Ok(Poly::var(field, JetVar::new(0, j as u32 + 1))),
                None => Err(ParseError { pos: start, kind: ParseErrorKind::UnknownVariable(name) }),
            };
        }
        Err(self.error(ParseErrorKind::UnexpectedChar(c as char)))
    }

    fn jet_var(&mut self, start: usize) -> Result<Poly, ParseError> {
        let mut idx = [0u32; 2];
        for slot in &mut idx {
            self.expect(b'[', "'['")?;
            let at = self.pos;
            let n = self.integer()?;
            *slot = u32::try_from(&n).map_err(|_| ParseError { pos: at, kind: ParseErrorKind::BadIndex(n.to_string()) })?;
            self.expect(b']', "']'")?;
        }
        let [level, index] = idx;
        if index == 0 || index as usize > self.ctx.ambient_dimension() {
            return Err(ParseError {
                pos: start,
                kind: ParseErrorKind::UnknownVariable(format!("x[{level}][{index}]")),
            });
        }
        Ok(Poly::var(self.ctx.field, JetVar::new(level, index)))
    }
}

/// Converts a byte offset into a 1-based `(line, column)` pair.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}
