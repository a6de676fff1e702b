//! Expression parser for polynomials and rational functions.
//!
//! Grammar: variables `x y z t`; operators `+ - * / ^`; parentheses; literals are integers,
//! `i`, `j` and `zeta(N)`. Juxtaposition multiplies (`3x^2`).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::ratfunc::RationalFunction;

/// Named values substituted for identifiers.
pub type Bindings = HashMap<String, RationalFunction>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str, offset: usize) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|(_, c)| *c).collect();
            out.push((offset + pos, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|(_, c)| *c).collect();
            out.push((offset + pos, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((offset + pos, Tok::Op(c)));
            k += 1;
        } else {
            return Err(Error::Parse { position: offset + pos, message: format!("unexpected character '{}'", c) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    field: &'a Field,
    bindings: &'a Bindings,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse { position: self.here(), message: message.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.here();
                let d = self.unary()?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| Error::Parse { position: at, message: "division by zero".into() })?;
            } else if matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.here();
        let negative = self.eat('-');
        let e = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                n
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                match v.to_polynomial().and_then(|p| p.constant_value()).and_then(|c| c.to_rational()) {
                    Some(r) if r.is_integer() => r.to_integer(),
                    _ => return Err(Error::Parse { position: at, message: "exponent must be an integer".into() }),
                }
            }
            _ => return self.error("expected exponent"),
        };
        let e: i64 = i64::try_from(&e)
            .ok()
            .filter(|v| v.abs() <= 10_000)
            .ok_or(Error::Parse { position: at, message: "exponent too large".into() })?;
        let e = if negative { -e } else { e };
        base.powi(e).map_err(|_| Error::Parse { position: at, message: "zero to a negative power".into() })
    }

    fn primary(&mut self) -> Result<RationalFunction> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RationalFunction::constant(CycNumber::from_rational(self.field, BigRational::from_integer(n))))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.identifier(&name, at)
            }
            Some(Tok::Op(c)) => self.error(&format!("unexpected '{}'", c)),
            None => self.error("unexpected end of input"),
        }
    }

    fn identifier(&mut self, name: &str, at: usize) -> Result<RationalFunction> {
        if let Some(v) = self.bindings.get(name) {
            return Ok(v.clone());
        }
        let var = match name {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            "t" => Some(Var::T),
            _ => None,
        };
        if let Some(v) = var {
            return Ok(RationalFunction::from_poly(MultiPoly::var(self.field, v)));
        }
        let unit = match name {
            "i" => Some(CycNumber::i(self.field)),
            "j" => Some(CycNumber::j(self.field)),
            "zeta" => {
                if !self.eat('(') {
                    return self.error("expected '(' after zeta");
                }
                let n = match self.peek().cloned() {
                    Some(Tok::Num(n)) => {
                        self.pos += 1;
                        n
                    }
                    _ => return self.error("expected conductor"),
                };
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                let n =
                    u32::try_from(&n).map_err(|_| Error::Parse { position: at, message: "bad conductor".into() })?;
                Some(CycNumber::root_of_unity(self.field, n, 1))
            }
            _ => None,
        };
        match unit {
            Some(Ok(c)) => Ok(RationalFunction::constant(c)),
            Some(Err(_)) => Err(Error::Parse {
                position: at,
                message: format!("'{}' is not in Q(zeta_{})", name, self.field.conductor()),
            }),
            None => Err(Error::UnknownIdentifier { name: name.to_string(), position: at }),
        }
    }
}

/// Parses with extra identifier bindings; `offset` shifts reported positions.
pub fn parse_with(text: &str, field: &Field, bindings: &Bindings, offset: usize) -> Result<RationalFunction> {
    let toks = tokenize(text, offset)?;
    let mut p = Parser { toks, pos: 0, end: offset + text.len(), field, bindings };
    if p.peek().is_none() {
        return p.error("empty expression");
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok(v)
}

pub fn parse_expression(text: &str, field: &Field) -> Result<RationalFunction> {
    parse_with(text, field, &Bindings::new(), 0)
}

/// Parses an expression that must be a polynomial.
pub fn parse_polynomial(text: &str, field: &Field) -> Result<MultiPoly> {
    parse_polynomial_with(text, field, &Bindings::new())
}

pub fn parse_polynomial_with(text: &str, field: &Field, bindings: &Bindings) -> Result<MultiPoly> {
    let r = parse_with(text, field, bindings, 0)?;
    r.to_polynomial().ok_or(Error::Parse { position: 0, message: "expected a polynomial".into() })
}

/// Splits on a separator at parenthesis depth zero, returning byte offsets with the pieces.
pub fn split_top_level(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Parses a comma-separated list of expressions.
pub fn parse_list(text: &str, field: &Field, bindings: &Bindings) -> Result<Vec<RationalFunction>> {
    split_top_level(text, ',').into_iter().map(|(off, s)| parse_with(s, field, bindings, off)).collect()
}
