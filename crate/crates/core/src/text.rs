//! Plain-text syntax for polynomials.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! expr    := [ '-' ] product ( ('+' | '-') product )*
//! product := atom ( '*' atom | '/' atom )*
//! atom    := number | ident [ '^' number ] | '(' expr ')' [ '^' number ]
//! ```
//!
//! `/` only accepts a constant right-hand side (so `1/2*x` and `x/3` work,
//! `1/x` does not).  Multiplication must be written out: `xy` is a single
//! identifier, not a product.  Rendering lists terms in descending monomial
//! order, variables in ring order, with `F_p` coefficients shown as balanced
//! lifts (`-1` rather than `p-1`); `parse . render` is the identity.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::EngineError;
use crate::monomial::{Exponent, Monomial};
use crate::poly::{PolyRing, Polynomial};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> EngineError {
        EngineError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn next_token(&mut self) -> Result<(usize, Tok)> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::Eof));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let digits = core::str::from_utf8(&self.src[self.pos..end])
                    .expect("ascii digits are valid utf8");
                self.pos = end;
                Tok::Number(digits.parse::<BigInt>().expect("digit string"))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = core::str::from_utf8(&self.src[self.pos..end])
                    .expect("ascii identifier is valid utf8")
                    .to_string();
                self.pos = end;
                Tok::Ident(name)
            }
            other => {
                return Err(self.error(&alloc::format!(
                    "unexpected character {:?}",
                    other as char
                )))
            }
        };
        Ok((start, tok))
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    lexer: Lexer<'a>,
    current: Tok,
    current_pos: usize,
}

/// Cap on exponents written in source text; far beyond anything the engine
/// can process, but prevents absurd `(x+y)^100000` expansions.
const MAX_TEXT_EXPONENT: u64 = 4096;

impl<'a> Parser<'a> {
    fn new(ring: &'a PolyRing, src: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let (pos, tok) = lexer.next_token()?;
        Ok(Parser {
            ring,
            lexer,
            current: tok,
            current_pos: pos,
        })
    }

    fn error(&self, message: &str) -> EngineError {
        EngineError::Parse {
            position: self.current_pos,
            message: message.to_string(),
        }
    }

    fn advance(&mut self) -> Result<()> {
        let (pos, tok) = self.lexer.next_token()?;
        self.current = tok;
        self.current_pos = pos;
        Ok(())
    }

    fn parse_expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.current == Tok::Minus {
            negate = true;
            self.advance()?;
        } else if self.current == Tok::Plus {
            self.advance()?;
        }
        let mut acc = self.parse_product()?;
        if negate {
            acc = self.ring.neg(&acc);
        }
        loop {
            match self.current {
                Tok::Plus => {
                    self.advance()?;
                    let p = self.parse_product()?;
                    acc = self.ring.add(&acc, &p);
                }
                Tok::Minus => {
                    self.advance()?;
                    let p = self.parse_product()?;
                    acc = self.ring.sub(&acc, &p);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_product(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_atom()?;
        loop {
            match self.current {
                Tok::Star => {
                    self.advance()?;
                    let rhs = self.parse_atom()?;
                    acc = self.ring.mul(&acc, &rhs);
                }
                Tok::Slash => {
                    self.advance()?;
                    let pos = self.current_pos;
                    let rhs = self.parse_atom()?;
                    let c = match rhs.terms() {
                        [t] if t.mono.is_one() => t.coeff.clone(),
                        _ => {
                            return Err(EngineError::Parse {
                                position: pos,
                                message: "division is only allowed by a nonzero constant"
                                    .to_string(),
                            })
                        }
                    };
                    let inv = self.ring.field().inv(&c).map_err(|_| EngineError::Parse {
                        position: pos,
                        message: "division by zero".to_string(),
                    })?;
                    acc = self.ring.scale(&acc, &inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_exponent(&mut self) -> Result<u64> {
        // Caller consumed '^'.
        match core::mem::replace(&mut self.current, Tok::Eof) {
            Tok::Number(n) => {
                self.advance()?;
                let (sign, digits) = n.to_u64_digits();
                if sign == num_bigint::Sign::Minus {
                    return Err(self.error("negative exponent"));
                }
                let value = match digits.len() {
                    0 => 0,
                    1 => digits[0],
                    _ => u64::MAX,
                };
                if value > MAX_TEXT_EXPONENT {
                    return Err(self.error("exponent too large"));
                }
                Ok(value)
            }
            other => {
                self.current = other;
                Err(self.error("expected an integer exponent after '^'"))
            }
        }
    }

    fn parse_atom(&mut self) -> Result<Polynomial> {
        match core::mem::replace(&mut self.current, Tok::Eof) {
            Tok::Number(n) => {
                self.advance()?;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Tok::Ident(name) => {
                let pos = self.current_pos;
                self.advance()?;
                let idx = self.ring.var_index(&name).ok_or(EngineError::Parse {
                    position: pos,
                    message: alloc::format!("unknown variable {name:?}"),
                })?;
                let e = if self.current == Tok::Caret {
                    self.advance()?;
                    self.parse_exponent()?
                } else {
                    1
                };
                if e > Exponent::MAX as u64 {
                    return Err(self.error("exponent too large"));
                }
                let mut exps = alloc::vec![0 as Exponent; self.ring.nvars()];
                exps[idx] = e as Exponent;
                Ok(self
                    .ring
                    .monomial_poly(Monomial::new(exps, self.ring.weights())))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.parse_expr()?;
                if self.current != Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.advance()?;
                if self.current == Tok::Caret {
                    self.advance()?;
                    let e = self.parse_exponent()?;
                    let mut acc = self.ring.one_poly();
                    for _ in 0..e {
                        acc = self.ring.mul(&acc, &inner);
                    }
                    Ok(acc)
                } else {
                    Ok(inner)
                }
            }
            other => {
                self.current = other;
                Err(self.error("expected a number, variable, or '('"))
            }
        }
    }
}

impl PolyRing {
    /// Parses a polynomial in this ring's variables.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        let mut p = Parser::new(self, src)?;
        let poly = p.parse_expr()?;
        if p.current != Tok::Eof {
            return Err(p.error("trailing input after polynomial"));
        }
        Ok(poly)
    }

    /// Renders one monomial (no coefficient), variables in ring order.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_names()[i].clone()),
                _ => parts.push(alloc::format!("{}^{}", self.var_names()[i], e)),
            }
        }
        parts.join("*")
    }

    /// Renders a polynomial; inverse of [`PolyRing::parse`].
    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in f.terms().iter().enumerate() {
            let coeff_str = self.field().render(&t.coeff);
            let (neg, mag) = match coeff_str.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff_str),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if t.mono.is_one() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&self.render_monomial(&t.mono));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&self.render_monomial(&t.mono));
            }
        }
        out
    }
}
