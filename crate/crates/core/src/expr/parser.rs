//! Recursive-descent parser for the eta-quotient language.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := factor (("*" | "/") factor | factor_implicit)*
//! factor  := "-" factor | atom ("^" sint)?
//! atom    := uint | "q" | "f" uint | "(" expr ")" | func
//! func    := "extract" "(" expr "," uint "," uint ")"
//!          | "inflate" "(" expr "," uint ")"
//!          | "mod" "(" expr "," uint ")"
//! ```
//!
//! Juxtaposition multiplies only after an integer or a q-power, so
//! `2q^3 f6^2` is `2*q^3*f6^2` while `f1 f2` is rejected.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ast::{EtaAtom, Expr, MAX_EXPONENT};
use super::lexer::{tokenize, Tok, Token};
use super::ParseError;

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    p.expect(Tok::Eof, "operator or end of input")?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax { offset: self.offset(), expected: expected.into(), found: self.peek().describe() }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn uint(&mut self) -> Result<(BigInt, usize), ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok((n, offset))
            }
            _ => Err(self.error("unsigned integer")),
        }
    }

    fn small_uint(&mut self) -> Result<(usize, usize), ParseError> {
        let (n, offset) = self.uint()?;
        let v = n.to_usize().ok_or_else(|| ParseError::Domain { offset, message: format!("{n} is too large") })?;
        Ok((v, offset))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = lhs + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    lhs = lhs - self.term()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut last = self.factor()?;
        let mut acc = last.clone();
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    last = self.factor()?;
                    acc = acc * last.clone();
                }
                Tok::Slash => {
                    self.bump();
                    last = self.factor()?;
                    acc = acc / last.clone();
                }
                t if starts_atom(t) => {
                    if !matches!(last, Expr::Int(_) | Expr::QPower(_)) {
                        return Err(self.error("'*' or '/' (juxtaposition only follows an integer or q-power)"));
                    }
                    last = self.factor()?;
                    acc = acc * last.clone();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            if let Tok::Int(n) = self.peek().clone() {
                if *self.peek_at(1) != Tok::Caret {
                    self.bump();
                    return Ok(Expr::Int(-n));
                }
            }
            return Ok(-self.factor()?);
        }
        let (atom, bare_q) = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        self.bump();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let (k, offset) = self.uint()?;
        if bare_q && !negative {
            let k =
                k.to_usize().ok_or_else(|| ParseError::Domain { offset, message: format!("q^{k} is too large") })?;
            return Ok(Expr::QPower(k));
        }
        let k = k
            .to_i64()
            .filter(|k| *k <= MAX_EXPONENT)
            .ok_or_else(|| ParseError::Domain { offset, message: format!("exponent {k} exceeds {MAX_EXPONENT}") })?;
        Ok(atom.pow(if negative { -k } else { k }))
    }

    /// Returns the atom and whether it was a bare `q` (so that `q^k`
    /// becomes a single q-power rather than a power node).
    fn atom(&mut self) -> Result<(Expr, bool), ParseError> {
        let start = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok((Expr::Int(n), false))
            }
            Tok::Q => {
                self.bump();
                Ok((Expr::QPower(1), true))
            }
            Tok::F(r) => {
                self.bump();
                Ok((Expr::F(EtaAtom::new(r).expect("lexer rejects f0")), false))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok((e, false))
            }
            Tok::Extract => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let e = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let (m, _) = self.small_uint()?;
                self.expect(Tok::Comma, "','")?;
                let (j, _) = self.small_uint()?;
                self.expect(Tok::RParen, "')'")?;
                if m == 0 || j >= m {
                    return Err(ParseError::Domain {
                        offset: start,
                        message: format!("extract needs 0 <= j < m, got m = {m}, j = {j}"),
                    });
                }
                Ok((e.extract(m, j), false))
            }
            Tok::Inflate => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let e = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let (m, _) = self.small_uint()?;
                self.expect(Tok::RParen, "')'")?;
                if m == 0 {
                    return Err(ParseError::Domain { offset: start, message: "inflate needs m >= 1".into() });
                }
                Ok((e.inflate(m), false))
            }
            Tok::Mod => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let e = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let (m, offset) = self.uint()?;
                self.expect(Tok::RParen, "')'")?;
                let modulus = m.to_u64().filter(|m| *m >= 2).ok_or_else(|| ParseError::Domain {
                    offset,
                    message: format!("mod needs a modulus in 2..=2^64-1, got {m}"),
                })?;
                Ok((e.modred(modulus), false))
            }
            _ => Err(self.error("integer, 'q', 'f<r>', '(' or a function")),
        }
    }
}

fn starts_atom(t: &Tok) -> bool {
    matches!(t, Tok::Int(_) | Tok::Q | Tok::F(_) | Tok::LParen | Tok::Extract | Tok::Inflate | Tok::Mod)
}
