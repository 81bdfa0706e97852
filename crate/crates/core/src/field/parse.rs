//! Field-element text.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! atom     := INTEGER | IDENT | '(' expr ')'
//! exponent := INTEGER | 'n' | '(' intexpr ')'
//! ```
//!
//! Integers are reduced mod p when they appear as field elements. `intexpr`
//! is a nonnegative integer expression over `+ * ^`, used so sequence
//! templates such as `t^(2^n)` can be written; `n` is only accepted when the
//! caller binds it.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::fp::Prime;
use super::poly::FpPoly;
use super::ratfunc::RatFunc;
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigUint::parse_bytes(&bytes[start..i], 10).expect("ascii digits");
                out.push((Token::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::syntax(start, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// Parsed expression tree, shared by the univariate and multivariate readers.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Expr {
    Int(BigUint),
    Symbol { name: String, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div { lhs: Box<Expr>, rhs: Box<Expr>, pos: usize },
    Pow(Box<Expr>, BigUint),
}

impl Expr {
    /// Visit every symbol name with its position.
    pub(crate) fn for_each_symbol(&self, f: &mut impl FnMut(&str, usize)) {
        match self {
            Expr::Int(_) => {}
            Expr::Symbol { name, pos } => f(name, *pos),
            Expr::Neg(a) | Expr::Pow(a, _) => a.for_each_symbol(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.for_each_symbol(f);
                b.for_each_symbol(f);
            }
            Expr::Div { lhs, rhs, .. } => {
                lhs.for_each_symbol(f);
                rhs.for_each_symbol(f);
            }
        }
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    n: Option<u64>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError::syntax(at, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    let pos = self.offset();
                    self.bump();
                    lhs = Expr::Div {
                        lhs: Box::new(lhs),
                        rhs: Box::new(self.unary()?),
                        pos,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let e = self.exponent()?;
            if self.peek() == Some(&Token::Caret) {
                return Err(ParseError::syntax(
                    self.offset(),
                    "chained '^' is ambiguous; parenthesize the exponent",
                ));
            }
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Ident(name)) if name == "n" => match self.n {
                Some(v) => Ok(Expr::Int(BigUint::from(v))),
                None => Err(ParseError::syntax(at, "unknown symbol 'n'")),
            },
            Some(Token::Ident(name)) => Ok(Expr::Symbol { name, pos: at }),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            Some(_) => Err(ParseError::syntax(at, "expected a number, symbol or '('")),
            None => Err(ParseError::syntax(at, "unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<BigUint, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => Ok(n),
            Some(Token::Ident(name)) if name == "n" && self.n.is_some() => {
                Ok(BigUint::from(self.n.unwrap()))
            }
            Some(Token::LParen) => {
                let v = self.int_sum()?;
                self.expect(Token::RParen, "')'")?;
                Ok(v)
            }
            _ => Err(ParseError::syntax(
                at,
                "exponent must be a nonnegative integer",
            )),
        }
    }

    fn int_sum(&mut self) -> Result<BigUint, ParseError> {
        let mut v = self.int_product()?;
        while self.peek() == Some(&Token::Plus) {
            self.bump();
            v += self.int_product()?;
        }
        Ok(v)
    }

    fn int_product(&mut self) -> Result<BigUint, ParseError> {
        let mut v = self.int_power()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            v *= self.int_power()?;
        }
        Ok(v)
    }

    fn int_power(&mut self) -> Result<BigUint, ParseError> {
        let base = self.int_atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let at = self.offset();
            let e = self.int_power()?;
            let e = e
                .to_u32()
                .filter(|&e| base.bits() * e as u64 <= 1 << 20)
                .ok_or_else(|| ParseError::syntax(at, "integer exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn int_atom(&mut self) -> Result<BigUint, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => Ok(n),
            Some(Token::Ident(name)) if name == "n" && self.n.is_some() => {
                Ok(BigUint::from(self.n.unwrap()))
            }
            Some(Token::LParen) => {
                let v = self.int_sum()?;
                self.expect(Token::RParen, "')'")?;
                Ok(v)
            }
            _ => Err(ParseError::syntax(at, "expected a nonnegative integer")),
        }
    }
}

pub(crate) fn parse_expr(text: &str, n: Option<u64>) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        n,
    };
    let e = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(ParseError::syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

fn eval_ratfunc(e: &Expr, p: Prime) -> Result<RatFunc, ParseError> {
    Ok(match e {
        Expr::Int(n) => {
            let c = (n % p.get()).to_u32().unwrap();
            RatFunc::constant(c as i64, p)
        }
        Expr::Symbol { name, pos } => {
            if name == "t" {
                RatFunc::t(p)
            } else {
                return Err(ParseError::syntax(*pos, format!("unknown symbol '{name}'")));
            }
        }
        Expr::Neg(a) => -eval_ratfunc(a, p)?,
        Expr::Add(a, b) => eval_ratfunc(a, p)? + eval_ratfunc(b, p)?,
        Expr::Sub(a, b) => eval_ratfunc(a, p)? - eval_ratfunc(b, p)?,
        Expr::Mul(a, b) => eval_ratfunc(a, p)? * eval_ratfunc(b, p)?,
        Expr::Div { lhs, rhs, pos } => {
            let d = eval_ratfunc(rhs, p)?;
            eval_ratfunc(lhs, p)?
                .checked_div(&d)
                .ok_or(ParseError::DivisionByZero { position: *pos })?
        }
        Expr::Pow(a, k) => {
            let base = eval_ratfunc(a, p)?;
            if base.is_zero() && k.is_zero() {
                RatFunc::one(p)
            } else {
                base.pow(k)
            }
        }
    })
}

/// Read an element of F_p(t) in canonical form.
pub fn parse_ratfunc(text: &str, p: Prime) -> Result<RatFunc, ParseError> {
    eval_ratfunc(&parse_expr(text, None)?, p)
}

/// Like [`parse_ratfunc`], with the symbol `n` bound to an integer.
pub fn parse_ratfunc_with_n(text: &str, p: Prime, n: u64) -> Result<RatFunc, ParseError> {
    eval_ratfunc(&parse_expr(text, Some(n))?, p)
}

/// Read a polynomial in `t`; rejects proper fractions.
pub fn parse_poly(text: &str, p: Prime) -> Result<FpPoly, ParseError> {
    let r = parse_ratfunc(text, p)?;
    if !r.is_polynomial() {
        return Err(ParseError::syntax(0, "expected a polynomial in t"));
    }
    Ok(r.into_parts().0)
}
