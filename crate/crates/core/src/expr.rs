//! A small expression language for Laurent polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)* ('/' factor)?
//! factor   := '-'? base ('^' exponent)?
//! base     := integer | variable | '(' expr ')'
//! exponent := '-'? integer | '(' '-'? integer ('/' '-'? integer)? ')'
//! ```
//!
//! Variables are single lowercase letters and whitespace is ignored. A
//! non-integer exponent is only accepted on a monomial base (products and
//! powers of variables); `/` is exact division.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
}

impl Expr {
    /// Products and powers of variables, and the literal `1`.
    fn is_monomial(&self) -> bool {
        match self {
            Expr::Var(_) => true,
            Expr::Int(n) => n.is_one(),
            Expr::Pow(b, _) => b.is_monomial(),
            Expr::Mul(x, y) => x.is_monomial() && y.is_monomial(),
            _ => false,
        }
    }

    pub fn eval(&self) -> Result<LaurentPoly> {
        Ok(match self {
            Expr::Int(n) => LaurentPoly::constant(n.clone()),
            Expr::Var(v) => LaurentPoly::var(*v),
            Expr::Neg(x) => -x.eval()?,
            Expr::Add(x, y) => x.eval()? + y.eval()?,
            Expr::Sub(x, y) => x.eval()? - y.eval()?,
            Expr::Mul(x, y) => x.eval()? * y.eval()?,
            Expr::Div(x, y) => x.eval()?.exact_div(&y.eval()?)?,
            Expr::Pow(b, e) => {
                let base = b.eval()?;
                if let Some(m) = base.as_monomial() {
                    LaurentPoly::monomial(m.pow(e))
                } else if e.is_integer() {
                    let k = e.numer();
                    let mag = k
                        .abs()
                        .to_u32()
                        .ok_or_else(|| Error::BadRange(format!("exponent {k} too large")))?;
                    let p = base.pow(mag);
                    if k.is_negative() {
                        LaurentPoly::one().exact_div(&p)?
                    } else {
                        p
                    }
                } else if base.is_zero() {
                    LaurentPoly::zero()
                } else {
                    return Err(Error::Internal(format!("fractional power of non-monomial {base}")));
                }
            }
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        if self.eat(b'/') {
            lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let negate = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        let base = self.base()?;
        let node = if self.eat(b'^') {
            let e = self.exponent()?;
            if !e.is_integer() && !base.is_monomial() {
                return Err(Error::NonMonomialFractionalPower { offset: start });
            }
            Expr::Pow(Box::new(base), e)
        } else {
            base
        };
        Ok(if negate { Expr::Neg(Box::new(node)) } else { node })
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Expr::Var(Var::new(c as char)?))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit run"))
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.integer()?;
        Ok(if neg { -n } else { n })
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(b'(') {
            let num = self.signed_integer()?;
            let den = if self.eat(b'/') {
                self.signed_integer()?
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return self.err("zero denominator in exponent");
            }
            self.expect(b')')?;
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(self.signed_integer()?))
        }
    }
}

/// Parses `src` into an expression tree.
pub fn parse_expression(src: &str) -> Result<Expr> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn parse_and_eval(src: &str) -> Result<LaurentPoly> {
    parse_expression(src)?.eval()
}

/// Parses canonical text back into a monomial (used by spec pairs on the CLI).
pub fn parse_monomial(src: &str) -> Result<Monomial> {
    let p = parse_and_eval(src)?;
    p.as_monomial().cloned().ok_or_else(|| Error::Syntax {
        offset: 0,
        message: format!("`{src}` is not a monomial"),
    })
}
