//! Exact sparse multivariate Laurent polynomials with rational exponents and
//! arbitrary-precision integer coefficients.
//!
//! Every other module computes in this ring. Terms are kept in graded
//! lexicographic order (total degree, then alphabetical variables with the
//! larger exponent first); division, square roots, and printing all use that
//! order.

mod division;
mod exponent;
mod format;
mod json;
mod monomial;
mod poly;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use json::{PolyJson, TermJson};
pub use monomial::Monomial;
pub use poly::{LaurentPoly, SubstitutionMap};

/// Exponents are exact reduced fractions with arbitrary-precision parts.
pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A variable symbol: a single lowercase ASCII letter, ordered alphabetically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub const A: Var = Var(b'a');
    pub const P: Var = Var(b'p');
    pub const Q: Var = Var(b'q');
    pub const T: Var = Var(b't');
    pub const Z: Var = Var(b'z');

    pub fn new(c: char) -> Result<Var> {
        if c.is_ascii_lowercase() {
            Ok(Var(c as u8))
        } else {
            Err(Error::InvalidVariable(c.to_string()))
        }
    }

    pub fn parse(s: &str) -> Result<Var> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Var::new(c),
            _ => Err(Error::InvalidVariable(s.to_string())),
        }
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.as_char())
    }
}
