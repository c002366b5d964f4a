//! Monomial exponent storage.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Rational;

/// An exact rational exponent.
///
/// A reduced fraction whose parts fit in `i64` (numerator never `i64::MIN`)
/// is stored inline and combined in `i128`; every other value is a
/// [`Rational`]. Each value has exactly one representation, so the derived
/// equality and hash are exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Exp {
    Small { n: i64, d: i64 },
    Big(Rational),
}

impl Exp {
    pub(crate) const ZERO: Exp = Exp::Small { n: 0, d: 1 };

    pub(crate) fn int(n: i64) -> Exp {
        Exp::from_i128(i128::from(n), 1)
    }

    /// `n/d` with `d > 0`, in either representation.
    fn from_i128(n: i128, d: i128) -> Exp {
        let g = n.gcd(&d);
        let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Exp::Small { n, d },
            _ => Exp::Big(Rational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: Rational) -> Exp {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Exp::Small { n, d },
            _ => Exp::Big(r),
        }
    }

    pub(crate) fn to_rational(&self) -> Rational {
        match self {
            Exp::Small { n, d } => Rational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Exp::Big(r) => r.clone(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Exp::Small { n: 0, .. })
    }

    pub(crate) fn is_integer(&self) -> bool {
        match self {
            Exp::Small { d, .. } => *d == 1,
            Exp::Big(r) => r.is_integer(),
        }
    }

    pub(crate) fn add(&self, other: &Exp) -> Exp {
        match (self, other) {
            (Exp::Small { n: a, d: b }, Exp::Small { n: c, d: e }) => {
                if b == e {
                    Exp::from_i128(i128::from(*a) + i128::from(*c), i128::from(*b))
                } else {
                    let (a, b, c, e) = (i128::from(*a), i128::from(*b), i128::from(*c), i128::from(*e));
                    Exp::from_i128(a * e + c * b, b * e)
                }
            }
            _ => Exp::from_big(self.to_rational() + other.to_rational()),
        }
    }

    pub(crate) fn neg(&self) -> Exp {
        match self {
            Exp::Small { n, d } => Exp::Small { n: -n, d: *d },
            Exp::Big(r) => Exp::from_big(-r),
        }
    }

    pub(crate) fn sub(&self, other: &Exp) -> Exp {
        self.add(&other.neg())
    }

    pub(crate) fn mul(&self, other: &Exp) -> Exp {
        match (self, other) {
            (Exp::Small { n: a, d: b }, Exp::Small { n: c, d: e }) => {
                Exp::from_i128(i128::from(*a) * i128::from(*c), i128::from(*b) * i128::from(*e))
            }
            _ => Exp::from_big(self.to_rational() * other.to_rational()),
        }
    }
}

impl From<&Rational> for Exp {
    fn from(r: &Rational) -> Exp {
        Exp::from_big(r.clone())
    }
}

impl From<Rational> for Exp {
    fn from(r: Rational) -> Exp {
        Exp::from_big(r)
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Exp) -> Ordering {
        match (self, other) {
            (Exp::Small { n: a, d: b }, Exp::Small { n: c, d: e }) => {
                if b == e {
                    a.cmp(c)
                } else {
                    (i128::from(*a) * i128::from(*e)).cmp(&(i128::from(*c) * i128::from(*b)))
                }
            }
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Exp) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
