use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Rational, Var};
use crate::error::{Error, Result};

/// Images of variables under a monomial substitution.
pub type SubstitutionMap = BTreeMap<Var, Monomial>;

/// A finite sum of integer multiples of [`Monomial`]s.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality and the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// Sums the given terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Monomial)>,
    {
        let mut p = LaurentPoly::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub(crate) fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_term()
            .is_some_and(|(c, m)| c.is_one() && m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn trailing_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    /// The single term of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&BigInt, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// The monomial of a one-term polynomial with coefficient `+1`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        self.as_term().filter(|(c, _)| c.is_one()).map(|(_, m)| m)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Per-variable `(min, max)` exponent over all terms; an absent variable
    /// counts as exponent zero. Covers the variables of `self` plus `extra`.
    pub(crate) fn exponent_bounds(&self, extra: &BTreeSet<Var>) -> BTreeMap<Var, (Rational, Rational)> {
        let mut vars = self.variables();
        vars.extend(extra.iter().copied());
        vars.into_iter()
            .map(|v| {
                let mut it = self.terms.keys().map(|m| m.exponent(v));
                let first = it.next().unwrap_or_else(Rational::zero);
                let (lo, hi) = it.fold((first.clone(), first), |(lo, hi), e| {
                    (lo.min(e.clone()), hi.max(e))
                });
                (v, (lo, hi))
            })
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        // multiplication by a monomial is order preserving
        LaurentPoly {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.clone())).collect(),
        }
    }

    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        if let Some((c, m)) = self.as_term() {
            return LaurentPoly::term(c.pow(k), m.pow_int(k as i64));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring homomorphism replacing each variable by a monomial image. Every
    /// variable of `self` must have an image, identity images included.
    pub fn substitute(&self, map: &SubstitutionMap) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut image = Monomial::one();
            for (v, e) in m.raw_exps() {
                let target = map.get(v).ok_or(Error::MissingImage(*v))?;
                image = image.mul(&target.pow_exp(e));
            }
            out.add_term(c.clone(), image);
        }
        Ok(out)
    }

    /// Maps every coefficient-and-monomial pair; the results are re-summed.
    pub fn map_terms<F>(&self, mut f: F) -> LaurentPoly
    where
        F: FnMut(&BigInt, &Monomial) -> (BigInt, Monomial),
    {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| f(c, m)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(c1 * c2, m1.mul(m2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            for (m, c) in p.terms {
                acc.add_term(c, m);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;

    fn t_pow(n: i64, d: i64) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::power_of(Var::T, rat(n, d)))
    }

    #[test]
    fn add_cancels_and_identity() {
        let p = &t_pow(1, 1) + &t_pow(-1, 1);
        assert_eq!(&p + &(-&t_pow(-1, 1)), t_pow(1, 1));
        let qp = LaurentPoly::var(Var::Q) + LaurentPoly::var(Var::P);
        assert_eq!(&LaurentPoly::zero() + &qp, qp);
        assert_eq!(&(&t_pow(1, 1) - &LaurentPoly::one()) + &LaurentPoly::one(), t_pow(1, 1));
    }

    #[test]
    fn mul_expands_half_powers() {
        let z = &t_pow(1, 2) - &t_pow(-1, 2);
        let expected = &(&t_pow(1, 1) - &LaurentPoly::constant(2)) + &t_pow(-1, 1);
        assert_eq!(&z * &z, expected);
        assert_eq!(z.pow(2), expected);
    }

    #[test]
    fn mul_telescopes() {
        let q = LaurentPoly::var(Var::Q);
        let p = LaurentPoly::var(Var::P);
        let sum = q.pow(2) + &q * &p + p.pow(2);
        assert_eq!((&q - &p) * sum, q.pow(3) - p.pow(3));
        assert_eq!(&LaurentPoly::one() * &q, q);
    }

    #[test]
    fn substitute_specializes_and_requires_images() {
        let a2 = Monomial::power_of(Var::A, rat(2, 1));
        let p = LaurentPoly::from_terms([
            (BigInt::from(1), a2.mul(&Monomial::var(Var::T))),
            (BigInt::from(1), a2.mul(&Monomial::power_of(Var::T, rat(-1, 1)))),
        ]);
        let map: SubstitutionMap = [(Var::A, Monomial::one()), (Var::T, Monomial::var(Var::T))].into();
        assert_eq!(p.substitute(&map).unwrap(), &t_pow(1, 1) + &t_pow(-1, 1));

        let only_t: SubstitutionMap = [(Var::T, Monomial::var(Var::T))].into();
        assert_eq!(p.substitute(&only_t), Err(Error::MissingImage(Var::A)));

        let x = LaurentPoly::var(Var::Q) + LaurentPoly::monomial(Monomial::power_of(Var::P, rat(-1, 1)));
        let map: SubstitutionMap = [
            (Var::Q, a2.mul(&Monomial::var(Var::T))),
            (Var::P, Monomial::power_of(Var::A, rat(-2, 1)).mul(&Monomial::var(Var::T))),
        ]
        .into();
        assert_eq!(x.substitute(&map).unwrap(), p);
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = LaurentPoly::from_terms([
            (BigInt::from(3), Monomial::var(Var::T)),
            (BigInt::from(-3), Monomial::var(Var::T)),
            (BigInt::from(0), Monomial::one()),
        ]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }
}
