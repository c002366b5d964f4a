//! Exact division and exact square roots by leading-term reduction.
//!
//! Monomials are invertible, so a reduction step is always possible and
//! termination has to come from elsewhere. If `num = r * den` exactly then the
//! Newton polytope of `num` is the Minkowski sum of those of `r` and `den`, so
//! every exponent of `r` lies in a box computed from the exponent ranges of
//! `num` and `den`. Quotient monomials strictly decrease and live in a
//! discrete lattice, so only finitely many fit in the box; a candidate
//! outside it proves the division is not exact.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{LaurentPoly, Monomial, Rational, Var};
use crate::error::{Error, Result};

type Bounds = BTreeMap<Var, (Rational, Rational)>;

fn in_box(m: &Monomial, bounds: &Bounds) -> bool {
    m.vars().all(|v| bounds.contains_key(&v))
        && bounds.iter().all(|(v, (lo, hi))| {
            let e = m.exponent(*v);
            *lo <= e && e <= *hi
        })
}

impl LaurentPoly {
    /// `self -= c * m * other`
    fn sub_scaled(&mut self, c: &BigInt, m: &Monomial, other: &LaurentPoly) {
        for (n, k) in other.terms() {
            self.add_term(-(c * k), n.mul(m));
        }
    }

    /// Exact quotient `self / den`.
    ///
    /// Returns [`Error::NotDivisible`] when `den` does not divide `self` with
    /// an integer-coefficient Laurent quotient.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (den_lm, den_lc) = match den.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivByZero),
        };
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if den.num_terms() == 1 {
            let inv = den_lm.inv();
            let mut out = LaurentPoly::zero();
            for (m, c) in self.terms() {
                let (q, r) = c.div_rem(&den_lc);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.add_term(q, m.mul(&inv));
            }
            return Ok(out);
        }

        let num_vars = self.variables();
        let den_vars = den.variables();
        let nb = self.exponent_bounds(&den_vars);
        let db = den.exponent_bounds(&num_vars);
        let mut bounds = Bounds::new();
        for (v, (nlo, nhi)) in &nb {
            let (dlo, dhi) = &db[v];
            let (lo, hi) = (nlo - dlo, nhi - dhi);
            if lo > hi {
                return Err(Error::NotDivisible);
            }
            bounds.insert(*v, (lo, hi));
        }
        let floor = {
            let (nt, _) = self.trailing_term().expect("nonzero");
            let (dt, _) = den.trailing_term().expect("nonzero");
            nt.div(dt)
        };

        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((lm, lc)) = rem.leading_term() {
            let qm = lm.div(&den_lm);
            if qm < floor || !in_box(&qm, &bounds) {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = lc.div_rem(&den_lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            rem.sub_scaled(&qc, &qm, den);
            quotient.add_term(qc, qm);
        }
        Ok(quotient)
    }

    /// Square root with positive leading coefficient.
    ///
    /// Returns [`Error::NotAPerfectSquare`] when no Laurent polynomial with
    /// integer coefficients squares to `self`. The zero polynomial is its own
    /// root.
    pub fn exact_sqrt(&self) -> Result<LaurentPoly> {
        let (lm, lc) = match self.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Ok(LaurentPoly::zero()),
        };
        if lc.is_negative() {
            return Err(Error::NotAPerfectSquare);
        }
        let lead_c = lc.sqrt();
        if &lead_c * &lead_c != lc {
            return Err(Error::NotAPerfectSquare);
        }
        let half = Rational::new(1.into(), 2.into());
        let lead_m = lm.pow(&half);
        let floor = self.trailing_term().expect("nonzero").0.pow(&half);
        let bounds: Bounds = self
            .exponent_bounds(&BTreeSet::new())
            .into_iter()
            .map(|(v, (lo, hi))| (v, (lo * &half, hi * &half)))
            .collect();
        let two_lead = &lead_c * 2;

        let mut root = LaurentPoly::term(lead_c.clone(), lead_m.clone());
        let mut rem = self - &root.pow(2);
        let mut last = lead_m.clone();
        while let Some((m, c)) = rem.leading_term() {
            let tm = m.div(&lead_m);
            if tm >= last || tm < floor || !in_box(&tm, &bounds) {
                return Err(Error::NotAPerfectSquare);
            }
            let (tc, r) = c.div_rem(&two_lead);
            if !r.is_zero() {
                return Err(Error::NotAPerfectSquare);
            }
            // (root + t)^2 = root^2 + 2*root*t + t^2
            rem.sub_scaled(&(&tc * 2), &tm, &root);
            rem.add_term(-(&tc * &tc), tm.mul(&tm));
            root.add_term(tc, tm.clone());
            last = tm;
        }
        Ok(root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;

    fn v(c: char) -> LaurentPoly {
        LaurentPoly::var(Var::new(c).unwrap())
    }

    fn tp(n: i64, d: i64) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::power_of(Var::T, rat(n, d)))
    }

    #[test]
    fn divides_qp_cubes() {
        let (q, p) = (v('q'), v('p'));
        let num = q.pow(3) - p.pow(3);
        let expected = q.pow(2) + &q * &p + p.pow(2);
        assert_eq!(num.exact_div(&(&q - &p)).unwrap(), expected);
    }

    #[test]
    fn zero_numerator_and_zero_divisor() {
        let z = tp(1, 2) - tp(-1, 2);
        assert_eq!(LaurentPoly::zero().exact_div(&z).unwrap(), LaurentPoly::zero());
        assert_eq!(z.exact_div(&LaurentPoly::zero()), Err(Error::DivByZero));
    }

    #[test]
    fn inexact_division_is_rejected() {
        let num = tp(2, 1) - LaurentPoly::one();
        let den = tp(1, 1) - LaurentPoly::constant(2);
        assert_eq!(num.exact_div(&den), Err(Error::NotDivisible));
        // coefficient not divisible
        assert_eq!(tp(1, 1).exact_div(&LaurentPoly::constant(2)), Err(Error::NotDivisible));
        // Laurent-invertible but not a polynomial quotient: 1/(1 - t)
        let one_minus_t = LaurentPoly::one() - tp(1, 1);
        assert_eq!(LaurentPoly::one().exact_div(&one_minus_t), Err(Error::NotDivisible));
        // 1 - a^2 over a*(t^(1/2) - t^(-1/2)) needs z^-1
        let a = v('a');
        let l1 = &a * &(tp(1, 2) - tp(-1, 2));
        assert_eq!((LaurentPoly::one() - a.pow(2)).exact_div(&l1), Err(Error::NotDivisible));
    }

    #[test]
    fn sqrt_examples() {
        let z2 = tp(1, 1) - LaurentPoly::constant(2) + tp(-1, 1);
        assert_eq!(z2.exact_sqrt().unwrap(), tp(1, 2) - tp(-1, 2));
        assert_eq!(v('a').pow(4).exact_sqrt().unwrap(), v('a').pow(2));
        let jones = tp(3, 1) - LaurentPoly::constant(2) * tp(2, 1) + tp(1, 1);
        assert_eq!(jones.exact_sqrt().unwrap(), tp(3, 2) - tp(1, 2));
    }

    #[test]
    fn sqrt_failures() {
        assert_eq!(LaurentPoly::constant(-4).exact_sqrt(), Err(Error::NotAPerfectSquare));
        assert_eq!(LaurentPoly::constant(2).exact_sqrt(), Err(Error::NotAPerfectSquare));
        let t_plus_1 = tp(1, 1) + LaurentPoly::one();
        assert_eq!(t_plus_1.exact_sqrt(), Err(Error::NotAPerfectSquare));
        let almost = tp(2, 1) + LaurentPoly::constant(2) * tp(1, 1) + LaurentPoly::constant(2);
        assert_eq!(almost.exact_sqrt(), Err(Error::NotAPerfectSquare));
    }

    #[test]
    fn sqrt_sign_is_positive_leading() {
        let r = LaurentPoly::constant(3) - v('q');
        let s = r.pow(2).exact_sqrt().unwrap();
        assert_eq!(s, -&r);
        assert!(s.leading_term().unwrap().1 > &BigInt::zero());
    }
}
