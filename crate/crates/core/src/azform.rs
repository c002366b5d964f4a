//! Conversion between the `(a, t)` and `(a, z)` variables, `z = t^(1/2) - t^(-1/2)`.
//!
//! Both directions work one power of `a` at a time on dense coefficient
//! vectors over `s = t^(1/2)`, where `z = s - s^-1`. Multiplying by `z` is a
//! shift and subtract, so `(a, z) -> (a, t)` is Horner's rule. In the other
//! direction the constant `z`-coefficient of `P` is `P(s = 1)`, since `z`
//! vanishes there, and `(P - P(1)) / z` is an exact synthetic division
//! whenever `P` is a polynomial in `z`; a nonzero remainder proves it is not.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly, Monomial, Rational, Var};

/// A polynomial in `a` and `z` with integer powers of `z`.
///
/// Negative powers of `z` occur for two-component links; such a value has no
/// `(a, t)` Laurent form and is compared through `p * z^k` instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AZForm {
    poly: LaurentPoly,
}

/// `v * z` in place, for `v` indexed over `s^-d ..= s^d`; the result spans
/// `s^-(d+1) ..= s^(d+1)`.
fn times_z(v: &mut Vec<BigInt>) {
    v.push(BigInt::zero());
    v.push(BigInt::zero());
    for i in (0..v.len()).rev() {
        let here = std::mem::take(&mut v[i]);
        v[i] = if i >= 2 { &v[i - 2] - here } else { -here };
    }
}

/// Exact `p / z` for `p` indexed from `s^lo`; the quotient is indexed from
/// `s^(lo+1)`. `None` when `z` does not divide `p`.
fn div_z(p: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = p.len();
    if n < 3 {
        return None;
    }
    let mut q = vec![BigInt::zero(); n - 2];
    for i in (0..n - 2).rev() {
        q[i] = match q.get(i + 2) {
            Some(above) => &p[i + 2] + above,
            None => p[i + 2].clone(),
        };
    }
    let r1 = &p[1] + q.get(1).cloned().unwrap_or_default();
    let r0 = &p[0] + &q[0];
    (r0.is_zero() && r1.is_zero()).then_some(q)
}

/// `t^(1/2) - t^(-1/2)`.
pub fn z_in_t() -> LaurentPoly {
    LaurentPoly::monomial(Monomial::power_of(Var::T, rat(1, 2)))
        - LaurentPoly::monomial(Monomial::power_of(Var::T, rat(-1, 2)))
}

impl AZForm {
    pub fn new(poly: LaurentPoly) -> Result<Self> {
        for (m, _) in poly.terms() {
            for (v, e) in m.exps() {
                if v != Var::A && v != Var::Z {
                    return Err(Error::NotExpressible(format!("unexpected variable `{v}`")));
                }
                if v == Var::Z && !e.is_integer() {
                    return Err(Error::NotExpressible(format!("fractional power of z in {poly}")));
                }
            }
        }
        Ok(AZForm { poly })
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    /// Smallest `k >= 0` with `poly * z^k` free of negative `z` powers.
    pub fn z_denominator(&self) -> u32 {
        self.poly
            .terms()
            .map(|(m, _)| m.exponent(Var::Z))
            .min()
            .filter(|e| *e < Rational::zero())
            .map(|e| (-e).to_integer().to_u32().expect("small exponent"))
            .unwrap_or(0)
    }

    /// `(poly * z^k)` rewritten in `(a, t)`, together with the minimal `k`.
    pub fn to_at_cleared(&self) -> (LaurentPoly, u32) {
        let k = self.z_denominator();
        // a-exponent -> coefficient of z^j at index j
        let mut groups: BTreeMap<Rational, Vec<BigInt>> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let j = (m.exponent(Var::Z).to_integer().to_i64().expect("small exponent") + i64::from(k)) as usize;
            let row = groups.entry(m.exponent(Var::A)).or_default();
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
            row[j] = c.clone();
        }
        let mut out = LaurentPoly::zero();
        for (a_exp, row) in groups {
            let a_part = Monomial::power_of(Var::A, a_exp);
            let mut acc: Vec<BigInt> = Vec::new();
            for c in row.into_iter().rev() {
                if acc.is_empty() {
                    acc.push(BigInt::zero());
                } else {
                    times_z(&mut acc);
                }
                let mid = acc.len() / 2;
                acc[mid] += c;
            }
            let d = (acc.len() / 2) as i64;
            for (i, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    let t = Monomial::power_of(Var::T, rat(i as i64 - d, 2));
                    out.add_term(c, a_part.mul(&t));
                }
            }
        }
        (out, k)
    }

    /// The `(a, t)` form, available when no negative powers of `z` occur.
    pub fn to_at(&self) -> Result<LaurentPoly> {
        match self.to_at_cleared() {
            (p, 0) => Ok(p),
            (_, k) => Err(Error::NotExpressible(format!(
                "{} has z^-{k} and is not a Laurent polynomial in t",
                self.poly
            ))),
        }
    }
}

impl std::fmt::Display for AZForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.poly.fmt(f)
    }
}

/// Rewrites a polynomial in `a` and `t` as a polynomial in `a` and `z`.
///
/// Fails with [`Error::NotExpressible`] when some `a`-coefficient is not a
/// polynomial in `z`, e.g. the Jones trefoil `t + t^3 - t^4`.
pub fn to_az_form(p: &LaurentPoly) -> Result<AZForm> {
    // a-exponent -> (power of s -> coefficient)
    let mut groups: BTreeMap<Rational, BTreeMap<i64, BigInt>> = BTreeMap::new();
    for (m, c) in p.terms() {
        if let Some(v) = m.vars().find(|v| *v != Var::A && *v != Var::T) {
            return Err(Error::NotExpressible(format!("unexpected variable `{v}`")));
        }
        let twice = m.exponent(Var::T) * rat(2, 1);
        if !twice.is_integer() {
            return Err(Error::NotExpressible(format!("t exponent in {m} is not a half-integer")));
        }
        let h = twice
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::NotExpressible(format!("exponent of {m} out of range")))?;
        groups.entry(m.exponent(Var::A)).or_default().insert(h, c.clone());
    }

    let not_z = || Error::NotExpressible(format!("{p} is not a polynomial in z = t^(1/2) - t^(-1/2)"));
    let mut out = LaurentPoly::zero();
    for (a_exp, coeffs) in groups {
        let a_part = Monomial::power_of(Var::A, a_exp);
        // dense over s^lo ..= s^hi, always containing s^0
        let lo = (*coeffs.keys().next().expect("nonempty group")).min(0);
        let hi = (*coeffs.keys().next_back().expect("nonempty group")).max(0);
        let mut lo = lo;
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (h, c) in coeffs {
            v[(h - lo) as usize] = c;
        }
        let mut k = 0i64;
        loop {
            let c: BigInt = v.iter().sum();
            if !c.is_zero() {
                v[(-lo) as usize] -= &c;
                out.add_term(c, a_part.mul(&Monomial::power_of(Var::Z, rat(k, 1))));
            }
            if v.iter().all(Zero::is_zero) {
                break;
            }
            v = div_z(&v).ok_or_else(not_z)?;
            lo += 1;
            // keep s^0 in range so the next constant can be subtracted
            if lo > 0 {
                let mut w = vec![BigInt::zero(); lo as usize];
                w.append(&mut v);
                v = w;
                lo = 0;
            }
            let top = lo + v.len() as i64 - 1;
            if top < 0 {
                v.resize((v.len() as i64 - top) as usize, BigInt::zero());
            }
            k += 1;
        }
    }
    AZForm::new(out)
}
