//! Deformed "bosonic" numbers `[n]_{u,v} = (u^n - v^n)/(u - v)` over a pair
//! of monomials, and the named families attached to the Alexander, Jones,
//! and HOMFLY skein relations.
//!
//! The closed sum `sum_{i<n} u^(n-1-i) v^i` is the primary definition. The
//! three-term recurrence and the exact quotient are independent routes used
//! for verification.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly, Monomial, Var};

/// An ordered pair of distinct monomials `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPSpec {
    u: Monomial,
    v: Monomial,
}

impl QPSpec {
    pub fn new(u: Monomial, v: Monomial) -> Result<Self> {
        if u == v {
            return Err(Error::DegenerateSpec);
        }
        Ok(QPSpec { u, v })
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    /// `k1 = u + v`, the first coefficient of the three-term recurrence.
    pub fn k1(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.u.clone()) + LaurentPoly::monomial(self.v.clone())
    }

    /// `k2 = -u v`.
    pub fn k2(&self) -> LaurentPoly {
        LaurentPoly::term(-1, self.u.mul(&self.v))
    }
}

impl fmt::Display for QPSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Alexander,
    Jones,
    Homfly,
    H1,
    H2,
    /// Biedenharn-Macfarlane q-numbers `(q, q^-1)`.
    BMq,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Alexander,
        Family::Jones,
        Family::Homfly,
        Family::H1,
        Family::H2,
        Family::BMq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alexander => "alexander",
            Family::Jones => "jones",
            Family::Homfly => "homfly",
            Family::H1 => "h1",
            Family::H2 => "h2",
            Family::BMq => "bmq",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadRange(format!("unknown family `{s}`")))
    }
}

fn mono(pairs: &[(Var, i64)]) -> Monomial {
    Monomial::from_exps(pairs.iter().map(|&(v, e)| (v, rat(e, 1))))
}

/// The `(u, v)` pair of a family.
///
/// HOMFLY uses `(a^2 t, a^2 t^-1)`: the pair with `u + v = a^2 (t + t^-1)`
/// and `u v = a^4`.
pub fn family_spec(f: Family) -> QPSpec {
    use Var as V;
    let (u, v) = match f {
        Family::Alexander => (mono(&[(V::T, 1)]), mono(&[(V::T, -1)])),
        Family::Jones => (mono(&[(V::T, 3)]), mono(&[(V::T, 1)])),
        Family::Homfly => (mono(&[(V::A, 2), (V::T, 1)]), mono(&[(V::A, 2), (V::T, -1)])),
        Family::H1 => (mono(&[(V::Q, 1)]), mono(&[(V::P, -1)])),
        Family::H2 => (mono(&[(V::Q, 3)]), mono(&[(V::P, 1)])),
        Family::BMq => (mono(&[(V::Q, 1)]), mono(&[(V::Q, -1)])),
    };
    QPSpec::new(u, v).expect("family pairs are distinct")
}

fn check_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeIndex(n))
}

/// `[n]_{u,v}` as the closed sum; `[0] = 0`.
pub fn qp_number(spec: &QPSpec, n: i64) -> Result<LaurentPoly> {
    let n = check_index(n)?;
    if n == 0 {
        return Ok(LaurentPoly::zero());
    }
    let ratio = spec.v.div(&spec.u);
    let mut m = spec.u.pow_int(n as i64 - 1);
    let mut terms = Vec::with_capacity(n);
    for _ in 0..n {
        terms.push((BigInt::from(1), m.clone()));
        m = m.mul(&ratio);
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// `[0], [1], ..., [n_max]` by `[n+1] = (u+v)[n] - uv[n-1]`.
pub fn qp_sequence_recurrence(spec: &QPSpec, n_max: usize) -> Vec<LaurentPoly> {
    let k1 = spec.k1();
    let uv = spec.u.mul(&spec.v);
    let mut seq = Vec::with_capacity(n_max + 1);
    seq.push(LaurentPoly::zero());
    if n_max >= 1 {
        seq.push(LaurentPoly::one());
    }
    for n in 1..n_max {
        let next = &k1 * &seq[n] - seq[n - 1].mul_monomial(&uv);
        seq.push(next);
    }
    seq
}

/// `[n]` by the three-term recurrence.
pub fn qp_number_recurrence(spec: &QPSpec, n: i64) -> Result<LaurentPoly> {
    let n = check_index(n)?;
    Ok(qp_sequence_recurrence(spec, n).pop().expect("nonempty"))
}

/// `[n]` as the exact quotient `(u^n - v^n) / (u - v)`.
pub fn qp_number_division(spec: &QPSpec, n: i64) -> Result<LaurentPoly> {
    let k = check_index(n)?;
    if k == 0 {
        return Err(Error::BadRange("the quotient route needs n >= 1".into()));
    }
    let num = LaurentPoly::monomial(spec.u.pow_int(n)) - LaurentPoly::monomial(spec.v.pow_int(n));
    let den = LaurentPoly::monomial(spec.u.clone()) - LaurentPoly::monomial(spec.v.clone());
    num.exact_div(&den).map_err(|e| match e {
        Error::NotDivisible => Error::Internal(format!("(u^{n} - v^{n})/(u - v) inexact for {spec}")),
        other => other,
    })
}

/// The quotient `[n]^big / [n]^small`, required to be a single monomial.
pub fn multiplier(big: Family, small: Family, n: i64) -> Result<Monomial> {
    if n < 1 {
        return Err(Error::BadRange(format!("multiplier needs n >= 1, got {n}")));
    }
    let num = qp_number(&family_spec(big), n)?;
    let den = qp_number(&family_spec(small), n)?;
    let q = num.exact_div(&den).map_err(|e| {
        Error::Internal(format!("[{n}]^{big} / [{n}]^{small} failed: {e}"))
    })?;
    q.as_monomial().cloned().ok_or_else(|| {
        Error::Internal(format!("[{n}]^{big} / [{n}]^{small} = {q} is not a monomial"))
    })
}

/// `[n]^H / [n]^A`, which equals `a^(2(n-1))`.
pub fn homfly_alexander_multiplier(n: i64) -> Result<Monomial> {
    let m = multiplier(Family::Homfly, Family::Alexander, n)?;
    let expected = Monomial::power_of(Var::A, rat(2 * (n - 1), 1));
    if m != expected {
        return Err(Error::Internal(format!("[{n}]^H/[{n}]^A = {m}, expected {expected}")));
    }
    Ok(m)
}

/// `[n]^H / [n]^V`, computed by division. The result is `(a t^-1)^(2(n-1))`.
pub fn homfly_jones_multiplier(n: i64) -> Result<Monomial> {
    multiplier(Family::Homfly, Family::Jones, n)
}
