//! Two further routes to the HOMFLY numbers `[n]^H`.
//!
//! The first rewrites the pair of a one-variable family: Alexander `(t, t^-1)`
//! becomes `(q, p^-1)` (the H1 numbers) and Jones `(t^3, t)` becomes
//! `(q^3, p)` (the H2 numbers). This acts on the pair, not on expanded
//! polynomials: applying `t^k -> q^k`, `t^-k -> p^-k` termwise to `[3]^A`
//! gives `q^2 + 1 + p^-2`, which is not `[3]^{H1}`.
//!
//! The second maps `q` and `p` to monomials in `a` and `t`. The images solve
//! two monomial relations over the rational exponent lattice. Writing
//! `q = a^x1 t^y1`, `p = a^x2 t^y2`, each relation is a linear system in the
//! exponents:
//!
//! * H1: `q^(1/4) p^(-1/4) = a` and `q^(1/2) p^(1/2) = t` give
//!   `x1 - x2 = 4`, `x1 + x2 = 0`, `y1 - y2 = 0`, `y1 + y2 = 2`, hence
//!   `q -> a^2 t`, `p -> a^-2 t`.
//! * H2: `q^3 p = a^4` and `q^(3/2) p^(-1/2) = t` give
//!   `3 x1 + x2 = 4`, `3 x1 - x2 = 0`, `3 y1 + y2 = 0`, `3 y1 - y2 = 2`, hence
//!   `q -> a^(2/3) t^(1/3)`, `p -> a^2 t^-1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly, Monomial, SubstitutionMap, Var};
use crate::qp::{family_spec, Family, QPSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecMap {
    AlexToH1,
    JonesToH2,
}

impl SpecMap {
    pub fn name(self) -> &'static str {
        match self {
            SpecMap::AlexToH1 => "AlexToH1",
            SpecMap::JonesToH2 => "JonesToH2",
        }
    }

    pub fn source(self) -> Family {
        match self {
            SpecMap::AlexToH1 => Family::Alexander,
            SpecMap::JonesToH2 => Family::Jones,
        }
    }

    pub fn target(self) -> Family {
        match self {
            SpecMap::AlexToH1 => Family::H1,
            SpecMap::JonesToH2 => Family::H2,
        }
    }
}

impl fmt::Display for SpecMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn rename(m: &Monomial, from: Var, to: Var) -> Monomial {
    Monomial::from_exps(m.exps().map(|(v, e)| (if v == from { to } else { v }, e)))
}

/// Sends the source family's pair to the target family's pair. The source
/// may be written in `t` or, identifying `t` with `q`, in `q`.
pub fn apply_spec_map(map: SpecMap, s: &QPSpec) -> Result<QPSpec> {
    let expected = family_spec(map.source());
    let renamed = QPSpec::new(
        rename(expected.u(), Var::T, Var::Q),
        rename(expected.v(), Var::T, Var::Q),
    )?;
    if *s == expected || *s == renamed {
        Ok(family_spec(map.target()))
    } else {
        Err(Error::SpecMismatch {
            map: map.name(),
            expected: expected.to_string(),
            got: s.to_string(),
        })
    }
}

fn a_t(a: (i64, i64), t: (i64, i64)) -> Monomial {
    Monomial::from_exps([(Var::A, rat(a.0, a.1)), (Var::T, rat(t.0, t.1))])
}

/// `q -> a^2 t`, `p -> a^-2 t`.
pub fn h1_map() -> SubstitutionMap {
    [(Var::Q, a_t((2, 1), (1, 1))), (Var::P, a_t((-2, 1), (1, 1)))].into()
}

/// `q -> a^(2/3) t^(1/3)`, `p -> a^2 t^-1`.
pub fn h2_map() -> SubstitutionMap {
    [(Var::Q, a_t((2, 3), (1, 3))), (Var::P, a_t((2, 1), (-1, 1)))].into()
}

pub fn h1_to_h(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.substitute(&h1_map())
}

pub fn h2_to_h(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.substitute(&h2_map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_and_eval;
    use crate::qp::qp_number;

    fn lp(s: &str) -> LaurentPoly {
        parse_and_eval(s).unwrap()
    }

    #[test]
    fn spec_maps() {
        let h1 = apply_spec_map(SpecMap::AlexToH1, &family_spec(Family::Alexander)).unwrap();
        assert_eq!(h1, family_spec(Family::H1));
        assert_eq!(qp_number(&h1, 2).unwrap(), lp("q + p^-1"));
        let h2 = apply_spec_map(SpecMap::JonesToH2, &family_spec(Family::Jones)).unwrap();
        assert_eq!(qp_number(&h2, 2).unwrap(), lp("q^3 + p"));
        // t identified with q
        assert!(apply_spec_map(SpecMap::AlexToH1, &family_spec(Family::BMq)).is_ok());
    }

    #[test]
    fn spec_map_mismatch() {
        let err = apply_spec_map(SpecMap::AlexToH1, &family_spec(Family::Jones)).unwrap_err();
        assert!(matches!(err, Error::SpecMismatch { map: "AlexToH1", .. }));
        assert!(apply_spec_map(SpecMap::JonesToH2, &family_spec(Family::Homfly)).is_err());
    }

    #[test]
    fn monomial_routes() {
        assert_eq!(h1_to_h(&lp("q + p^-1")).unwrap(), lp("a^2*t + a^2*t^-1"));
        assert_eq!(h1_to_h(&lp("q^2 + q*p^-1 + p^-2")).unwrap(), lp("a^4*t^2 + a^4 + a^4*t^-2"));
        assert!(h1_to_h(&LaurentPoly::one()).unwrap().is_one());
        assert_eq!(h2_to_h(&lp("q^3 + p")).unwrap(), lp("a^2*t + a^2*t^-1"));
        assert_eq!(h2_to_h(&lp("q^6 + q^3*p + p^2")).unwrap(), lp("a^4*t^2 + a^4 + a^4*t^-2"));
        assert_eq!(h2_to_h(&lp("q^3*p")).unwrap(), lp("a^4"));
        assert_eq!(h1_to_h(&lp("t")), Err(Error::MissingImage(Var::T)));
    }

    #[test]
    fn maps_satisfy_defining_relations() {
        let m1 = h1_map();
        let (q, p) = (&m1[&Var::Q], &m1[&Var::P]);
        assert_eq!(q.pow(&rat(1, 4)).mul(&p.pow(&rat(-1, 4))), Monomial::var(Var::A));
        assert_eq!(q.pow(&rat(1, 2)).mul(&p.pow(&rat(1, 2))), Monomial::var(Var::T));
        let m2 = h2_map();
        let (q, p) = (&m2[&Var::Q], &m2[&Var::P]);
        assert_eq!(q.pow_int(3).mul(p), Monomial::power_of(Var::A, rat(4, 1)));
        assert_eq!(q.pow(&rat(3, 2)).mul(&p.pow(&rat(-1, 2))), Monomial::var(Var::T));
    }

    #[test]
    fn termwise_substitution_is_not_the_spec_map() {
        // t^k -> q^k for k > 0, t^-k -> p^-k for k > 0, on the expanded [3]^A
        let a3 = qp_number(&family_spec(Family::Alexander), 3).unwrap();
        let termwise = a3.map_terms(|c, m| {
            let e = m.exponent(Var::T);
            let v = if e > rat(0, 1) { Var::Q } else { Var::P };
            (c.clone(), if m.is_one() { Monomial::one() } else { Monomial::power_of(v, e) })
        });
        assert_eq!(termwise, lp("q^2 + 1 + p^-2"));
        assert_ne!(termwise, qp_number(&family_spec(Family::H1), 3).unwrap());
    }
}
