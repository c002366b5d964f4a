//! JSON wire form:
//! `{"terms":[{"coeff":"-1","monomial":{"a":"4/1"}}, ...]}`.
//!
//! Terms appear in canonical order, coefficients are decimal strings, and
//! exponents are always reduced `num/den` strings, so serializing a parsed
//! value reproduces the input bytes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, Monomial, Rational, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: BTreeMap<String, String>,
}

fn parse_exponent(s: &str) -> Result<Rational> {
    let bad = || Error::Json(format!("bad exponent `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: m
                    .exps()
                    .map(|(v, e)| (v.to_string(), format!("{}/{}", e.numer(), e.denom())))
                    .collect(),
            })
            .collect();
        PolyJson { terms }
    }
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Json(format!("bad coefficient `{}`", t.coeff)))?;
            let mut exps = Vec::with_capacity(t.monomial.len());
            for (v, e) in &t.monomial {
                exps.push((Var::parse(v)?, parse_exponent(e)?));
            }
            terms.push((c, Monomial::from_exps(exps)));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl LaurentPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        LaurentPoly::try_from(&j)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(deserializer)?;
        LaurentPoly::try_from(&j).map_err(serde::de::Error::custom)
    }
}
