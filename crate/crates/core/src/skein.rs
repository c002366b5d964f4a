//! Skein recurrences for the torus links `L(n,2)`.
//!
//! With `P+ = l1 P0 + l2 P-`, the series `P_{n,2}` satisfies
//! `P_{n+1} = l1 P_n + l2 P_{n-1}`, and its odd (knot) entries satisfy
//! `P_{n+2} = k1 P_n + k2 P_{n-2}` with `k1 = l1^2 + 2 l2`, `k2 = -l2^2`.
//!
//! The link series is seeded with the unknot `P_1 = 1` and the two-component
//! unlink `P_0 = (1 - l2) / l1`, which is what the skein relation gives on a
//! one-crossing diagram of the unknot. For HOMFLY that seed is
//! `(a^-1 - a) z^-1`, which is not a Laurent polynomial in `t`, so the HOMFLY
//! link series runs in the `(a, z)` variables; knot entries come back to
//! `(a, t)` while link entries keep their `z^-1` terms.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::azform::{to_az_form, AZForm};
use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly, Monomial, SubstitutionMap, Var};
use crate::qp::{family_spec, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    Alexander,
    Jones,
    Homfly,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 3] = [
        InvariantKind::Alexander,
        InvariantKind::Jones,
        InvariantKind::Homfly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Alexander => "alexander",
            InvariantKind::Jones => "jones",
            InvariantKind::Homfly => "homfly",
        }
    }

    /// The deformed-number family attached to this invariant.
    pub fn family(self) -> Family {
        match self {
            InvariantKind::Alexander => Family::Alexander,
            InvariantKind::Jones => Family::Jones,
            InvariantKind::Homfly => Family::Homfly,
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        InvariantKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadRange(format!("unknown invariant `{s}`")))
    }
}

/// Coefficients of `P+ = l1 P0 + l2 P-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinCoeffs {
    pub l1: LaurentPoly,
    pub l2: LaurentPoly,
}

/// Coefficients of the knots-only recurrence `P_{n+2} = k1 P_n + k2 P_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotCoeffs {
    pub k1: LaurentPoly,
    pub k2: LaurentPoly,
}

impl SkeinCoeffs {
    pub fn knot_coeffs(&self) -> KnotCoeffs {
        KnotCoeffs {
            k1: self.l1.pow(2) + self.l2.scale(&2.into()),
            k2: -self.l2.pow(2),
        }
    }
}

fn t_pow(n: i64, d: i64) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::power_of(Var::T, rat(n, d)))
}

pub fn link_coeffs(kind: InvariantKind) -> SkeinCoeffs {
    let z = t_pow(1, 2) - t_pow(-1, 2);
    match kind {
        InvariantKind::Alexander => SkeinCoeffs {
            l1: z,
            l2: LaurentPoly::one(),
        },
        InvariantKind::Jones => SkeinCoeffs {
            l1: t_pow(3, 2) - t_pow(1, 2),
            l2: t_pow(2, 1),
        },
        InvariantKind::Homfly => {
            let a = Monomial::var(Var::A);
            SkeinCoeffs {
                l1: z.mul_monomial(&a),
                l2: LaurentPoly::monomial(a.pow_int(2)),
            }
        }
    }
}

pub fn knot_coeffs(kind: InvariantKind) -> KnotCoeffs {
    link_coeffs(kind).knot_coeffs()
}

/// A series entry: a Laurent polynomial in the invariant's own variables, or
/// an `(a, z)` form when the entry has negative powers of `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesValue {
    Laurent(LaurentPoly),
    AZ(AZForm),
}

impl SeriesValue {
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        match self {
            SeriesValue::Laurent(p) => Some(p),
            SeriesValue::AZ(_) => None,
        }
    }

    pub fn poly(&self) -> &LaurentPoly {
        match self {
            SeriesValue::Laurent(p) => p,
            SeriesValue::AZ(z) => z.poly(),
        }
    }

    pub fn is_az(&self) -> bool {
        matches!(self, SeriesValue::AZ(_))
    }

    /// Prefers the `(a, t)` form whenever the `z` form has no `z^-1`.
    fn from_az(az: AZForm) -> SeriesValue {
        match az.to_at() {
            Ok(p) => SeriesValue::Laurent(p),
            Err(_) => SeriesValue::AZ(az),
        }
    }
}

impl fmt::Display for SeriesValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly().fmt(f)
    }
}

/// The two-component unlink `L(0,2)`: `(1 - l2) / l1`, in `(a, z)` form when
/// the quotient is not a Laurent polynomial in `t`.
pub fn unlink2(kind: InvariantKind) -> Result<SeriesValue> {
    let c = link_coeffs(kind);
    let num = LaurentPoly::one() - &c.l2;
    match num.exact_div(&c.l1) {
        Ok(p) => Ok(SeriesValue::Laurent(p)),
        Err(Error::NotDivisible) => {
            let l1 = to_az_form(&c.l1)?;
            let l2 = to_az_form(&c.l2)?;
            let q = (LaurentPoly::one() - l2.poly()).exact_div(l1.poly())?;
            Ok(SeriesValue::AZ(AZForm::new(q)?))
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Indexing {
    /// Entry `m` is the torus knot `T(2m+1, 2)`.
    Knot,
    /// Entry `n` is `L(n, 2)`.
    Link,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSeries {
    pub kind: InvariantKind,
    pub indexing: Indexing,
    pub entries: Vec<Option<SeriesValue>>,
}

impl InvariantSeries {
    pub fn get(&self, i: usize) -> Option<&SeriesValue> {
        self.entries.get(i).and_then(Option::as_ref)
    }

    /// Entry `i` when it is a Laurent polynomial in the invariant's variables.
    pub fn laurent(&self, i: usize) -> Option<&LaurentPoly> {
        self.get(i).and_then(SeriesValue::as_laurent)
    }

    /// The `n` of `P_{n,2}` for entry `i`.
    pub fn torus_index(&self, i: usize) -> usize {
        match self.indexing {
            Indexing::Knot => 2 * i + 1,
            Indexing::Link => i,
        }
    }

    /// Present entries as `(n, value)` with `n` the torus index.
    pub fn present(&self) -> impl Iterator<Item = (usize, &SeriesValue)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(move |(i, e)| e.as_ref().map(|v| (self.torus_index(i), v)))
    }

    /// `{"kind":..,"indexing":..,"entries":[{"n":..,"poly":{..}}, ..]}`;
    /// `(a, z)` entries carry `"form":"az"`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry<'a> {
            n: usize,
            poly: &'a LaurentPoly,
            #[serde(skip_serializing_if = "Option::is_none")]
            form: Option<&'static str>,
        }
        #[derive(Serialize)]
        struct Series<'a> {
            kind: &'static str,
            indexing: Indexing,
            entries: Vec<Entry<'a>>,
        }
        let s = Series {
            kind: self.kind.name(),
            indexing: self.indexing,
            entries: self
                .present()
                .map(|(n, v)| Entry {
                    n,
                    poly: v.poly(),
                    form: v.is_az().then_some("az"),
                })
                .collect(),
        };
        serde_json::to_string(&s).expect("plain data serializes")
    }
}

/// `P_{n+1} = l1 P_n + l2 P_{n-1}` from `P_0` and `P_1 = 1`, up to `P_{n_max}`.
fn link_recurrence(p0: LaurentPoly, l1: &LaurentPoly, l2: &LaurentPoly, n_max: usize) -> Vec<LaurentPoly> {
    let mut v = vec![p0, LaurentPoly::one()];
    for n in 1..n_max {
        let next = l1 * &v[n] + l2 * &v[n - 1];
        v.push(next);
    }
    v
}

/// `P_{n,2}` for `0 <= n <= n_max`.
///
/// Entry 0 is absent for HOMFLY. HOMFLY entries with even `n >= 2` are
/// `(a, z)` forms; every other entry is a Laurent polynomial.
pub fn link_series(kind: InvariantKind, n_max: usize) -> Result<InvariantSeries> {
    if n_max < 2 {
        return Err(Error::BadRange(format!("link series needs n_max >= 2, got {n_max}")));
    }
    let c = link_coeffs(kind);
    let entries = match unlink2(kind)? {
        SeriesValue::Laurent(p0) => link_recurrence(p0, &c.l1, &c.l2, n_max)
            .into_iter()
            .map(|p| Some(SeriesValue::Laurent(p)))
            .collect(),
        SeriesValue::AZ(p0) => {
            let l1 = to_az_form(&c.l1)?;
            let l2 = to_az_form(&c.l2)?;
            let mut v = link_recurrence(p0.into_poly(), l1.poly(), l2.poly(), n_max)
                .into_iter()
                .map(|p| AZForm::new(p).map(|az| Some(SeriesValue::from_az(az))))
                .collect::<Result<Vec<_>>>()?;
            v[0] = None;
            v
        }
    };
    Ok(InvariantSeries {
        kind,
        indexing: Indexing::Link,
        entries,
    })
}

/// The knots `T(2m+1,2)` for `0 <= m <= m_max`: `1`, `k1 + k2`, then the
/// knot recurrence. Every entry is a Laurent polynomial.
pub fn knot_series(kind: InvariantKind, m_max: usize) -> InvariantSeries {
    let KnotCoeffs { k1, k2 } = knot_coeffs(kind);
    let mut v = vec![LaurentPoly::one()];
    if m_max >= 1 {
        v.push(&k1 + &k2);
    }
    for m in 2..=m_max {
        let next = &k1 * &v[m - 1] + &k2 * &v[m - 2];
        v.push(next);
    }
    InvariantSeries {
        kind,
        indexing: Indexing::Knot,
        entries: v.into_iter().map(|p| Some(SeriesValue::Laurent(p))).collect(),
    }
}

/// `a -> 1` (Alexander) or `a -> t` (Jones) on a HOMFLY polynomial in `a`, `t`.
pub fn specialize_homfly(p: &LaurentPoly, target: InvariantKind) -> Result<LaurentPoly> {
    let a_image = match target {
        InvariantKind::Alexander => Monomial::one(),
        InvariantKind::Jones => Monomial::var(Var::T),
        InvariantKind::Homfly => {
            return Err(Error::BadRange("specialization target must be alexander or jones".into()))
        }
    };
    let map: SubstitutionMap = [(Var::A, a_image), (Var::T, Monomial::var(Var::T))].into();
    p.substitute(&map)
}

/// Recovers `(l1, l2)` from a family's pair `(u, v)`: `k1 = u + v`,
/// `k2 = -uv`, then `l2 = +sqrt(-k2)` and `l1 = +sqrt(k1 - 2 l2)`.
pub fn skein_from_numbers(f: Family) -> Result<SkeinCoeffs> {
    let spec = family_spec(f);
    let (k1, k2) = (spec.k1(), spec.k2());
    let l2 = (-&k2).exact_sqrt()?;
    let l1 = (&k1 - &l2.scale(&2.into())).exact_sqrt()?;
    Ok(SkeinCoeffs { l1, l2 })
}

/// `T(2m+1,2)`, with the knot-table name for the first few.
pub fn knot_name(m: usize) -> String {
    const TABLE: [&str; 5] = ["0_1", "3_1", "5_1", "7_1", "9_1"];
    match TABLE.get(m) {
        Some(t) => format!("T({},2) {}", 2 * m + 1, t),
        None => format!("T({},2)", 2 * m + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_and_eval as p;

    fn lp(s: &str) -> LaurentPoly {
        p(s).unwrap()
    }

    #[test]
    fn link_coefficients() {
        let a = link_coeffs(InvariantKind::Alexander);
        assert_eq!((a.l1, a.l2), (lp("t^(1/2) - t^(-1/2)"), lp("1")));
        let j = link_coeffs(InvariantKind::Jones);
        assert_eq!((j.l1, j.l2), (lp("t^(3/2) - t^(1/2)"), lp("t^2")));
        let h = link_coeffs(InvariantKind::Homfly);
        assert_eq!((h.l1, h.l2), (lp("a*t^(1/2) - a*t^(-1/2)"), lp("a^2")));
    }

    #[test]
    fn knot_coefficients() {
        let a = knot_coeffs(InvariantKind::Alexander);
        assert_eq!((a.k1, a.k2), (lp("t + t^-1"), lp("-1")));
        let j = knot_coeffs(InvariantKind::Jones);
        assert_eq!((j.k1, j.k2), (lp("t^3 + t"), lp("-t^4")));
        let h = knot_coeffs(InvariantKind::Homfly);
        assert_eq!((h.k1, h.k2), (lp("a^2*t + a^2*t^-1"), lp("-a^4")));
    }

    #[test]
    fn unlinks() {
        assert_eq!(unlink2(InvariantKind::Alexander).unwrap(), SeriesValue::Laurent(LaurentPoly::zero()));
        assert_eq!(
            unlink2(InvariantKind::Jones).unwrap(),
            SeriesValue::Laurent(lp("-t^(1/2) - t^(-1/2)"))
        );
        let h = unlink2(InvariantKind::Homfly).unwrap();
        assert!(h.is_az());
        assert_eq!(h.poly(), &lp("a^-1*z^-1 - a*z^-1"));
    }

    #[test]
    fn link_series_entries() {
        let a = link_series(InvariantKind::Alexander, 4).unwrap();
        assert_eq!(a.laurent(0), Some(&LaurentPoly::zero()));
        assert_eq!(a.laurent(1), Some(&LaurentPoly::one()));
        assert_eq!(a.laurent(2), Some(&lp("t^(1/2) - t^(-1/2)")));
        assert_eq!(a.laurent(3), Some(&lp("t - 1 + t^-1")));

        let j = link_series(InvariantKind::Jones, 4).unwrap();
        assert_eq!(j.laurent(2), Some(&lp("-t^(5/2) - t^(1/2)")));
        assert_eq!(j.laurent(3), Some(&lp("t + t^3 - t^4")));
        assert_eq!(j.laurent(4), Some(&lp("-t^(11/2) + t^(9/2) - t^(7/2) - t^(3/2)")));

        let h = link_series(InvariantKind::Homfly, 4).unwrap();
        assert!(h.get(0).is_none());
        assert_eq!(h.laurent(1), Some(&LaurentPoly::one()));
        let hopf = h.get(2).unwrap();
        assert!(hopf.is_az());
        assert_eq!(hopf.poly(), &lp("a*z + (a - a^3)*z^-1"));
        assert_eq!(h.laurent(3), Some(&lp("a^2*t + a^2*t^-1 - a^4")));
        assert_eq!(h.get(4).unwrap().poly(), &lp("a^3*z^3 + 3*a^3*z - a^5*z + (a^3 - a^5)*z^-1"));

        assert!(matches!(link_series(InvariantKind::Alexander, 1), Err(Error::BadRange(_))));
    }

    #[test]
    fn hopf_specializes_to_alexander() {
        let h = link_series(InvariantKind::Homfly, 2).unwrap();
        let hopf = h.get(2).unwrap().poly();
        let a_to_1: SubstitutionMap = [(Var::A, Monomial::one()), (Var::Z, Monomial::var(Var::Z))].into();
        assert_eq!(hopf.substitute(&a_to_1).unwrap(), lp("z"));
    }

    #[test]
    fn knot_series_entries() {
        let a = knot_series(InvariantKind::Alexander, 2);
        assert_eq!(a.laurent(0), Some(&LaurentPoly::one()));
        assert_eq!(a.laurent(1), Some(&lp("t - 1 + t^-1")));
        assert_eq!(a.laurent(2), Some(&lp("t^2 - t + 1 - t^-1 + t^-2")));
        let j = knot_series(InvariantKind::Jones, 3);
        assert_eq!(j.laurent(1), Some(&lp("t + t^3 - t^4")));
        assert_eq!(j.laurent(2), Some(&lp("-t^7 + t^6 - t^5 + t^4 + t^2")));
        assert_eq!(j.laurent(3), Some(&lp("-t^10 + t^9 - t^8 + t^7 - t^6 + t^5 + t^3")));
        let h = knot_series(InvariantKind::Homfly, 3);
        assert_eq!(h.laurent(1), Some(&lp("a^2*t + a^2*t^-1 - a^4")));
        assert_eq!(
            h.laurent(2),
            Some(&lp("-a^6*t - a^6*t^-1 + a^4*t^2 + a^4 + a^4*t^-2"))
        );
        assert_eq!(
            h.laurent(3),
            Some(&lp("-a^8*t^2 - a^8 - a^8*t^-2 + a^6*t^3 + a^6*t + a^6*t^-1 + a^6*t^-3"))
        );
        assert_eq!(knot_series(InvariantKind::Jones, 0).entries.len(), 1);
    }

    #[test]
    fn specialization() {
        let tre = lp("a^2*t + a^2*t^-1 - a^4");
        assert_eq!(specialize_homfly(&tre, InvariantKind::Alexander).unwrap(), lp("t + t^-1 - 1"));
        assert_eq!(specialize_homfly(&tre, InvariantKind::Jones).unwrap(), lp("t^3 + t - t^4"));
        for k in [InvariantKind::Alexander, InvariantKind::Jones] {
            assert!(specialize_homfly(&LaurentPoly::one(), k).unwrap().is_one());
        }
        assert_eq!(
            specialize_homfly(&lp("q"), InvariantKind::Jones),
            Err(Error::MissingImage(Var::Q))
        );
    }

    #[test]
    fn skein_from_deformed_numbers() {
        for kind in InvariantKind::ALL {
            assert_eq!(skein_from_numbers(kind.family()).unwrap(), link_coeffs(kind));
        }
        let h1 = skein_from_numbers(Family::H1).unwrap();
        assert_eq!(h1.l2, lp("q^(1/2)*p^(-1/2)"));
        assert_eq!(h1.l1, lp("q^(1/2) - p^(-1/2)"));
    }

    #[test]
    fn json_wrapper() {
        let s = knot_series(InvariantKind::Alexander, 1).to_json();
        assert_eq!(
            s,
            r#"{"kind":"alexander","indexing":"knot","entries":[{"n":1,"poly":{"terms":[{"coeff":"1","monomial":{}}]}},{"n":3,"poly":{"terms":[{"coeff":"1","monomial":{"t":"1/1"}},{"coeff":"-1","monomial":{}},{"coeff":"1","monomial":{"t":"-1/1"}}]}}]}"#
        );
        let h = link_series(InvariantKind::Homfly, 2).unwrap().to_json();
        assert!(h.starts_with(r#"{"kind":"homfly","indexing":"link","entries":[{"n":1,"#));
        assert!(h.contains(r#""form":"az""#));
    }

    #[test]
    fn names() {
        assert_eq!(knot_name(1), "T(3,2) 3_1");
        assert_eq!(knot_name(5), "T(11,2)");
    }
}
