use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed};

use super::exponent::Exp;
use super::{Rational, Var};

/// A product of variables raised to exact rational exponents.
///
/// Stored as a list sorted by variable with no zero exponents, so the empty
/// list is the multiplicative identity. The total degree is cached because
/// the graded-lexicographic comparison needs it on every call.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Var, Exp)>,
    degree: Exp,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: Vec::new(),
            degree: Exp::ZERO,
        }
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            exps: vec![(v, Exp::int(1))],
            degree: Exp::int(1),
        }
    }

    /// `v^e`.
    pub fn power_of(v: Var, e: impl Into<Rational>) -> Self {
        Self::from_exps([(v, e.into())])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, summing
    /// repeated variables and dropping zero exponents.
    pub fn from_exps<I>(exps: I) -> Self
    where
        I: IntoIterator<Item = (Var, Rational)>,
    {
        let mut v: Vec<(Var, Exp)> = exps.into_iter().map(|(x, e)| (x, Exp::from(e))).collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Var, Exp)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == var => *acc = acc.add(&e),
                _ => out.push((var, e)),
            }
        }
        out.retain(|(_, e)| !e.is_zero());
        Self::from_sorted(out)
    }

    fn from_sorted(exps: Vec<(Var, Exp)>) -> Self {
        let degree = exps.iter().fold(Exp::ZERO, |acc, (_, e)| acc.add(e));
        Monomial { exps, degree }
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn exps(&self) -> impl ExactSizeIterator<Item = (Var, Rational)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, e.to_rational()))
    }

    pub(crate) fn raw_exps(&self) -> &[(Var, Exp)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> Rational {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1.to_rational())
            .unwrap_or_else(|_| Rational::from_integer(0.into()))
    }

    /// Total rational degree.
    pub fn degree(&self) -> Rational {
        self.degree.to_rational()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|(v, _)| *v)
    }

    /// True when every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.exps.iter().all(|(_, e)| e.is_integer())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        self.combine(other, false)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        if other.is_one() {
            return self.clone();
        }
        self.combine(other, true)
    }

    pub fn inv(&self) -> Monomial {
        self.pow_exp(&Exp::int(-1))
    }

    fn combine(&self, other: &Monomial, subtract: bool) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let ord = match (self.exps.get(i), other.exps.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.exps[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (v, e) = &other.exps[j];
                    out.push((*v, if subtract { e.neg() } else { e.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (v, e) = &self.exps[i];
                    let f = &other.exps[j].1;
                    let s = if subtract { e.sub(f) } else { e.add(f) };
                    if !s.is_zero() {
                        out.push((*v, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        let degree = if subtract {
            self.degree.sub(&other.degree)
        } else {
            self.degree.add(&other.degree)
        };
        Monomial { exps: out, degree }
    }

    /// Raises the monomial to a rational power by scaling every exponent.
    /// Total: every monomial is invertible and has every rational root.
    pub fn pow(&self, r: &Rational) -> Monomial {
        self.pow_exp(&Exp::from(r))
    }

    pub(crate) fn pow_exp(&self, r: &Exp) -> Monomial {
        if r.is_zero() {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (*v, e.mul(r))).collect(),
            degree: self.degree.mul(r),
        }
    }

    pub fn pow_int(&self, k: i64) -> Monomial {
        self.pow_exp(&Exp::int(k))
    }

    /// Canonical text of the bare monomial (`1` for the identity).
    pub fn to_text(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (k, (v, e)) in self.exps().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push(v.as_char());
            if e.is_one() {
                continue;
            }
            s.push('^');
            if e.is_integer() {
                s.push_str(&e.numer().to_string());
            } else {
                s.push_str(&format!("({}/{})", e.numer(), e.denom()));
            }
        }
        s
    }

    /// LaTeX body of the monomial with braced exponents; empty for the identity.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        for (v, e) in self.exps() {
            s.push(v.as_char());
            if e.is_one() {
                continue;
            }
            if e.is_integer() {
                s.push_str(&format!("^{{{}}}", e.numer()));
            } else {
                let sign = if e.is_negative() { "-" } else { "" };
                s.push_str(&format!("^{{{}{}/{}}}", sign, e.numer().abs(), e.denom()));
            }
        }
        s
    }
}

/// Graded lexicographic order: total degree first, then variables in
/// alphabetical order with the larger exponent ranking higher.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let zero = Exp::ZERO;
        let (mut i, mut j) = (0, 0);
        loop {
            let (x, y) = (self.exps.get(i), other.exps.get(j));
            let (ex, ey) = match (x, y) {
                (None, None) => return Ordering::Equal,
                (Some(x), Some(y)) if x.0 == y.0 => {
                    i += 1;
                    j += 1;
                    (&x.1, &y.1)
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    i += 1;
                    (&x.1, &zero)
                }
                (Some(x), None) => {
                    i += 1;
                    (&x.1, &zero)
                }
                (_, Some(y)) => {
                    j += 1;
                    (&zero, &y.1)
                }
            };
            match ex.cmp(ey) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;

    fn m(pairs: &[(char, i64, i64)]) -> Monomial {
        Monomial::from_exps(
            pairs
                .iter()
                .map(|&(c, n, d)| (Var::new(c).unwrap(), rat(n, d))),
        )
    }

    #[test]
    fn pow_scales_exponents() {
        assert_eq!(m(&[('t', 1, 1)]).pow(&rat(1, 2)), m(&[('t', 1, 2)]));
        assert_eq!(
            m(&[('q', 3, 1), ('p', 1, 1)]).pow(&rat(1, 3)),
            m(&[('q', 1, 1), ('p', 1, 3)])
        );
        assert_eq!(
            m(&[('a', 2, 1), ('t', -1, 1)]).pow(&rat(-1, 1)),
            m(&[('a', -2, 1), ('t', 1, 1)])
        );
        assert!(m(&[('a', 2, 1)]).pow(&rat(0, 1)).is_one());
    }

    #[test]
    fn zero_exponents_are_dropped() {
        let x = m(&[('t', 1, 2), ('a', 0, 1), ('t', -1, 2)]);
        assert!(x.is_one());
        assert_eq!(x.degree(), rat(0, 1));
        let y = m(&[('a', 1, 1)]).div(&m(&[('a', 1, 1)]));
        assert!(y.is_one());
    }

    #[test]
    fn grlex_order() {
        // degree decides first
        assert!(m(&[('t', 2, 1)]) > m(&[('a', 1, 1), ('t', -1, 1)]));
        // same degree: alphabetical, larger exponent first
        assert!(m(&[('a', 4, 1)]) > m(&[('a', 2, 1), ('z', 2, 1)]));
        assert!(m(&[('p', 1, 1)]) > m(&[('q', 1, 1)]));
        assert!(m(&[('t', 1, 2)]) > Monomial::one());
        assert!(Monomial::one() > m(&[('t', -1, 2)]));
        assert_eq!(m(&[('q', 1, 1), ('p', 2, 1)]).cmp(&m(&[('p', 2, 1), ('q', 1, 1)])), Ordering::Equal);
    }

    #[test]
    fn order_is_multiplicative() {
        let x = m(&[('a', 1, 1), ('t', -3, 2)]);
        let y = m(&[('q', 1, 2)]);
        let w = m(&[('t', 5, 3), ('z', -2, 1)]);
        assert_eq!(x.cmp(&y), x.mul(&w).cmp(&y.mul(&w)));
    }

    #[test]
    fn text_form() {
        assert_eq!(m(&[('a', 2, 1), ('t', -1, 1)]).to_text(), "a^2*t^-1");
        assert_eq!(m(&[('t', -1, 2)]).to_text(), "t^(-1/2)");
        assert_eq!(m(&[('t', 1, 1)]).to_text(), "t");
        assert_eq!(Monomial::one().to_text(), "1");
        assert_eq!(m(&[('t', -1, 2), ('a', 3, 1)]).to_latex(), "a^{3}t^{-1/2}");
    }
}
