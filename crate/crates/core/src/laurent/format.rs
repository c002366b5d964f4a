use std::fmt;

use num_traits::{One, Signed};

use super::LaurentPoly;

impl LaurentPoly {
    /// Canonical text form: descending graded-lex order, integer exponents
    /// bare, fractional exponents as `(num/den)`, zero as `0`.
    pub fn to_text(&self) -> String {
        self.render(|m| m.to_text(), "*")
    }

    /// Same term order as [`to_text`](Self::to_text) with braced exponents.
    pub fn to_latex(&self) -> String {
        self.render(|m| m.to_latex(), " ")
    }

    fn render<F>(&self, mono: F, coeff_sep: &str) -> String
    where
        F: Fn(&super::Monomial) -> String,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = c.abs();
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono(m));
            } else {
                s.push_str(&abs.to_string());
                s.push_str(coeff_sep);
                s.push_str(&mono(m));
            }
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use crate::laurent::{rat, LaurentPoly, Monomial, Var};

    fn term(c: i64, exps: &[(Var, i64, i64)]) -> (BigInt, Monomial) {
        (
            BigInt::from(c),
            Monomial::from_exps(exps.iter().map(|&(v, n, d)| (v, rat(n, d)))),
        )
    }

    #[test]
    fn canonical_text_examples() {
        let h = LaurentPoly::from_terms([
            term(1, &[(Var::A, 2, 1), (Var::T, 1, 1)]),
            term(1, &[(Var::A, 2, 1), (Var::T, -1, 1)]),
            term(-1, &[(Var::A, 4, 1)]),
        ]);
        assert_eq!(h.to_text(), "-a^4 + a^2*t + a^2*t^-1");
        let z = LaurentPoly::from_terms([term(1, &[(Var::T, 1, 2)]), term(-1, &[(Var::T, -1, 2)])]);
        assert_eq!(z.to_text(), "t^(1/2) - t^(-1/2)");
        assert_eq!(LaurentPoly::zero().to_text(), "0");
        let c = LaurentPoly::from_terms([term(2, &[(Var::A, 2, 1)]), term(-3, &[])]);
        assert_eq!(c.to_text(), "2*a^2 - 3");
        assert_eq!(c.to_latex(), "2 a^{2} - 3");
        assert_eq!(z.to_latex(), "t^{1/2} - t^{-1/2}");
    }
}
