use num_bigint::BigInt;
use proptest::prelude::*;

use qpknot::expr::parse_and_eval;
use qpknot::qp::{family_spec, qp_number, Family, QPSpec};
use qpknot::skein::{knot_coeffs, knot_series, link_coeffs, InvariantKind};
use qpknot::substitutions::{h1_to_h, h2_to_h};
use qpknot::{rat, Error, LaurentPoly, Monomial, Rational, SubstitutionMap, Var};

const VARS: [Var; 5] = [Var::A, Var::P, Var::Q, Var::T, Var::Z];

fn exponent() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// Mostly small exponents, sometimes ones whose sums and products overflow `i64`.
fn wide_exponent() -> impl Strategy<Value = Rational> {
    prop_oneof![
        4 => exponent(),
        1 => (i64::MAX - 8..=i64::MAX, 1i64..=3).prop_map(|(n, d)| rat(n, d)),
        1 => (i64::MIN + 1..=i64::MIN + 8, 1i64..=3).prop_map(|(n, d)| rat(n, d)),
        1 => (-3i64..=3, i64::MAX - 4..=i64::MAX).prop_map(|(n, d)| rat(n, d)),
    ]
}

fn monomial_with<S>(e: S, vars: &'static [Var]) -> impl Strategy<Value = Monomial>
where
    S: Strategy<Value = Rational>,
{
    prop::collection::vec((prop::sample::select(vars), e), 0..3).prop_map(Monomial::from_exps)
}

fn monomial() -> impl Strategy<Value = Monomial> {
    monomial_with(exponent(), &VARS)
}

fn poly_with<S>(m: S, max_terms: usize) -> impl Strategy<Value = LaurentPoly>
where
    S: Strategy<Value = Monomial>,
{
    prop::collection::vec((-9i64..=9, m), 0..=max_terms)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(c, m)| (BigInt::from(c), m))))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(monomial(), 8)
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(monomial(), 4)
}

fn wide_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(monomial_with(wide_exponent(), &VARS), 5)
}

fn substitution() -> impl Strategy<Value = SubstitutionMap> {
    prop::collection::vec(monomial(), VARS.len())
        .prop_map(|images| VARS.iter().copied().zip(images).collect())
}

fn qp_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(monomial_with(exponent(), &[Var::P, Var::Q]), 6)
}

fn distinct_pair() -> impl Strategy<Value = QPSpec> {
    (monomial(), monomial()).prop_filter_map("u = v", |(u, v)| QPSpec::new(u, v).ok())
}

proptest! {
    #[test]
    fn addition_is_a_commutative_group(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &LaurentPoly::zero(), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &(-&p), LaurentPoly::zero());
    }

    #[test]
    fn multiplication_is_commutative_and_unital(p in poly(), q in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        prop_assert!((&p * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn multiplication_is_associative(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
    }

    #[test]
    fn ring_laws_hold_past_machine_words(p in wide_poly(), q in wide_poly(), r in wide_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p.clone());
        prop_assert_eq!(parse_and_eval(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn substitute_is_a_ring_homomorphism(p in poly(), q in poly(), map in substitution()) {
        let s = |x: &LaurentPoly| x.substitute(&map).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
        prop_assert!(s(&LaurentPoly::one()).is_one());
    }

    #[test]
    fn exact_div_inverts_multiplication(p in poly(), q in small_poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn exact_div_never_returns_a_wrong_quotient(p in small_poly(), q in small_poly()) {
        prop_assume!(!q.is_zero());
        match p.exact_div(&q) {
            Ok(r) => prop_assert_eq!(&r * &q, p),
            Err(e) => prop_assert_eq!(e, Error::NotDivisible),
        }
    }

    #[test]
    fn sqrt_of_a_square_is_the_normalized_root(p in small_poly()) {
        prop_assume!(!p.is_zero());
        let root = (&p * &p).exact_sqrt().unwrap();
        let positive = p.leading_term().unwrap().1.sign() == num_bigint::Sign::Plus;
        prop_assert_eq!(root, if positive { p.clone() } else { -&p });
    }

    #[test]
    fn sqrt_squares_back(p in small_poly()) {
        if let Ok(r) = p.exact_sqrt() {
            prop_assert_eq!(&r * &r, p);
        }
    }

    #[test]
    fn text_round_trips(p in poly()) {
        prop_assert_eq!(parse_and_eval(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn json_round_trips_bit_exact(p in poly()) {
        let json = p.to_json();
        let back = LaurentPoly::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn numbers_satisfy_the_three_term_recurrence(spec in distinct_pair(), n in 1i64..12) {
        let next = qp_number(&spec, n + 1).unwrap();
        let rhs = &spec.k1() * &qp_number(&spec, n).unwrap() + &spec.k2() * &qp_number(&spec, n - 1).unwrap();
        prop_assert_eq!(next, rhs);
    }

    #[test]
    fn numbers_have_n_unit_terms(n in 0i64..60) {
        for f in [Family::Alexander, Family::BMq] {
            let x = qp_number(&family_spec(f), n).unwrap();
            prop_assert_eq!(x.num_terms() as i64, n);
            prop_assert!(x.terms().all(|(_, c)| *c == BigInt::from(1)));
        }
        let qp = QPSpec::new(Monomial::var(Var::Q), Monomial::var(Var::P)).unwrap();
        prop_assert_eq!(qp_number(&qp, n).unwrap().num_terms() as i64, n);
    }

    #[test]
    fn h_maps_are_homomorphisms(p in qp_poly(), q in qp_poly()) {
        for to_h in [h1_to_h, h2_to_h] {
            prop_assert_eq!(to_h(&(&p * &q)).unwrap(), &to_h(&p).unwrap() * &to_h(&q).unwrap());
            prop_assert_eq!(to_h(&(&p + &q)).unwrap(), &to_h(&p).unwrap() + &to_h(&q).unwrap());
        }
    }
}

#[test]
fn homfly_knots_follow_the_recurrence_from_link_coefficients() {
    let c = link_coeffs(InvariantKind::Homfly);
    let k1 = &(&c.l1 * &c.l1) + &c.l2.scale(&BigInt::from(2));
    let k2 = -&(&c.l2 * &c.l2);
    let stored = knot_coeffs(InvariantKind::Homfly);
    assert_eq!((&k1, &k2), (&stored.k1, &stored.k2));
    let s = knot_series(InvariantKind::Homfly, 50);
    // check from the top down, one independent triple at a time
    for m in (2..=50).rev() {
        let want = &k1 * s.laurent(m - 1).unwrap() + &k2 * s.laurent(m - 2).unwrap();
        assert_eq!(s.laurent(m), Some(&want), "m={m}");
    }
}
