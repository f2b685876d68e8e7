use std::collections::BTreeMap;

use arcperm_core::poly::{exact_div, q_bracket, Monomial};
use arcperm_core::{Error, Poly, Variable};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [Variable; 4] = [Variable::T, Variable::Q, Variable::X(1), Variable::Yi(2)];

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, prop::collection::vec(0u32..3, 4)), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, exps)| Poly::monomial(c, VARS.iter().copied().zip(exps)))
            .sum()
    })
}

/// Evaluation at an integer point, straight from the term list.
fn eval(p: &Poly, point: &BTreeMap<Variable, i64>) -> BigInt {
    p.terms()
        .map(|(m, c)| {
            m.factors()
                .iter()
                .fold(c.clone(), |acc, &(v, e)| acc * BigInt::from(point[&v]).pow(e))
        })
        .sum()
}

fn point() -> impl Strategy<Value = BTreeMap<Variable, i64>> {
    prop::collection::vec(-3i64..=3, 4).prop_map(|vals| VARS.iter().copied().zip(vals).collect())
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in point()) {
        prop_assert_eq!(eval(&(&a + &b), &x), eval(&a, &x) + eval(&b, &x));
        prop_assert_eq!(eval(&(&a * &b), &x), eval(&a, &x) * eval(&b, &x));
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), image in poly()) {
        let s = |p: &Poly| p.substitute(|v| (v == Variable::T).then(|| image.clone()));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn exact_division_recovers_the_quotient(a in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!(exact_div(&(&a * &d), &d).unwrap(), a);
    }

    #[test]
    fn printing_is_deterministic(a in poly()) {
        prop_assert_eq!(a.to_string(), a.clone().to_string());
    }
}

#[test]
fn inexact_division_reports_the_remainder() {
    let q = Poly::var(Variable::Q);
    let err = exact_div(&(&q * &q + Poly::one()), &(Poly::one() - q.clone())).unwrap_err();
    assert!(matches!(err, Error::InexactDivision { remainder } if !remainder.is_zero()));
    assert_eq!(exact_div(&q, &Poly::zero()), Err(Error::DivisionByZero));
}

#[test]
fn q_brackets() {
    let q = Poly::var(Variable::Q);
    for n in 1..8 {
        let lhs = &q_bracket(n, &q) * &(Poly::one() - q.clone());
        assert_eq!(lhs, Poly::one() - q.pow(n));
    }
    assert_eq!(q_bracket(3, &-q.clone()).to_string(), "1 - q + q^2");
}

#[test]
fn canonical_printing() {
    let t = Poly::var(Variable::T);
    let q = Poly::var(Variable::Q);
    assert_eq!((Poly::one() + t.clone()).pow(2).to_string(), "1 + 2*t + t^2");
    assert_eq!((Poly::one() - q.pow(2)).to_string(), "1 - q^2");
    assert_eq!(Poly::zero().to_string(), "0");
    let m = Monomial::from_pairs([(Variable::X(2), 1), (Variable::T, 2)]);
    assert_eq!(m.to_string(), "t^2*x_2");
}
