mod common;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::rat;
use qplane::expr::{elaborate, parse};
use qplane::plane::{pe_eval, RationalMatrix};
use qplane::qcomb::{gauss_binomial, qpow_shifted_product};
use qplane::{pe_mul, q_exp, LaurentPoly, PlaneElement, RatFun, TruncationOrder};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c, 1))))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn scalar() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_scalar() -> impl Strategy<Value = BigRational> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

/// Plane elements with polynomial coefficients and total degree at most 3.
fn element() -> impl Strategy<Value = PlaneElement> {
    prop::collection::vec(((0u32..=2, 0u32..=2), laurent()), 0..4).prop_map(|terms| {
        PlaneElement::from_terms(
            terms
                .into_iter()
                .filter(|((a, b), _)| a + b <= 3)
                .map(|(k, c)| (k, RatFun::from_poly(c))),
        )
    })
}

/// Elements with no constant term, usable as q-exponential arguments.
fn small_element() -> impl Strategy<Value = PlaneElement> {
    element().prop_map(|e| {
        let c = e.constant_term();
        &e - &PlaneElement::scalar(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn laurent_eval_is_a_homomorphism(a in laurent(), b in laurent(), q0 in nonzero_scalar()) {
        let (va, vb) = (a.eval(&q0).unwrap(), b.eval(&q0).unwrap());
        prop_assert_eq!((&a * &b).eval(&q0).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).eval(&q0).unwrap(), va + vb);
    }

    #[test]
    fn ratfun_canonical_form(n in laurent(), d in nonzero_laurent()) {
        let f = RatFun::new(n.clone(), d.clone()).unwrap();
        // same value: f.num * d == n * f.den
        prop_assert_eq!(f.num() * &d, &n * f.den());
        prop_assert_eq!(f.den().min_exp(), Some(0));
        prop_assert!(f.den().leading_coeff().unwrap().is_one());
        // equal values give identical representations
        let k = LaurentPoly::from_int_coeffs(&[2, 0, -1]);
        prop_assert_eq!(RatFun::new(&n * &k, &d * &k).unwrap(), f);
    }

    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfun_eval_is_a_homomorphism(a in ratfun(), b in ratfun(), q0 in nonzero_scalar()) {
        let (Ok(va), Ok(vb)) = (a.eval(&q0), b.eval(&q0)) else {
            return Ok(());
        };
        // a pole of a sum or product is a pole of a summand or factor
        prop_assert_eq!((&a * &b).eval(&q0).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).eval(&q0).unwrap(), va + vb);
    }

    #[test]
    fn plane_product_is_associative(a in element(), b in element(), c in element()) {
        let left = pe_mul(&pe_mul(&a, &b, None), &c, None);
        let right = pe_mul(&a, &pe_mul(&b, &c, None), None);
        prop_assert_eq!(left, right);
        prop_assert_eq!(pe_mul(&a, &PlaneElement::one(), None), a);
    }

    #[test]
    fn plane_product_distributes(a in element(), b in element(), c in element()) {
        prop_assert_eq!(
            pe_mul(&a, &(&b + &c), None),
            &pe_mul(&a, &b, None) + &pe_mul(&a, &c, None)
        );
    }

    #[test]
    fn truncation_commutes_with_products(a in element(), b in element(), lo in 0u32..=3, extra in 0u32..=3) {
        let (m, n) = (TruncationOrder::new(lo), TruncationOrder::new(lo + extra));
        prop_assert_eq!(pe_mul(&a, &b, Some(n)).truncate(m), pe_mul(&a, &b, Some(m)));
        prop_assert_eq!(pe_mul(&a, &b, None).truncate(m), pe_mul(&a, &b, Some(m)));
    }

    #[test]
    fn truncation_commutes_with_q_exp(a in small_element(), lo in 0u32..=3, extra in 0u32..=2) {
        let (m, n) = (TruncationOrder::new(lo), TruncationOrder::new(lo + extra));
        prop_assert_eq!(q_exp(&a, n).unwrap().truncate(m), q_exp(&a, m).unwrap());
    }

    #[test]
    fn commutative_at_q_one(a in element(), b in element()) {
        let one = BigRational::one();
        let ab = pe_mul(&a, &b, None).specialize(&one).unwrap();
        let ba = pe_mul(&b, &a, None).specialize(&one).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn matrix_substitution_is_a_homomorphism(a in element(), b in element(), q0 in nonzero_scalar(), dim in 1usize..=5) {
        let (x, y) = RationalMatrix::nilpotent_pair(&q0, dim).unwrap();
        let ma = pe_eval(&a, &q0, &x, &y).unwrap();
        let mb = pe_eval(&b, &q0, &x, &y).unwrap();
        prop_assert_eq!(pe_eval(&pe_mul(&a, &b, None), &q0, &x, &y).unwrap(), &ma * &mb);
    }

    #[test]
    fn element_round_trips_through_parser(a in element()) {
        let n = TruncationOrder::new(3);
        let back = elaborate(&parse(&a.to_expr()).unwrap(), n).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn parser_is_total(s in "[xyq0-9+*/^() expinv.-]{0,24}") {
        let _ = parse(&s);
    }

    #[test]
    fn parser_is_total_on_arbitrary_text(s in any::<String>()) {
        let _ = parse(&s);
    }
}

#[test]
fn gaussian_binomials_are_symmetric_with_classical_limit() {
    let one = BigRational::one();
    for n in 0..=12u32 {
        for r in 0..=n as i64 {
            let g = gauss_binomial(n, r);
            assert!(g.is_polynomial());
            assert_eq!(g, gauss_binomial(n, n as i64 - r));
            let classical = binomial(BigInt::from(n), BigInt::from(r));
            assert_eq!(g.eval(&one).unwrap(), BigRational::from_integer(classical));
        }
    }
}

#[test]
fn shifted_product_ratio_is_gaussian() {
    for n in 0..=20u32 {
        for r in 0..=n {
            let top = qpow_shifted_product(n as i64, r).unwrap();
            let bottom = qpow_shifted_product(r as i64, r).unwrap();
            assert_eq!(RatFun::new(top, bottom).unwrap(), gauss_binomial(n, r as i64));
        }
    }
}

#[test]
fn q_exp_of_sum_at_q_one_is_the_classical_exponential() {
    let one = BigRational::one();
    let n = TruncationOrder::new(6);
    let e = q_exp(&(&PlaneElement::x() + &PlaneElement::y()), n)
        .unwrap()
        .specialize(&one)
        .unwrap();
    for k in 0..=6u32 {
        for r in 0..=k {
            let expected = (common::factorial(r) * common::factorial(k - r)).recip();
            assert_eq!(e.coeff(r, k - r), RatFun::constant(expected));
        }
    }
}
