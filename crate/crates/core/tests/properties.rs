mod common;

use common::poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use splitcert::monomial::monomials_of_degree;
use splitcert::sps::{sps_search, sps_verify, SpsCertificate};
use splitcert::{DoubleCover, Field, Monomial, Polynomial, PrimeField, QuadRingElement, Rationals, SpsOptions};

fn gf5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn poly_q() -> impl Strategy<Value = Polynomial<Rationals>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -10i64..=10, 1i64..=4), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            &Rationals,
            3,
            terms.into_iter().map(|(e, n, d)| {
                (
                    Monomial::from_exponents(&e),
                    BigRational::new(BigInt::from(n), BigInt::from(d)),
                )
            }),
        )
    })
}

fn poly_p() -> impl Strategy<Value = Polynomial<PrimeField>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), 0u64..5), 0..6).prop_map(|terms| {
        Polynomial::from_terms(
            &gf5(),
            3,
            terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
    })
}

fn form_q(d: u32) -> impl Strategy<Value = Polynomial<Rationals>> {
    let mons = monomials_of_degree(3, d);
    prop::collection::vec(-10i64..=10, mons.len()).prop_map(move |cs| {
        let cs: Vec<BigRational> = cs.into_iter().map(|c| BigRational::from_integer(c.into())).collect();
        Polynomial::from_coefficients(&Rationals, 3, &mons, &cs)
    })
}

fn form_p(d: u32) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let mons = monomials_of_degree(3, d);
    prop::collection::vec(0u64..5, mons.len()).prop_map(move |cs| Polynomial::from_coefficients(&gf5(), 3, &mons, &cs))
}

#[allow(clippy::eq_op)]
fn ring_axioms<K: Field>(a: &Polynomial<K>, b: &Polynomial<K>, c: &Polynomial<K>) {
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert!((a - a).is_zero());
    assert_eq!(&(-a) + a, Polynomial::zero(a.field(), 3));
    assert_eq!(a * &Polynomial::one(a.field(), 3), *a);
}

fn norm_algebra<K: Field>(cover: &DoubleCover<K>, x: &QuadRingElement<K>, y: &QuadRingElement<K>) {
    let xy = x.mul(y, cover).unwrap();
    assert_eq!(
        xy.norm(cover).unwrap(),
        &x.norm(cover).unwrap() * &y.norm(cover).unwrap()
    );
    assert_eq!(x.conjugate().conjugate(), *x);
    let xx = x.mul(&x.conjugate(), cover).unwrap();
    assert!(xx.q().is_zero());
    assert_eq!(*xx.p(), x.norm(cover).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms_over_q(a in poly_q(), b in poly_q(), c in poly_q()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn ring_axioms_over_gf5(a in poly_p(), b in poly_p(), c in poly_p()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn print_parse_round_trip(a in poly_q(), b in poly_p()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string(), 3, &Rationals).unwrap(), a);
        prop_assert_eq!(Polynomial::parse(&b.to_string(), 3, &gf5()).unwrap(), b);
    }

    #[test]
    fn exact_division_inverts_multiplication(q in poly_q(), f in poly_q(), qp in poly_p(), fp in poly_p()) {
        if !f.is_zero() {
            prop_assert_eq!((&q * &f).divide_exact(&f).unwrap(), Some(q));
        }
        if !fp.is_zero() {
            prop_assert_eq!((&qp * &fp).divide_exact(&fp).unwrap(), Some(qp));
        }
    }

    #[test]
    fn reduce_is_a_division(a in poly_q(), f in poly_q()) {
        prop_assume!(!f.is_zero());
        let (quot, rem) = a.reduce(&f).unwrap();
        prop_assert_eq!(&(&quot * &f) + &rem, a);
        if let Some((lm, _)) = f.leading_term() {
            prop_assert!(rem.terms().all(|(m, _)| !lm.divides(m)));
        }
    }

    #[test]
    fn square_root_of_square(r in form_q(2), s in form_p(3)) {
        let root = r.square().formal_square_root().unwrap().unwrap();
        prop_assert!(root == r || root == -&r);
        let root = s.square().formal_square_root().unwrap().unwrap();
        prop_assert!(root == s || root == -&s);
    }

    #[test]
    fn norm_is_multiplicative_over_q(p1 in form_q(2), q1 in form_q(1), p2 in form_q(1), q2 in form_q(0)) {
        let cover = DoubleCover::new(poly(&Rationals, 3, "y^2 - x*z"), 1).unwrap();
        let x = QuadRingElement::new(&cover, p1, q1, 2).unwrap();
        let y = QuadRingElement::new(&cover, p2, q2, 1).unwrap();
        norm_algebra(&cover, &x, &y);
    }

    #[test]
    fn norm_is_multiplicative_over_gf5(p1 in form_p(3), q1 in form_p(1), p2 in form_p(2), q2 in form_p(0)) {
        let f = gf5();
        let cover = DoubleCover::new(poly(&f, 3, "z^4 + x*(x^3 + y^3 + x*z^2)"), 2).unwrap();
        let x = QuadRingElement::new(&cover, p1, q1, 3).unwrap();
        let y = QuadRingElement::new(&cover, p2, q2, 2).unwrap();
        norm_algebra(&cover, &x, &y);
    }

    #[test]
    fn sps_certificates_move_along_the_quotient(w in form_q(1)) {
        // (h + f w, g - 2 h w - f w^2) certifies the same divisor
        let cover = DoubleCover::new(poly(&Rationals, 3, "z^4 + x*(x^3 + y^3 + x*z^2)"), 2).unwrap();
        let f = poly(&Rationals, 3, "x");
        let cert = sps_search(&cover, &f, &SpsOptions::default()).unwrap().certificate().unwrap().clone();
        let two = Rationals.from_i64(2);
        let moved = SpsCertificate {
            h: &cert.h + &(&f * &w),
            g: &(&cert.g - &(&cert.h * &w).scale(&two)) - &(&f * &w.square()),
            unit: cert.unit.clone(),
        };
        prop_assert!(sps_verify(&cover, &f, &moved).unwrap());
    }
}
