//! Brute-force oracles shared by the integration tests. Nothing here uses
//! the search code under test: forms are enumerated by counting in base p
//! and squares are found by trying every candidate root.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use splitcert::monomial::monomials_of_degree;
use splitcert::{DoubleCover, Field, Monomial, Polynomial, PrimeField};

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn poly<K: Field>(field: &K, nvars: usize, s: &str) -> Polynomial<K> {
    Polynomial::parse(s, nvars, field).unwrap()
}

/// Every form of degree `d` (including zero), by counting in base p.
pub fn all_forms(field: &PrimeField, nvars: usize, d: u32) -> Vec<Polynomial<PrimeField>> {
    let mons = monomials_of_degree(nvars, d);
    let p = field.modulus();
    let total = p.pow(mons.len() as u32);
    (0..total)
        .map(|mut i| {
            let coeffs: Vec<u64> = mons
                .iter()
                .map(|_| {
                    let c = i % p;
                    i /= p;
                    c
                })
                .collect();
            Polynomial::from_coefficients(field, nvars, &mons, &coeffs)
        })
        .collect()
}

/// Projective representatives: leading coefficient 1.
pub fn all_normalized_forms(field: &PrimeField, nvars: usize, d: u32) -> Vec<Polynomial<PrimeField>> {
    all_forms(field, nvars, d)
        .into_iter()
        .filter(|f| f.leading_coefficient() == Some(&1))
        .collect()
}

pub fn coefficient_key(f: &Polynomial<PrimeField>, mons: &[Monomial]) -> Vec<u64> {
    f.coefficients_in(mons)
}

/// Coefficient vectors of all squares of degree-`2e` forms.
pub fn squares_of_degree(field: &PrimeField, nvars: usize, e: u32) -> HashSet<Vec<u64>> {
    let mons = monomials_of_degree(nvars, 2 * e);
    all_forms(field, nvars, e)
        .iter()
        .map(|h| coefficient_key(&h.square(), &mons))
        .collect()
}

/// Points of P^(n-1) with first nonzero coordinate 1.
pub fn projective_points(field: &PrimeField, n: usize) -> Vec<Vec<u64>> {
    let p = field.modulus();
    (0..p.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let c = i % p;
                    i /= p;
                    c
                })
                .collect::<Vec<u64>>()
        })
        .filter(|pt| pt.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

/// Two distinct projective points of the line `f = 0` in P^2, found by
/// evaluation.
pub fn points_on_line(f: &Polynomial<PrimeField>) -> (Vec<u64>, Vec<u64>) {
    let field = f.field();
    let p = field.modulus();
    let mut found: Vec<Vec<u64>> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let pt = vec![a, b, c];
                if pt.iter().all(|&v| v == 0) || f.evaluate(&pt) != 0 {
                    continue;
                }
                // skip multiples of a point already found
                let proportional = found
                    .iter()
                    .any(|q| (0..3).all(|i| (0..3).all(|j| field.mul(&pt[i], &q[j]) == field.mul(&pt[j], &q[i]))));
                if !proportional {
                    found.push(pt);
                    if found.len() == 2 {
                        return (found[0].clone(), found[1].clone());
                    }
                }
            }
        }
    }
    unreachable!("a line over GF(p) has p + 1 points")
}

/// Is `F` restricted to the line `f = 0` a square of a binary form of
/// degree `l`? The line is parametrized through two of its points.
pub fn restriction_is_square(cover: &DoubleCover<PrimeField>, f: &Polynomial<PrimeField>) -> bool {
    let field = cover.field();
    let (a, b) = points_on_line(f);
    let s = Polynomial::var(field, 2, 0);
    let t = Polynomial::var(field, 2, 1);
    let images: Vec<_> = (0..3).map(|i| &s.scale(&a[i]) + &t.scale(&b[i])).collect();
    let restricted = cover.branch().compose(&images).unwrap();
    all_forms(field, 2, cover.l()).iter().any(|h| h.square() == restricted)
}

pub fn random_form<R: Rng>(rng: &mut R, field: &PrimeField, nvars: usize, d: u32) -> Polynomial<PrimeField> {
    let mons = monomials_of_degree(nvars, d);
    let p = field.modulus();
    let coeffs: Vec<u64> = mons.iter().map(|_| rng.gen_range(0..p)).collect();
    Polynomial::from_coefficients(field, nvars, &mons, &coeffs)
}

pub fn conic(field: &PrimeField) -> DoubleCover<PrimeField> {
    DoubleCover::new(poly(field, 3, "y^2 - x*z"), 1).unwrap()
}

pub fn quartic(field: &PrimeField) -> DoubleCover<PrimeField> {
    DoubleCover::new(poly(field, 3, "z^4 + x*(x^3 + y^3 + x*z^2)"), 2).unwrap()
}
