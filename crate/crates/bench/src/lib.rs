//! Fixtures shared by the criterion benches.

use splitcert::{DoubleCover, Field, Polynomial, PrimeField};

pub fn plane_poly<K: Field>(field: &K, text: &str) -> Polynomial<K> {
    Polynomial::parse(text, 3, field).expect("fixture parses")
}

/// The smooth conic `y^2 - xz` over GF(p).
pub fn conic_cover(p: u64) -> DoubleCover<PrimeField> {
    let f = PrimeField::new(p).expect("prime");
    DoubleCover::new(plane_poly(&f, "y^2 - x*z"), 1).expect("valid cover")
}

/// The quartic `z^4 + x(x^3 + y^3 + x z^2)` over GF(p).
pub fn quartic_cover(p: u64) -> DoubleCover<PrimeField> {
    let f = PrimeField::new(p).expect("prime");
    DoubleCover::new(plane_poly(&f, "z^4 + x*(x^3 + y^3 + x*z^2)"), 2).expect("valid cover")
}
