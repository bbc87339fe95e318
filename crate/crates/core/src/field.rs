//! Exact coefficient fields: the rationals and prime fields GF(p), p odd.
//!
//! Fields are passed around as small context values implementing [`Field`];
//! elements carry no reference to their field. Characteristic 2 is refused
//! at construction since `t^2 = F` degenerates there.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Runtime description of a coefficient field, as written on the command
/// line and in certificate files (`q` or `fp:P`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CoefficientField {
    Rationals,
    Prime(u64),
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "q"),
            CoefficientField::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for CoefficientField {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(CoefficientField::Rationals);
        }
        let Some(p) = s.strip_prefix("fp:") else {
            return Err(FieldError::BadDescriptor(s.to_string()));
        };
        let p: u64 = p.parse().map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        PrimeField::new(p)?;
        Ok(CoefficientField::Prime(p))
    }
}

impl TryFrom<String> for CoefficientField {
    type Error = FieldError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<CoefficientField> for String {
    fn from(f: CoefficientField) -> String {
        f.to_string()
    }
}

/// An exact field of characteristic not 2.
// field elements are created through the field object, so `from_*` takes `&self`
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// The image of `num / den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, FieldError>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Some square root of `a`, if `a` is a square in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Sign convention used to pick one of `±a`: positive over Q, and
    /// `1..=(p-1)/2` over GF(p). Exactly one of `a`, `-a` is positive for
    /// nonzero `a`.
    fn is_positive(&self, a: &Self::Elem) -> bool;

    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;

    /// The `i`-th element of a finite field (`0 <= i < order`). Elements
    /// `1..=(order-1)/2` are exactly the positive ones.
    fn element(&self, i: u64) -> Self::Elem;

    fn descriptor(&self) -> CoefficientField;

    /// Sign and magnitude for printing: `(is_negative, digits)`.
    fn signed_repr(&self, a: &Self::Elem) -> (bool, String);

    /// The scalar `c` such that `c * (coefficients)` has the canonical
    /// normalization (content 1 and positive leading coefficient over Q,
    /// leading coefficient 1 over GF(p)). `coeffs` is nonempty and leads
    /// with the leading coefficient.
    fn normalizing_factor<'a, I>(&self, coeffs: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn two(&self) -> Self::Elem {
        self.from_i64(2)
    }
}

/// The field of rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        let n = bigint_sqrt_exact(a.numer())?;
        let d = bigint_sqrt_exact(a.denom())?;
        Some(BigRational::new(n, d))
    }
    fn is_positive(&self, a: &BigRational) -> bool {
        a.is_positive()
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn element(&self, i: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(i))
    }
    fn descriptor(&self) -> CoefficientField {
        CoefficientField::Rationals
    }
    fn signed_repr(&self, a: &BigRational) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }
    fn normalizing_factor<'a, I>(&self, coeffs: I) -> BigRational
    where
        I: IntoIterator<Item = &'a BigRational>,
    {
        let mut it = coeffs.into_iter().peekable();
        let negative = it.peek().map(|c| c.is_negative()).unwrap_or(false);
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in it {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        if negative {
            -factor
        } else {
            factor
        }
    }
}

/// The prime field GF(p) for an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        if p >= 1 << 63 || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            e >>= 1;
        }
        acc
    }

    /// Euler's criterion.
    pub fn is_square(&self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Smallest quadratic non-residue.
    pub fn non_residue(&self) -> u64 {
        (2..self.p)
            .find(|&z| !self.is_square(z))
            .expect("odd prime has non-residues")
    }

    /// Reduce an arbitrary integer into `0..p`.
    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = n.mod_floor(&m);
        r.to_u64().expect("residue fits")
    }

    // Tonelli-Shanks.
    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if !self.is_square(a) {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow(a, (p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = self.non_residue();
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mulmod(t2, t2, p);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        Some(r)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64, FieldError> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return Err(FieldError::DenominatorDivisibleByP {
                den: den.to_string(),
                p: self.p,
            });
        }
        let n = self.reduce_bigint(num);
        Ok(mulmod(n, self.pow(d, self.p - 2), self.p))
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn sqrt(&self, a: &u64) -> Option<u64> {
        self.tonelli_shanks(*a)
    }
    fn is_positive(&self, a: &u64) -> bool {
        *a != 0 && *a <= (self.p - 1) / 2
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn element(&self, i: u64) -> u64 {
        i % self.p
    }
    fn descriptor(&self) -> CoefficientField {
        CoefficientField::Prime(self.p)
    }
    fn signed_repr(&self, a: &u64) -> (bool, String) {
        if *a > (self.p - 1) / 2 {
            (true, (self.p - a).to_string())
        } else {
            (false, a.to_string())
        }
    }
    fn normalizing_factor<'a, I>(&self, coeffs: I) -> u64
    where
        I: IntoIterator<Item = &'a u64>,
    {
        coeffs.into_iter().next().and_then(|lc| self.inv(lc)).unwrap_or(1)
    }
}

/// Map a rational into GF(p); fails when `p` divides the denominator.
pub fn reduce_rational(field: &PrimeField, r: &BigRational) -> Result<u64, FieldError> {
    field.from_ratio(r.numer(), r.denom())
}

/// Lift `a` in GF(p) to the symmetric integer representative.
pub fn symmetric_lift(field: &PrimeField, a: u64) -> BigInt {
    let (neg, _) = field.signed_repr(&a);
    if neg {
        BigInt::from_biguint(Sign::Minus, (field.p - a).into())
    } else {
        BigInt::from(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert_eq!(PrimeField::new(2), Err(FieldError::CharacteristicTwo));
        assert_eq!(PrimeField::new(9), Err(FieldError::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert!(PrimeField::new(1_000_000_007).is_ok());
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["q", "fp:7", "fp:101"] {
            let f: CoefficientField = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("fp:4".parse::<CoefficientField>().is_err());
        assert!("fp:2".parse::<CoefficientField>().is_err());
        assert!("gf7".parse::<CoefficientField>().is_err());
    }

    #[test]
    fn sqrt_mod_p_matches_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 17, 41, 73, 97] {
            let f = PrimeField::new(p).unwrap();
            for a in 0..p {
                let brute = (0..p).any(|x| x * x % p == a);
                assert_eq!(f.is_square(a), brute, "p={p} a={a}");
                match f.sqrt(&a) {
                    Some(r) => assert_eq!(r * r % p, a),
                    None => assert!(!brute),
                }
            }
        }
    }

    #[test]
    fn positive_half_splits_units() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            assert_ne!(f.is_positive(&a), f.is_positive(&f.neg(&a)));
        }
    }

    #[test]
    fn rational_normalization() {
        let q = Rationals;
        let c = [q.from_i64(-4), BigRational::new(6.into(), 5.into())];
        let k = q.normalizing_factor(c.iter());
        assert_eq!(q.mul(&k, &c[0]), q.from_i64(10));
        assert_eq!(q.mul(&k, &c[1]), q.from_i64(-3));
    }

    #[test]
    fn ratio_with_p_in_denominator_fails() {
        let f = PrimeField::new(5).unwrap();
        assert!(f.from_ratio(&1.into(), &10.into()).is_err());
        assert_eq!(f.from_ratio(&1.into(), &2.into()).unwrap(), 3);
    }
}
