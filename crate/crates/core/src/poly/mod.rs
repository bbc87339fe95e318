//! Sparse multivariate polynomials over an exact field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under the global
//! grevlex order, so the leading term is the last entry. Zero coefficients
//! are never stored.

mod division;
mod parse;
mod sqrt;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::PolyError;
use crate::field::Field;
use crate::monomial::Monomial;

pub use parse::variable_names;
pub use sqrt::SquareRoot;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<K: Field> {
    field: K,
    nvars: usize,
    terms: BTreeMap<Monomial, K::Elem>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(field: &K, nvars: usize) -> Self {
        Polynomial {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &K, nvars: usize, c: K::Elem) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn one(field: &K, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn term(field: &K, m: Monomial, c: K::Elem) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(field, nvars);
        if !field.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(field: &K, nvars: usize, i: usize) -> Self {
        Self::term(field, Monomial::var(nvars, i), field.one())
    }

    /// Build from `(monomial, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms<I>(field: &K, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, K::Elem)>,
    {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: K::Elem) {
        use std::collections::btree_map::Entry;
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K::Elem)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> K::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &K::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&K::Elem> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Is this zero or homogeneous of degree `d`?
    pub fn is_form_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(PolyError::VariableCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), self.field.mul(a, c)))
            .collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.field, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Canonical representative of the line `K^* * self`: content 1 with a
    /// positive leading coefficient over Q, monic over GF(p).
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.field.normalizing_factor(self.terms.values().rev());
        self.scale(&c)
    }

    /// `self` or `-self`, whichever has a positive leading coefficient.
    pub fn sign_normalized(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) if !self.field.is_positive(c) => -self,
            _ => self.clone(),
        }
    }

    /// Apply a coefficient map into another field.
    pub fn map_field<L, E, F>(&self, target: &L, mut f: F) -> Result<Polynomial<L>, E>
    where
        L: Field,
        F: FnMut(&K::Elem) -> Result<L::Elem, E>,
    {
        let mut out = Polynomial::zero(target, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Coefficients against a monomial basis (missing monomials give zero).
    pub fn coefficients_in(&self, basis: &[Monomial]) -> Vec<K::Elem> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    /// `sum c_i * basis_i`.
    pub fn from_coefficients(field: &K, nvars: usize, basis: &[Monomial], coeffs: &[K::Elem]) -> Self {
        Self::from_terms(field, nvars, basis.iter().cloned().zip(coeffs.iter().cloned()))
    }

    /// Value at a point of `K^nvars`.
    pub fn evaluate(&self, point: &[K::Elem]) -> K::Elem {
        assert_eq!(point.len(), self.nvars);
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = f.mul(&t, x);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f, self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            out.add_term(Monomial::from_exponents(&ex), f.mul(c, &f.from_i64(e as i64)));
        }
        out
    }

    /// Substitute polynomial `images[i]` for `x_i`. All images share one
    /// variable count, which becomes the result's.
    pub fn compose(&self, images: &[Polynomial<K>]) -> Result<Self, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::VariableCountMismatch(self.nvars, images.len()));
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let target_vars = first.nvars;
        for im in images {
            if im.field != self.field {
                return Err(PolyError::FieldMismatch);
            }
            if im.nvars != target_vars {
                return Err(PolyError::VariableCountMismatch(target_vars, im.nvars));
            }
        }
        let max_exp: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|m| m.exponents()[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Self>> = images
            .iter()
            .zip(&max_exp)
            .map(|(im, &e)| {
                let mut v = vec![Self::one(&self.field, target_vars)];
                for k in 0..e as usize {
                    let next = &v[k] * im;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(&self.field, target_vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.field, target_vars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-embed into one more variable, inserting `x_index` with exponent 0.
    pub fn insert_variable(&self, index: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_var_inserted(index, 0), c.clone()))
            .collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars + 1,
            terms,
        }
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = variable_names(self.nvars);
        for (i, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = self.field.signed_repr(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || m.degree() == 0 {
                factors.push(mag);
            }
            for (name, &e) in names.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{:?}]({self})", self.field.descriptor())
    }
}

// Operator impls panic on mismatched operands; use the `try_*` methods at
// API boundaries.
impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: Self) -> Polynomial<K> {
        self.try_add(rhs).expect("operand mismatch in polynomial add")
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: Self) -> Polynomial<K> {
        self.try_sub(rhs).expect("operand mismatch in polynomial sub")
    }
}

impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: Self) -> Polynomial<K> {
        self.try_mul(rhs).expect("operand mismatch in polynomial mul")
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(s: &str) -> Polynomial<Rationals> {
        Polynomial::parse(s, 3, &Rationals).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let x = q("x");
        let lhs = &(&x * &q("-z")) + &q("y^2");
        assert_eq!(lhs, q("y^2 - x*z"));
        assert!((&x * &q("0")).is_zero());
        assert_eq!(&q("x + y") * &q("x - y"), q("x^2 - y^2"));
    }

    #[test]
    fn display_uses_term_order() {
        assert_eq!(q("-x*z + y^2").to_string(), "y^2 - x*z");
        assert_eq!(q("3/2*x^2 - 1").to_string(), "3/2*x^2 - 1");
        assert_eq!(q("0").to_string(), "0");
        let f5 = PrimeField::new(5).unwrap();
        let p = Polynomial::parse("4*z + x", 3, &f5).unwrap();
        assert_eq!(p.to_string(), "x - z");
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = q("x");
        let b = Polynomial::parse("x0", 4, &Rationals).unwrap();
        assert_eq!(a.try_add(&b), Err(PolyError::VariableCountMismatch(3, 4)));
        let f5 = PrimeField::new(5).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let c = Polynomial::parse("x", 3, &f5).unwrap();
        let d = Polynomial::parse("x", 3, &f7).unwrap();
        assert_eq!(c.try_mul(&d), Err(PolyError::FieldMismatch));
    }

    #[test]
    fn homogeneous_product_degree() {
        let a = q("x^2 + y*z");
        let b = q("x - 2*z");
        let c = &a * &b;
        assert!(c.is_homogeneous());
        assert_eq!(c.degree(), Some(3));
    }

    #[test]
    fn normalize_over_q_and_fp() {
        assert_eq!(q("-2*x + 4/3*y").normalize(), q("3*x - 2*y"));
        let f7 = PrimeField::new(7).unwrap();
        let p = Polynomial::parse("3*x + y", 3, &f7).unwrap();
        assert_eq!(p.normalize(), Polynomial::parse("x + 5*y", 3, &f7).unwrap());
    }

    #[test]
    fn compose_and_evaluate() {
        let f = q("y^2 - x*z");
        // the standard conic parametrization (s^2, s*t, t^2)
        let s = Polynomial::parse("x0^2", 2, &Rationals).unwrap();
        let st = Polynomial::parse("x0*x1", 2, &Rationals).unwrap();
        let t = Polynomial::parse("x1^2", 2, &Rationals).unwrap();
        assert!(f.compose(&[s, st, t]).unwrap().is_zero());
        let r = &Rationals;
        assert_eq!(
            f.evaluate(&[r.from_i64(1), r.from_i64(2), r.from_i64(3)]),
            r.from_i64(1)
        );
    }

    #[test]
    fn derivative_of_conic() {
        assert_eq!(q("y^2 - x*z").derivative(1), q("2*y"));
        assert_eq!(q("y^2 - x*z").derivative(0), q("-z"));
    }
}
