//! Indexed enumerations of forms over a finite field.
//!
//! A form of degree `d` is a coefficient vector against the monomial basis
//! of degree `d` listed largest first. Two enumerations are provided: one
//! representative per projective point (leading coefficient 1), and one
//! representative per sign class `{v, -v}` (leading coefficient in the
//! positive half, plus the zero form at index 0). Both are ordered by
//! leading monomial, smallest first.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representatives {
    /// Leading coefficient 1.
    Projective,
    /// Zero, then leading coefficient in `1..=(p-1)/2`.
    SignClasses,
}

#[derive(Clone, Debug)]
pub struct FormEnumerator<K: Field> {
    field: K,
    nvars: usize,
    basis: Vec<Monomial>,
    order: u64,
    mode: Representatives,
}

impl<K: Field> FormEnumerator<K> {
    /// Enumerate forms spanned by `basis` (largest monomial first). Returns
    /// `None` over an infinite field.
    pub fn new(field: &K, nvars: usize, basis: Vec<Monomial>, mode: Representatives) -> Option<Self> {
        let order = field.order()?;
        Some(FormEnumerator {
            field: field.clone(),
            nvars,
            basis,
            order,
            mode,
        })
    }

    fn leads(&self) -> u128 {
        match self.mode {
            Representatives::Projective => 1,
            Representatives::SignClasses => (self.order as u128 - 1) / 2,
        }
    }

    /// Number of forms enumerated (saturating).
    pub fn count(&self) -> u128 {
        let p = self.order as u128;
        let mut total: u128 = match self.mode {
            Representatives::Projective => 0,
            Representatives::SignClasses => 1,
        };
        let mut pw: u128 = 1;
        for _ in 0..self.basis.len() {
            total = total.saturating_add(self.leads().saturating_mul(pw));
            pw = pw.saturating_mul(p);
        }
        total
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// The `index`-th form, `0 <= index < count()`.
    pub fn form(&self, mut index: u128) -> Polynomial<K> {
        let dim = self.basis.len();
        let zero = Polynomial::zero(&self.field, self.nvars);
        if self.mode == Representatives::SignClasses {
            if index == 0 {
                return zero;
            }
            index -= 1;
        }
        let p = self.order as u128;
        let mut tail = 1u128;
        for pos in (0..dim).rev() {
            let block = self.leads() * tail;
            if index < block {
                let lead = (index / tail) as u64 + 1;
                let mut rest = index % tail;
                let mut terms = Vec::with_capacity(dim - pos);
                terms.push((self.basis[pos].clone(), self.field.element(lead)));
                for m in &self.basis[pos + 1..] {
                    let digit = (rest % p) as u64;
                    rest /= p;
                    terms.push((m.clone(), self.field.element(digit)));
                }
                return Polynomial::from_terms(&self.field, self.nvars, terms);
            }
            index -= block;
            tail *= p;
        }
        panic!("form index out of range");
    }
}
