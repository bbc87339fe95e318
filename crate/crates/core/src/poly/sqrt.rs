//! Formal square roots of forms by greedy coefficient matching.
//!
//! The leading term of the root is fixed by the leading term of the input;
//! each further term is read off the leading term of the residual
//! `b - r^2`, dividing by `2 * lt(r)`. In characteristic not 2 this
//! terminates with residual zero exactly when `b` is a square.

use super::Polynomial;
use crate::error::PolyError;
use crate::field::Field;

/// A root `root` with `root^2 = unit * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRoot<K: Field> {
    pub root: Polynomial<K>,
    pub unit: K::Elem,
}

impl<K: Field> Polynomial<K> {
    /// A polynomial `r` with `r^2 = self` over the coefficient field,
    /// normalized to a positive leading coefficient.
    pub fn formal_square_root(&self) -> Result<Option<Self>, PolyError> {
        self.check_square_root_input()?;
        let Some(lc) = self.leading_coefficient() else {
            return Ok(Some(self.clone()));
        };
        let Some(lc_root) = self.field.sqrt(lc) else {
            return Ok(None);
        };
        Ok(self.greedy_root(lc_root))
    }

    /// Square root over the algebraic closure: a nonsquare leading
    /// coefficient is absorbed into a unit, so `root^2 = unit * self`.
    pub fn formal_square_root_up_to_unit(&self) -> Result<Option<SquareRoot<K>>, PolyError> {
        self.check_square_root_input()?;
        let field = self.field.clone();
        let Some(lc) = self.leading_coefficient() else {
            return Ok(Some(SquareRoot {
                root: self.clone(),
                unit: field.one(),
            }));
        };
        if let Some(lc_root) = field.sqrt(lc) {
            return Ok(self.greedy_root(lc_root).map(|root| SquareRoot {
                root,
                unit: field.one(),
            }));
        }
        let unit = field.inv(lc).expect("nonzero");
        let scaled = self.scale(&unit);
        Ok(scaled.greedy_root(field.one()).map(|root| SquareRoot { root, unit }))
    }

    fn check_square_root_input(&self) -> Result<(), PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        match self.degree() {
            Some(d) if d % 2 == 1 => Err(PolyError::OddDegree(d)),
            _ => Ok(()),
        }
    }

    fn greedy_root(&self, lc_root: K::Elem) -> Option<Self> {
        let field = &self.field;
        let (lm, _) = self.leading_term()?;
        let lm_root = lm.sqrt()?;
        let two_lead = field.mul(&field.two(), &lc_root);
        let two_lead_inv = field.inv(&two_lead).expect("char != 2");
        let mut root = Self::term(field, lm_root.clone(), lc_root);
        let mut residual = self - &root.square();
        while let Some((m, c)) = residual.leading_term() {
            let tm = m.div(&lm_root)?;
            // every term of the root is below its leading term
            if tm >= lm_root {
                return None;
            }
            let tc = field.mul(c, &two_lead_inv);
            let t = Self::term(field, tm, tc);
            let cross = &root * &t;
            residual = &(&residual - &(&cross + &cross)) - &t.square();
            root = &root + &t;
        }
        Some(root.sign_normalized())
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
    fn square_root_examples() {
        assert_eq!(q("y^2").formal_square_root().unwrap(), Some(q("y")));
        assert_eq!(q("-x*z").formal_square_root().unwrap(), None);
        assert_eq!(q("-x*z").formal_square_root_up_to_unit().unwrap(), None);
        assert_eq!(q("x^2 + 2*x*y + y^2").formal_square_root().unwrap(), Some(q("x + y")));
        assert_eq!(q("0").formal_square_root().unwrap(), Some(q("0")));
    }

    #[test]
    fn rejects_odd_and_inhomogeneous() {
        assert_eq!(q("x^3").formal_square_root(), Err(PolyError::OddDegree(3)));
        assert_eq!(q("x^2 + y").formal_square_root(), Err(PolyError::NotHomogeneous));
    }

    #[test]
    fn nonsquare_unit_over_q() {
        // 2*(x - y)^2 is a square only after adjoining sqrt(2)
        let b = q("2*x^2 - 4*x*y + 2*y^2");
        assert_eq!(b.formal_square_root().unwrap(), None);
        let s = b.formal_square_root_up_to_unit().unwrap().unwrap();
        assert_eq!(s.root.square(), b.scale(&s.unit));
        assert_eq!(s.root, q("x - y"));
    }

    #[test]
    fn rational_coefficients() {
        let r = q("1/2*x - 3*y*1 + 2/3*z");
        let b = r.square();
        let root = b.formal_square_root().unwrap().unwrap();
        assert!(root == r || root == -&r);
    }

    #[test]
    fn nonsquare_unit_over_fp() {
        let f = PrimeField::new(7).unwrap();
        // 3 is a non-residue mod 7
        let b = Polynomial::parse("3*x^2 + 6*x*y + 3*y^2", 3, &f).unwrap();
        assert_eq!(b.formal_square_root().unwrap(), None);
        let s = b.formal_square_root_up_to_unit().unwrap().unwrap();
        assert_eq!(s.root.square(), b.scale(&s.unit));
    }

    #[test]
    fn quartic_root() {
        let r = q("z^2 + x*y - 5*y^2");
        assert_eq!(r.square().formal_square_root().unwrap(), Some(r.clone()));
        let near = &r.square() + &q("x^4");
        assert_eq!(near.formal_square_root().unwrap(), None);
    }
}
