use super::Polynomial;
use crate::error::PolyError;
use crate::field::Field;

impl<K: Field> Polynomial<K> {
    /// Division by a single divisor under the global term order:
    /// `self = quotient * f + remainder`, where no term of `remainder` is
    /// divisible by the leading monomial of `f`.
    pub fn reduce(&self, f: &Self) -> Result<(Self, Self), PolyError> {
        self.check_compatible(f)?;
        let (lm, lc) = f.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = self.field.inv(lc).expect("nonzero leading coefficient");
        let mut rest = self.clone();
        let mut quotient = Self::zero(&self.field, self.nvars);
        let mut remainder = Self::zero(&self.field, self.nvars);
        while let Some((m, c)) = rest.leading_term() {
            let (m, c) = (m.clone(), c.clone());
            match m.div(lm) {
                Some(qm) => {
                    let qc = self.field.mul(&c, &lc_inv);
                    rest = &rest - &f.mul_monomial(&qm, &qc);
                    quotient.add_term(qm, qc);
                }
                None => {
                    rest.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        Ok((quotient, remainder))
    }

    /// `Some(q)` with `self = q * f` if `f` divides `self`, else `None`.
    pub fn divide_exact(&self, f: &Self) -> Result<Option<Self>, PolyError> {
        self.check_compatible(f)?;
        let (lm, lc) = f.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = self.field.inv(lc).expect("nonzero leading coefficient");
        let mut rest = self.clone();
        let mut quotient = Self::zero(&self.field, self.nvars);
        while let Some((m, c)) = rest.leading_term() {
            // a leading term of a multiple of f is divisible by lm(f)
            let Some(qm) = m.div(lm) else {
                return Ok(None);
            };
            let qc = self.field.mul(c, &lc_inv);
            rest = &rest - &f.mul_monomial(&qm, &qc);
            quotient.add_term(qm, qc);
        }
        Ok(Some(quotient))
    }

    /// Restrict to the hyperplane `f = 0` by solving `f` for its variable
    /// of highest index. Returns the restricted form in the remaining
    /// variables and the index of the eliminated variable.
    pub fn substitute_linear(&self, f: &Self) -> Result<(Self, usize), PolyError> {
        self.check_compatible(f)?;
        if f.is_zero() || !f.is_form_of_degree(1) {
            return Err(PolyError::NotLinear);
        }
        let field = &self.field;
        let n = self.nvars;
        let linear: Vec<K::Elem> = (0..n)
            .map(|i| f.coefficient(&crate::monomial::Monomial::var(n, i)))
            .collect();
        let j = (0..n)
            .rev()
            .find(|&i| !field.is_zero(&linear[i]))
            .expect("nonzero linear form");
        let minus_inv = field.neg(&field.inv(&linear[j]).expect("nonzero"));
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            if i == j {
                let mut sub = Self::zero(field, n - 1);
                for (k, c) in linear.iter().enumerate().take(j) {
                    let v = Self::var(field, n - 1, k).scale(&field.mul(c, &minus_inv));
                    sub = &sub + &v;
                }
                images.push(sub);
            } else {
                let k = if i < j { i } else { i - 1 };
                images.push(Self::var(field, n - 1, k));
            }
        }
        Ok((self.compose(&images)?, j))
    }
}

#[cfg(test)]
mod tests {
    use crate::error::PolyError;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::Polynomial;

    fn q(s: &str) -> Polynomial<Rationals> {
        Polynomial::parse(s, 3, &Rationals).unwrap()
    }

    #[test]
    fn exact_division_examples() {
        let b = &q("y^2 - x*z") - &q("y^2");
        assert_eq!(b.divide_exact(&q("x")).unwrap(), Some(q("-z")));
        assert_eq!(q("y^2 - x*z").divide_exact(&q("y")).unwrap(), None);
        assert_eq!(q("0").divide_exact(&q("x + y")).unwrap(), Some(q("0")));
        assert_eq!(q("x").divide_exact(&q("0")), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn reduce_returns_normal_form() {
        let f = q("x + y");
        let (quo, rem) = q("x^2 + 3*y*z").reduce(&f).unwrap();
        assert_eq!(&(&quo * &f) + &rem, q("x^2 + 3*y*z"));
        // lm(x + y) = x, so the remainder is free of x
        assert!(rem.terms().all(|(m, _)| m.exponents()[0] == 0));
    }

    #[test]
    fn substitute_coordinate_hyperplanes() {
        let f = q("y^2 - x*z");
        let two = |s: &str| Polynomial::parse(s, 2, &Rationals).unwrap();
        // x = 0 leaves y^2 in (y, z)
        assert_eq!(f.substitute_linear(&q("x")).unwrap(), (two("x0^2"), 0));
        // z = 0 leaves y^2 in (x, y)
        assert_eq!(f.substitute_linear(&q("z")).unwrap(), (two("x1^2"), 2));
        // y = 0 leaves -xz in (x, z)
        assert_eq!(f.substitute_linear(&q("y")).unwrap(), (two("-x0*x1"), 1));
    }

    #[test]
    fn substitute_general_line() {
        let f7 = PrimeField::new(7).unwrap();
        let p = |s: &str| Polynomial::parse(s, 3, &f7).unwrap();
        // z = 2x + 3y  =>  y^2 - x(2x + 3y)
        let (r, j) = p("y^2 - x*z").substitute_linear(&p("2*x + 3*y - z")).unwrap();
        assert_eq!(j, 2);
        assert_eq!(r, Polynomial::parse("x1^2 - 2*x0^2 - 3*x0*x1", 2, &f7).unwrap());
        assert_eq!(p("x").substitute_linear(&p("x*y")), Err(PolyError::NotLinear));
    }
}
