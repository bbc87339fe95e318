//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := integer ["/" integer] | var ["^" integer] | "(" poly ")" ["^" integer]
//! ```
//!
//! Variables are `x`, `y`, `z` for three variables and `x0 .. xN` otherwise
//! (`x0 .. x2` are accepted as aliases in the three-variable case).
//! Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::One;

use super::Polynomial;
use crate::error::{ParseError, PolyError};
use crate::field::Field;
use crate::monomial::Monomial;

/// Printing names for `nvars` variables.
pub fn variable_names(nvars: usize) -> Vec<String> {
    if nvars == 3 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    field: &'a K,
}

impl<'a, K: Field> Parser<'a, K> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse(ParseError {
            position: self.pos,
            message: message.into(),
        }))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }

    fn variable(&mut self) -> Result<usize, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let index = match name {
            "x" | "y" | "z" if self.nvars == 3 => Some(["x", "y", "z"].iter().position(|v| *v == name).unwrap()),
            _ => name
                .strip_prefix('x')
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i < self.nvars),
        };
        match index {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                self.err(format!("unknown variable `{name}`"))
            }
        }
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.pos;
        let k = self.integer()?;
        match u32::try_from(k) {
            Ok(k) => Ok(k),
            Err(_) => {
                self.pos = at;
                self.err("exponent too large")
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<K>, PolyError> {
        let mut exps = vec![0u32; self.nvars];
        let mut coeff = self.field.one();
        let mut groups: Vec<Polynomial<K>> = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.integer()?;
                    let den = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let at = self.pos;
                        let d = self.integer()?;
                        if d == BigInt::from(0) {
                            self.pos = at;
                            return self.err("zero denominator");
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    let at = self.pos;
                    let c = self.field.from_ratio(&num, &den).map_err(|e| {
                        PolyError::Parse(ParseError {
                            position: at,
                            message: format!("coefficient not in field: {e}"),
                        })
                    })?;
                    coeff = self.field.mul(&coeff, &c);
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let v = self.variable()?;
                    exps[v] += self.exponent()?;
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.poly(true)?;
                    if self.peek() != Some(b')') {
                        return self.err("expected `)`");
                    }
                    self.pos += 1;
                    let e = self.exponent()?;
                    groups.push(inner.pow(e));
                }
                Some(_) => return self.err("expected a coefficient or variable"),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let mut out = Polynomial::term(self.field, Monomial::from_exponents(&exps), coeff);
        for g in &groups {
            out = &out * g;
        }
        Ok(out)
    }

    fn poly(&mut self, nested: bool) -> Result<Polynomial<K>, PolyError> {
        let mut out = Polynomial::zero(self.field, self.nvars);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            out = if negate { &out - &t } else { &out + &t };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(b')') if nested => break,
                None if !nested => break,
                None => return self.err("expected `)`"),
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

impl<K: Field> Polynomial<K> {
    pub fn parse(text: &str, nvars: usize, field: &K) -> Result<Self, PolyError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            nvars,
            field,
        };
        if nvars == 0 {
            return p.err("need at least one variable");
        }
        p.poly(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn parses_literals() {
        let p = Polynomial::parse("y^2 - x*z", 3, &Rationals).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert!(Polynomial::parse("0", 3, &Rationals).unwrap().is_zero());
        let f5 = PrimeField::new(5).unwrap();
        let q = Polynomial::parse("x^4 + y^4 + z^4", 3, &f5).unwrap();
        assert_eq!(q.num_terms(), 3);
        assert!(q.terms().all(|(_, c)| *c == 1));
    }

    #[test]
    fn whitespace_and_aliases() {
        let a = Polynomial::parse(" x0 *x2-  3/4 * x1 ^ 2 ", 3, &Rationals).unwrap();
        let b = Polynomial::parse("x*z - 3/4*y^2", 3, &Rationals).unwrap();
        assert_eq!(a, b);
        let c = Polynomial::parse("x3^2 - x0*x1", 4, &Rationals).unwrap();
        assert_eq!(c.to_string(), "-x0*x1 + x3^2");
    }

    #[test]
    fn reports_positions() {
        let e = Polynomial::parse("x + w", 3, &Rationals).unwrap_err();
        assert_eq!(
            e,
            PolyError::Parse(ParseError {
                position: 4,
                message: "unknown variable `w`".into()
            })
        );
        let e = Polynomial::parse("x +", 3, &Rationals).unwrap_err();
        assert!(matches!(e, PolyError::Parse(ParseError { position: 3, .. })));
        let e = Polynomial::parse("x ** y", 3, &Rationals).unwrap_err();
        assert!(matches!(e, PolyError::Parse(ParseError { position: 3, .. })));
        let e = Polynomial::parse("x3", 3, &Rationals).unwrap_err();
        assert!(matches!(e, PolyError::Parse(ParseError { position: 0, .. })));
    }

    #[test]
    fn parenthesized_factors() {
        let a = Polynomial::parse("z^4 + x*(x^3 + y^3 + x*z^2)", 3, &Rationals).unwrap();
        let b = Polynomial::parse("z^4 + x^4 + x*y^3 + x^2*z^2", 3, &Rationals).unwrap();
        assert_eq!(a, b);
        let c = Polynomial::parse("-(y^2 - x*z)^2", 3, &Rationals).unwrap();
        assert_eq!(c.num_terms(), 3);
        assert!(Polynomial::parse("(x + y", 3, &Rationals).is_err());
        assert!(Polynomial::parse("x + y)", 3, &Rationals).is_err());
    }

    #[test]
    fn division_by_p_is_rejected() {
        let f5 = PrimeField::new(5).unwrap();
        let e = Polynomial::parse("1/5*x", 3, &f5).unwrap_err();
        assert!(matches!(e, PolyError::Parse(ParseError { position: 3, .. })));
        assert!(Polynomial::parse("1/0*x", 3, &Rationals).is_err());
    }
}
