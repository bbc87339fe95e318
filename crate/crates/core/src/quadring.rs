//! The graded ring `k[x0..xn][t] / (t^2 - F)` of a double cover of `P^n`.
//!
//! An element `p + q t` of grade `k` has `p` a form of degree `k` and `q`
//! a form of degree `k - l`, where `deg F = 2l`. Mixed grades are not
//! representable.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

/// A double cover of `P^n` branched along `F = 0` with `deg F = 2l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCover<K: Field> {
    branch: Polynomial<K>,
    l: u32,
}

impl<K: Field> DoubleCover<K> {
    pub fn new(branch: Polynomial<K>, l: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidCover("l must be at least 1".into()));
        }
        if branch.nvars() < 2 {
            return Err(Error::InvalidCover("need at least two variables".into()));
        }
        if branch.is_zero() {
            return Err(Error::InvalidCover("branch equation is zero".into()));
        }
        if !branch.is_form_of_degree(2 * l) {
            return Err(Error::InvalidCover(format!(
                "branch equation must be homogeneous of degree 2l = {}",
                2 * l
            )));
        }
        Ok(DoubleCover { branch, l })
    }

    pub fn branch(&self) -> &Polynomial<K> {
        &self.branch
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Dimension `n` of the base `P^n`.
    pub fn n(&self) -> usize {
        self.branch.nvars() - 1
    }

    pub fn nvars(&self) -> usize {
        self.branch.nvars()
    }

    pub fn field(&self) -> &K {
        self.branch.field()
    }

    /// Check that `f` lives over the same field and variables.
    pub fn check_poly(&self, f: &Polynomial<K>) -> Result<()> {
        self.branch.check_compatible(f).map_err(Error::from)
    }

    /// The element `t` of grade `l`, cutting out the ramification divisor.
    pub fn t(&self) -> QuadRingElement<K> {
        let n = self.nvars();
        QuadRingElement {
            p: Polynomial::zero(self.field(), n),
            q: Polynomial::one(self.field(), n),
            k: self.l as i64,
        }
    }
}

/// `p + q t` of grade `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRingElement<K: Field> {
    p: Polynomial<K>,
    q: Polynomial<K>,
    k: i64,
}

impl<K: Field> QuadRingElement<K> {
    pub fn new(cover: &DoubleCover<K>, p: Polynomial<K>, q: Polynomial<K>, k: i64) -> Result<Self> {
        cover.check_poly(&p)?;
        cover.check_poly(&q)?;
        let qdeg = k - cover.l() as i64;
        let p_ok = p.is_zero() || (k >= 0 && p.is_form_of_degree(k as u32));
        let q_ok = q.is_zero() || (qdeg >= 0 && q.is_form_of_degree(qdeg as u32));
        if !p_ok {
            return Err(Error::DegreeMismatch(format!("p must be a form of degree {k}")));
        }
        if !q_ok {
            return Err(Error::DegreeMismatch(format!("q must be a form of degree {qdeg}")));
        }
        Ok(QuadRingElement { p, q, k })
    }

    pub fn p(&self) -> &Polynomial<K> {
        &self.p
    }

    pub fn q(&self) -> &Polynomial<K> {
        &self.q
    }

    pub fn grade(&self) -> i64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn check_cover(&self, cover: &DoubleCover<K>) -> Result<()> {
        cover.check_poly(&self.p)?;
        cover.check_poly(&self.q)
    }

    /// `(p1 + q1 t)(p2 + q2 t) = (p1 p2 + q1 q2 F) + (p1 q2 + p2 q1) t`.
    pub fn mul(&self, other: &Self, cover: &DoubleCover<K>) -> Result<Self> {
        self.check_cover(cover)?;
        other.check_cover(cover)?;
        let f = cover.branch();
        let p = &(&self.p * &other.p) + &(&(&self.q * &other.q) * f);
        let q = &(&self.p * &other.q) + &(&other.p * &self.q);
        Ok(QuadRingElement {
            p,
            q,
            k: self.k + other.k,
        })
    }

    /// The covering involution `t -> -t`.
    pub fn conjugate(&self) -> Self {
        QuadRingElement {
            p: self.p.clone(),
            q: -&self.q,
            k: self.k,
        }
    }

    /// `p^2 - q^2 F`.
    pub fn norm(&self, cover: &DoubleCover<K>) -> Result<Polynomial<K>> {
        self.check_cover(cover)?;
        Ok(&self.p.square() - &(&self.q.square() * cover.branch()))
    }
}
