//! Exponent vectors under the graded reverse lexicographic order with
//! `x0 > x1 > ... > xn`.

use std::cmp::Ordering;

use smallvec::SmallVec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The variable `x_i` among `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// The monomial whose square is `self`, if every exponent is even.
    pub fn sqrt(&self) -> Option<Self> {
        self.0
            .iter()
            .all(|e| e % 2 == 0)
            .then(|| Monomial(self.0.iter().map(|e| e / 2).collect()))
    }

    pub fn pow(&self, k: u32) -> Self {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn without_var(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(i);
        Monomial(v)
    }

    pub fn with_var_inserted(&self, i: usize, exp: u32) -> Self {
        let mut v = self.0.clone();
        v.insert(i, exp);
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // smaller exponent in the last differing variable wins
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, d);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Monomial::from_exponents(cur));
        return;
    }
    for e in 0..=left {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
}

/// `dim H^0(P^{nvars-1}, O(d))`, the number of degree-`d` monomials.
pub fn count_of_degree(nvars: usize, d: u32) -> u128 {
    // binomial(d + nvars - 1, nvars - 1)
    let k = nvars as u128 - 1;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (d as u128 + i) / i;
    }
    acc
}
