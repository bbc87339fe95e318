//! Splitting certificates `p^2 - q^2 F = f * g1^a1 * ... * gm^am`.
//!
//! Given SPS divisors `g_j` whose pullbacks generate the class group
//! together with a hyperplane (an assumption this crate cannot check), a
//! divisor `f = 0` not contained in the branch locus splits exactly when
//! such an identity exists with `deg p = k`, `deg q = k - l`.
//!
//! The search over a finite field runs through exponent vectors in order of
//! `(sum a, a)` lexicographically and, for each, through `q` up to sign;
//! `p` is then forced as the square root of `f g^a + q^2 F`.

mod lift;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{FormEnumerator, Representatives};
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;
use crate::quadring::{DoubleCover, QuadRingElement};
use crate::sps::{sps_verify, SpsCertificate, DEFAULT_MAX_CANDIDATES};

pub use lift::{
    chinese_remainder, rational_reconstruction, split_search_lifted, LiftedResult, PrimeEvidence, PrimeOutcome,
};

/// Attached to every negative search result.
pub const NOT_FOUND_DISCLAIMER: &str = "no certificate exists within the search bounds; \
this is not a proof that the divisor fails to split over the complex numbers, \
since no a-priori bound on the exponents or on k is known";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry<K: Field> {
    pub g: Polynomial<K>,
    pub degree: u32,
    pub cert: Option<SpsCertificate<K>>,
}

/// The SPS divisors `g_1 .. g_m` against which exponents are taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpsBasis<K: Field> {
    entries: Vec<BasisEntry<K>>,
}

impl<K: Field> SpsBasis<K> {
    pub fn new(cover: &DoubleCover<K>, gs: Vec<Polynomial<K>>) -> Result<Self> {
        Self::with_certificates(cover, gs.into_iter().map(|g| (g, None)).collect())
    }

    /// Certificates, when present, are verified.
    pub fn with_certificates(
        cover: &DoubleCover<K>,
        items: Vec<(Polynomial<K>, Option<SpsCertificate<K>>)>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(items.len());
        for (i, (g, cert)) in items.into_iter().enumerate() {
            cover.check_poly(&g)?;
            let degree = match g.degree() {
                Some(d) if d > 0 && g.is_homogeneous() => d,
                _ => {
                    return Err(Error::Invalid(format!(
                        "basis element {} must be a nonconstant form",
                        i + 1
                    )))
                }
            };
            if let Some(c) = &cert {
                if !sps_verify(cover, &g, c)? {
                    return Err(Error::Invalid(format!(
                        "basis element {} carries an invalid SPS certificate",
                        i + 1
                    )));
                }
            }
            entries.push(BasisEntry { g, degree, cert });
        }
        Ok(SpsBasis { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry<K>] {
        &self.entries
    }

    /// `sum a_j deg g_j`.
    pub fn weighted_degree(&self, a: &[u32]) -> u32 {
        self.entries.iter().zip(a).map(|(e, &x)| e.degree * x).sum()
    }

    /// `g_1^a_1 ... g_m^a_m`.
    pub fn power_product(&self, a: &[u32], nvars: usize, field: &K) -> Polynomial<K> {
        let mut out = Polynomial::one(field, nvars);
        for (e, &x) in self.entries.iter().zip(a) {
            if x > 0 {
                out = &out * &e.g.pow(x);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate<K: Field> {
    pub p: Polynomial<K>,
    pub q: Polynomial<K>,
    pub a: Vec<u32>,
    pub k: u32,
    /// `p^2 - q^2 F = unit * f * g^a`; 1 for every certificate found here.
    pub unit: K::Elem,
}

impl<K: Field> SplitCertificate<K> {
    /// `q = 0`: `f g^a` is itself a square.
    pub fn is_degenerate(&self) -> bool {
        self.q.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitBounds {
    pub max_exp_sum: u32,
    pub max_k: u32,
    pub max_candidates: u128,
}

impl SplitBounds {
    pub fn new(max_exp_sum: u32, max_k: u32) -> Self {
        SplitBounds {
            max_exp_sum,
            max_k,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitSearchResult<K: Field> {
    Found(SplitCertificate<K>),
    NotFoundWithinBounds { exponent_vectors: usize, candidates: u128 },
}

impl<K: Field> SplitSearchResult<K> {
    pub fn certificate(&self) -> Option<&SplitCertificate<K>> {
        match self {
            SplitSearchResult::Found(c) => Some(c),
            SplitSearchResult::NotFoundWithinBounds { .. } => None,
        }
    }
}

fn divisor_form_degree<K: Field>(cover: &DoubleCover<K>, f: &Polynomial<K>) -> Result<u32> {
    cover.check_poly(f)?;
    match f.degree() {
        Some(d) if d > 0 && f.is_homogeneous() => Ok(d),
        _ => Err(Error::Degenerate("divisor must be a nonconstant form".into())),
    }
}

/// Check `p^2 - q^2 F = unit * f * prod g_j^a_j` exactly. Degree
/// bookkeeping errors are reported as `Err`, a failing identity as
/// `Ok(false)`.
pub fn split_verify<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    basis: &SpsBasis<K>,
    cert: &SplitCertificate<K>,
) -> Result<bool> {
    let fdeg = divisor_form_degree(cover, f)?;
    cover.check_poly(&cert.p)?;
    cover.check_poly(&cert.q)?;
    if cert.a.len() != basis.len() {
        return Err(Error::DegreeMismatch(format!(
            "{} exponents for a basis of {}",
            cert.a.len(),
            basis.len()
        )));
    }
    let total = fdeg + basis.weighted_degree(&cert.a);
    if total != 2 * cert.k {
        return Err(Error::DegreeMismatch(format!(
            "deg(f g^a) = {total} but 2k = {}",
            2 * cert.k
        )));
    }
    if !cert.p.is_form_of_degree(cert.k) {
        return Err(Error::DegreeMismatch(format!("p must be a form of degree {}", cert.k)));
    }
    let l = cover.l();
    if cert.k < l && !cert.q.is_zero() {
        return Err(Error::DegreeMismatch(format!("k = {} < l = {l} forces q = 0", cert.k)));
    }
    if cert.k >= l && !cert.q.is_form_of_degree(cert.k - l) {
        return Err(Error::DegreeMismatch(format!(
            "q must be a form of degree {}",
            cert.k - l
        )));
    }
    let field = cover.field();
    if field.is_zero(&cert.unit) {
        return Err(Error::Invalid("certificate unit is zero".into()));
    }
    let target = &basis.power_product(&cert.a, cover.nvars(), field) * f;
    let norm = &cert.p.square() - &(&cert.q.square() * cover.branch());
    Ok(norm == target.scale(&cert.unit))
}

/// The element `p + q t` whose norm is `f g^a`.
pub fn witness_element<K: Field>(cover: &DoubleCover<K>, cert: &SplitCertificate<K>) -> Result<QuadRingElement<K>> {
    QuadRingElement::new(cover, cert.p.clone(), cert.q.clone(), cert.k as i64)
}

/// Exponent vectors of length `m` with `sum <= max_sum`, ordered by sum and
/// then lexicographically.
pub fn exponent_vectors(m: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn compositions(m: usize, s: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == m {
            prefix.push(s);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=s {
            prefix.push(first);
            compositions(m, s - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        out.push(Vec::new());
        return out;
    }
    for s in 0..=max_sum {
        compositions(m, s, &mut Vec::new(), &mut out);
    }
    out
}

fn q_enumerator<K: Field>(cover: &DoubleCover<K>, k: u32) -> Option<FormEnumerator<K>> {
    let l = cover.l();
    let basis = if k >= l {
        monomials_of_degree(cover.nvars(), k - l)
    } else {
        Vec::new()
    };
    FormEnumerator::new(cover.field(), cover.nvars(), basis, Representatives::SignClasses)
}

/// Search one exponent vector: run `q` over sign-class representatives
/// (zero first) and accept when `f g^a + q^2 F` is a square.
pub fn search_with_exponents<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    basis: &SpsBasis<K>,
    a: &[u32],
    max_candidates: u128,
) -> Result<Option<SplitCertificate<K>>> {
    let fdeg = divisor_form_degree(cover, f)?;
    if a.len() != basis.len() {
        return Err(Error::DegreeMismatch(
            "exponent vector length differs from basis".into(),
        ));
    }
    let total = fdeg + basis.weighted_degree(a);
    if total % 2 == 1 {
        return Ok(None);
    }
    let k = total / 2;
    let qs = q_enumerator(cover, k).ok_or(Error::NeedsFiniteField)?;
    if qs.count() > max_candidates {
        return Err(Error::CostGuard {
            what: format!("q candidates for k = {k}"),
            count: qs.count(),
            limit: max_candidates,
        });
    }
    Ok(search_task(cover, f, basis, a, k, &qs))
}

fn search_task<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    basis: &SpsBasis<K>,
    a: &[u32],
    k: u32,
    qs: &FormEnumerator<K>,
) -> Option<SplitCertificate<K>> {
    let field = cover.field();
    let target = &basis.power_product(a, cover.nvars(), field) * f;
    (0..qs.count() as u64).into_par_iter().find_map_first(|i| {
        let q = qs.form(i as u128);
        let s = &target + &(&q.square() * cover.branch());
        let p = s.formal_square_root().expect("homogeneous of even degree")?;
        Some(SplitCertificate {
            p,
            q,
            a: a.to_vec(),
            k,
            unit: field.one(),
        })
    })
}

/// Bounded search for a splitting certificate over a finite field.
pub fn split_search<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    basis: &SpsBasis<K>,
    bounds: &SplitBounds,
) -> Result<SplitSearchResult<K>> {
    let fdeg = divisor_form_degree(cover, f)?;
    if cover.branch().divide_exact(f)?.is_some() {
        return Err(Error::HypothesisViolated(
            "the divisor divides the branch equation (C lies in the branch locus)".into(),
        ));
    }
    if cover.field().order().is_none() {
        return Err(Error::NeedsFiniteField);
    }
    let mut tasks = Vec::new();
    for a in exponent_vectors(basis.len(), bounds.max_exp_sum) {
        let total = fdeg + basis.weighted_degree(&a);
        if total % 2 == 1 || total / 2 > bounds.max_k {
            continue;
        }
        let k = total / 2;
        let qs = q_enumerator(cover, k).expect("finite field");
        if qs.count() > bounds.max_candidates {
            return Err(Error::CostGuard {
                what: format!("q candidates for k = {k}"),
                count: qs.count(),
                limit: bounds.max_candidates,
            });
        }
        tasks.push((a, k, qs));
    }
    let hit = tasks
        .par_iter()
        .find_map_first(|(a, k, qs)| search_task(cover, f, basis, a, *k, qs));
    Ok(match hit {
        Some(cert) => {
            debug_assert!(split_verify(cover, f, basis, &cert).unwrap_or(false));
            SplitSearchResult::Found(cert)
        }
        None => SplitSearchResult::NotFoundWithinBounds {
            exponent_vectors: tasks.len(),
            candidates: tasks.iter().map(|(_, _, qs)| qs.count()).sum(),
        },
    })
}

/// Strip every basis factor from `n` by repeated exact division, returning
/// the cofactor and the exponents removed.
pub fn strip_basis_factors<K: Field>(n: &Polynomial<K>, basis: &SpsBasis<K>) -> Result<(Polynomial<K>, Vec<u32>)> {
    let mut rest = n.clone();
    let mut a = vec![0u32; basis.len()];
    if rest.is_zero() {
        return Ok((rest, a));
    }
    for (j, e) in basis.entries().iter().enumerate() {
        while let Some(qt) = rest.divide_exact(&e.g)? {
            rest = qt;
            a[j] += 1;
        }
    }
    Ok((rest, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(s: &str) -> Polynomial<Rationals> {
        Polynomial::parse(s, 3, &Rationals).unwrap()
    }

    fn conic() -> DoubleCover<Rationals> {
        DoubleCover::new(q("y^2 - x*z"), 1).unwrap()
    }

    fn cert(p: &str, qq: &str, a: &[u32], k: u32) -> SplitCertificate<Rationals> {
        SplitCertificate {
            p: q(p),
            q: q(qq),
            a: a.to_vec(),
            k,
            unit: Rationals.one(),
        }
    }

    #[test]
    fn verify_examples() {
        let c = conic();
        let basis = SpsBasis::new(&c, vec![q("x"), q("z")]).unwrap();
        assert!(split_verify(&c, &q("x*z + 3*y^2"), &basis, &cert("x*z + y^2", "y", &[1, 1], 2)).unwrap());
        assert!(split_verify(&c, &q("x"), &basis, &cert("y", "1", &[0, 1], 1)).unwrap());
        assert!(!split_verify(&c, &q("x"), &basis, &cert("y", "1", &[1, 0], 1)).unwrap());
    }

    #[test]
    fn verify_degree_errors() {
        let c = conic();
        let basis = SpsBasis::new(&c, vec![q("x"), q("z")]).unwrap();
        let e = split_verify(&c, &q("x"), &basis, &cert("y", "1", &[1, 1], 1)).unwrap_err();
        assert!(matches!(e, Error::DegreeMismatch(_)));
        let e = split_verify(&c, &q("x"), &basis, &cert("y", "1", &[1], 1)).unwrap_err();
        assert!(matches!(e, Error::DegreeMismatch(_)));
        let e = split_verify(&c, &q("x"), &basis, &cert("y", "x", &[0, 1], 1)).unwrap_err();
        assert!(matches!(e, Error::DegreeMismatch(_)));
    }

    #[test]
    fn exponent_order() {
        let v = exponent_vectors(2, 2);
        let expected: Vec<Vec<u32>> = vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]];
        assert_eq!(v, expected);
        assert_eq!(exponent_vectors(0, 3), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn witness_norm() {
        let c = conic();
        let ct = cert("x*z + y^2", "y", &[1, 1], 2);
        let w = witness_element(&c, &ct).unwrap();
        assert_eq!(w.p(), &q("x*z + y^2"));
        assert_eq!(w.q(), &q("y"));
        assert_eq!(w.norm(&c).unwrap(), &q("x*z") * &q("x*z + 3*y^2"));
    }

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn tangent_line_splits_via_basis() {
        let f7 = gf(7);
        let p = |s: &str| Polynomial::parse(s, 3, &f7).unwrap();
        let c = DoubleCover::new(p("y^2 - x*z"), 1).unwrap();
        let basis = SpsBasis::new(&c, vec![p("x"), p("z")]).unwrap();
        let r = split_search(&c, &p("x"), &basis, &SplitBounds::new(2, 3)).unwrap();
        let ct = r.certificate().unwrap();
        assert_eq!(
            (ct.p.clone(), ct.q.clone(), ct.a.clone(), ct.k),
            (p("y"), p("1"), vec![0, 1], 1)
        );
    }

    #[test]
    fn hand_certificate_is_in_the_search_space() {
        let f7 = gf(7);
        let p = |s: &str| Polynomial::parse(s, 3, &f7).unwrap();
        let c = DoubleCover::new(p("y^2 - x*z"), 1).unwrap();
        let basis = SpsBasis::new(&c, vec![p("x"), p("z")]).unwrap();
        let f = p("x*z + 3*y^2");
        let ct = search_with_exponents(&c, &f, &basis, &[1, 1], DEFAULT_MAX_CANDIDATES)
            .unwrap()
            .unwrap();
        assert!(split_verify(&c, &f, &basis, &ct).unwrap());
        assert_eq!(ct.k, 2);
    }

    #[test]
    fn rejects_divisor_in_branch() {
        let f5 = gf(5);
        let p = |s: &str| Polynomial::parse(s, 3, &f5).unwrap();
        let c = DoubleCover::new(p("x*y"), 1).unwrap();
        let basis = SpsBasis::new(&c, vec![p("z")]).unwrap();
        let e = split_search(&c, &p("x"), &basis, &SplitBounds::new(2, 2)).unwrap_err();
        assert!(matches!(e, Error::HypothesisViolated(_)));
    }

    #[test]
    fn cost_guard_reports_bound() {
        let f7 = gf(7);
        let p = |s: &str| Polynomial::parse(s, 3, &f7).unwrap();
        let c = DoubleCover::new(p("y^2 - x*z"), 1).unwrap();
        let basis = SpsBasis::new(&c, vec![p("x")]).unwrap();
        let mut bounds = SplitBounds::new(9, 10);
        bounds.max_candidates = 1000;
        let e = split_search(&c, &p("y"), &basis, &bounds).unwrap_err();
        assert!(matches!(e, Error::CostGuard { limit: 1000, .. }));
    }

    #[test]
    fn basis_with_bad_certificate_rejected() {
        let c = conic();
        let bad = SpsCertificate {
            h: q("y"),
            g: q("z"),
            unit: Rationals.one(),
        };
        assert!(SpsBasis::with_certificates(&c, vec![(q("x"), Some(bad))]).is_err());
        assert!(SpsBasis::new(&c, vec![q("1")]).is_err());
    }

    #[test]
    fn strip_factors() {
        let c = conic();
        let basis = SpsBasis::new(&c, vec![q("x"), q("z")]).unwrap();
        let n = &(&q("x^2") * &q("z")) * &q("y + x");
        let (rest, a) = strip_basis_factors(&n, &basis).unwrap();
        assert_eq!(rest, q("y + x"));
        assert_eq!(a, vec![2, 1]);
    }
}
