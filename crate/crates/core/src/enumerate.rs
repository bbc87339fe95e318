//! Exhaustive enumeration of SPS divisors of bounded degree over GF(p).
//!
//! Degree `d <= l` suffices for generating the class group, so that is the
//! default bound. Candidates are normalized forms (leading coefficient 1);
//! lines use the restriction test, higher degrees the quotient-space
//! exhaustion from [`crate::sps`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{CoefficientField, Field};
use crate::forms::{FormEnumerator, Representatives};
use crate::monomial::{count_of_degree, monomials_of_degree};
use crate::poly::Polynomial;
use crate::quadring::DoubleCover;
use crate::sps::{
    conic_is_smooth, exhaustion_count, in_branch, search_by_exhaustion, search_by_restriction, SpsCertificate,
    DEFAULT_MAX_CANDIDATES,
};

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub max_candidates: u128,
    /// Permit `d > l`.
    pub allow_over_bound: bool,
    pub seed: u64,
    pub squarefree_trials: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_candidates: DEFAULT_MAX_CANDIDATES,
            allow_over_bound: false,
            seed: 0x5eed,
            squarefree_trials: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    Singular,
    Unchecked,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareFreeness {
    LikelySquareFree,
    NotSquareFree,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpsHit<K: Field> {
    pub f: Polynomial<K>,
    pub cert: SpsCertificate<K>,
    pub in_branch: bool,
    /// Divisible by an SPS line, hence visibly reducible.
    pub visibly_reducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpsEnumeration<K: Field> {
    pub degree: u32,
    pub field: CoefficientField,
    pub hits: Vec<SpsHit<K>>,
    pub searched_count: u128,
    pub branch_smoothness: Smoothness,
    pub branch_squarefree: SquareFreeness,
    pub warnings: Vec<String>,
}

fn guard(what: &str, count: u128, limit: u128) -> Result<()> {
    if count > limit {
        return Err(Error::CostGuard {
            what: what.into(),
            count,
            limit,
        });
    }
    Ok(())
}

fn candidates<K: Field>(cover: &DoubleCover<K>, d: u32) -> Result<FormEnumerator<K>> {
    FormEnumerator::new(
        cover.field(),
        cover.nvars(),
        monomials_of_degree(cover.nvars(), d),
        Representatives::Projective,
    )
    .ok_or(Error::NeedsFiniteField)
}

fn diagnostics<K: Field>(cover: &DoubleCover<K>, opts: &EnumerateOptions) -> (Smoothness, SquareFreeness, Vec<String>) {
    let smooth = if cover.nvars() == 3 && cover.l() == 1 {
        if conic_is_smooth(cover.branch()) {
            Smoothness::Smooth
        } else {
            Smoothness::Singular
        }
    } else {
        Smoothness::Unchecked
    };
    let sf = squarefree_check(cover, opts.seed, opts.squarefree_trials);
    let mut warnings = Vec::new();
    if smooth == Smoothness::Singular {
        warnings.push("branch conic is singular".to_string());
    }
    if sf == SquareFreeness::NotSquareFree {
        warnings.push(
            "branch equation appears not square-free: every sampled line restriction has a repeated factor".to_string(),
        );
    }
    (smooth, sf, warnings)
}

/// All SPS lines over the field: every line `f` for which `F|_f` is a
/// square. Requires `n <= 3`.
pub fn enumerate_sps_lines<K: Field>(cover: &DoubleCover<K>, opts: &EnumerateOptions) -> Result<SpsEnumeration<K>> {
    if cover.nvars() > 4 {
        return Err(Error::Invalid("line enumeration supports n <= 3".into()));
    }
    let lines = candidates(cover, 1)?;
    let count = lines.count();
    guard("line candidates", count, opts.max_candidates)?;
    let hits = (0..count as usize)
        .into_par_iter()
        .map(|i| -> Result<Option<SpsHit<K>>> {
            let f = lines.form(i as u128);
            Ok(search_by_restriction(cover, &f, false)?.map(|cert| SpsHit {
                in_branch: in_branch(cover, &f).unwrap_or(false),
                f,
                cert,
                visibly_reducible: false,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let (branch_smoothness, branch_squarefree, warnings) = diagnostics(cover, opts);
    Ok(SpsEnumeration {
        degree: 1,
        field: cover.field().descriptor(),
        hits,
        searched_count: count,
        branch_smoothness,
        branch_squarefree,
        warnings,
    })
}

/// All SPS divisors of degree `d` by exhaustion over `h`.
pub fn enumerate_sps_degree<K: Field>(
    cover: &DoubleCover<K>,
    d: u32,
    opts: &EnumerateOptions,
) -> Result<SpsEnumeration<K>> {
    if d == 0 || d > 2 * cover.l() {
        return Err(Error::Invalid(format!("degree must lie in 1..={}", 2 * cover.l())));
    }
    if d > cover.l() && !opts.allow_over_bound {
        return Err(Error::Invalid(format!(
            "degree {d} exceeds the bound l = {}; pass the override to search anyway",
            cover.l()
        )));
    }
    let forms = candidates(cover, d)?;
    let count = forms.count();
    guard("degree-d candidates", count, opts.max_candidates)?;
    let per = exhaustion_count(cover, &forms.form(0)).unwrap_or(0);
    guard("SPS exhaustion work", count.saturating_mul(per), opts.max_candidates)?;

    let mut warnings = Vec::new();
    let lines: Vec<Polynomial<K>> = if d > 1 {
        match enumerate_sps_lines(cover, opts) {
            Ok(e) => e.hits.into_iter().map(|h| h.f).collect(),
            Err(e) => {
                warnings.push(format!("reducibility hint unavailable: {e}"));
                Vec::new()
            }
        }
    } else {
        Vec::new()
    };

    let hits = (0..count as usize)
        .into_par_iter()
        .map(|i| -> Result<Option<SpsHit<K>>> {
            let f = forms.form(i as u128);
            let Some(cert) = search_by_exhaustion(cover, &f, false, u128::MAX)? else {
                return Ok(None);
            };
            let visibly_reducible = lines.iter().any(|line| matches!(f.divide_exact(line), Ok(Some(_))));
            Ok(Some(SpsHit {
                in_branch: in_branch(cover, &f)?,
                f,
                cert,
                visibly_reducible,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let (branch_smoothness, branch_squarefree, mut diag) = diagnostics(cover, opts);
    warnings.append(&mut diag);
    if d > cover.l() {
        warnings.push(format!("degree {d} exceeds the generating bound l = {}", cover.l()));
    }
    Ok(SpsEnumeration {
        degree: d,
        field: cover.field().descriptor(),
        hits,
        searched_count: count,
        branch_smoothness,
        branch_squarefree,
        warnings,
    })
}

/// Number of projective forms of degree `d` in `nvars` variables over a
/// field with `order` elements.
pub fn projective_count(order: u64, nvars: usize, d: u32) -> u128 {
    let dim = count_of_degree(nvars, d) as u32;
    let q = order as u128;
    (q.saturating_pow(dim) - 1) / (q - 1)
}

// Dense univariate helpers, coefficients in ascending degree.

fn trim<K: Field>(field: &K, v: &mut Vec<K::Elem>) {
    while v.last().is_some_and(|c| field.is_zero(c)) {
        v.pop();
    }
}

fn poly_rem<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let mut r = a.to_vec();
    trim(field, &mut r);
    let db = b.len() - 1;
    let inv = field.inv(&b[db]).expect("trimmed divisor");
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = field.mul(r.last().expect("nonempty"), &inv);
        for (i, bc) in b.iter().enumerate() {
            let t = field.mul(&c, bc);
            r[shift + i] = field.sub(&r[shift + i], &t);
        }
        trim(field, &mut r);
    }
    r
}

fn poly_gcd<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(field, &mut a);
    trim(field, &mut b);
    while !b.is_empty() {
        let r = poly_rem(field, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// Does this binary form have a repeated linear factor over the closure?
fn binary_form_has_repeated_factor<K: Field>(form: &Polynomial<K>) -> bool {
    let field = form.field();
    let total = form.degree().unwrap_or(0);
    let mut u = vec![field.zero(); total as usize + 1];
    for (m, c) in form.terms() {
        u[m.exponents()[0] as usize] = c.clone();
    }
    trim(field, &mut u);
    let du = u.len().saturating_sub(1) as u32;
    if total - du >= 2 {
        return true;
    }
    let deriv: Vec<K::Elem> = u
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
        .collect();
    poly_gcd(field, &u, &deriv).len() > 1
}

/// Probabilistic square-freeness of `F` by restriction to random lines.
pub fn squarefree_check<K: Field>(cover: &DoubleCover<K>, seed: u64, trials: usize) -> SquareFreeness {
    let field = cover.field();
    let Some(order) = field.order() else {
        return SquareFreeness::Inconclusive;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = cover.nvars();
    let (mut clean, mut repeated) = (0usize, 0usize);
    for _ in 0..trials {
        let param: Vec<Polynomial<K>> = (0..n)
            .map(|_| {
                let a = field.element(rng.gen_range(0..order));
                let b = field.element(rng.gen_range(0..order));
                &Polynomial::var(field, 2, 0).scale(&a) + &Polynomial::var(field, 2, 1).scale(&b)
            })
            .collect();
        let restricted = cover.branch().compose(&param).expect("matching variables");
        if restricted.is_zero() {
            continue;
        }
        if binary_form_has_repeated_factor(&restricted) {
            repeated += 1;
        } else {
            clean += 1;
        }
    }
    match (clean, repeated) {
        (0, 0) => SquareFreeness::Inconclusive,
        (0, _) => SquareFreeness::NotSquareFree,
        _ => SquareFreeness::LikelySquareFree,
    }
}
