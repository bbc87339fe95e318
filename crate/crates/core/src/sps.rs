//! SPS-divisor certificates: `unit * F = h^2 + f g`.
//!
//! `h` only matters modulo `f * H^0(O(l - deg f))`, so certificates are
//! canonicalized by reducing `h` modulo `f` under the term order and fixing
//! its sign. Three search strategies are available:
//!
//! * restriction (lines): `F` restricted to `f = 0` must be a square;
//! * conic parametrization (plane conics with a known point): pull `F` back
//!   along a degree-2 map `P^1 -> P^2` and match the square root;
//! * exhaustion (finite fields): run over `h` in a complement of the
//!   multiples of `f`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{FormEnumerator, Representatives};
use crate::linalg;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::quadring::DoubleCover;

/// Default ceiling on the number of candidates an exhaustive loop may visit.
pub const DEFAULT_MAX_CANDIDATES: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpsCertificate<K: Field> {
    pub h: Polynomial<K>,
    pub g: Polynomial<K>,
    pub unit: K::Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Restriction,
    ConicParametrization,
    Exhaustion,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Restriction => "restriction",
            Strategy::ConicParametrization => "conic-parametrization",
            Strategy::Exhaustion => "exhaustion",
        }
    }
}

/// Why no certificate was returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotFound {
    /// The restriction of `F` to the divisor is not a square: no
    /// certificate exists over the field (and over its closure when
    /// `closure_checked`). Complete for lines and smooth conics.
    RestrictionNotSquare { closure_checked: bool },
    /// Every `h` in the quotient space was tried.
    Exhausted { candidates: u128, closure_checked: bool },
    /// No available strategy settles the question.
    Inconclusive(String),
}

impl NotFound {
    pub fn is_proof(&self) -> bool {
        !matches!(self, NotFound::Inconclusive(_))
    }

    pub fn describe(&self) -> String {
        match self {
            NotFound::RestrictionNotSquare { closure_checked } => format!(
                "restriction of the branch equation is not a square over the field{}",
                if *closure_checked {
                    " or its algebraic closure"
                } else {
                    ""
                }
            ),
            NotFound::Exhausted {
                candidates,
                closure_checked,
            } => format!(
                "no certificate exists over this field: exhausted {candidates} candidates{}",
                if *closure_checked { " for every unit class" } else { "" }
            ),
            NotFound::Inconclusive(why) => format!("not found by available strategies: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpsSearchResult<K: Field> {
    Found {
        cert: SpsCertificate<K>,
        strategy: Strategy,
        /// `f` divides `F`, i.e. the divisor lies in the branch locus.
        in_branch: bool,
    },
    NotFound(NotFound),
}

impl<K: Field> SpsSearchResult<K> {
    pub fn certificate(&self) -> Option<&SpsCertificate<K>> {
        match self {
            SpsSearchResult::Found { cert, .. } => Some(cert),
            SpsSearchResult::NotFound(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpsOptions<K: Field> {
    /// Allow a nonsquare unit (existence over the algebraic closure).
    pub closure: bool,
    /// A point on a conic divisor, for the parametrization strategy.
    pub point: Option<Vec<K::Elem>>,
    pub max_candidates: u128,
}

impl<K: Field> Default for SpsOptions<K> {
    fn default() -> Self {
        SpsOptions {
            closure: false,
            point: None,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

/// Validate a divisor equation and return its degree.
pub fn divisor_degree<K: Field>(cover: &DoubleCover<K>, f: &Polynomial<K>) -> Result<u32> {
    cover.check_poly(f)?;
    if f.is_zero() {
        return Err(Error::Degenerate("divisor equation is zero".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::Degenerate("divisor equation is not homogeneous".into()));
    }
    let d = f.degree().expect("nonzero");
    if d == 0 || d > 2 * cover.l() {
        return Err(Error::Degenerate(format!(
            "divisor degree {d} outside 1..={}",
            2 * cover.l()
        )));
    }
    Ok(d)
}

/// Does `f` divide `F`, i.e. is the divisor contained in the branch locus?
pub fn in_branch<K: Field>(cover: &DoubleCover<K>, f: &Polynomial<K>) -> Result<bool> {
    Ok(cover.branch().divide_exact(f)?.is_some())
}

/// Check `unit * F = h^2 + f g` exactly. Degree problems are errors, a
/// failing identity is `Ok(false)`.
pub fn sps_verify<K: Field>(cover: &DoubleCover<K>, f: &Polynomial<K>, cert: &SpsCertificate<K>) -> Result<bool> {
    let d = divisor_degree(cover, f)?;
    cover.check_poly(&cert.h)?;
    cover.check_poly(&cert.g)?;
    let l = cover.l();
    if !cert.h.is_form_of_degree(l) {
        return Err(Error::DegreeMismatch(format!("h must be a form of degree {l}")));
    }
    if !cert.g.is_form_of_degree(2 * l - d) {
        return Err(Error::DegreeMismatch(format!(
            "g must be a form of degree {}",
            2 * l - d
        )));
    }
    if cover.field().is_zero(&cert.unit) {
        return Err(Error::Invalid("certificate unit is zero".into()));
    }
    let lhs = cover.branch().scale(&cert.unit);
    let rhs = &cert.h.square() + &(f * &cert.g);
    Ok(lhs == rhs)
}

/// Canonical certificate for a given `h`: reduce `h` modulo `f`, fix its
/// sign, and solve for `g`. `None` if `f` does not divide `unit*F - h^2`.
pub fn canonical_certificate<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    h: &Polynomial<K>,
    unit: K::Elem,
) -> Result<Option<SpsCertificate<K>>> {
    let (_, rem) = h.reduce(f)?;
    let h = rem.sign_normalized();
    let residual = &cover.branch().scale(&unit) - &h.square();
    Ok(residual.divide_exact(f)?.map(|g| SpsCertificate { h, g, unit }))
}

/// Certificates `(0, F / f_i)` for the factors of a factored branch
/// equation.
pub fn sps_branch_components<K: Field>(
    cover: &DoubleCover<K>,
    factors: &[Polynomial<K>],
) -> Result<Vec<SpsCertificate<K>>> {
    let field = cover.field();
    let mut product = Polynomial::one(field, cover.nvars());
    for f in factors {
        cover.check_poly(f)?;
        product = &product * f;
    }
    if &product != cover.branch() {
        return Err(Error::Invalid(
            "product of the factors differs from the branch equation".into(),
        ));
    }
    factors
        .iter()
        .map(|f| {
            let g = cover
                .branch()
                .divide_exact(f)?
                .expect("factor of the product divides it");
            Ok(SpsCertificate {
                h: Polynomial::zero(field, cover.nvars()),
                g,
                unit: field.one(),
            })
        })
        .collect()
}

fn square_root<K: Field>(b: &Polynomial<K>, closure: bool) -> Result<Option<(Polynomial<K>, K::Elem)>> {
    if closure {
        Ok(b.formal_square_root_up_to_unit()?.map(|s| (s.root, s.unit)))
    } else {
        Ok(b.formal_square_root()?.map(|r| (r, b.field().one())))
    }
}

/// Strategy for lines: restrict `F` to `f = 0`, take a square root and
/// lift it back by leaving out the eliminated variable. `Ok(None)` is a
/// proof that no certificate exists (over the closure if `closure`).
pub fn search_by_restriction<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    closure: bool,
) -> Result<Option<SpsCertificate<K>>> {
    if divisor_degree(cover, f)? != 1 {
        return Err(Error::Invalid("restriction strategy needs a linear divisor".into()));
    }
    let (restricted, eliminated) = cover.branch().substitute_linear(f)?;
    let Some((root, unit)) = square_root(&restricted, closure)? else {
        return Ok(None);
    };
    let h = root.insert_variable(eliminated);
    let cert = canonical_certificate(cover, f, &h, unit)?;
    debug_assert!(cert.is_some(), "lifted root always yields a certificate");
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicOutcome<K: Field> {
    Found(SpsCertificate<K>),
    /// The pullback of `F` is not a square: a proof of non-existence.
    NotSquare,
    NotApplicable(String),
}

/// Symmetric matrix of a ternary quadratic form.
fn conic_matrix<K: Field>(f: &Polynomial<K>) -> Vec<Vec<K::Elem>> {
    let field = f.field();
    let half = field.inv(&field.two()).expect("char != 2");
    let mut m = vec![vec![field.zero(); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = f.coefficient(&Monomial::from_exponents(&e));
            *entry = if i == j { c } else { field.mul(&c, &half) };
        }
    }
    m
}

/// Is the plane conic `f = 0` smooth (nondegenerate quadratic form)?
pub fn conic_is_smooth<K: Field>(f: &Polynomial<K>) -> bool {
    f.nvars() == 3 && f.is_form_of_degree(2) && !f.is_zero() && {
        let field = f.field();
        !field.is_zero(&linalg::determinant(field, &conic_matrix(f)))
    }
}

/// A point on the conic `f = 0`: coordinate points first, then the integer
/// box `|c| <= 10` over Q, or all projective points over a finite field.
pub fn find_conic_point<K: Field>(f: &Polynomial<K>) -> Option<Vec<K::Elem>> {
    let field = f.field();
    let is_zero_at = |pt: &[K::Elem]| field.is_zero(&f.evaluate(pt));
    for i in 0..3 {
        let mut pt = vec![field.zero(); 3];
        pt[i] = field.one();
        if is_zero_at(&pt) {
            return Some(pt);
        }
    }
    if field.order().is_some() {
        let points = FormEnumerator::new(field, 3, monomials_of_degree(3, 1), Representatives::Projective)?;
        return (0..points.count()).find_map(|i| {
            let pt = points.form(i).coefficients_in(points.basis());
            is_zero_at(&pt).then_some(pt)
        });
    }
    for radius in 1..=10i64 {
        for a in -radius..=radius {
            for b in -radius..=radius {
                for c in -radius..=radius {
                    if a.abs().max(b.abs()).max(c.abs()) != radius {
                        continue;
                    }
                    let pt = vec![field.from_i64(a), field.from_i64(b), field.from_i64(c)];
                    if is_zero_at(&pt) {
                        return Some(pt);
                    }
                }
            }
        }
    }
    None
}

/// The degree-2 parametrization of a smooth conic through `point`: the
/// line through `point` in direction `d(s, t)` meets the conic again at
/// `B(point, d) d - f(d) point`, with `B` the polar form.
pub fn conic_parametrization<K: Field>(f: &Polynomial<K>, point: &[K::Elem]) -> Vec<Polynomial<K>> {
    let field = f.field();
    let pivot = (0..3).find(|&i| !field.is_zero(&point[i])).expect("nonzero point");
    let others: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
    let dir: Vec<Polynomial<K>> = (0..3)
        .map(|i| match others.iter().position(|&o| o == i) {
            Some(k) => Polynomial::var(field, 2, k),
            None => Polynomial::zero(field, 2),
        })
        .collect();
    let f_dir = f.compose(&dir).expect("three images");
    let mut polar = Polynomial::zero(field, 2);
    for (i, d) in dir.iter().enumerate() {
        let grad_i = f.derivative(i).evaluate(point);
        polar = &polar + &d.scale(&grad_i);
    }
    (0..3).map(|i| &(&polar * &dir[i]) - &f_dir.scale(&point[i])).collect()
}

/// Strategy for plane conics with a point.
pub fn search_by_conic_parametrization<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    point: Option<&[K::Elem]>,
    closure: bool,
) -> Result<ConicOutcome<K>> {
    if cover.nvars() != 3 || divisor_degree(cover, f)? != 2 {
        return Ok(ConicOutcome::NotApplicable("needs a conic in the plane".into()));
    }
    if !conic_is_smooth(f) {
        return Ok(ConicOutcome::NotApplicable("conic is singular".into()));
    }
    let field = cover.field();
    let point = match point {
        Some(pt) => {
            if pt.len() != 3 || pt.iter().all(|c| field.is_zero(c)) || !field.is_zero(&f.evaluate(pt)) {
                return Err(Error::Invalid("supplied point does not lie on the conic".into()));
            }
            pt.to_vec()
        }
        None => match find_conic_point(f) {
            Some(pt) => pt,
            None => return Ok(ConicOutcome::NotApplicable("no point found on the conic".into())),
        },
    };
    let param = conic_parametrization(f, &point);
    let pulled = cover.branch().compose(&param)?;
    let Some((root, unit)) = square_root(&pulled, closure)? else {
        return Ok(ConicOutcome::NotSquare);
    };
    let l = cover.l();
    let unknowns = monomials_of_degree(3, l);
    let targets = monomials_of_degree(2, 2 * l);
    let images: Vec<Polynomial<K>> = unknowns
        .iter()
        .map(|m| Polynomial::term(field, m.clone(), field.one()).compose(&param))
        .collect::<std::result::Result<_, _>>()?;
    let matrix: Vec<Vec<K::Elem>> = targets
        .iter()
        .map(|t| images.iter().map(|im| im.coefficient(t)).collect())
        .collect();
    let rhs = root.coefficients_in(&targets);
    let Some(sol) = linalg::solve(field, &matrix, &rhs, unknowns.len()) else {
        return Ok(ConicOutcome::NotApplicable("root does not descend to the plane".into()));
    };
    let h = Polynomial::from_coefficients(field, 3, &unknowns, &sol);
    match canonical_certificate(cover, f, &h, unit)? {
        Some(cert) => Ok(ConicOutcome::Found(cert)),
        None => Ok(ConicOutcome::NotApplicable("lifted h does not divide out".into())),
    }
}

fn unit_classes<K: Field>(field: &K, closure: bool) -> Vec<K::Elem> {
    let mut units = vec![field.one()];
    if closure {
        let order = field.order().unwrap_or(0);
        if let Some(nr) = (2..order).map(|i| field.element(i)).find(|e| field.sqrt(e).is_none()) {
            units.push(nr);
        }
    }
    units
}

/// Exhaustive strategy over a finite field. `Ok(None)` means every `h` in
/// the quotient `H^0(O(l)) / f H^0(O(l - deg f))` failed.
pub fn search_by_exhaustion<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    closure: bool,
    max_candidates: u128,
) -> Result<Option<SpsCertificate<K>>> {
    divisor_degree(cover, f)?;
    let field = cover.field();
    let (lm, _) = f.leading_term().expect("nonzero");
    let basis: Vec<Monomial> = monomials_of_degree(cover.nvars(), cover.l())
        .into_iter()
        .filter(|m| !lm.divides(m))
        .collect();
    let forms = FormEnumerator::new(field, cover.nvars(), basis, Representatives::SignClasses)
        .ok_or(Error::NeedsFiniteField)?;
    let units = unit_classes(field, closure);
    let count = forms.count();
    let total = count.saturating_mul(units.len() as u128);
    if total > max_candidates {
        return Err(Error::CostGuard {
            what: "SPS exhaustion over h".into(),
            count: total,
            limit: max_candidates,
        });
    }
    for unit in units {
        let target = cover.branch().scale(&unit);
        let hit = (0..count as u64).into_par_iter().find_map_first(|i| {
            let h = forms.form(i as u128);
            let residual = &target - &h.square();
            residual.divide_exact(f).expect("compatible").map(|g| SpsCertificate {
                h,
                g,
                unit: unit.clone(),
            })
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Number of candidates visited by [`search_by_exhaustion`] per unit class.
pub fn exhaustion_count<K: Field>(cover: &DoubleCover<K>, f: &Polynomial<K>) -> Option<u128> {
    let (lm, _) = f.leading_term()?;
    let basis: Vec<Monomial> = monomials_of_degree(cover.nvars(), cover.l())
        .into_iter()
        .filter(|m| !lm.divides(m))
        .collect();
    FormEnumerator::new(cover.field(), cover.nvars(), basis, Representatives::SignClasses).map(|e| e.count())
}

/// Search for an SPS certificate, trying the strategies that apply: the
/// restriction for lines, the conic parametrization for plane conics, and
/// exhaustion over finite fields. With `closure`, a strict search is tried
/// first and a nonsquare unit is allowed only if it fails.
pub fn sps_search<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    opts: &SpsOptions<K>,
) -> Result<SpsSearchResult<K>> {
    let d = divisor_degree(cover, f)?;
    let in_branch = in_branch(cover, f)?;
    let found = |cert, strategy| SpsSearchResult::Found {
        cert,
        strategy,
        in_branch,
    };
    let modes: &[bool] = if opts.closure { &[false, true] } else { &[false] };

    if d == 1 {
        for &closure in modes {
            if let Some(cert) = search_by_restriction(cover, f, closure)? {
                return Ok(found(cert, Strategy::Restriction));
            }
        }
        return Ok(SpsSearchResult::NotFound(NotFound::RestrictionNotSquare {
            closure_checked: opts.closure,
        }));
    }

    let mut why = format!("no complete strategy for degree {d} over this field");
    if d == 2 && cover.nvars() == 3 {
        let mut proof = true;
        for &closure in modes {
            match search_by_conic_parametrization(cover, f, opts.point.as_deref(), closure)? {
                ConicOutcome::Found(cert) => return Ok(found(cert, Strategy::ConicParametrization)),
                ConicOutcome::NotSquare => {}
                ConicOutcome::NotApplicable(reason) => {
                    why = reason;
                    proof = false;
                    break;
                }
            }
        }
        if proof {
            return Ok(SpsSearchResult::NotFound(NotFound::RestrictionNotSquare {
                closure_checked: opts.closure,
            }));
        }
    }

    if cover.field().order().is_some() {
        return Ok(
            match search_by_exhaustion(cover, f, opts.closure, opts.max_candidates)? {
                Some(cert) => found(cert, Strategy::Exhaustion),
                None => SpsSearchResult::NotFound(NotFound::Exhausted {
                    candidates: exhaustion_count(cover, f).unwrap_or(0),
                    closure_checked: opts.closure,
                }),
            },
        );
    }
    Ok(SpsSearchResult::NotFound(NotFound::Inconclusive(why)))
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

    fn cert(h: &str, g: &str) -> SpsCertificate<Rationals> {
        SpsCertificate {
            h: q(h),
            g: q(g),
            unit: Rationals.one(),
        }
    }

    #[test]
    fn verify_examples() {
        let c = conic();
        assert!(sps_verify(&c, &q("x"), &cert("y", "-z")).unwrap());
        assert!(sps_verify(&c, &q("y^2 - x*z"), &cert("0", "1")).unwrap());
        assert!(!sps_verify(&c, &q("x"), &cert("y", "z")).unwrap());
    }

    #[test]
    fn verify_reports_degree_mismatch() {
        let c = conic();
        let e = sps_verify(&c, &q("x"), &cert("y^2", "-z")).unwrap_err();
        assert!(matches!(e, Error::DegreeMismatch(_)));
        let e = sps_verify(&c, &q("x"), &cert("y", "-z^2")).unwrap_err();
        assert!(matches!(e, Error::DegreeMismatch(_)));
        assert!(matches!(
            sps_verify(&c, &q("x^3"), &cert("y", "0")),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn search_tangent_line() {
        let c = conic();
        let r = sps_search(&c, &q("x"), &SpsOptions::default()).unwrap();
        match r {
            SpsSearchResult::Found {
                cert,
                strategy,
                in_branch,
            } => {
                assert_eq!(cert.h, q("y"));
                assert_eq!(cert.g, q("-z"));
                assert_eq!(strategy, Strategy::Restriction);
                assert!(!in_branch);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn secant_line_is_not_sps_even_over_closure() {
        let c = conic();
        let opts = SpsOptions {
            closure: true,
            ..Default::default()
        };
        let r = sps_search(&c, &q("y"), &opts).unwrap();
        assert_eq!(
            r,
            SpsSearchResult::NotFound(NotFound::RestrictionNotSquare { closure_checked: true })
        );
    }

    #[test]
    fn quartic_bitangent() {
        let c = DoubleCover::new(q("z^4 + x*(x^3 + y^3 + x*z^2)"), 2).unwrap();
        let r = sps_search(&c, &q("x"), &SpsOptions::default()).unwrap();
        let cert = r.certificate().unwrap();
        assert_eq!(cert.h, q("z^2"));
        assert_eq!(cert.g, q("x^3 + y^3 + x*z^2"));
    }

    #[test]
    fn closure_unit_over_q() {
        // F|_{x=0} = 2 y^2 is a square only over Q(sqrt 2)
        let c = DoubleCover::new(q("2*y^2 - x*z"), 1).unwrap();
        let strict = sps_search(&c, &q("x"), &SpsOptions::default()).unwrap();
        assert!(matches!(
            strict,
            SpsSearchResult::NotFound(NotFound::RestrictionNotSquare { .. })
        ));
        let opts = SpsOptions {
            closure: true,
            ..Default::default()
        };
        let r = sps_search(&c, &q("x"), &opts).unwrap();
        let cert = r.certificate().unwrap();
        assert_ne!(cert.unit, Rationals.one());
        assert!(sps_verify(&c, &q("x"), cert).unwrap());
    }

    #[test]
    fn conic_divisor_over_q() {
        let c = conic();
        // f = xz + 3y^2 satisfies F = (2y)^2 - f
        let f = q("x*z + 3*y^2");
        let r = sps_search(&c, &f, &SpsOptions::default()).unwrap();
        let SpsSearchResult::Found { cert, strategy, .. } = r else {
            panic!("expected a certificate");
        };
        assert_eq!(strategy, Strategy::ConicParametrization);
        assert!(sps_verify(&c, &f, &cert).unwrap());
        assert_eq!(cert.g, q("-1"));
    }

    #[test]
    fn conic_divisor_with_supplied_point() {
        let c = DoubleCover::new(q("x^4 + y^4 - z^4 + x*y*z^2"), 2).unwrap();
        let f = q("x^2 + y^2 - z^2");
        let r = &Rationals;
        let pt = vec![r.from_i64(3), r.from_i64(4), r.from_i64(5)];
        let out = search_by_conic_parametrization(&c, &f, Some(&pt), false).unwrap();
        let found = search_by_conic_parametrization(&c, &f, None, false).unwrap();
        assert_eq!(out, found);
        let bad = vec![r.from_i64(1), r.from_i64(1), r.from_i64(1)];
        assert!(search_by_conic_parametrization(&c, &f, Some(&bad), false).is_err());
    }

    #[test]
    fn parametrization_lands_on_conic() {
        let f = q("x^2 + y^2 - z^2");
        let r = &Rationals;
        let pt = vec![r.from_i64(0), r.from_i64(1), r.from_i64(1)];
        let param = conic_parametrization(&f, &pt);
        assert!(f.compose(&param).unwrap().is_zero());
        assert!(param.iter().all(|c| c.is_form_of_degree(2)));
    }

    #[test]
    fn branch_components() {
        let q1 = q("y^2 - x*z");
        let q2 = q("x^2 - y*z");
        let c = DoubleCover::new(&q1 * &q2, 2).unwrap();
        let certs = sps_branch_components(&c, &[q1.clone(), q2.clone()]).unwrap();
        assert_eq!(certs[0], cert("0", &q2.to_string()));
        assert_eq!(certs[1], cert("0", &q1.to_string()));

        let c = DoubleCover::new(q("x^2*y^2"), 2).unwrap();
        assert!(sps_branch_components(&c, &[q("x"), q("y")]).is_err());

        let c = DoubleCover::new(q1.square(), 2).unwrap();
        let certs = sps_branch_components(&c, &[q1.clone(), q1.clone()]).unwrap();
        assert_eq!(certs, vec![cert("0", &q1.to_string()); 2]);
    }

    #[test]
    fn exhaustion_agrees_with_restriction_on_lines() {
        let f5 = PrimeField::new(5).unwrap();
        let p = |s: &str| Polynomial::parse(s, 3, &f5).unwrap();
        let c = DoubleCover::new(p("y^2 - x*z"), 1).unwrap();
        for line in ["x", "y", "z", "x + y", "y + 2*z", "x + 3*y + z"] {
            let a = search_by_restriction(&c, &p(line), false).unwrap();
            let e = search_by_exhaustion(&c, &p(line), false, DEFAULT_MAX_CANDIDATES).unwrap();
            assert_eq!(a, e, "line {line}");
        }
    }

    #[test]
    fn exhaustion_requires_finite_field() {
        let c = conic();
        assert_eq!(
            search_by_exhaustion(&c, &q("x"), false, DEFAULT_MAX_CANDIDATES),
            Err(Error::NeedsFiniteField)
        );
    }

    #[test]
    fn higher_degree_over_q_is_inconclusive() {
        let c = DoubleCover::new(q("z^4 + x*(x^3 + y^3 + x*z^2)"), 2).unwrap();
        let r = sps_search(&c, &q("x^3 + y^3 + z^3"), &SpsOptions::default()).unwrap();
        assert!(matches!(r, SpsSearchResult::NotFound(NotFound::Inconclusive(_))));
    }

    #[test]
    fn cost_guard_triggers() {
        let f7 = PrimeField::new(7).unwrap();
        let p = |s: &str| Polynomial::parse(s, 3, &f7).unwrap();
        let c = DoubleCover::new(p("z^4 + x^4 + y^4"), 2).unwrap();
        let e = search_by_exhaustion(&c, &p("x"), false, 10).unwrap_err();
        assert!(matches!(e, Error::CostGuard { limit: 10, .. }));
    }
}
