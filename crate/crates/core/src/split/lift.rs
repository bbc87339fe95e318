//! Splitting certificates over Q from searches modulo several primes.
//!
//! Each prime yields the first certificate in search order. For an
//! exponent vector found at one or more primes, the `q` coefficients are
//! combined by the Chinese remainder theorem (over every sign choice, since
//! each prime only fixes `q` up to sign) and rationally reconstructed. A
//! candidate is accepted only after `p` is recovered as an exact square
//! root over Q and the identity is re-verified.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{split_search, split_verify, SplitBounds, SplitCertificate, SplitSearchResult, SpsBasis};
use crate::error::{Error, Result};
use crate::field::{reduce_rational, Field, PrimeField, Rationals};
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;
use crate::quadring::DoubleCover;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeOutcome {
    Found {
        a: Vec<u32>,
        k: u32,
        p: String,
        q: String,
    },
    NotFound {
        candidates: u128,
    },
    /// The input does not reduce well modulo this prime.
    BadReduction(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeEvidence {
    pub prime: u64,
    pub outcome: PrimeOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftedResult {
    Found {
        cert: SplitCertificate<Rationals>,
        evidence: Vec<PrimeEvidence>,
    },
    NotFoundWithinBounds {
        reason: String,
        evidence: Vec<PrimeEvidence>,
    },
}

/// `x` with `x = r_i mod m_i` for pairwise coprime moduli; returns
/// `(x mod M, M)`.
pub fn chinese_remainder(residues: &[(BigInt, BigInt)]) -> (BigInt, BigInt) {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (r, mi) in residues {
        // x + m * t = r (mod mi)
        let g = m.extended_gcd(mi);
        debug_assert!(g.gcd.is_one(), "moduli must be coprime");
        let t = ((r - &x) * &g.x).mod_floor(mi);
        x += &m * t;
        m *= mi;
        x = x.mod_floor(&m);
    }
    (x, m)
}

/// The fraction `a / b` with `a = u b (mod m)`, `|a|, b <= sqrt(m / 2)`,
/// if one exists.
pub fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let qt = &r0 / &r1;
        let r2 = &r0 - &qt * &r1;
        let t2 = &t0 - &qt * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn reduce_poly(f: &Polynomial<Rationals>, field: &PrimeField) -> Result<Polynomial<PrimeField>> {
    Ok(f.map_field(field, |c| reduce_rational(field, c))?)
}

struct Reduced {
    cover: DoubleCover<PrimeField>,
    f: Polynomial<PrimeField>,
    basis: SpsBasis<PrimeField>,
}

fn reduce_instance(
    cover: &DoubleCover<Rationals>,
    f: &Polynomial<Rationals>,
    basis: &SpsBasis<Rationals>,
    field: &PrimeField,
) -> std::result::Result<Reduced, String> {
    let keeps_shape = |orig: &Polynomial<Rationals>, red: &Polynomial<PrimeField>| red.num_terms() == orig.num_terms();
    let branch = reduce_poly(cover.branch(), field).map_err(|e| e.to_string())?;
    if !keeps_shape(cover.branch(), &branch) {
        return Err("branch equation loses terms".into());
    }
    let rcover = DoubleCover::new(branch, cover.l()).map_err(|e| e.to_string())?;
    let rf = reduce_poly(f, field).map_err(|e| e.to_string())?;
    if !keeps_shape(f, &rf) {
        return Err("divisor equation loses terms".into());
    }
    let mut gs = Vec::new();
    for e in basis.entries() {
        let g = reduce_poly(&e.g, field).map_err(|e| e.to_string())?;
        if !keeps_shape(&e.g, &g) {
            return Err("basis element loses terms".into());
        }
        gs.push(g);
    }
    let rbasis = SpsBasis::new(&rcover, gs).map_err(|e| e.to_string())?;
    match rcover.branch().divide_exact(&rf) {
        Ok(Some(_)) => return Err("divisor divides the branch equation modulo p".into()),
        Ok(None) => {}
        Err(e) => return Err(e.to_string()),
    }
    Ok(Reduced {
        cover: rcover,
        f: rf,
        basis: rbasis,
    })
}

/// Search modulo each prime in `primes` and lift to a certificate over Q.
pub fn split_search_lifted(
    cover: &DoubleCover<Rationals>,
    f: &Polynomial<Rationals>,
    basis: &SpsBasis<Rationals>,
    bounds: &SplitBounds,
    primes: &[u64],
) -> Result<LiftedResult> {
    if primes.is_empty() {
        return Err(Error::Invalid("lifting needs at least one prime".into()));
    }
    if cover.branch().divide_exact(f)?.is_some() {
        return Err(Error::HypothesisViolated(
            "the divisor divides the branch equation (C lies in the branch locus)".into(),
        ));
    }
    let mut evidence = Vec::new();
    let mut hits: Vec<(PrimeField, SplitCertificate<PrimeField>)> = Vec::new();
    for &p in primes {
        let field = PrimeField::new(p)?;
        let outcome = match reduce_instance(cover, f, basis, &field) {
            Err(why) => PrimeOutcome::BadReduction(why),
            Ok(red) => match split_search(&red.cover, &red.f, &red.basis, bounds)? {
                SplitSearchResult::Found(cert) => {
                    let o = PrimeOutcome::Found {
                        a: cert.a.clone(),
                        k: cert.k,
                        p: cert.p.to_string(),
                        q: cert.q.to_string(),
                    };
                    hits.push((field, cert));
                    o
                }
                SplitSearchResult::NotFoundWithinBounds { candidates, .. } => PrimeOutcome::NotFound { candidates },
            },
        };
        evidence.push(PrimeEvidence { prime: p, outcome });
    }
    if hits.is_empty() {
        return Ok(LiftedResult::NotFoundWithinBounds {
            reason: "no prime produced a certificate".into(),
            evidence,
        });
    }

    // distinct exponent vectors in the order they were first found
    let mut groups: Vec<(Vec<u32>, u32)> = Vec::new();
    for (_, c) in &hits {
        if !groups.iter().any(|(a, _)| a == &c.a) {
            groups.push((c.a.clone(), c.k));
        }
    }
    groups.sort();
    for (a, k) in groups {
        let members: Vec<&(PrimeField, SplitCertificate<PrimeField>)> = hits.iter().filter(|(_, c)| c.a == a).collect();
        if let Some(cert) = lift_group(cover, f, basis, &a, k, &members)? {
            return Ok(LiftedResult::Found { cert, evidence });
        }
    }
    Ok(LiftedResult::NotFoundWithinBounds {
        reason: "rational reconstruction did not yield a certificate over Q".into(),
        evidence,
    })
}

fn lift_group(
    cover: &DoubleCover<Rationals>,
    f: &Polynomial<Rationals>,
    basis: &SpsBasis<Rationals>,
    a: &[u32],
    k: u32,
    members: &[&(PrimeField, SplitCertificate<PrimeField>)],
) -> Result<Option<SplitCertificate<Rationals>>> {
    let l = cover.l();
    let qbasis = if k >= l {
        monomials_of_degree(cover.nvars(), k - l)
    } else {
        Vec::new()
    };
    let target = &basis.power_product(a, cover.nvars(), &Rationals) * f;
    let signs = 1usize << (members.len() - 1);
    for mask in 0..signs {
        let mut coeffs = Vec::with_capacity(qbasis.len());
        let mut ok = true;
        for m in &qbasis {
            let residues: Vec<(BigInt, BigInt)> = members
                .iter()
                .enumerate()
                .map(|(i, (field, c))| {
                    let mut v = c.q.coefficient(m);
                    if i > 0 && mask & (1 << (i - 1)) != 0 {
                        v = field.neg(&v);
                    }
                    (BigInt::from(v), BigInt::from(field.modulus()))
                })
                .collect();
            let (x, modulus) = chinese_remainder(&residues);
            match rational_reconstruction(&x, &modulus) {
                Some(r) => coeffs.push(r),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let q = Polynomial::from_coefficients(&Rationals, cover.nvars(), &qbasis, &coeffs).sign_normalized();
        let s = &target + &(&q.square() * cover.branch());
        let Some(p) = s.formal_square_root()? else {
            continue;
        };
        let cert = SplitCertificate {
            p,
            q,
            a: a.to_vec(),
            k,
            unit: Rationals.one(),
        };
        if split_verify(cover, f, basis, &cert)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn crt_combines() {
        let (x, m) = chinese_remainder(&[(b(2), b(3)), (b(3), b(5)), (b(2), b(7))]);
        assert_eq!(m, b(105));
        assert_eq!(x, b(23));
    }

    #[test]
    fn reconstructs_small_fractions() {
        let m = b(10007 * 10009);
        for (n, d) in [(3i64, 4i64), (-5, 7), (0, 1), (1, 1), (-22, 9)] {
            let dinv = b(d).extended_gcd(&m).x;
            let u = (b(n) * dinv).mod_floor(&m);
            assert_eq!(rational_reconstruction(&u, &m), Some(BigRational::new(b(n), b(d))));
        }
    }

    #[test]
    fn lifts_conic_certificate() {
        let q = |s: &str| Polynomial::parse(s, 3, &Rationals).unwrap();
        let cover = DoubleCover::new(q("y^2 - x*z"), 1).unwrap();
        let basis = SpsBasis::new(&cover, vec![q("x"), q("z")]).unwrap();
        let f = q("x*z + 3*y^2");
        let r = split_search_lifted(&cover, &f, &basis, &SplitBounds::new(2, 3), &[7, 11, 13]).unwrap();
        let LiftedResult::Found { cert, evidence } = r else {
            panic!("expected a lifted certificate");
        };
        assert!(split_verify(&cover, &f, &basis, &cert).unwrap());
        assert_eq!(evidence.len(), 3);
    }

    #[test]
    fn reports_bad_primes() {
        let q = |s: &str| Polynomial::parse(s, 3, &Rationals).unwrap();
        let cover = DoubleCover::new(q("y^2 - 5*x*z"), 1).unwrap();
        let basis = SpsBasis::new(&cover, vec![q("x")]).unwrap();
        let r = split_search_lifted(&cover, &q("y"), &basis, &SplitBounds::new(2, 2), &[5]).unwrap();
        let LiftedResult::NotFoundWithinBounds { evidence, .. } = r else {
            panic!("prime 5 is bad");
        };
        assert!(matches!(evidence[0].outcome, PrimeOutcome::BadReduction(_)));
    }
}
