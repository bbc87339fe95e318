//! Subcommand bodies. Each is written once, generically over the field,
//! and dispatched on the `--field` descriptor.

use std::path::Path;

use serde_json::{json, Value};
use splitcert::enumerate::{enumerate_sps_degree, enumerate_sps_lines, EnumerateOptions, Smoothness, SquareFreeness};
use splitcert::json::{parse_element, ElementJson, SplitCertificateJson, SpsCertificateJson, SpsResultJson};
use splitcert::split::{
    split_search_lifted, split_verify as verify_split, LiftedResult, PrimeOutcome, NOT_FOUND_DISCLAIMER,
};
use splitcert::sps::{
    divisor_degree, exhaustion_count, in_branch, search_by_conic_parametrization, search_by_exhaustion,
    search_by_restriction, sps_search, sps_verify, ConicOutcome, NotFound, Strategy,
};
use splitcert::{
    CoefficientField, DoubleCover, Error, Field, Polynomial, PrimeField, Rationals, SplitBounds, SplitSearchResult,
    SpsBasis, SpsOptions, SpsSearchResult,
};

use crate::report::{load_poly, parse_echoed, read_file, sha256_hex, InputError, InputRecord, Inputs, Outcome};
use crate::{CoverArgs, EnumerateArgs, RingArgs, RingOp, SplitSearchArgs, SplitVerifyArgs, SpsArgs, StrategyArg};

const IRREDUCIBLE: &str = "divisor equations are irreducible (not checked)";
const GENERATORS: &str = "the SPS basis together with the hyperplane class generates the class group (not checked)";
const RESIDUAL_NONZERO: &str = "identity residual nonzero";

type CliResult<T> = Result<T, InputError>;

macro_rules! with_field {
    ($desc:expr, |$k:ident| $body:expr) => {
        match $desc {
            CoefficientField::Rationals => {
                let $k = &Rationals;
                $body
            }
            CoefficientField::Prime(p) => {
                let $k = &PrimeField::new(p).map_err(|e| InputError::new(e.to_string()))?;
                $body
            }
        }
    };
}

enum FieldSpec {
    Rationals,
    Primes(Vec<u64>),
}

fn parse_field_spec(s: &str) -> CliResult<FieldSpec> {
    let s = s.trim();
    if s == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let Some(list) = s.strip_prefix("fp:") else {
        return Err(InputError::new(format!("unknown field `{s}`: expected q or fp:P")));
    };
    let mut primes = Vec::new();
    for part in list.split(',') {
        let field: CoefficientField = format!("fp:{}", part.trim())
            .parse()
            .map_err(|e: splitcert::FieldError| InputError::new(e.to_string()))?;
        match field {
            CoefficientField::Prime(p) if !primes.contains(&p) => primes.push(p),
            CoefficientField::Prime(p) => return Err(InputError::new(format!("prime {p} listed twice"))),
            CoefficientField::Rationals => unreachable!(),
        }
    }
    Ok(FieldSpec::Primes(primes))
}

fn single_field(s: &str) -> CliResult<CoefficientField> {
    match parse_field_spec(s)? {
        FieldSpec::Rationals => Ok(CoefficientField::Rationals),
        FieldSpec::Primes(ps) if ps.len() == 1 => Ok(CoefficientField::Prime(ps[0])),
        FieldSpec::Primes(_) => Err(InputError::new("this subcommand takes a single field")),
    }
}

fn load_cover<K: Field>(k: &K, args: &CoverArgs, inputs: &mut Inputs) -> CliResult<DoubleCover<K>> {
    if args.n == 0 {
        return Err(InputError::new("dimension must be at least 1"));
    }
    let (f, rec) = load_poly(&args.cover, args.n + 1, k)?;
    inputs.cover = Some(rec);
    inputs.l = Some(args.l);
    inputs.n = Some(args.n);
    DoubleCover::new(f, args.l).map_err(|e| InputError::from(e).in_file(&args.cover))
}

fn load_divisor<K: Field>(cover: &DoubleCover<K>, path: &Path) -> CliResult<(Polynomial<K>, InputRecord)> {
    let (f, rec) = load_poly(path, cover.nvars(), cover.field())?;
    divisor_degree(cover, &f).map_err(|e| InputError::from(e).in_file(path))?;
    Ok((f, rec))
}

fn read_json(path: &Path) -> CliResult<(Value, InputRecord)> {
    let bytes = read_file(path)?;
    let doc =
        serde_json::from_slice(&bytes).map_err(|e| InputError::new(format!("invalid JSON: {e}")).in_file(path))?;
    let rec = InputRecord {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
        polynomial: None,
    };
    Ok((doc, rec))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

// ---------------------------------------------------------------- sps

pub fn sps(args: &SpsArgs, strategy: StrategyArg, inputs: &mut Inputs) -> CliResult<Outcome> {
    with_field!(single_field(&args.cover.field)?, |k| sps_in(k, args, strategy, inputs))
}

fn sps_in<K: Field>(k: &K, args: &SpsArgs, strategy: StrategyArg, inputs: &mut Inputs) -> CliResult<Outcome> {
    let cover = load_cover(k, &args.cover, inputs)?;
    let (f, rec) = load_divisor(&cover, &args.divisor)?;
    inputs.divisor = Some(rec);
    let branch = in_branch(&cover, &f)?;
    let field_name = k.descriptor().to_string();

    if let Some(path) = &args.cert {
        let (doc, rec) = read_json(path)?;
        inputs.cert = Some(rec);
        let payload = doc.get("result").cloned().unwrap_or(doc);
        let cj: SpsCertificateJson = serde_json::from_value(payload)
            .map_err(|e| InputError::new(format!("not an SPS certificate: {e}")).in_file(path))?;
        let cert = cj
            .to_certificate(&cover)
            .map_err(|e| InputError::from(e).in_file(path))?;
        let (valid, reason) = match sps_verify(&cover, &f, &cert) {
            Ok(true) => (true, None),
            Ok(false) => (false, Some(RESIDUAL_NONZERO.to_string())),
            Err(Error::DegreeMismatch(m)) => (false, Some(format!("degree mismatch: {m}"))),
            Err(e) => return Err(e.into()),
        };
        let mut result = to_json(&cj);
        result["unit"] = json!(splitcert::json::element_to_string(k, &cert.unit));
        result["mode"] = json!("verify");
        result["found"] = json!(valid);
        result["valid"] = json!(valid);
        result["inBranch"] = json!(branch);
        if let Some(r) = reason {
            result["reason"] = json!(r);
        }
        let mut out = Outcome::new(valid, field_name, result);
        out.hypotheses.push(IRREDUCIBLE.into());
        return Ok(out);
    }

    let point = match &args.point {
        Some(text) => {
            let coords = text
                .split(',')
                .map(|c| parse_element(k, c.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != cover.nvars() {
                return Err(InputError::new(format!("--point needs {} coordinates", cover.nvars())));
            }
            Some(coords)
        }
        None => None,
    };
    let opts = SpsOptions {
        closure: args.closure,
        point,
        max_candidates: args.max_candidates,
    };
    let r = run_strategy(&cover, &f, &opts, strategy, branch)?;
    let mut result = to_json(&SpsResultJson::from_result(k, &r, branch));
    if let Some(cert) = r.certificate() {
        result["verified"] = json!(sps_verify(&cover, &f, cert)?);
    }
    let mut out = Outcome::new(r.certificate().is_some(), field_name, result);
    out.bounds = Some(json!({ "maxCandidates": args.max_candidates.to_string() }));
    out.hypotheses.push(IRREDUCIBLE.into());
    Ok(out)
}

fn run_strategy<K: Field>(
    cover: &DoubleCover<K>,
    f: &Polynomial<K>,
    opts: &SpsOptions<K>,
    strategy: StrategyArg,
    branch: bool,
) -> CliResult<SpsSearchResult<K>> {
    let modes: &[bool] = if opts.closure { &[false, true] } else { &[false] };
    let found = |cert, strategy| SpsSearchResult::Found {
        cert,
        strategy,
        in_branch: branch,
    };
    let not_square = SpsSearchResult::NotFound(NotFound::RestrictionNotSquare {
        closure_checked: opts.closure,
    });
    match strategy {
        StrategyArg::Auto => Ok(sps_search(cover, f, opts)?),
        StrategyArg::Restriction => {
            if divisor_degree(cover, f)? != 1 {
                return Err(InputError::new("the restriction strategy needs a linear divisor"));
            }
            for &c in modes {
                if let Some(cert) = search_by_restriction(cover, f, c)? {
                    return Ok(found(cert, Strategy::Restriction));
                }
            }
            Ok(not_square)
        }
        StrategyArg::Conic => {
            for &c in modes {
                match search_by_conic_parametrization(cover, f, opts.point.as_deref(), c)? {
                    ConicOutcome::Found(cert) => return Ok(found(cert, Strategy::ConicParametrization)),
                    ConicOutcome::NotSquare => {}
                    ConicOutcome::NotApplicable(why) => {
                        return Err(InputError::new(format!("conic strategy not applicable: {why}")))
                    }
                }
            }
            Ok(not_square)
        }
        StrategyArg::Exhaustion => {
            if cover.field().order().is_none() {
                return Err(InputError::new("exhaustion needs a finite field"));
            }
            Ok(
                match search_by_exhaustion(cover, f, opts.closure, opts.max_candidates)? {
                    Some(cert) => found(cert, Strategy::Exhaustion),
                    None => SpsSearchResult::NotFound(NotFound::Exhausted {
                        candidates: exhaustion_count(cover, f).unwrap_or(0),
                        closure_checked: opts.closure,
                    }),
                },
            )
        }
    }
}

// ---------------------------------------------------------------- split-verify

pub fn split_verify(args: &SplitVerifyArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    let (doc, rec) = read_json(&args.cert)?;
    inputs.cert = Some(rec);
    let (payload, report) = match doc.get("result") {
        Some(result) => (result.get("certificate").cloned().unwrap_or(Value::Null), Some(&doc)),
        None => (doc.clone(), None),
    };
    if payload.is_null() {
        return Err(InputError::new("report holds no certificate").in_file(&args.cert));
    }
    let cj: SplitCertificateJson = serde_json::from_value(payload)
        .map_err(|e| InputError::new(format!("not a splitting certificate: {e}")).in_file(&args.cert))?;
    let desc = match &args.field {
        Some(s) => single_field(s)?,
        None => cj.field,
    };
    with_field!(desc, |k| split_verify_in(k, args, &cj, report, inputs))
}

fn echoed<'a>(report: Option<&'a Value>, key: &str) -> Option<&'a Value> {
    report.and_then(|r| r.get("inputs")).and_then(|i| i.get(key))
}

fn echoed_record(report_path: &Path, key: &str, text: &str) -> InputRecord {
    InputRecord {
        path: format!("{}#inputs.{key}", report_path.display()),
        sha256: sha256_hex(text.as_bytes()),
        polynomial: Some(text.to_string()),
    }
}

fn echoed_poly<K: Field>(
    k: &K,
    nvars: usize,
    report: Option<&Value>,
    report_path: &Path,
    key: &str,
) -> CliResult<(Polynomial<K>, InputRecord)> {
    let text = echoed(report, key)
        .and_then(|v| v.get("polynomial"))
        .and_then(Value::as_str)
        .ok_or_else(|| InputError::new(format!("--{key} is required")))?;
    Ok((
        parse_echoed(text, nvars, k, key)?,
        echoed_record(report_path, key, text),
    ))
}

fn split_verify_in<K: Field>(
    k: &K,
    args: &SplitVerifyArgs,
    cj: &SplitCertificateJson,
    report: Option<&Value>,
    inputs: &mut Inputs,
) -> CliResult<Outcome> {
    let n = args
        .n
        .or_else(|| echoed(report, "n").and_then(Value::as_u64).map(|v| v as usize))
        .unwrap_or(2);
    let l = args
        .l
        .or_else(|| echoed(report, "l").and_then(Value::as_u64).map(|v| v as u32))
        .ok_or_else(|| InputError::new("-l is required"))?;
    if n == 0 {
        return Err(InputError::new("dimension must be at least 1"));
    }
    let nvars = n + 1;
    let (branch, rec) = match &args.cover {
        Some(path) => load_poly(path, nvars, k)?,
        None => echoed_poly(k, nvars, report, &args.cert, "cover")?,
    };
    inputs.cover = Some(rec);
    inputs.l = Some(l);
    inputs.n = Some(n);
    let cover = DoubleCover::new(branch, l)?;
    let (f, rec) = match &args.divisor {
        Some(path) => load_poly(path, nvars, k)?,
        None => echoed_poly(k, nvars, report, &args.cert, "divisor")?,
    };
    inputs.divisor = Some(rec);
    let mut gs = Vec::new();
    if !args.sps.is_empty() {
        for path in &args.sps {
            let (g, rec) = load_poly(path, nvars, k)?;
            gs.push(g);
            inputs.sps.push(rec);
        }
    } else {
        let listed = echoed(report, "sps")
            .and_then(Value::as_array)
            .ok_or_else(|| InputError::new("--sps is required"))?;
        for (i, entry) in listed.iter().enumerate() {
            let text = entry
                .get("polynomial")
                .and_then(Value::as_str)
                .ok_or_else(|| InputError::new("malformed sps entry in report"))?;
            gs.push(parse_echoed(text, nvars, k, "sps")?);
            inputs.sps.push(echoed_record(&args.cert, &format!("sps[{i}]"), text));
        }
    }
    let basis = SpsBasis::new(&cover, gs)?;
    let cert = cj
        .to_certificate(&cover)
        .map_err(|e| InputError::from(e).in_file(&args.cert))?;

    let mut result = json!({ "certificate": to_json(cj) });
    let valid = match verify_split(&cover, &f, &basis, &cert) {
        Ok(true) => {
            result["degenerate"] = json!(cert.is_degenerate());
            true
        }
        Ok(false) => {
            let target = &basis.power_product(&cert.a, cover.nvars(), k) * &f;
            let norm = &cert.p.square() - &(&cert.q.square() * cover.branch());
            result["reason"] = json!(RESIDUAL_NONZERO);
            result["residual"] = json!((&norm - &target.scale(&cert.unit)).to_string());
            false
        }
        Err(Error::DegreeMismatch(m)) => {
            result["reason"] = json!(format!("degree mismatch: {m}"));
            false
        }
        Err(e) => return Err(e.into()),
    };
    result["valid"] = json!(valid);
    let mut out = Outcome::new(valid, k.descriptor().to_string(), result);
    out.hypotheses = vec![IRREDUCIBLE.into(), GENERATORS.into()];
    Ok(out)
}

// ---------------------------------------------------------------- split-search

fn load_split_inputs<K: Field>(
    k: &K,
    args: &SplitSearchArgs,
    inputs: &mut Inputs,
) -> CliResult<(DoubleCover<K>, Polynomial<K>, SpsBasis<K>)> {
    let cover = load_cover(k, &args.cover, inputs)?;
    let (f, rec) = load_poly(&args.divisor, cover.nvars(), k)?;
    inputs.divisor = Some(rec);
    inputs.sps.clear();
    let mut gs = Vec::new();
    for path in &args.sps {
        let (g, rec) = load_poly(path, cover.nvars(), k)?;
        gs.push(g);
        inputs.sps.push(rec);
    }
    let basis = SpsBasis::new(&cover, gs)?;
    Ok((cover, f, basis))
}

/// Basis elements that are provably not SPS over the field.
fn basis_warnings<K: Field>(cover: &DoubleCover<K>, basis: &SpsBasis<K>, max_candidates: u128) -> Vec<String> {
    let opts = SpsOptions {
        max_candidates,
        ..SpsOptions::default()
    };
    let mut out = Vec::new();
    for e in basis.entries() {
        match sps_search(cover, &e.g, &opts) {
            Ok(SpsSearchResult::NotFound(nf)) if nf.is_proof() => out.push(format!(
                "basis element {} is not SPS over {}",
                e.g,
                cover.field().descriptor()
            )),
            Ok(_) => {}
            Err(err) => out.push(format!("basis element {} not checked: {err}", e.g)),
        }
    }
    out
}

fn bounds_json(args: &SplitSearchArgs, primes: &[u64]) -> Value {
    json!({
        "maxExpSum": args.max_exp,
        "maxK": args.max_k,
        "maxCandidates": args.max_candidates.to_string(),
        "primes": primes,
    })
}

fn split_at_prime(p: u64, args: &SplitSearchArgs, inputs: &mut Inputs) -> CliResult<(bool, Value, Vec<String>)> {
    let k = &PrimeField::new(p).map_err(|e| InputError::new(e.to_string()))?;
    let (cover, f, basis) = load_split_inputs(k, args, inputs)?;
    let bounds = SplitBounds {
        max_exp_sum: args.max_exp,
        max_k: args.max_k,
        max_candidates: args.max_candidates,
    };
    let warnings = basis_warnings(&cover, &basis, args.max_candidates);
    let result = match splitcert::split::split_search(&cover, &f, &basis, &bounds)? {
        SplitSearchResult::Found(cert) => json!({
            "found": true,
            "certificate": to_json(&SplitCertificateJson::from_certificate(k, &cert)),
            "degenerate": cert.is_degenerate(),
        }),
        SplitSearchResult::NotFoundWithinBounds {
            exponent_vectors,
            candidates,
        } => json!({
            "found": false,
            "disclaimer": NOT_FOUND_DISCLAIMER,
            "searched": { "exponentVectors": exponent_vectors, "candidates": candidates.to_string() },
        }),
    };
    Ok((result["found"] == json!(true), result, warnings))
}

pub fn split_search(args: &SplitSearchArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    let primes = match parse_field_spec(&args.cover.field)? {
        FieldSpec::Rationals => {
            return Err(InputError::new(
                "split-search runs over GF(p); give --field fp:P[,P2..] and --lift-to-q for Q",
            ))
        }
        FieldSpec::Primes(ps) => ps,
    };
    let hypotheses = vec![IRREDUCIBLE.to_string(), GENERATORS.to_string()];
    if args.lift_to_q {
        return split_lifted(args, &primes, inputs, hypotheses);
    }
    let mut out = if primes.len() == 1 {
        let (found, result, warnings) = split_at_prime(primes[0], args, inputs)?;
        let mut out = Outcome::new(found, format!("fp:{}", primes[0]), result);
        out.warnings = warnings;
        out
    } else {
        let mut per = Vec::new();
        let mut all = true;
        let mut warnings = Vec::new();
        for &p in &primes {
            let (found, mut result, w) = split_at_prime(p, args, inputs)?;
            all &= found;
            result["prime"] = json!(p);
            if let Some(obj) = result.as_object_mut() {
                obj.remove("disclaimer");
            }
            per.push(result);
            warnings.extend(w.into_iter().map(|w| format!("GF({p}): {w}")));
        }
        let mut result = json!({ "found": all, "perPrime": per });
        if !all {
            result["disclaimer"] = json!(NOT_FOUND_DISCLAIMER);
        }
        let list: Vec<String> = primes.iter().map(u64::to_string).collect();
        let mut out = Outcome::new(all, format!("fp:{}", list.join(",")), result);
        out.warnings = warnings;
        out
    };
    out.bounds = Some(bounds_json(args, &primes));
    out.hypotheses = hypotheses;
    Ok(out)
}

fn split_lifted(
    args: &SplitSearchArgs,
    primes: &[u64],
    inputs: &mut Inputs,
    hypotheses: Vec<String>,
) -> CliResult<Outcome> {
    let (cover, f, basis) = load_split_inputs(&Rationals, args, inputs)?;
    let bounds = SplitBounds {
        max_exp_sum: args.max_exp,
        max_k: args.max_k,
        max_candidates: args.max_candidates,
    };
    let evidence_json = |ev: &[splitcert::split::PrimeEvidence]| -> Value {
        ev.iter()
            .map(|e| match &e.outcome {
                PrimeOutcome::Found { a, k, p, q } => {
                    json!({ "prime": e.prime, "outcome": "found", "a": a, "k": k, "p": p, "q": q })
                }
                PrimeOutcome::NotFound { candidates } => {
                    json!({ "prime": e.prime, "outcome": "not-found", "candidates": candidates.to_string() })
                }
                PrimeOutcome::BadReduction(why) => {
                    json!({ "prime": e.prime, "outcome": "bad-reduction", "reason": why })
                }
            })
            .collect()
    };
    let (found, result) = match split_search_lifted(&cover, &f, &basis, &bounds, primes)? {
        LiftedResult::Found { cert, evidence } => (
            true,
            json!({
                "found": true,
                "certificate": to_json(&SplitCertificateJson::from_certificate(&Rationals, &cert)),
                "degenerate": cert.is_degenerate(),
                "perPrime": evidence_json(&evidence),
            }),
        ),
        LiftedResult::NotFoundWithinBounds { reason, evidence } => (
            false,
            json!({
                "found": false,
                "reason": reason,
                "disclaimer": NOT_FOUND_DISCLAIMER,
                "perPrime": evidence_json(&evidence),
            }),
        ),
    };
    let mut out = Outcome::new(found, "q".into(), result);
    out.bounds = Some(bounds_json(args, primes));
    out.hypotheses = hypotheses;
    Ok(out)
}

// ---------------------------------------------------------------- enumerate-sps

pub fn enumerate(args: &EnumerateArgs, seed: u64, inputs: &mut Inputs) -> CliResult<Outcome> {
    let p = match single_field(&args.cover.field)? {
        CoefficientField::Prime(p) => p,
        CoefficientField::Rationals => return Err(InputError::new("enumeration needs --field fp:P")),
    };
    let k = &PrimeField::new(p).map_err(|e| InputError::new(e.to_string()))?;
    let cover = load_cover(k, &args.cover, inputs)?;
    let opts = EnumerateOptions {
        max_candidates: args.max_candidates,
        allow_over_bound: args.allow_over_bound,
        seed,
        ..EnumerateOptions::default()
    };
    let e = if args.degree == 1 {
        enumerate_sps_lines(&cover, &opts)?
    } else {
        enumerate_sps_degree(&cover, args.degree, &opts)?
    };
    let hits: Vec<Value> = e
        .hits
        .iter()
        .map(|h| {
            let mut v = to_json(&SpsCertificateJson::from_certificate(k, &h.cert));
            v["f"] = json!(h.f.to_string());
            v["inBranch"] = json!(h.in_branch);
            v["visiblyReducible"] = json!(h.visibly_reducible);
            v
        })
        .collect();
    let smooth = match e.branch_smoothness {
        Smoothness::Smooth => "smooth",
        Smoothness::Singular => "singular",
        Smoothness::Unchecked => "unchecked",
    };
    let squarefree = match e.branch_squarefree {
        SquareFreeness::LikelySquareFree => "likely",
        SquareFreeness::NotSquareFree => "no",
        SquareFreeness::Inconclusive => "inconclusive",
    };
    let result = json!({
        "degree": e.degree,
        "hitCount": hits.len(),
        "hits": hits,
        "searched": e.searched_count.to_string(),
        "branchSmoothness": smooth,
        "branchSquareFree": squarefree,
    });
    let mut out = Outcome::new(!e.hits.is_empty(), e.field.to_string(), result);
    out.bounds = Some(json!({
        "maxCandidates": args.max_candidates.to_string(),
        "allowOverBound": args.allow_over_bound,
    }));
    out.warnings = e.warnings;
    Ok(out)
}

// ---------------------------------------------------------------- ring

pub fn ring(args: &RingArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    with_field!(single_field(&args.cover.field)?, |k| ring_in(k, args, inputs))
}

fn parse_elem_arg(text: &str) -> CliResult<Value> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| InputError::new(format!("invalid element JSON: {e}")))
    } else {
        Ok(read_json(Path::new(text))?.0)
    }
}

fn ring_in<K: Field>(k: &K, args: &RingArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    let cover = load_cover(k, &args.cover, inputs)?;
    let arity = if args.op == RingOp::Mul { 2 } else { 1 };
    if args.elems.len() != arity {
        return Err(InputError::new(format!("expected {arity} --elem argument(s)")));
    }
    let mut elems = Vec::new();
    for text in &args.elems {
        let v = parse_elem_arg(text)?;
        let ej: ElementJson =
            serde_json::from_value(v.clone()).map_err(|e| InputError::new(format!("invalid element: {e}")))?;
        elems.push(ej.to_element(&cover)?);
        inputs.elements.push(v);
    }
    let result = match args.op {
        RingOp::Mul => json!({ "element": to_json(&ElementJson::from_element(&elems[0].mul(&elems[1], &cover)?)) }),
        RingOp::Conj => json!({ "element": to_json(&ElementJson::from_element(&elems[0].conjugate())) }),
        RingOp::Norm => json!({ "norm": elems[0].norm(&cover)?.to_string() }),
    };
    Ok(Outcome::new(true, k.descriptor().to_string(), result))
}

pub fn ring_pretty(result: &Value) -> String {
    if let Some(n) = result.get("norm").and_then(Value::as_str) {
        return n.to_string();
    }
    let e = &result["element"];
    format!(
        "({}) + ({})*t  [grade {}]",
        e["p"].as_str().unwrap_or_default(),
        e["q"].as_str().unwrap_or_default(),
        e["k"]
    )
}
