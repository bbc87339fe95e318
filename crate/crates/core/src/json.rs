//! JSON wire formats. Polynomials travel as strings in the text grammar,
//! so reading any payload needs the variable count and field of the cover.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{CoefficientField, Field};
use crate::poly::Polynomial;
use crate::quadring::{DoubleCover, QuadRingElement};
use crate::split::SplitCertificate;
use crate::sps::{SpsCertificate, SpsSearchResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub p: String,
    pub q: String,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpsResultJson {
    pub found: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub in_branch: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Whether a negative answer is a proof of nonexistence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conclusive: Option<bool>,
}

/// An SPS certificate as supplied for verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpsCertificateJson {
    pub h: String,
    pub g: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitCertificateJson {
    pub p: String,
    pub q: String,
    pub a: Vec<u32>,
    pub k: u32,
    pub field: CoefficientField,
    #[serde(default = "yes")]
    pub asserted_generator_hypothesis: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

fn yes() -> bool {
    true
}

pub fn element_to_string<K: Field>(field: &K, a: &K::Elem) -> String {
    match field.signed_repr(a) {
        (true, s) => format!("-{s}"),
        (false, s) => s,
    }
}

pub fn parse_element<K: Field>(field: &K, text: &str) -> Result<K::Elem> {
    let c = Polynomial::parse(text, 1, field)?;
    if !c.is_constant() {
        return Err(Error::Invalid(format!("`{text}` is not a field element")));
    }
    Ok(c.coefficient(&crate::monomial::Monomial::one(1)))
}

fn is_one<K: Field>(field: &K, a: &K::Elem) -> bool {
    *a == field.one()
}

impl ElementJson {
    pub fn from_element<K: Field>(e: &QuadRingElement<K>) -> Self {
        ElementJson {
            p: e.p().to_string(),
            q: e.q().to_string(),
            k: e.grade(),
        }
    }

    pub fn to_element<K: Field>(&self, cover: &DoubleCover<K>) -> Result<QuadRingElement<K>> {
        let p = Polynomial::parse(&self.p, cover.nvars(), cover.field())?;
        let q = Polynomial::parse(&self.q, cover.nvars(), cover.field())?;
        QuadRingElement::new(cover, p, q, self.k)
    }
}

impl SpsResultJson {
    pub fn from_result<K: Field>(field: &K, r: &SpsSearchResult<K>, in_branch: bool) -> Self {
        match r {
            SpsSearchResult::Found {
                cert,
                strategy,
                in_branch,
            } => SpsResultJson {
                found: true,
                h: Some(cert.h.to_string()),
                g: Some(cert.g.to_string()),
                unit: Some(element_to_string(field, &cert.unit)),
                in_branch: *in_branch,
                strategy: Some(strategy.name().into()),
                reason: None,
                conclusive: None,
            },
            SpsSearchResult::NotFound(nf) => SpsResultJson {
                found: false,
                h: None,
                g: None,
                unit: None,
                in_branch,
                strategy: None,
                reason: Some(nf.describe()),
                conclusive: Some(nf.is_proof()),
            },
        }
    }
}

impl SpsCertificateJson {
    pub fn from_certificate<K: Field>(field: &K, c: &SpsCertificate<K>) -> Self {
        SpsCertificateJson {
            h: c.h.to_string(),
            g: c.g.to_string(),
            unit: (!is_one(field, &c.unit)).then(|| element_to_string(field, &c.unit)),
        }
    }

    pub fn to_certificate<K: Field>(&self, cover: &DoubleCover<K>) -> Result<SpsCertificate<K>> {
        let field = cover.field();
        Ok(SpsCertificate {
            h: Polynomial::parse(&self.h, cover.nvars(), field)?,
            g: Polynomial::parse(&self.g, cover.nvars(), field)?,
            unit: match &self.unit {
                Some(u) => parse_element(field, u)?,
                None => field.one(),
            },
        })
    }
}

impl SplitCertificateJson {
    pub fn from_certificate<K: Field>(field: &K, c: &SplitCertificate<K>) -> Self {
        SplitCertificateJson {
            p: c.p.to_string(),
            q: c.q.to_string(),
            a: c.a.clone(),
            k: c.k,
            field: field.descriptor(),
            asserted_generator_hypothesis: true,
            unit: (!is_one(field, &c.unit)).then(|| element_to_string(field, &c.unit)),
        }
    }

    pub fn to_certificate<K: Field>(&self, cover: &DoubleCover<K>) -> Result<SplitCertificate<K>> {
        let field = cover.field();
        if self.field != field.descriptor() {
            return Err(Error::Invalid(format!(
                "certificate is over {} but the cover is over {}",
                self.field,
                field.descriptor()
            )));
        }
        Ok(SplitCertificate {
            p: Polynomial::parse(&self.p, cover.nvars(), field)?,
            q: Polynomial::parse(&self.q, cover.nvars(), field)?,
            a: self.a.clone(),
            k: self.k,
            unit: match &self.unit {
                Some(u) => parse_element(field, u)?,
                None => field.one(),
            },
        })
    }
}
