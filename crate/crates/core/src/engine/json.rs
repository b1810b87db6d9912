//! Flat JSON certificate documents.
//!
//! Every value is stored in canonical text form and parsing rejects anything
//! non-canonical, so `parse(render(c)) == c` and `render(parse(s)) == s` for
//! every accepted document. Consistency of the evidence is *not* checked here;
//! that is the verifier's job.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Certificate, Evidence, Filter, SurdEvidence, TriangleEvidence};
use crate::exactnum::Rat;
use crate::theta::{parse_theta, Sign};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateParseError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    UnsupportedSchema(String),
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("field `{0}` is not allowed for this reason")]
    UnexpectedField(&'static str),
    #[error("field `{field}`: {message}")]
    InvalidValue { field: &'static str, message: String },
    #[error("verdict `{found}` does not match reason `{reason}`")]
    VerdictMismatch { found: String, reason: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    schema_version: u64,
    theta: String,
    verdict: String,
    reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    prime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    failed_filters: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    triangle: Option<[u64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sign: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rep: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    distances: Option<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bound: Option<u64>,
}

const VERTEX: &str = "vertex";
const FORM: &str = "form-representation";
const TRIANGLE: &str = "triangle";
const EXHAUSTED: &str = "search-exhausted";

impl Certificate {
    /// Reason code: the evidence kind for positive verdicts, the first failed
    /// filter for negative ones.
    pub fn reason_code(&self) -> &'static str {
        match &self.evidence {
            Evidence::Vertex { .. } => VERTEX,
            Evidence::Surd(_) => FORM,
            Evidence::Triangle(_) => TRIANGLE,
            Evidence::Rejected { reason, .. } => reason.code(),
            Evidence::Exhausted { .. } => EXHAUSTED,
        }
    }

    fn document(&self) -> Document {
        let mut doc = Document {
            schema_version: SCHEMA_VERSION,
            theta: self.theta.to_string(),
            verdict: self.verdict().as_str().to_string(),
            reason: self.reason_code().to_string(),
            prime: None,
            failed_filters: None,
            triangle: None,
            lambda: None,
            sign: None,
            rep: None,
            e: None,
            r: None,
            s: None,
            distances: None,
            bound: None,
        };
        let strings = |d: &[Rat; 3]| d.clone().map(|x| x.to_string());
        match &self.evidence {
            Evidence::Vertex { distances } => doc.distances = Some(strings(distances)),
            Evidence::Surd(ev) => {
                doc.rep = Some([ev.a.to_string(), ev.b.to_string()]);
                doc.e = Some(ev.e.to_string());
                doc.r = Some(ev.r.to_string());
                doc.s = Some(ev.s.to_string());
                doc.distances = Some(strings(&ev.distances));
            }
            Evidence::Triangle(ev) => {
                doc.triangle = Some(ev.sides);
                doc.lambda = Some(ev.lambda.to_string());
                doc.sign = Some(ev.sign.as_str().to_string());
                doc.distances = Some(strings(&ev.distances));
            }
            Evidence::Rejected { prime, failed, .. } => {
                doc.prime = prime.as_ref().map(BigInt::to_string);
                doc.failed_filters = Some(failed.iter().map(|f| f.code().to_string()).collect());
            }
            Evidence::Exhausted { bound } => doc.bound = Some(*bound),
        }
        doc
    }

    /// Pretty-printed JSON document.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.document()).expect("certificate documents always serialize")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.document()).expect("certificate documents always serialize")
    }

    /// Parses a document produced by [`Certificate::to_json`].
    pub fn from_json(text: &str) -> Result<Certificate, CertificateParseError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| CertificateParseError::Json(e.to_string()))?;
        match value.get("schema_version") {
            None => return Err(CertificateParseError::MissingField("schema_version")),
            Some(v) if v.as_u64() != Some(SCHEMA_VERSION) => {
                return Err(CertificateParseError::UnsupportedSchema(v.to_string()))
            }
            Some(_) => {}
        }
        let doc: Document = serde_json::from_value(value).map_err(|e| CertificateParseError::Json(e.to_string()))?;
        from_document(doc)
    }
}

fn invalid(field: &'static str, message: impl Into<String>) -> CertificateParseError {
    CertificateParseError::InvalidValue { field, message: message.into() }
}

/// Parses `text` and insists it is already in canonical form.
fn canonical<T: FromStr + ToString>(field: &'static str, text: &str) -> Result<T, CertificateParseError>
where
    T::Err: ToString,
{
    let v: T = text.parse().map_err(|e: T::Err| invalid(field, e.to_string()))?;
    if v.to_string() != text {
        return Err(invalid(field, format!("`{text}` is not in canonical form")));
    }
    Ok(v)
}

fn take<T>(field: &'static str, v: Option<T>) -> Result<T, CertificateParseError> {
    v.ok_or(CertificateParseError::MissingField(field))
}

fn rats(field: &'static str, v: Option<[String; 3]>) -> Result<[Rat; 3], CertificateParseError> {
    let [a, b, c] = take(field, v)?;
    Ok([canonical(field, &a)?, canonical(field, &b)?, canonical(field, &c)?])
}

fn from_document(mut doc: Document) -> Result<Certificate, CertificateParseError> {
    let theta = parse_theta(&doc.theta).map_err(|e| invalid("theta", e.to_string()))?;
    if theta.to_string() != doc.theta {
        return Err(invalid("theta", format!("`{}` is not in canonical form (expected `{theta}`)", doc.theta)));
    }
    let evidence = match doc.reason.as_str() {
        VERTEX => Evidence::Vertex { distances: rats("distances", doc.distances.take())? },
        FORM => {
            let [a, b] = take("rep", doc.rep.take())?;
            Evidence::Surd(SurdEvidence {
                a: canonical("rep", &a)?,
                b: canonical("rep", &b)?,
                e: canonical("e", &take("e", doc.e.take())?)?,
                r: canonical("r", &take("r", doc.r.take())?)?,
                s: canonical("s", &take("s", doc.s.take())?)?,
                distances: rats("distances", doc.distances.take())?,
            })
        }
        TRIANGLE => Evidence::Triangle(TriangleEvidence {
            sides: take("triangle", doc.triangle.take())?,
            lambda: canonical("lambda", &take("lambda", doc.lambda.take())?)?,
            sign: canonical::<Sign>("sign", &take("sign", doc.sign.take())?)?,
            distances: rats("distances", doc.distances.take())?,
        }),
        EXHAUSTED => Evidence::Exhausted { bound: take("bound", doc.bound.take())? },
        code => {
            let reason =
                Filter::from_code(code).ok_or_else(|| invalid("reason", format!("unknown reason `{code}`")))?;
            let prime = doc.prime.take().map(|p| canonical::<BigInt>("prime", &p)).transpose()?;
            let failed = take("failed_filters", doc.failed_filters.take())?
                .iter()
                .map(|c| Filter::from_code(c).ok_or_else(|| invalid("failed_filters", format!("unknown filter `{c}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            Evidence::Rejected { reason, prime, failed }
        }
    };
    reject_leftovers(&doc)?;
    let cert = Certificate { theta, evidence };
    if cert.verdict().as_str() != doc.verdict {
        return Err(CertificateParseError::VerdictMismatch { found: doc.verdict, reason: doc.reason });
    }
    Ok(cert)
}

fn reject_leftovers(doc: &Document) -> Result<(), CertificateParseError> {
    let present = [
        ("prime", doc.prime.is_some()),
        ("failed_filters", doc.failed_filters.is_some()),
        ("triangle", doc.triangle.is_some()),
        ("lambda", doc.lambda.is_some()),
        ("sign", doc.sign.is_some()),
        ("rep", doc.rep.is_some()),
        ("e", doc.e.is_some()),
        ("r", doc.r.is_some()),
        ("s", doc.s.is_some()),
        ("distances", doc.distances.is_some()),
        ("bound", doc.bound.is_some()),
    ];
    match present.iter().find(|(_, p)| *p) {
        Some((field, _)) => Err(CertificateParseError::UnexpectedField(field)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{classify, verify_certificate, DEFAULT_BOUND};

    fn cert(s: &str, bound: u64) -> Certificate {
        classify(&parse_theta(s).unwrap(), bound).unwrap()
    }

    #[test]
    fn round_trips_are_bit_exact() {
        for (s, bound) in [
            ("5/3", 10),
            ("sqrt(7)", 10),
            ("3/2*sqrt(7)", 10),
            ("sqrt(10)", 10),
            ("sqrt(25+12*sqrt(3))", 10),
            ("sqrt(25-12*sqrt(3))", 10),
            ("sqrt(25+12*sqrt(3))", 4),
            ("1+qroot(2)", 10),
            ("sqrt(7/2 + 1/2*sqrt(13))", 10),
        ] {
            let c = cert(s, bound);
            let text = c.to_json();
            let back = Certificate::from_json(&text).unwrap();
            assert_eq!(back, c, "{s}");
            assert_eq!(back.to_json(), text, "{s}");
        }
    }

    #[test]
    fn triangle_document_fields() {
        let c = cert("sqrt(25+12*sqrt(3))", DEFAULT_BOUND);
        let v = c.to_json_value();
        assert_eq!(v["verdict"], "good");
        assert_eq!(v["reason"], "triangle");
        assert_eq!(v["triangle"], serde_json::json!([3, 4, 5]));
        assert_eq!(v["lambda"], "1");
        assert_eq!(v["distances"], serde_json::json!(["3", "4", "5"]));
        assert_eq!(v["sign"], "+");
    }

    #[test]
    fn schema_and_shape_errors() {
        let c = cert("sqrt(7)", 10);
        let mut v = c.to_json_value();
        v["schema_version"] = 2.into();
        assert_eq!(Certificate::from_json(&v.to_string()), Err(CertificateParseError::UnsupportedSchema("2".into())));

        let mut v = c.to_json_value();
        v["bound"] = 3.into();
        assert_eq!(Certificate::from_json(&v.to_string()), Err(CertificateParseError::UnexpectedField("bound")));

        let mut v = c.to_json_value();
        v["extra"] = 3.into();
        assert!(matches!(Certificate::from_json(&v.to_string()), Err(CertificateParseError::Json(_))));

        let mut v = c.to_json_value();
        v["e"] = "-14/8".into();
        assert!(matches!(
            Certificate::from_json(&v.to_string()),
            Err(CertificateParseError::InvalidValue { field: "e", .. })
        ));

        let mut v = c.to_json_value();
        v["verdict"] = "not_good".into();
        assert!(matches!(Certificate::from_json(&v.to_string()), Err(CertificateParseError::VerdictMismatch { .. })));

        let mut v = c.to_json_value();
        v["theta"] = "sqrt(28)/2".into();
        assert!(matches!(
            Certificate::from_json(&v.to_string()),
            Err(CertificateParseError::InvalidValue { field: "theta", .. })
        ));
    }

    #[test]
    fn tampering_survives_parsing_and_fails_verification() {
        let c = cert("sqrt(25+12*sqrt(3))", DEFAULT_BOUND);
        let mut v = c.to_json_value();
        v["distances"] = serde_json::json!(["3", "4", "6"]);
        let forged = Certificate::from_json(&v.to_string()).unwrap();
        assert!(verify_certificate(&forged).is_err());
    }
}
