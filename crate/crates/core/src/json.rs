//! JSON encodings: matrix files, reduction certificates and reports.
//!
//! Integers are written as plain JSON numbers of arbitrary size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::bounds::InvariantReport;
use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::laurent::LaurentPolynomial;
use crate::reduction::{CertificateError, ReductionCertificate};
use crate::seifert::{SeifertMatrix, UnimodularTransform};

pub fn int_to_value(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal is a JSON number"))
}

pub fn value_to_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            n.to_string().parse::<BigInt>().map_err(|_| Error::Json(format!("expected an integer, found {n}")))
        }
        other => Err(Error::Json(format!("expected an integer, found {other}"))),
    }
}

pub fn matrix_to_value(m: &IntMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|i| Value::Array(m.row(i).iter().map(int_to_value).collect())).collect())
}

/// Reads a square grid of integers.
pub fn matrix_from_value(v: &Value) -> Result<IntMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::Json("rows must be an array of arrays".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Json("each row must be an array".into()))?
                .iter()
                .map(value_to_int)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::square_from_rows(rows)
}

/// Parses a matrix file `{"rows": [[int, ...], ...]}` into a validated
/// Seifert matrix.
pub fn parse_matrix_file(text: &str) -> Result<SeifertMatrix> {
    let v: Value = serde_json::from_str(text)?;
    let rows = v
        .as_object()
        .and_then(|o| o.get("rows"))
        .ok_or_else(|| Error::Json("matrix file must be an object with a \"rows\" field".into()))?;
    SeifertMatrix::new(matrix_from_value(rows)?)
}

pub fn matrix_file(m: &SeifertMatrix) -> Value {
    json!({ "rows": matrix_to_value(m.matrix()) })
}

pub fn certificate_to_value(cert: &ReductionCertificate) -> Value {
    json!({
        "d": cert.d,
        "transform": matrix_to_value(cert.transform.matrix()),
        "reduced": matrix_to_value(cert.reduced.matrix()),
        "trivial_subform": matrix_to_value(cert.trivial_subform.matrix()),
        "alexander": cert.reduced.alexander().to_string(),
        "alexander_of_subform": cert.trivial_subform.alexander().to_string(),
    })
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> std::result::Result<&'a Value, CertificateError> {
    obj.get(key).ok_or_else(|| CertificateError::Malformed(format!("missing field {key:?}")))
}

fn malformed(e: Error) -> CertificateError {
    CertificateError::Malformed(e.to_string())
}

/// A stored certificate: the structured part plus the recorded Alexander
/// polynomials.
#[derive(Clone, Debug)]
pub struct StoredCertificate {
    pub certificate: ReductionCertificate,
    pub alexander: String,
    pub alexander_of_subform: String,
}

impl StoredCertificate {
    pub fn from_value(v: &Value) -> std::result::Result<Self, CertificateError> {
        let obj = v.as_object().ok_or_else(|| CertificateError::Malformed("expected a JSON object".into()))?;
        let d = field(obj, "d")?
            .as_u64()
            .ok_or_else(|| CertificateError::Malformed("d must be a non-negative integer".into()))?
            as usize;
        let transform = matrix_from_value(field(obj, "transform")?).map_err(malformed)?;
        let transform = UnimodularTransform::new(transform).map_err(|e| match e {
            Error::NotUnimodular(det) => CertificateError::TransformNotUnimodular(det),
            other => malformed(other),
        })?;
        let reduced = SeifertMatrix::new(matrix_from_value(field(obj, "reduced")?).map_err(malformed)?)
            .map_err(|e| CertificateError::Malformed(format!("reduced: {e}")))?;
        let trivial_subform = SeifertMatrix::new(matrix_from_value(field(obj, "trivial_subform")?).map_err(malformed)?)
            .map_err(|e| CertificateError::Malformed(format!("trivial_subform: {e}")))?;
        let text = |key: &str| -> std::result::Result<String, CertificateError> {
            field(obj, key)?
                .as_str()
                .map(str::to_string)
                .ok_or_else(|| CertificateError::Malformed(format!("{key} must be a string")))
        };
        Ok(StoredCertificate {
            certificate: ReductionCertificate { d, transform, reduced, trivial_subform },
            alexander: text("alexander")?,
            alexander_of_subform: text("alexander_of_subform")?,
        })
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, CertificateError> {
        let v: Value = serde_json::from_str(text).map_err(|e| CertificateError::Malformed(e.to_string()))?;
        Self::from_value(&v)
    }

    /// Verifies the certificate against `original`, including the recorded
    /// Alexander polynomials.
    pub fn verify(&self, original: &SeifertMatrix) -> std::result::Result<(), CertificateError> {
        self.certificate.verify(original)?;
        let check =
            |what: &'static str, stored: &str, computed: LaurentPolynomial| match LaurentPolynomial::from_str(stored) {
                Ok(p) if p == computed => Ok(()),
                _ => Err(CertificateError::AlexanderMismatch {
                    what,
                    stored: stored.to_string(),
                    computed: computed.to_string(),
                }),
            };
        check("knot", &self.alexander, original.alexander())?;
        check("subform", &self.alexander_of_subform, self.certificate.trivial_subform.alexander())
    }
}

pub fn report_to_value(r: &InvariantReport) -> Value {
    json!({
        "alexander": r.alexander.to_string(),
        "alexander_degree": r.alexander_degree,
        "signature": r.signature,
        "g4top_lower": r.bounds.signature_lower,
        "g4top_upper": r.bounds.alexander_upper,
        "g4top": r.bounds.determined_g4top,
        "seifert_genus": r.bounds.seifert_genus,
        "certificate": r.certificate.as_ref().map(certificate_to_value),
    })
}
