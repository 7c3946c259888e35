//! Two-sided bounds on the topological slice genus:
//! `|σ|/2 <= g4top <= deg Δ / 2 <= g`.

use crate::error::Result;
use crate::laurent::LaurentPolynomial;
use crate::reduction::{reduce_to_block_form, ReductionCertificate};
use crate::seifert::SeifertMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenusBounds {
    /// `|σ| / 2`
    pub signature_lower: u64,
    /// `deg Δ / 2`
    pub alexander_upper: u64,
    /// Genus of the surface the matrix came from, `size / 2`.
    pub seifert_genus: u64,
    /// Present exactly when the two bounds meet.
    pub determined_g4top: Option<u64>,
}

impl GenusBounds {
    pub fn is_determined(&self) -> bool {
        self.determined_g4top.is_some()
    }
}

pub fn bounds(m: &SeifertMatrix) -> GenusBounds {
    bounds_from(m.signature(), m.alexander_degree(), m.size())
}

fn bounds_from(signature: i64, degree: u64, size: usize) -> GenusBounds {
    let signature_lower = signature.unsigned_abs() / 2;
    let alexander_upper = degree / 2;
    GenusBounds {
        signature_lower,
        alexander_upper,
        seifert_genus: size as u64 / 2,
        determined_g4top: (signature_lower == alexander_upper).then_some(alexander_upper),
    }
}

/// Everything computed about one Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub alexander: LaurentPolynomial,
    pub alexander_degree: u64,
    pub signature: i64,
    pub bounds: GenusBounds,
    pub certificate: Option<ReductionCertificate>,
}

pub fn report(m: &SeifertMatrix, with_certificate: bool) -> Result<InvariantReport> {
    let alexander = m.alexander();
    let alexander_degree = alexander.breadth().expect("Alexander polynomial is nonzero");
    let signature = m.signature();
    let certificate = if with_certificate { Some(reduce_to_block_form(m)?) } else { None };
    Ok(InvariantReport {
        alexander,
        alexander_degree,
        signature,
        bounds: bounds_from(signature, alexander_degree, m.size()),
        certificate,
    })
}
