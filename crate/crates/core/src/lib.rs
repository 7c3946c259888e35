//! Knot invariants from Seifert matrices and braid words, a constructive
//! congruence reduction of Seifert matrices that splits off a subform with
//! trivial Alexander polynomial, and two-sided bounds on the topological
//! slice genus.
//!
//! For a knot with Seifert matrix `M`,
//!
//! ```text
//! |σ(M + M^T)| <= 2 g4top <= deg Δ <= size(M)
//! ```
//!
//! and the genus is determined whenever the outer two agree. The upper bound
//! comes from [`reduction::reduce_to_block_form`], which exhibits a basis in
//! which the last `size - deg Δ` coordinates carry a Seifert form with
//! `Δ = 1`.
//!
//! ```
//! use slicegenus::{braid, bounds};
//!
//! let word = braid::parse_braid("aaabAbaaabAb", None).unwrap();
//! let surface = braid::canonical_seifert_matrix(&word).unwrap();
//! let b = bounds::bounds(&surface.seifert_matrix);
//! assert_eq!(b.determined_g4top, Some(2));
//! ```

pub mod bounds;
pub mod braid;
pub mod corpus;
pub mod error;
pub mod intmat;
pub mod json;
pub mod laurent;
pub mod random;
pub mod reduction;
pub mod seifert;

pub use bounds::{bounds, report, GenusBounds, InvariantReport};
pub use braid::{BraidWord, CanonicalSurface};
pub use error::{Error, Result};
pub use intmat::IntMatrix;
pub use laurent::{LaurentMatrix, LaurentPolynomial};
pub use reduction::{reduce_to_block_form, CertificateError, ReductionCertificate};
pub use seifert::{SeifertMatrix, UnimodularTransform};
