//! Congruence reduction of a Seifert matrix to nested block form.
//!
//! Starting from any Seifert matrix `M` of size `2g`, repeated peeling of
//! hyperbolic pairs produces a basis in which
//!
//! ```text
//!        [ M_2d  v  0 |  w  0 ]
//!        [ v^T   0  0 |  .  . ]
//!        [ 0 ..  1  0 |  .  . ]
//!        [ ------------+------ ]
//!        [ w^T ...    |  0  0 ]
//!        [ 0   ...    |  1  0 ]
//! ```
//!
//! with `det(M_2d) != 0` and `2d = deg Δ`. The lower-right block `N` of size
//! `2g - 2d` then has trivial Alexander polynomial. A final symplectic
//! completion on the first `2d` coordinates makes the whole skew part
//! standard without touching `N`.
//!
//! Every basis change is an elementary operation applied simultaneously to
//! the columns and rows of the working matrix, so each intermediate matrix is
//! an honest congruence `A^T M A` and the accumulated `A` is the certificate's
//! transform.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::laurent::LaurentPolynomial;
use crate::seifert::{SeifertMatrix, UnimodularTransform};

/// A bilinear form together with the basis change that produced it.
#[derive(Clone, Debug)]
struct Congruence {
    form: IntMatrix,
    basis: IntMatrix,
}

impl Congruence {
    fn new(form: IntMatrix) -> Self {
        let n = form.nrows();
        Congruence { form, basis: IntMatrix::identity(n) }
    }

    fn size(&self) -> usize {
        self.form.nrows()
    }

    /// `e_target <- e_target + lambda * e_source`.
    fn add_multiple(&mut self, target: usize, source: usize, lambda: &BigInt) {
        if lambda.is_zero() {
            return;
        }
        debug_assert_ne!(target, source);
        let n = self.size();
        for r in 0..n {
            let v = &self.form[(r, source)] * lambda;
            self.form[(r, target)] += v;
            let v = &self.basis[(r, source)] * lambda;
            self.basis[(r, target)] += v;
        }
        for c in 0..n {
            let v = &self.form[(source, c)] * lambda;
            self.form[(target, c)] += v;
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let n = self.size();
        for r in 0..n {
            let a = self.form[(r, i)].clone();
            self.form[(r, i)] = std::mem::replace(&mut self.form[(r, j)], a);
            let a = self.basis[(r, i)].clone();
            self.basis[(r, i)] = std::mem::replace(&mut self.basis[(r, j)], a);
        }
        for c in 0..n {
            let a = self.form[(i, c)].clone();
            self.form[(i, c)] = std::mem::replace(&mut self.form[(j, c)], a);
        }
    }

    fn negate(&mut self, i: usize) {
        let n = self.size();
        for r in 0..n {
            self.form[(r, i)] = -&self.form[(r, i)];
            self.basis[(r, i)] = -&self.basis[(r, i)];
        }
        for c in 0..n {
            self.form[(i, c)] = -&self.form[(i, c)];
        }
    }

    /// The skew form `F(x, y) = form(x, y) - form(y, x)` on basis vectors.
    fn skew(&self, i: usize, j: usize) -> BigInt {
        &self.form[(i, j)] - &self.form[(j, i)]
    }

    fn transform(&self) -> UnimodularTransform {
        UnimodularTransform::new_unchecked(self.basis.clone())
    }
}

/// Runs the Euclidean algorithm on a linear functional `value` evaluated on
/// basis vectors, moving the gcd of its values on `sources ∪ {target}` into
/// `target` and zeroing it on `sources`. Sources are processed left to right,
/// each paired against `target`; a final swap handles a gcd landing on the
/// source side.
fn gather_gcd(c: &mut Congruence, target: usize, sources: Range<usize>, value: impl Fn(&Congruence, usize) -> BigInt) {
    for j in sources {
        loop {
            let vj = value(c, j);
            if vj.is_zero() {
                break;
            }
            let q = value(c, target) / &vj;
            c.add_multiple(target, j, &-q);
            if value(c, target).is_zero() {
                c.swap(j, target);
                break;
            }
            let q = value(c, j) / value(c, target);
            c.add_multiple(j, target, &-q);
        }
    }
}

/// A primitive integer vector in the kernel of a square matrix, or `None` if
/// the matrix is nonsingular.
///
/// Column operations bring the matrix to column echelon form `W = M U` with
/// `U` unimodular; the columns of `U` beyond the rank span the integer kernel
/// and are primitive. The first of them is returned, with its first nonzero
/// entry made positive.
pub fn kernel_vector(m: &IntMatrix) -> Option<Vec<BigInt>> {
    assert!(m.is_square());
    let n = m.nrows();
    let mut w = m.to_rows();
    let mut u = IntMatrix::identity(n).to_rows();

    let col_swap = |x: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in x.iter_mut() {
            row.swap(a, b);
        }
    };
    // col_target -= q * col_source
    let col_sub = |x: &mut Vec<Vec<BigInt>>, target: usize, source: usize, q: &BigInt| {
        for row in x.iter_mut() {
            let v = &row[source] * q;
            row[target] -= v;
        }
    };

    let mut pivot = 0;
    for r in 0..n {
        if pivot == n {
            break;
        }
        loop {
            let best = (pivot..n)
                .filter(|&c| !w[r][c].is_zero())
                .min_by(|&a, &b| w[r][a].abs().cmp(&w[r][b].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            col_swap(&mut w, pivot, best);
            col_swap(&mut u, pivot, best);
            let mut done = true;
            for c in pivot + 1..n {
                if w[r][c].is_zero() {
                    continue;
                }
                let q = &w[r][c] / &w[r][pivot];
                col_sub(&mut w, c, pivot, &q);
                col_sub(&mut u, c, pivot, &q);
                if !w[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    if pivot == n {
        return None;
    }
    let mut v: Vec<BigInt> = u.iter().map(|row| row[pivot].clone()).collect();
    let content = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    debug_assert!(content.is_one());
    for x in v.iter_mut() {
        *x = &*x / &content;
    }
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    Some(v)
}

/// A primitive vector `v` with `M v = 0`, or `None` when `det(M) != 0`.
pub fn primitive_kernel_vector(m: &SeifertMatrix) -> Option<Vec<BigInt>> {
    kernel_vector(m.matrix())
}

fn invariant(msg: impl Into<String>) -> Error {
    Error::ReductionInvariant(msg.into())
}

/// Peels one hyperbolic pair off the leading `k x k` block of the working
/// form, which must be singular. The pair occupies indices `k-2, k-1`
/// afterwards.
fn peel_block(c: &mut Congruence, k: usize) -> Result<()> {
    let block = c.form.submatrix(0..k, 0..k);
    let kernel = kernel_vector(&block).ok_or(Error::Nondegenerate)?;
    let (p, q) = (k - 2, k - 1);

    // Make the kernel vector the last basis vector of the block. The
    // coordinates of a fixed vector change by c_j -= lambda * c_i under
    // e_i <- e_i + lambda * e_j.
    let mut coords = kernel;
    loop {
        let nonzero: Vec<usize> = (0..k).filter(|&i| !coords[i].is_zero()).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let pivot = *nonzero.iter().min_by(|&&a, &&b| coords[a].abs().cmp(&coords[b].abs()).then(a.cmp(&b))).unwrap();
        for &j in nonzero.iter().filter(|&&j| j != pivot) {
            let quot = &coords[j] / &coords[pivot];
            c.add_multiple(pivot, j, &quot);
            coords[j] = &coords[j] - &quot * &coords[pivot];
        }
    }
    let at = (0..k).find(|&i| !coords[i].is_zero()).ok_or_else(|| invariant("zero kernel vector"))?;
    if !coords[at].abs().is_one() {
        return Err(invariant("kernel vector is not primitive"));
    }
    c.swap(at, q);
    coords.swap(at, q);
    if coords[q].is_negative() {
        c.negate(q);
    }
    if (0..k).any(|r| !c.form[(r, q)].is_zero()) {
        return Err(invariant("kernel column did not vanish"));
    }

    // Euclidean algorithm on the last row; its gcd is 1 because it equals the
    // last row of the unimodular skew part.
    gather_gcd(c, p, 0..p, |c, i| c.form[(q, i)].clone());
    if c.form[(q, p)].is_negative() {
        c.negate(p);
    }
    if !c.form[(q, p)].is_one() || (0..p).any(|i| !c.form[(q, i)].is_zero()) {
        return Err(invariant("last row did not reduce to (0, ..., 0, 1, 0)"));
    }

    // e_i <- e_i + lambda_i e_q only shifts entry (i, p), by lambda_i.
    for i in 0..p {
        let lambda = &c.form[(p, i)] - &c.form[(i, p)];
        c.add_multiple(i, q, &lambda);
    }
    let x = c.form[(p, p)].clone();
    c.add_multiple(p, q, &-x);

    check_pair(&c.form, p, q).map_err(|v| invariant(v.to_string()))
}

/// Conditions on the pair `(p, q)` inside the leading `(q+1) x (q+1)` block.
fn check_pair(m: &IntMatrix, p: usize, q: usize) -> std::result::Result<(), BlockFormViolation> {
    let fail = |condition: String| Err(BlockFormViolation { p: p + 1, q: q + 1, condition });
    for r in 0..=q {
        if !m[(r, q)].is_zero() {
            return fail(format!("column {} has nonzero entry in row {}", q + 1, r + 1));
        }
    }
    for col in 0..=q {
        let expected = if col == p { BigInt::one() } else { BigInt::zero() };
        if m[(q, col)] != expected {
            return fail(format!("row {} must be (0, ..., 0, 1, 0) but entry {} is {}", q + 1, col + 1, m[(q, col)]));
        }
    }
    if !m[(p, p)].is_zero() {
        return fail(format!("diagonal entry ({0}, {0}) is {1}, not 0", p + 1, m[(p, p)]));
    }
    for r in 0..p {
        if m[(r, p)] != m[(p, r)] {
            return fail(format!(
                "entries ({0}, {1}) = {2} and ({1}, {0}) = {3} differ",
                r + 1,
                p + 1,
                m[(r, p)],
                m[(p, r)]
            ));
        }
    }
    Ok(())
}

/// Peels a hyperbolic pair off a singular Seifert matrix.
///
/// Returns `A` and `M' = A^T M A` with column `2g` of `M'` zero, row `2g`
/// equal to `(0, ..., 0, 1, 0)`, `M'[2g-1][2g-1] = 0` and the column and row
/// through index `2g-1` agreeing.
pub fn peel_hyperbolic_pair(m: &SeifertMatrix) -> Result<(UnimodularTransform, SeifertMatrix)> {
    let n = m.size();
    if n < 2 || !m.determinant().is_zero() {
        return Err(Error::Nondegenerate);
    }
    let mut c = Congruence::new(m.matrix().clone());
    peel_block(&mut c, n)?;
    Ok((c.transform(), SeifertMatrix::new_unchecked(c.form)))
}

/// Brings the skew form on the leading `k` coordinates to the standard
/// symplectic form `[[0, -1], [1, 0]] ⊕ ...`, using `skew` to read the form.
fn complete_symplectic(
    c: &mut Congruence,
    k: usize,
    skew: impl Fn(&Congruence, usize, usize) -> BigInt + Copy,
) -> Result<()> {
    for a in (0..k).step_by(2) {
        let b = a + 1;
        gather_gcd(c, b, b + 1..k, |c, i| skew(c, a, i));
        let ab = skew(c, a, b);
        if !ab.abs().is_one() || (b + 1..k).any(|j| !skew(c, a, j).is_zero()) {
            return Err(invariant("skew form is not unimodular on the remaining block"));
        }
        if ab.is_positive() {
            c.negate(b);
        }
        // F(b, e_j + lambda a) = F(b, e_j) + lambda, and F(a, .) is unaffected.
        for j in b + 1..k {
            let lambda = -skew(c, b, j);
            c.add_multiple(j, a, &lambda);
        }
    }
    Ok(())
}

/// The standard symplectic form of size `n`: `[[0, -1], [1, 0]] ⊕ ...`.
pub fn standard_symplectic(n: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(n, n);
    for a in (0..n).step_by(2) {
        j[(a, a + 1)] = BigInt::from(-1);
        j[(a + 1, a)] = BigInt::one();
    }
    j
}

/// Finds `A` with `A^T S A` standard symplectic for a unimodular skew form `S`.
pub fn symplectic_completion(s: &IntMatrix) -> Result<UnimodularTransform> {
    if !s.is_skew_symmetric() {
        return Err(Error::NotSkew);
    }
    let det = s.determinant();
    if !det.is_one() {
        return Err(Error::NotUnimodular(det));
    }
    let n = s.nrows();
    let mut c = Congruence::new(s.clone());
    complete_symplectic(&mut c, n, |c, i, j| c.form[(i, j)].clone())?;
    if c.form != standard_symplectic(n) {
        return Err(invariant("symplectic completion did not reach the standard form"));
    }
    Ok(c.transform())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFormViolation {
    /// 1-based indices of the offending pair.
    pub p: usize,
    pub q: usize,
    pub condition: String,
}

impl fmt::Display for BlockFormViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pair ({}, {}): {}", self.p, self.q, self.condition)
    }
}

/// Checks the nested block form with a core of size `2d`.
///
/// For each pair `i = 1..g-d` at (1-based) `p = 2g-2i+1`, `q = p+1`, within
/// the leading `q x q` block: column `q` is zero, row `q` is zero except
/// `(q, p) = 1`, `(p, p) = 0`, and `M[r][p] = M[p][r]` for `r < p`. Entries
/// outside the leading block belong to the enclosing pairs' vectors and are
/// unconstrained by pair `i`.
pub fn check_block_form(m: &SeifertMatrix, d: usize) -> std::result::Result<(), BlockFormViolation> {
    let n = m.size();
    if 2 * d > n {
        return Err(BlockFormViolation {
            p: 0,
            q: 0,
            condition: format!("core size {} exceeds matrix size {n}", 2 * d),
        });
    }
    let g = m.genus();
    for i in 1..=g - d {
        let p = 2 * g - 2 * i;
        check_pair(m.matrix(), p, p + 1)?;
    }
    Ok(())
}

/// Output of the block reduction, verifiable against the original matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub d: usize,
    pub transform: UnimodularTransform,
    pub reduced: SeifertMatrix,
    pub trivial_subform: SeifertMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("transform not unimodular: determinant {0}")]
    TransformNotUnimodular(BigInt),
    #[error("size mismatch: matrix is {matrix}x{matrix} but {what} is {found}x{found}")]
    SizeMismatch { what: &'static str, matrix: usize, found: usize },
    #[error("reduced matrix mismatch: reduced differs from A^T M A")]
    ReducedMismatch,
    #[error("degree mismatch: 2d = {twice_d} but deg Δ = {degree}")]
    DegreeMismatch { twice_d: usize, degree: u64 },
    #[error("core determinant is zero")]
    SingularCore,
    #[error("core Alexander polynomial {core} differs from {full}")]
    CoreAlexander { core: String, full: String },
    #[error("block form violated at {0}")]
    BlockForm(BlockFormViolation),
    #[error("trivial subform does not match the lower-right block of the reduced matrix")]
    SubformMismatch,
    #[error("trivial subform has Alexander polynomial {0}, not 1")]
    SubformAlexander(String),
    #[error("skew part of the reduced matrix is not standard symplectic")]
    SkewNotStandard,
    #[error("stored {what} Alexander polynomial {stored:?} does not match computed {computed:?}")]
    AlexanderMismatch { what: &'static str, stored: String, computed: String },
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

impl ReductionCertificate {
    pub fn genus(&self) -> usize {
        self.reduced.genus()
    }

    /// Top-left `2d x 2d` block `M_2d`.
    pub fn core(&self) -> IntMatrix {
        let k = 2 * self.d;
        self.reduced.matrix().submatrix(0..k, 0..k)
    }

    /// `v_1, ..., v_{g-d}`: `v_i` is the column above the `i`-th pair from the
    /// bottom right, with `2g - 2i` entries.
    pub fn pair_vectors(&self) -> Vec<Vec<BigInt>> {
        let g = self.genus();
        (1..=g.saturating_sub(self.d))
            .map(|i| {
                let p = 2 * g - 2 * i;
                (0..p).map(|r| self.reduced.matrix()[(r, p)].clone()).collect()
            })
            .collect()
    }

    /// Re-checks every claim of the certificate against `original`.
    pub fn verify(&self, original: &SeifertMatrix) -> std::result::Result<(), CertificateError> {
        let n = original.size();
        if self.transform.size() != n {
            return Err(CertificateError::SizeMismatch { what: "transform", matrix: n, found: self.transform.size() });
        }
        let det = self.transform.determinant();
        if !det.abs().is_one() {
            return Err(CertificateError::TransformNotUnimodular(det));
        }
        if self.reduced.size() != n {
            return Err(CertificateError::SizeMismatch {
                what: "reduced matrix",
                matrix: n,
                found: self.reduced.size(),
            });
        }
        let expected =
            self.transform.matrix().transpose().mul(original.matrix()).and_then(|x| x.mul(self.transform.matrix()));
        if expected.as_ref() != Ok(self.reduced.matrix()) {
            return Err(CertificateError::ReducedMismatch);
        }
        let full = original.alexander();
        let degree = full.breadth().expect("nonzero");
        if 2 * self.d as u64 != degree {
            return Err(CertificateError::DegreeMismatch { twice_d: 2 * self.d, degree });
        }
        let core = self.core();
        if core.determinant().is_zero() {
            return Err(CertificateError::SingularCore);
        }
        let core_alex = SeifertMatrix::new(core).map(|c| c.alexander()).unwrap_or_else(|_| LaurentPolynomial::zero());
        if core_alex != full {
            return Err(CertificateError::CoreAlexander { core: core_alex.to_string(), full: full.to_string() });
        }
        check_block_form(&self.reduced, self.d).map_err(CertificateError::BlockForm)?;
        let k = 2 * self.d;
        if self.trivial_subform.matrix() != &self.reduced.matrix().submatrix(k..n, k..n) {
            return Err(CertificateError::SubformMismatch);
        }
        let sub = self.trivial_subform.alexander();
        if !sub.is_one() {
            return Err(CertificateError::SubformAlexander(sub.to_string()));
        }
        if self.reduced.matrix().skew_part() != standard_symplectic(n) {
            return Err(CertificateError::SkewNotStandard);
        }
        Ok(())
    }
}

/// Reduces `M` to nested block form with a nonsingular core and completes the
/// core to a symplectic basis. The certificate is verified before returning.
pub fn reduce_to_block_form(m: &SeifertMatrix) -> Result<ReductionCertificate> {
    let n = m.size();
    let mut c = Congruence::new(m.matrix().clone());
    let mut k = n;
    while k > 0 && c.form.submatrix(0..k, 0..k).determinant().is_zero() {
        peel_block(&mut c, k)?;
        k -= 2;
    }
    let d = k / 2;

    let before = c.form.submatrix(k..n, k..n);
    complete_symplectic(&mut c, k, |c, i, j| c.skew(i, j))?;
    if c.form.submatrix(k..n, k..n) != before {
        return Err(invariant("symplectic completion touched the trivial subform"));
    }

    let trivial_subform = SeifertMatrix::new(before).map_err(|e| invariant(format!("trivial subform: {e}")))?;
    let cert = ReductionCertificate {
        d,
        transform: c.transform(),
        reduced: SeifertMatrix::new_unchecked(c.form),
        trivial_subform,
    };
    cert.verify(m).map_err(|e| invariant(e.to_string()))?;
    Ok(cert)
}
