//! Seifert matrices and their classical invariants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::laurent::{LaurentMatrix, LaurentPolynomial};

/// A square integer matrix of even size `2g` whose skew part `M - M^T` has
/// determinant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    m: IntMatrix,
}

/// Validates a grid of integers as a Seifert matrix.
pub fn validate(entries: Vec<Vec<BigInt>>) -> Result<SeifertMatrix> {
    SeifertMatrix::new(IntMatrix::square_from_rows(entries)?)
}

/// Exact determinant of a square integer grid.
pub fn integer_determinant(grid: &IntMatrix) -> Result<BigInt> {
    if !grid.is_square() {
        return Err(Error::SizeMismatch(grid.nrows(), grid.ncols()));
    }
    Ok(grid.determinant())
}

impl SeifertMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.nrows(), row: 0, len: m.ncols() });
        }
        if !m.nrows().is_multiple_of(2) {
            return Err(Error::OddSize(m.nrows()));
        }
        let det = m.skew_part().determinant();
        if !det.is_one() {
            return Err(Error::SkewNotUnimodular(det));
        }
        Ok(SeifertMatrix { m })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows)?)
    }

    /// The 0x0 matrix (unknot).
    pub fn empty() -> Self {
        SeifertMatrix { m: IntMatrix::zeros(0, 0) }
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn new_unchecked(m: IntMatrix) -> Self {
        debug_assert!(m.nrows().is_multiple_of(2) && m.skew_part().determinant().is_one());
        SeifertMatrix { m }
    }

    pub fn size(&self) -> usize {
        self.m.nrows()
    }

    /// Genus of the surface the matrix describes, `size / 2`.
    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn determinant(&self) -> BigInt {
        self.m.determinant()
    }

    /// `t^(-g) det(tM - M^T)`, which equals `det(M sqrt(t) - M^T / sqrt(t))`
    /// since the size is even.
    pub fn alexander(&self) -> LaurentPolynomial {
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n).map(|j| LaurentPolynomial::new(0, vec![-&self.m[(j, i)], self.m[(i, j)].clone()])).collect()
            })
            .collect();
        let pencil = LaurentMatrix::new(rows).expect("square by construction");
        pencil.determinant().shift(-(self.genus() as i64))
    }

    /// Breadth of the Alexander polynomial.
    pub fn alexander_degree(&self) -> u64 {
        self.alexander().breadth().expect("Alexander polynomial of a Seifert matrix is nonzero")
    }

    /// Signature of `M + M^T`.
    pub fn signature(&self) -> i64 {
        symmetric_signature(&self.m.symmetrization())
    }

    /// `A^T M A`.
    pub fn apply_congruence(&self, a: &UnimodularTransform) -> Result<SeifertMatrix> {
        if a.size() != self.size() {
            return Err(Error::SizeMismatch(self.size(), a.size()));
        }
        let at = a.matrix().transpose();
        let out = at.mul(&self.m)?.mul(a.matrix())?;
        Ok(SeifertMatrix::new_unchecked(out))
    }

    /// `M ⊕ [[0, 0], [1, 0]]`: adds a hyperbolic pair that contributes
    /// nothing to the Alexander polynomial or the signature.
    pub fn stabilize(&self) -> SeifertMatrix {
        let pair = IntMatrix::from_i64_rows(&[[0, 0], [1, 0]]).unwrap();
        SeifertMatrix::new_unchecked(self.m.direct_sum(&pair))
    }

    /// Block sum, corresponding to connected sum of knots.
    pub fn direct_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        SeifertMatrix::new_unchecked(self.m.direct_sum(&other.m))
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix{}", self.m)
    }
}

/// Signature of a symmetric integer matrix by congruence diagonalization over
/// the rationals. A block with zero diagonal but a nonzero entry `(i, j)` gets
/// row/column `j` added into `i`, which makes `2 a_ij` a pivot.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_signature(s: &IntMatrix) -> i64 {
    let n = s.nrows();
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| s.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut signature = 0i64;

    let swap = |a: &mut Vec<Vec<BigRational>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };

    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, k, i);
        } else {
            let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
            let Some((i, j)) = off else { break };
            for c in 0..n {
                let v = a[j][c].clone();
                a[i][c] += v;
            }
            for r in 0..n {
                let v = a[r][j].clone();
                a[r][i] += v;
            }
            swap(&mut a, k, i);
        }

        let pivot = a[k][k].clone();
        signature += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k + 1..n {
                let delta = &f * &a[k][j];
                a[i][j] -= delta;
            }
        }
        for i in k + 1..n {
            a[i][k] = BigRational::zero();
            a[k][i] = BigRational::zero();
        }
    }
    signature
}

/// An integer matrix of determinant ±1, acting on Seifert matrices by
/// congruence `M ↦ A^T M A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnimodularTransform {
    a: IntMatrix,
}

impl UnimodularTransform {
    pub fn new(a: IntMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare { rows: a.nrows(), row: 0, len: a.ncols() });
        }
        let det = a.determinant();
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularTransform { a })
    }

    pub fn identity(n: usize) -> Self {
        UnimodularTransform { a: IntMatrix::identity(n) }
    }

    pub(crate) fn new_unchecked(a: IntMatrix) -> Self {
        debug_assert!(a.determinant().abs().is_one());
        UnimodularTransform { a }
    }

    pub fn size(&self) -> usize {
        self.a.nrows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.a
    }

    pub fn determinant(&self) -> BigInt {
        self.a.determinant()
    }

    /// First `self`, then `other`: the product `self · other`.
    pub fn then(&self, other: &UnimodularTransform) -> Result<UnimodularTransform> {
        Ok(UnimodularTransform { a: self.a.mul(&other.a)? })
    }

    /// `self ⊕ I`, acting on the first `size()` coordinates of `Z^n`.
    pub fn embed(&self, n: usize) -> UnimodularTransform {
        assert!(n >= self.size());
        UnimodularTransform { a: self.a.direct_sum(&IntMatrix::identity(n - self.size())) }
    }
}

impl fmt::Debug for UnimodularTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnimodularTransform{}", self.a)
    }
}
