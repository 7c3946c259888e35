//! Independent reference computations shared by the integration tests. None
//! of these go through the library's determinant, signature or Burau code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use slicegenus::{IntMatrix, LaurentPolynomial};

/// All permutations of `0..n` with their parity (true = odd).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, inversions % 2 == 1)
        })
        .collect()
}

pub fn leibniz_laurent(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    let n = m.len();
    let mut acc = LaurentPolynomial::zero();
    for (p, odd) in permutations(n) {
        let term = (0..n).fold(LaurentPolynomial::one(), |t, i| &t * &m[i][p[i]]);
        acc = if odd { &acc - &term } else { &acc + &term };
    }
    acc
}

pub fn leibniz_int(m: &IntMatrix) -> BigInt {
    let n = m.nrows();
    let mut acc = BigInt::zero();
    for (p, odd) in permutations(n) {
        let term: BigInt = (0..n).map(|i| m[(i, p[i])].clone()).product();
        if odd {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

type LMat = Vec<Vec<LaurentPolynomial>>;

fn lmat_identity(n: usize) -> LMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentPolynomial::one() } else { LaurentPolynomial::zero() }).collect())
        .collect()
}

fn lmat_mul(a: &LMat, b: &LMat) -> LMat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(LaurentPolynomial::zero(), |s, k| &s + &(&a[i][k] * &b[k][j]))).collect())
        .collect()
}

/// Unreduced Burau image of one generator: the block `[[1-t, t], [1, 0]]`
/// at rows/columns `i-1, i`, or its inverse `[[0, 1], [t^-1, 1-t^-1]]`.
fn unreduced_generator(n: usize, letter: i32) -> LMat {
    let i = letter.unsigned_abs() as usize - 1;
    let mut g = lmat_identity(n);
    let t = LaurentPolynomial::monomial(1.into(), 1);
    let ti = LaurentPolynomial::monomial(1.into(), -1);
    let one = LaurentPolynomial::one();
    let block = if letter > 0 {
        [[&one - &t, t.clone()], [one.clone(), LaurentPolynomial::zero()]]
    } else {
        [[LaurentPolynomial::zero(), one.clone()], [ti.clone(), &one - &ti]]
    };
    for r in 0..2 {
        for c in 0..2 {
            g[i + r][i + c] = block[r][c].clone();
        }
    }
    g
}

/// Alexander polynomial of a braid closure from the unreduced Burau
/// representation: the leading `(n-1)`-minor of `I - ψ(β)` equals `±t^k Δ`.
/// Normalized to be centred with value `+1` at `t = 1`.
pub fn burau_oracle(strands: usize, letters: &[i32]) -> LaurentPolynomial {
    let psi = letters.iter().fold(lmat_identity(strands), |acc, &l| lmat_mul(&acc, &unreduced_generator(strands, l)));
    let id = lmat_identity(strands);
    let minor: LMat = (0..strands - 1).map(|i| (0..strands - 1).map(|j| &id[i][j] - &psi[i][j]).collect()).collect();
    centre(&leibniz_laurent(&minor))
}

/// `±t^k p` with the exponents symmetric about zero and `p(1) > 0`.
pub fn centre(p: &LaurentPolynomial) -> LaurentPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let span = p.highest_exponent() - p.lowest_exponent();
    let shifted = p.shift(-p.lowest_exponent() - span / 2);
    if shifted.value_at_one().is_negative() {
        -shifted
    } else {
        shifted
    }
}

/// Signature of a symmetric integer matrix by Descartes' rule of signs on
/// its characteristic polynomial, which has only real roots. The polynomial
/// comes from the Faddeev-LeVerrier recursion over the rationals.
pub fn signature_oracle(s: &IntMatrix) -> i64 {
    let n = s.nrows();
    let a: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(s[(i, j)].clone())).collect()).collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    // coefficients of x^n, x^(n-1), ..., x^0
    let mut coeffs = vec![BigRational::one()];
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[k - 1].clone();
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs.push(-trace / BigRational::from_integer(BigInt::from(k)));
    }
    let changes = |c: &[BigRational]| -> i64 {
        let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
    };
    let positive = changes(&coeffs);
    let flipped: Vec<BigRational> =
        coeffs.iter().enumerate().map(|(i, c)| if (n - i) % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    let negative = changes(&flipped);
    positive - negative
}
