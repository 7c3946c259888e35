//! Integer Laurent polynomials in one variable `t`, and determinants of
//! square matrices over `Z[t, t^-1]`.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `sum_i coefficients[i] * t^(lowest_exponent + i)`, kept trimmed so that
/// the first and last coefficients are nonzero. Zero is `([], 0)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    lowest_exponent: i64,
    coefficients: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn new(lowest_exponent: i64, coefficients: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { lowest_exponent, coefficients };
        p.trim();
        p
    }

    pub fn from_i64s(lowest_exponent: i64, coefficients: &[i64]) -> Self {
        Self::new(lowest_exponent, coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    fn trim(&mut self) {
        let lead = self.coefficients.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coefficients.clear();
                self.lowest_exponent = 0;
            }
            Some(k) => {
                let last = self.coefficients.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coefficients.truncate(last + 1);
                self.coefficients.drain(..k);
                self.lowest_exponent += k as i64;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lowest_exponent == 0 && self.coefficients.len() == 1 && self.coefficients[0].is_one()
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest_exponent
    }

    pub fn highest_exponent(&self) -> i64 {
        self.lowest_exponent + max(self.coefficients.len() as i64 - 1, 0)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `t^exponent`.
    pub fn coeff(&self, exponent: i64) -> BigInt {
        let i = exponent - self.lowest_exponent;
        if i < 0 || i >= self.coefficients.len() as i64 {
            BigInt::zero()
        } else {
            self.coefficients[i as usize].clone()
        }
    }

    /// Highest exponent minus lowest exponent.
    pub fn breadth(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroBreadth);
        }
        Ok(self.coefficients.len() as u64 - 1)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { lowest_exponent: self.lowest_exponent + k, coefficients: self.coefficients.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.lowest_exponent, self.coefficients.iter().map(|x| x * c).collect())
    }

    /// Coefficient sequence equals its reverse.
    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    /// Invariant under `t <-> t^-1`.
    pub fn is_symmetric(&self) -> bool {
        self.is_palindromic() && self.lowest_exponent == -self.highest_exponent()
    }

    /// The polynomial `p(t^-1)`.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coefficients.clone();
        c.reverse();
        Self::new(-self.highest_exponent(), c)
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    pub fn value_at_minus_one(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (i, c) in self.coefficients.iter().enumerate() {
            if (self.lowest_exponent + i as i64).is_even() {
                sum += c;
            } else {
                sum -= c;
            }
        }
        sum
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`, or `None` if the
    /// divisor is zero or does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both sides have nonzero constant term after shifting, so division in
        // Z[t] by long division from the top is conclusive.
        let dlen = divisor.coefficients.len();
        if self.coefficients.len() < dlen {
            return None;
        }
        let lead = divisor.coefficients.last().unwrap();
        let mut rem = self.coefficients.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coefficients.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.lowest_exponent - divisor.lowest_exponent, quot))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = min(self.lowest_exponent, other.lowest_exponent);
        let hi = max(self.highest_exponent(), other.highest_exponent());
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.coefficients.iter().enumerate() {
            c[(self.lowest_exponent - lo) as usize + i] += x;
        }
        for (i, x) in other.coefficients.iter().enumerate() {
            c[(other.lowest_exponent - lo) as usize + i] += x;
        }
        LaurentPolynomial::new(lo, c)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            lowest_exponent: self.lowest_exponent,
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-other)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || other.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, x) in self.coefficients.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coefficients.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        LaurentPolynomial::new(self.lowest_exponent + other.lowest_exponent, c)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, other: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl From<BigInt> for LaurentPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

/// Ascending exponents with explicit signs, e.g. `t^-1 - 1 + t` or
/// `2t^-2 - 5t^-1 + 7 - 5t + 2t^2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lowest_exponent + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Accepts the `Display` format; `*` between coefficient and `t` is optional
    /// and whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParsePolynomial(s.to_string());
        let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }

        // Split into signed terms; a sign right after '^' belongs to the exponent.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        for (i, &ch) in compact.iter().enumerate() {
            let after_caret = i > 0 && compact[i - 1] == '^';
            if (ch == '+' || ch == '-') && !after_caret {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                } else if i != 0 {
                    return Err(bad());
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(bad());
        }
        terms.push((negative, current));

        let mut acc = LaurentPolynomial::zero();
        for (negative, body) in terms {
            let (coef_str, var_part) = match body.find('t') {
                Some(k) => (&body[..k], Some(&body[k + 1..])),
                None => (body.as_str(), None),
            };
            let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
            let coef = if coef_str.is_empty() {
                if var_part.is_none() {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                coef_str.parse::<BigInt>().map_err(|_| bad())?
            };
            let exponent = match var_part {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let e = rest.strip_prefix('^').ok_or_else(bad)?;
                    e.parse::<i64>().map_err(|_| bad())?
                }
            };
            let coef = if negative { -coef } else { coef };
            acc = &acc + &LaurentPolynomial::monomial(coef, exponent);
        }
        Ok(acc)
    }
}

/// Square matrix with Laurent polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<Vec<LaurentPolynomial>>,
}

impl LaurentMatrix {
    pub fn new(entries: Vec<Vec<LaurentPolynomial>>) -> Result<Self> {
        let size = entries.len();
        for (row, r) in entries.iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare { rows: size, row, len: r.len() });
            }
        }
        Ok(LaurentMatrix { size, entries })
    }

    pub fn identity(size: usize) -> Self {
        let entries = (0..size)
            .map(|i| {
                (0..size).map(|j| if i == j { LaurentPolynomial::one() } else { LaurentPolynomial::zero() }).collect()
            })
            .collect();
        LaurentMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<LaurentPolynomial>] {
        &self.entries
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        let n = self.size;
        let mut entries = vec![vec![LaurentPolynomial::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = LaurentPolynomial::zero();
                for k in 0..n {
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                *cell = acc;
            }
        }
        Ok(LaurentMatrix { size: n, entries })
    }

    pub fn sub(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(LaurentMatrix { size: self.size, entries })
    }

    /// Exact determinant over `Z[t, t^-1]`; the empty matrix has determinant 1.
    pub fn determinant(&self) -> LaurentPolynomial {
        if self.size <= 4 {
            let refs: Vec<&[LaurentPolynomial]> = self.entries.iter().map(|r| r.as_slice()).collect();
            let cols: Vec<usize> = (0..self.size).collect();
            cofactor_det(&refs, &cols)
        } else {
            bareiss_det(self.entries.clone())
        }
    }
}

fn cofactor_det(rows: &[&[LaurentPolynomial]], cols: &[usize]) -> LaurentPolynomial {
    match cols.len() {
        0 => LaurentPolynomial::one(),
        1 => rows[0][cols[0]].clone(),
        _ => {
            let mut acc = LaurentPolynomial::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = &rows[0][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry * &cofactor_det(&rows[1..], &rest);
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Fraction-free elimination; every division is exact in an integral domain.
fn bareiss_det(mut a: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = a.len();
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step division is exact over an integral domain");
            }
            a[i][k] = LaurentPolynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
