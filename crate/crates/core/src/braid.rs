//! Braid words, the Seifert matrix of the canonical surface of a closed
//! braid, and a Burau-representation Alexander polynomial used as an
//! independent check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::laurent::{LaurentMatrix, LaurentPolynomial};
use crate::seifert::SeifertMatrix;

/// A word in the standard generators of the braid group on `strands` strands.
/// Letter `i > 0` is `σ_i`, letter `-i` is `σ_i^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        for &l in &letters {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index >= strands {
                return Err(Error::GeneratorOutOfRange { index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.len()
    }

    /// The word with every crossing flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// The word followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands.max(other.strands), letters }
    }

    /// Rendering in the letter format (`a` = σ_1, `A` = σ_1^{-1}), or the
    /// integer format when a generator index exceeds 25.
    pub fn to_letters(&self) -> String {
        if self.letters.iter().any(|l| l.unsigned_abs() > 25) {
            return self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        }
        self.letters
            .iter()
            .map(|&l| {
                let c = (b'a' + (l.unsigned_abs() - 1) as u8) as char;
                if l < 0 {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} strands)", self.to_letters(), self.strands)
    }
}

/// Parses a braid word in one of two formats:
///
/// * letters: `a`..`y` are generators 1..25, uppercase their inverses
///   (`aaabAbaaabAb`);
/// * integers separated by spaces or commas (`1 1 1 2 -1 2`).
///
/// Without an explicit strand count, the number of strands is one more than
/// the largest generator index.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let text = text.trim();
    let numeric = text.chars().any(|c| c.is_ascii_digit());
    let letters: Vec<i32> = if numeric {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| match tok.parse::<i32>() {
                Ok(0) | Err(_) => Err(Error::BraidToken(tok.to_string())),
                Ok(v) => Ok(v),
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'a'..='y' => Ok((c as u8 - b'a' + 1) as i32),
                'A'..='Y' => Ok(-((c as u8 - b'A' + 1) as i32)),
                other => Err(Error::BraidToken(other.to_string())),
            })
            .collect::<Result<_>>()?
    };
    if letters.is_empty() {
        return Err(Error::EmptyBraid);
    }
    let max_index = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap();
    BraidWord::new(strands.unwrap_or(max_index + 1), letters)
}

/// Number of components of the closure: the cycle count of the permutation
/// obtained by composing the transpositions `(i, i+1)` of the letters.
pub fn closure_component_count(b: &BraidWord) -> usize {
    let mut perm: Vec<usize> = (0..b.strands).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; b.strands];
    let mut cycles = 0;
    for start in 0..b.strands {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    cycles
}

/// Seifert's algorithm applied to a closed braid diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSurface {
    pub seifert_matrix: SeifertMatrix,
    pub genus: usize,
    pub crossing_count: usize,
    pub strand_count: usize,
}

/// A homology generator of the canonical surface: the loop through the two
/// consecutive crossings at word positions `start < end` in `column`.
#[derive(Clone, Copy, Debug)]
struct Loop {
    column: usize,
    start: usize,
    end: usize,
}

fn check_knot_diagram(b: &BraidWord) -> Result<()> {
    let components = closure_component_count(b);
    if components != 1 {
        return Err(Error::LinkClosure(components));
    }
    for i in 1..b.strands {
        if !b.letters.iter().any(|l| l.unsigned_abs() as usize == i) {
            return Err(Error::Disconnected(i));
        }
    }
    Ok(())
}

/// Seifert matrix of the canonical surface of the closure of `b`.
///
/// The Seifert circles are the strands and each crossing is a half-twisted
/// band. Generators are loops between consecutive crossings of one column,
/// ordered column by column and top to bottom. Linking numbers:
///
/// * a loop with crossing signs `(e1, e2)` links its push-off `-(e1 + e2) / 2`;
/// * consecutive loops `x, y` of one column sharing a crossing of sign `e`:
///   `lk(x, y+) = 1` if `e > 0`, otherwise `lk(y, x+) = -1`;
/// * loops `x` in column `i` and `y` in column `i + 1` whose crossing
///   intervals interleave: `lk(x, y+) = 1` if `x` starts first, else `-1`;
/// * everything else is 0.
pub fn canonical_seifert_matrix(b: &BraidWord) -> Result<CanonicalSurface> {
    check_knot_diagram(b)?;
    let word = &b.letters;
    let sign = |pos: usize| if word[pos] > 0 { 1i64 } else { -1i64 };

    let mut loops = Vec::new();
    for column in 1..b.strands {
        let positions: Vec<usize> = (0..word.len()).filter(|&k| word[k].unsigned_abs() as usize == column).collect();
        for w in positions.windows(2) {
            loops.push(Loop { column, start: w[0], end: w[1] });
        }
    }

    let n = loops.len();
    let mut m = IntMatrix::zeros(n, n);
    for (i, x) in loops.iter().enumerate() {
        m[(i, i)] = BigInt::from(-(sign(x.start) + sign(x.end)) / 2);
        for (j, y) in loops.iter().enumerate() {
            if i == j {
                continue;
            }
            if x.column == y.column && x.end == y.start {
                if sign(x.end) > 0 {
                    m[(i, j)] = BigInt::one();
                } else {
                    m[(j, i)] = BigInt::from(-1);
                }
            }
            if y.column == x.column + 1 {
                if x.start < y.start && y.start < x.end && x.end < y.end {
                    m[(i, j)] = BigInt::one();
                } else if y.start < x.start && x.start < y.end && y.end < x.end {
                    m[(i, j)] = BigInt::from(-1);
                }
            }
        }
    }

    let seifert_matrix = SeifertMatrix::new(m)
        .map_err(|e| Error::ReductionInvariant(format!("canonical surface matrix is invalid: {e}")))?;
    Ok(CanonicalSurface {
        genus: seifert_matrix.genus(),
        seifert_matrix,
        crossing_count: b.crossing_count(),
        strand_count: b.strands,
    })
}

/// Reduced Burau matrix of a single letter, `(n-1) x (n-1)`.
fn burau_generator(strands: usize, letter: i32) -> LaurentMatrix {
    let size = strands - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let t = LaurentPolynomial::t();
    let t_inv = LaurentPolynomial::monomial(BigInt::one(), -1);
    let minus = |p: &LaurentPolynomial| -p;
    let mut rows = LaurentMatrix::identity(size).rows().to_vec();
    if letter > 0 {
        rows[i][i] = minus(&t);
        if i > 0 {
            rows[i][i - 1] = t.clone();
        }
        if i + 1 < size {
            rows[i][i + 1] = LaurentPolynomial::one();
        }
    } else {
        rows[i][i] = minus(&t_inv);
        if i > 0 {
            rows[i][i - 1] = LaurentPolynomial::one();
        }
        if i + 1 < size {
            rows[i][i + 1] = t_inv;
        }
    }
    LaurentMatrix::new(rows).expect("square")
}

/// Reduced Burau representation of the whole word.
pub fn burau_matrix(b: &BraidWord) -> LaurentMatrix {
    b.letters.iter().fold(LaurentMatrix::identity(b.strands - 1), |acc, &l| {
        acc.mul(&burau_generator(b.strands, l)).expect("same size")
    })
}

/// Multiplies by `±t^k` so that the polynomial is centred at exponent 0 and
/// takes the value +1 at `t = 1`.
pub fn normalize_alexander(p: &LaurentPolynomial) -> LaurentPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let centre = (p.lowest_exponent() + p.highest_exponent()).div_euclid(2);
    let shifted = p.shift(-centre);
    if shifted.value_at_one().is_negative() {
        -shifted
    } else {
        shifted
    }
}

/// Alexander polynomial of a knot closure from the reduced Burau
/// representation: `det(I - B(β)) (1 - t) / (1 - t^n)`, normalized.
pub fn burau_alexander(b: &BraidWord) -> Result<LaurentPolynomial> {
    let components = closure_component_count(b);
    if components != 1 {
        return Err(Error::LinkClosure(components));
    }
    let n = b.strands;
    let burau = burau_matrix(b);
    let det = LaurentMatrix::identity(n - 1).sub(&burau)?.determinant();
    let one = LaurentPolynomial::one();
    let numerator = &det * &(&one - &LaurentPolynomial::t());
    let denominator = &one - &LaurentPolynomial::monomial(BigInt::one(), n as i64);
    let quotient = numerator
        .div_exact(&denominator)
        .ok_or_else(|| Error::ReductionInvariant("Burau determinant not divisible by 1 + t + ... + t^(n-1)".into()))?;
    Ok(normalize_alexander(&quotient))
}
