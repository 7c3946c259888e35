//! Random samples for property testing: unimodular transforms, valid Seifert
//! matrices and knot-closure braid words.

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use crate::braid::{closure_component_count, BraidWord};
use crate::intmat::IntMatrix;
use crate::seifert::{SeifertMatrix, UnimodularTransform};

/// A product of 10 to 30 random elementary transvections `e_i += ±e_j` and
/// transpositions.
pub fn random_unimodular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UnimodularTransform {
    let mut a = IntMatrix::identity(n);
    if n < 2 {
        return UnimodularTransform::new_unchecked(a);
    }
    for _ in 0..rng.gen_range(10..=30) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        if rng.gen_bool(0.8) {
            let s = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
            for r in 0..n {
                let v = &a[(r, j)] * &s;
                a[(r, i)] += v;
            }
        } else {
            for r in 0..n {
                let x = a[(r, i)].clone();
                a[(r, i)] = std::mem::replace(&mut a[(r, j)], x);
            }
        }
    }
    UnimodularTransform::new_unchecked(a)
}

fn small_entry<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    // zero-heavy so that singular matrices show up regularly
    if rng.gen_bool(0.4) {
        0
    } else {
        rng.gen_range(-2..=2)
    }
}

/// The strictly lower triangular matrix `L` with `L - L^T` standard
/// symplectic, plus a random symmetric matrix. Not scrambled.
fn symplectic_seed<R: Rng + ?Sized>(g: usize, rng: &mut R) -> IntMatrix {
    let n = 2 * g;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let s = BigInt::from(small_entry(rng));
            m[(i, j)] = s.clone();
            m[(j, i)] = s;
        }
    }
    for a in (0..n).step_by(2) {
        m[(a + 1, a)] += BigInt::one();
    }
    m
}

/// A random valid Seifert matrix of genus `g`: a symmetric matrix plus a
/// realization of the standard symplectic form, conjugated by a random
/// unimodular transform.
pub fn random_seifert_matrix<R: Rng + ?Sized>(g: usize, rng: &mut R) -> SeifertMatrix {
    let m = SeifertMatrix::new_unchecked(symplectic_seed(g, rng));
    m.apply_congruence(&random_unimodular(2 * g, rng)).unwrap()
}

/// A random valid Seifert matrix of genus `g` built in nested block form
/// around a random core of genus `core_genus`, then conjugated by a random
/// unimodular transform. Its Alexander degree is at most `2 * core_genus`;
/// with `core_genus = 0` the Alexander polynomial is 1.
pub fn random_nested_seifert_matrix<R: Rng + ?Sized>(g: usize, core_genus: usize, rng: &mut R) -> SeifertMatrix {
    assert!(core_genus <= g);
    let mut m = symplectic_seed(core_genus, rng);
    for _ in core_genus..g {
        let k = m.nrows();
        let mut next = IntMatrix::zeros(k + 2, k + 2);
        for i in 0..k {
            for j in 0..k {
                next[(i, j)] = m[(i, j)].clone();
            }
            let v = BigInt::from(small_entry(rng));
            next[(i, k)] = v.clone();
            next[(k, i)] = v;
        }
        next[(k + 1, k)] = BigInt::one();
        m = next;
    }
    let m = SeifertMatrix::new_unchecked(m);
    m.apply_congruence(&random_unimodular(2 * g, rng)).unwrap()
}

/// [`random_nested_seifert_matrix`] with a uniformly random core genus.
pub fn random_degenerate_seifert_matrix<R: Rng + ?Sized>(g: usize, rng: &mut R) -> SeifertMatrix {
    let core_genus = rng.gen_range(0..=g);
    random_nested_seifert_matrix(g, core_genus, rng)
}

/// Alternates between the two generators above.
pub fn random_sample_matrix<R: Rng + ?Sized>(g: usize, rng: &mut R) -> SeifertMatrix {
    if rng.gen_bool(0.5) {
        random_seifert_matrix(g, rng)
    } else {
        random_degenerate_seifert_matrix(g, rng)
    }
}

/// A random braid word on 2..=`max_strands` strands with at most
/// `max_letters` letters whose closure is a knot.
pub fn random_knot_braid<R: Rng + ?Sized>(max_letters: usize, max_strands: usize, rng: &mut R) -> BraidWord {
    loop {
        let strands = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(1..=max_letters);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let b = BraidWord::new(strands, letters).expect("indices in range");
        if closure_component_count(&b) == 1 {
            return b;
        }
    }
}
