//! Acceptance gate. Runs every criterion, prints one `[PASS]` or `[FAIL]`
//! line each, and exits non-zero if any failed.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{burau_oracle, signature_oracle};
use slicegenus::braid::{canonical_seifert_matrix, parse_braid};
use slicegenus::random::{random_knot_braid, random_sample_matrix, random_unimodular};
use slicegenus::reduction::{check_block_form, standard_symplectic};
use slicegenus::{bounds, reduce_to_block_form, report, LaurentPolynomial, SeifertMatrix};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample(seed: u64, count: usize) -> Vec<SeifertMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = rng.gen_range(1..=6);
            random_sample_matrix(g, &mut rng)
        })
        .collect()
}

fn braid_12n750() -> Outcome {
    let start = Instant::now();
    let b = parse_braid("aaabAbaaabAb", None).map_err(|e| e.to_string())?;
    let surface = canonical_seifert_matrix(&b).map_err(|e| e.to_string())?;
    let r = report(&surface.seifert_matrix, true).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let delta: LaurentPolynomial = "2t^-2 - 5t^-1 + 7 - 5t + 2t^2".parse().unwrap();
    ensure(surface.seifert_matrix.size() == 10, || format!("size {}", surface.seifert_matrix.size()))?;
    ensure(r.signature == -4, || format!("signature {}", r.signature))?;
    ensure(r.alexander_degree == 4, || format!("degree {}", r.alexander_degree))?;
    ensure(r.alexander == delta, || format!("alexander {}", r.alexander))?;
    ensure(r.bounds.signature_lower == 2 && r.bounds.alexander_upper == 2, || {
        format!("bounds ({}, {})", r.bounds.signature_lower, r.bounds.alexander_upper)
    })?;
    ensure(r.bounds.determined_g4top == Some(2), || format!("g4top {:?}", r.bounds.determined_g4top))?;
    let cert = r.certificate.as_ref().unwrap();
    cert.verify(&surface.seifert_matrix).map_err(|e| e.to_string())?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("σ = -4, deg Δ = 4, bounds (2, 2), g4top = 2, size 10 in {elapsed:.2?}"))
}

fn trivial_subform() -> Outcome {
    let m = SeifertMatrix::from_i64_rows(&[[0, 1], [0, -1]]).map_err(|e| e.to_string())?;
    ensure(m.alexander().is_one(), || format!("alexander {}", m.alexander()))?;
    let cert = reduce_to_block_form(&m).map_err(|e| e.to_string())?;
    ensure(cert.d == 0, || format!("d = {}", cert.d))?;
    ensure(cert.trivial_subform.size() == 2, || "subform is not the whole matrix".into())?;
    ensure(cert.trivial_subform == cert.reduced, || "subform differs from reduced matrix".into())?;
    cert.verify(&m).map_err(|e| e.to_string())?;
    Ok("Δ = 1, d = 0, whole matrix is the trivial subform".into())
}

fn soundness(matrices: &[SeifertMatrix]) -> Outcome {
    let start = Instant::now();
    let mut sizes = [0usize; 7];
    let mut degenerate = 0;
    for (i, m) in matrices.iter().enumerate() {
        let fail = |what: &str| format!("matrix #{i} (size {}): {what}\n{}", m.size(), m.matrix());
        let cert = reduce_to_block_form(m).map_err(|e| fail(&e.to_string()))?;
        cert.verify(m).map_err(|e| fail(&e.to_string()))?;
        ensure(2 * cert.d as u64 == m.alexander_degree(), || fail("2d != deg Δ"))?;
        ensure(!cert.core().determinant().is_zero(), || fail("singular core"))?;
        ensure(cert.trivial_subform.alexander().is_one(), || fail("Δ(N) != 1"))?;
        ensure(cert.transform.determinant().abs() == 1.into(), || fail("transform not unimodular"))?;
        ensure(check_block_form(&cert.reduced, cert.d).is_ok(), || fail("block form"))?;
        ensure(cert.reduced.matrix().skew_part() == standard_symplectic(m.size()), || fail("skew part"))?;
        sizes[m.genus()] += 1;
        if cert.d < m.genus() {
            degenerate += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(matrices.len() >= 1000, || format!("only {} matrices", matrices.len()))?;
    ensure(sizes[1..].iter().all(|&c| c > 0), || format!("size coverage {sizes:?}"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} matrices of sizes 2-12 ({degenerate} with d < g), all certificates verify in {elapsed:.2?}",
        matrices.len()
    ))
}

fn inequality_chain(matrices: &[SeifertMatrix]) -> Outcome {
    for (i, m) in matrices.iter().enumerate() {
        let fail = |what: &str| format!("matrix #{i}: {what}\n{}", m.matrix());
        let delta = m.alexander();
        let sigma = m.signature();
        let deg = m.alexander_degree();
        ensure(sigma.unsigned_abs() <= deg, || fail("|σ| > deg Δ"))?;
        ensure(deg as usize <= m.size(), || fail("deg Δ > size"))?;
        ensure(sigma % 2 == 0, || fail("σ odd"))?;
        ensure(delta.value_at_one() == 1.into(), || fail("Δ(1) != 1"))?;
        ensure(delta.is_palindromic(), || fail("Δ not palindromic"))?;
        let det = m.matrix().symmetrization().determinant().abs();
        ensure(det == delta.value_at_minus_one().abs(), || fail("|det(M + M^T)| != |Δ(-1)|"))?;
        ensure(!(&det % 2u32).is_zero(), || fail("knot determinant even"))?;
    }
    Ok(format!("{} matrices satisfy |σ| <= deg Δ <= size and the Δ identities", matrices.len()))
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b7a1);
    let words = 320;
    for i in 0..words {
        let b = random_knot_braid(10, 4, &mut rng);
        let surface = canonical_seifert_matrix(&b).map_err(|e| format!("word #{i} {b}: {e}"))?;
        let oracle = burau_oracle(b.strands(), b.letters());
        let delta = surface.seifert_matrix.alexander();
        ensure(delta == oracle, || format!("word #{i} {b}: seifert {delta} vs burau {oracle}"))?;
    }
    let b = parse_braid("aaa", None).unwrap();
    let m = canonical_seifert_matrix(&b).map_err(|e| e.to_string())?.seifert_matrix;
    let expected: LaurentPolynomial = "t^-1 - 1 + t".parse().unwrap();
    ensure(burau_oracle(2, &[1, 1, 1]) == expected, || "burau oracle disagrees on trefoil".into())?;
    ensure(signature_oracle(&m.matrix().symmetrization()) == -2, || "descartes oracle disagrees on trefoil".into())?;
    ensure(m.alexander() == expected, || format!("trefoil Δ = {}", m.alexander()))?;
    ensure(m.signature() == -2, || format!("trefoil σ = {}", m.signature()))?;
    let g4 = bounds(&m).determined_g4top;
    ensure(g4 == Some(1), || format!("trefoil g4top {g4:?}"))?;
    Ok(format!("{words} braid words agree with the Burau oracle; trefoil Δ = t^-1 - 1 + t, σ = -2, g4top = 1"))
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_5e1f);
    let pairs = 200;
    for i in 0..pairs {
        let g = rng.gen_range(1..=6);
        let m = random_sample_matrix(g, &mut rng);
        let a = random_unimodular(m.size(), &mut rng);
        let n = m.apply_congruence(&a).map_err(|e| e.to_string())?;
        ensure(n.alexander() == m.alexander(), || format!("pair #{i}: Δ changed"))?;
        ensure(n.signature() == m.signature(), || format!("pair #{i}: σ changed"))?;
        let before = bounds(&m);
        let after = bounds(&m.stabilize());
        ensure(
            after.signature_lower == before.signature_lower && after.alexander_upper == before.alexander_upper,
            || format!("pair #{i}: stabilization moved the bounds"),
        )?;
        ensure(after.seifert_genus == before.seifert_genus + 1, || {
            format!("pair #{i}: seifert_genus {} -> {}", before.seifert_genus, after.seifert_genus)
        })?;
    }
    Ok(format!("{pairs} congruence pairs preserve Δ and σ; stabilization keeps both bounds"))
}

fn main() -> ExitCode {
    let matrices = sample(0x00ac_ce97, 1000);
    let criteria: Vec<Criterion> = vec![
        ("12n750 end-to-end", Box::new(braid_12n750)),
        ("trivial-Alexander subform", Box::new(trivial_subform)),
        ("reduction soundness", Box::new(|| soundness(&matrices))),
        ("inequality chain", Box::new(|| inequality_chain(&matrices))),
        ("oracle agreement", Box::new(oracle_agreement)),
        ("congruence and stabilization invariance", Box::new(invariance)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
