//! Acceptance gate: one line per criterion, then a single assertion.
//!
//! Run with `cargo test -p hopf-link --test acceptance -- --nocapture`.
//! Every comparison is exact; the only tolerances are wall-clock limits.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use hopf_link::analysis::collapse;
use hopf_link::corpus::verify_all;
use hopf_link::format::{from_file, to_file, Scalar};
use hopf_link::generate::{generate, CORPUS};
use hopf_link_core::coalg::{check_axioms, FinCoalgebra, FinHopf};
use hopf_link_core::linalg::{ExactMatrix, Subspace, Vector};
use hopf_link_core::link::{
    antipode_on_components, ideal_complement_check, link_decomposition, verify_dcp, wedge_primitive_equivalence,
};
use hopf_link_core::matcalc::{
    antipode_identities, block_triviality_check, decompose_multiplicative, extension_matrix, odot, primitive_space,
    HMatrix, MultMatrix, Side,
};
use hopf_link_core::radical::{analyze, check_idempotents, coradical, CoradicalData};
use hopf_link_core::report::Report;
use hopf_link_core::smash::{h12, module_translate_check, translate_relation_check, verify_smash_decomposition};
use hopf_link_core::Cyclo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

struct Outcome {
    ok: bool,
    detail: String,
    elapsed: Duration,
    limit: Option<Duration>,
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus() -> Vec<(&'static str, FinHopf)> {
    CORPUS.iter().map(|(id, spec)| (*id, generate(spec).unwrap().hopf)).collect()
}

fn first_failure(r: &Report) -> String {
    r.failures().next().map(|c| format!("{}: {}", c.name, c.details)).unwrap_or_default()
}

// ---------------------------------------------------------------- helpers

fn random_vec(rng: &mut ChaCha8Rng, n: usize, order: u32) -> Vector {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                return Cyclo::zero();
            }
            let a = Cyclo::from_int(rng.gen_range(-3..=3));
            if order > 1 && rng.gen_bool(0.3) {
                a + Cyclo::zeta_pow(order, rng.gen_range(1..order as i64)) * Cyclo::from_int(rng.gen_range(-2..=2))
            } else {
                a
            }
        })
        .collect()
}

fn random_hmatrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, h: &FinHopf) -> HMatrix {
    let entries = (0..rows * cols).map(|_| random_vec(rng, h.dim(), h.field_order())).collect();
    HMatrix::new(rows, cols, h.dim(), entries).unwrap()
}

/// Unit lower times unit upper triangular, with a random row permutation.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let mut l = ExactMatrix::identity(n);
    let mut u = ExactMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, Cyclo::from_int(rng.gen_range(-2..=2)));
            u.set(j, i, Cyclo::from_int(rng.gen_range(-2..=2)));
        }
    }
    let m = l.mul(&u).unwrap();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    ExactMatrix::from_rows(n, perm.iter().map(|&p| m.row(p).to_vec()).collect())
}

fn direct_sum(parts: &[&HMatrix], dim: usize) -> HMatrix {
    let n: usize = parts.iter().map(|p| p.rows()).sum();
    let mut out = HMatrix::zeros(n, n, dim);
    let mut off = 0;
    for p in parts {
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                out.set(off + i, off + j, p.get(i, j).to_vec());
            }
        }
        off += p.rows();
    }
    out
}

/// Multiplicative matrices with known diagonal simples: every basic matrix and
/// one extension `[[C, X], [0, D]]` per pair with a nontrivial primitive.
fn known_matrices(co: &FinCoalgebra, data: &CoradicalData) -> Vec<(MultMatrix, Vec<usize>)> {
    let mut out = Vec::new();
    for (i, c) in data.simples.iter().enumerate() {
        out.push((c.matrix.clone(), vec![i]));
        for (j, d) in data.simples.iter().enumerate() {
            let ps = primitive_space(co, &c.matrix, &d.matrix, &data.h0).unwrap();
            if let Some(x) = ps.nontrivial_representatives().into_iter().next() {
                out.push((extension_matrix(co, &c.matrix, &x, &d.matrix).unwrap(), vec![i, j]));
            }
        }
    }
    out
}

// ---------------------------------------------------------------- criteria

fn axiom_gate() -> (bool, String) {
    let mut passed = 0;
    for (id, h) in corpus() {
        let r = check_axioms(&h);
        if !r.all_passed() {
            return (false, format!("{} fails {}", id, first_failure(&r)));
        }
        passed += 1;
    }
    // negative controls: one corrupted constant per structure map
    type Corrupt = fn(&mut hopf_link::format::HopfFile);
    let controls: [(&str, &str, Corrupt); 5] = [
        ("sweedler", "comultiplication constant", |f| f.comul[1].3 = Scalar::Text("2".into())),
        ("sweedler", "counit value", |f| f.counit[2] = Scalar::Text("3".into())),
        ("taft:3:zeta3", "product constant", |f| {
            let m = f.mul.as_mut().unwrap();
            let last = m.len() - 1;
            m[last].3 = Scalar::Text("5".into());
        }),
        ("sweedler", "antipode entry", |f| {
            let s = f.antipode.as_mut().unwrap();
            s[1][1] = Scalar::Text("1".into());
        }),
        ("group:S3", "product constant", |f| f.mul.as_mut().unwrap()[7].3 = Scalar::Text("-1".into())),
    ];
    let mut witnesses = 0;
    for (spec, what, corrupt) in controls {
        let mut f = to_file(&generate(spec).unwrap().hopf);
        corrupt(&mut f);
        let bad = from_file(&f, None).unwrap();
        let r = check_axioms(&bad);
        let witnessed = r.failures().any(|c| !c.details.is_empty());
        if !witnessed {
            return (false, format!("corrupted {} of {} not caught with a witness", what, spec));
        }
        witnesses += 1;
    }
    (true, format!("{} corpus algebras pass, {} corrupted controls fail with witnesses", passed, witnesses))
}

fn coradical_oracle() -> (bool, String) {
    let expected = [("sweedler", 2), ("taft3", 3), ("dual-group-s3", 6), ("h12", 6)];
    let mut seen = Vec::new();
    for (id, h) in corpus() {
        let info = coradical(&h);
        let data = analyze(&h).unwrap();
        let n = h.dim();
        let sum = Subspace::sum_all(n, data.simples.iter().map(|c| &c.space)).unwrap();
        if sum != info.h0 || data.h0 != info.h0 {
            return (false, format!("{}: trace-form dim {} vs simples dim {}", id, info.h0.dim(), sum.dim()));
        }
        if let Some((_, d)) = expected.iter().find(|(e, _)| *e == id) {
            if info.h0.dim() != *d {
                return (false, format!("{}: coradical dim {} expected {}", id, info.h0.dim(), d));
            }
            seen.push(format!("{}={}", id, d));
        }
    }
    (seen.len() == expected.len(), format!("pipelines agree on all {} algebras; {}", CORPUS.len(), seen.join(" ")))
}

fn wedge_primitive() -> (bool, String) {
    let mut pairs = 0;
    for (id, h) in corpus() {
        let data = analyze(&h).unwrap();
        let r = wedge_primitive_equivalence(h.coalgebra(), &data).unwrap();
        if !r.all_passed() {
            return (false, format!("{}: {}", id, first_failure(&r)));
        }
        pairs += data.simples.len() * data.simples.len();
    }
    (true, format!("{} ordered pairs, 0 discrepancies", pairs))
}

fn kronecker_identities() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let algebras = [generate("sweedler").unwrap().hopf, generate("taft:3:zeta3").unwrap().hopf];
    let pools: Vec<Vec<MultMatrix>> = algebras
        .iter()
        .map(|h| {
            let data = analyze(h).unwrap();
            known_matrices(h.coalgebra(), &data).into_iter().map(|(m, _)| m).collect()
        })
        .collect();
    let unit = |h: &FinHopf| h.unit().unwrap().to_vec();
    for t in 0..200 {
        let which = t % 2;
        let h = &algebras[which];
        let (m, n, p, q, r) =
            (rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = random_hmatrix(&mut rng, m, n, h);
        let b = random_hmatrix(&mut rng, p, q, h);
        let b2 = random_hmatrix(&mut rng, q, r, h);
        let lhs = odot(h, &a, &b, Side::Left).unwrap().transpose();
        let rhs = odot(h, &a.transpose(), &b.transpose(), Side::Left).unwrap();
        if lhs != rhs {
            return (false, format!("instance {}: transpose identity", t));
        }
        let id = HMatrix::identity(n, &unit(h));
        let lhs = odot(h, &a, &b, Side::Left).unwrap().mul(h, &odot(h, &id, &b2, Side::Left).unwrap()).unwrap();
        let rhs = odot(h, &a, &b.mul(h, &b2).unwrap(), Side::Left).unwrap();
        if lhs != rhs {
            return (false, format!("instance {}: product identity", t));
        }
        // antipode on a random multiplicative matrix: Kronecker product of two
        // pool members, conjugated by a random invertible scalar matrix
        let pool = &pools[which];
        let g1 = &pool[rng.gen_range(0..pool.len())];
        let g2 = &pool[rng.gen_range(0..pool.len())];
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let k = hopf_link_core::matcalc::kron(h, g1, g2, side).unwrap();
        let l = random_invertible(&mut rng, k.size());
        let g = MultMatrix::new(h.coalgebra(), k.mat().conjugate(&l).unwrap()).unwrap();
        let rep = antipode_identities(h, &g).unwrap();
        if !rep.all_passed() {
            return (false, format!("instance {}: {}", t, first_failure(&rep)));
        }
    }
    (true, "200 instances over sweedler and taft3, all identities exact".into())
}

/// Criterion 5 plus the triviality half of criterion 9 on the same outputs.
fn random_decompositions() -> (bool, String, Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xd3c0);
    let specs = ["sweedler", "taft:3:zeta3", "dual-group:S3", "tensor:group:Z2+sweedler", "smash:H12"];
    let setups: Vec<(FinHopf, CoradicalData, Vec<(MultMatrix, Vec<usize>)>)> = specs
        .iter()
        .map(|s| {
            let h = generate(s).unwrap().hopf;
            let data = analyze(&h).unwrap();
            let known = known_matrices(h.coalgebra(), &data);
            (h, data, known)
        })
        .collect();
    let mut triviality = Vec::new();
    let mut coradical_inputs = 0;
    for t in 0..50 {
        let (h, data, known) = &setups[t % setups.len()];
        let co = h.coalgebra();
        let count = rng.gen_range(1..=3);
        let picks: Vec<&(MultMatrix, Vec<usize>)> = (0..count).map(|_| &known[rng.gen_range(0..known.len())]).collect();
        let mut want: Vec<usize> = picks.iter().flat_map(|p| p.1.clone()).collect();
        want.sort();
        let basic_only = picks.iter().all(|p| p.1.len() == 1);
        let sum = direct_sum(&picks.iter().map(|p| p.0.mat()).collect::<Vec<_>>(), h.dim());
        let l = random_invertible(&mut rng, sum.rows());
        let hidden = MultMatrix::new(co, sum.conjugate(&l).unwrap()).unwrap();
        let bd = match decompose_multiplicative(co, &hidden, &data.simples) {
            Ok(bd) => bd,
            Err(e) => return (false, format!("instance {} ({}): {}", t, specs[t % specs.len()], e), Report::new()),
        };
        let mut got = bd.simple_index.clone();
        got.sort();
        if got != want {
            return (false, format!("instance {}: diagonal simples {:?}, expected {:?}", t, got, want), Report::new());
        }
        if bd.conjugated.conjugate(&bd.l_inv).unwrap() != *hidden.mat() {
            return (false, format!("instance {}: conjugation does not invert", t), Report::new());
        }
        if basic_only {
            coradical_inputs += 1;
            if !bd.offdiag_is_zero() {
                return (false, format!("instance {}: coradical input has nonzero off-diagonal block", t), Report::new());
            }
        }
        triviality.push(block_triviality_check(co, &bd, &data.idempotents, &data.h0));
    }
    (
        true,
        format!("50 conjugates decomposed, diagonal multisets match, {} coradical inputs block-diagonal", coradical_inputs),
        collapse(triviality),
    )
}

fn link_components() -> (bool, String) {
    let expected: [(&str, Vec<usize>); 5] = [
        ("sweedler", vec![4]),
        ("taft:3:zeta3", vec![9]),
        ("group:Z4", vec![1, 1, 1, 1]),
        ("dual-group:S3", vec![1, 1, 4]),
        ("smash:H12", vec![4, 8]),
    ];
    let mut out = Vec::new();
    for (spec, want) in expected {
        let g = generate(spec).unwrap();
        let data = analyze(&g.hopf).unwrap();
        let (_, dec) = link_decomposition(g.hopf.coalgebra(), &data).unwrap();
        let mut dims = dec.dims();
        dims.sort();
        if dims != want || !dec.is_direct_sum || dims.iter().sum::<usize>() != g.hopf.dim() {
            return (false, format!("{}: dims {:?}, direct sum {}", spec, dims, dec.is_direct_sum));
        }
        if let Some(s) = &g.smash {
            let res = verify_smash_decomposition(s).unwrap();
            let mut parts: Vec<usize> = res.parts.iter().map(|p| p.dim()).collect();
            parts.sort();
            if parts != want {
                return (false, format!("{}: smash-side parts {:?}", spec, parts));
            }
        }
        out.push(format!("{} {:?}", spec, dims));
    }
    (true, out.join(", "))
}

fn dcp_checks() -> (bool, String, Duration) {
    let mut applicable = 0;
    for (id, h) in corpus() {
        let data = analyze(&h).unwrap();
        if !data.has_dual_chevalley {
            continue;
        }
        let (_, dec) = link_decomposition(h.coalgebra(), &data).unwrap();
        let out = verify_dcp(&h, &data, &dec).unwrap();
        if !out.report.all_passed() || out.report.checks.iter().any(|c| c.status != hopf_link_core::report::Status::Pass) {
            return (false, format!("{}: {}", id, first_failure(&out.report)), Duration::ZERO);
        }
        applicable += 1;
    }
    // H12 has no algebra; its module-sided form goes through the smash presentation
    let start = Instant::now();
    let s = h12().unwrap();
    let data = analyze(s.hopf()).unwrap();
    let (_, dec) = link_decomposition(s.hopf().coalgebra(), &data).unwrap();
    let r = module_translate_check(&s, &data, &dec).unwrap();
    let h12_time = start.elapsed();
    if !r.all_passed() {
        return (false, format!("h12 module form: {}", first_failure(&r)), h12_time);
    }
    (true, format!("{} dual-Chevalley algebras pass, h12 module form {:.2?}", applicable, h12_time), h12_time)
}

fn smash_pipeline() -> (bool, String) {
    let s = h12().unwrap();
    let res = verify_smash_decomposition(&s).unwrap();
    let tr = translate_relation_check(s.j(), &res.k).unwrap();
    let needed = ["smash-coradical", "smash-parts-direct-sum", "smash-parts-match-components"];
    for n in needed {
        match res.report.get(n) {
            Some(c) if c.status == hopf_link_core::report::Status::Pass => {}
            _ => return (false, format!("{} did not pass", n)),
        }
    }
    if !res.report.all_passed() || !tr.all_passed() {
        return (false, format!("{}{}", first_failure(&res.report), first_failure(&tr)));
    }
    let dims: Vec<usize> = res.parts.iter().map(|p| p.dim()).collect();
    (true, format!("coradical = J⊗g, parts {:?}, K dim {}, {} checks", dims, res.k.dim(), res.report.checks.len() + tr.checks.len()))
}

fn idempotents_and_blocks(random_blocks: &Report) -> (bool, String) {
    for (id, h) in corpus() {
        let data = analyze(&h).unwrap();
        let r = check_idempotents(h.coalgebra(), &data.simples, &data.idempotents);
        if !r.all_passed() {
            return (false, format!("{}: {}", id, first_failure(&r)));
        }
    }
    if !random_blocks.all_passed() {
        return (false, format!("random decompositions: {}", first_failure(random_blocks)));
    }
    (true, format!("idempotent equations exact on {} algebras; block triviality on every decomposition", CORPUS.len()))
}

fn antipode_and_ideal() -> (bool, String) {
    let (mut antipode, mut ideal) = (0, 0);
    for (id, h) in corpus() {
        let data = analyze(&h).unwrap();
        let (_, dec) = link_decomposition(h.coalgebra(), &data).unwrap();
        if h.antipode().is_some() {
            let r = antipode_on_components(&h, &data, &dec).unwrap();
            if !r.all_passed() {
                return (false, format!("{}: {}", id, first_failure(&r)));
            }
            antipode += 1;
        }
        if data.has_dual_chevalley {
            let r = ideal_complement_check(&h, &data, &dec).unwrap();
            if !r.all_passed() {
                return (false, format!("{}: {}", id, first_failure(&r)));
            }
            ideal += 1;
        }
    }
    (true, format!("antipode on components: {} algebras; ideal complement: {} algebras", antipode, ideal))
}

fn determinism() -> (bool, String, Duration) {
    let start = Instant::now();
    let first = verify_all(&corpus_dir()).unwrap();
    let once = start.elapsed();
    let second = verify_all(&corpus_dir()).unwrap();
    let a: Vec<String> = first.iter().map(|r| r.to_json()).collect();
    let b: Vec<String> = second.iter().map(|r| r.to_json()).collect();
    let failed: Vec<&str> = first.iter().filter(|r| r.failed()).map(|r| r.algebra_id.as_str()).collect();
    if !failed.is_empty() {
        return (false, format!("corpus failures in {:?}", failed), once);
    }
    (a == b, format!("{} reports byte-identical across two runs, one run {:.2?}", a.len(), once), once)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

#[test]
fn acceptance() {
    let mut lines: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut record = |n, name, ok, detail, elapsed, limit| lines.push((n, name, Outcome { ok, detail, elapsed, limit }));

    let ((ok, d), t) = timed(axiom_gate);
    record(1, "axiom-gate", ok, d, t, Some(Duration::from_secs(5)));
    let ((ok, d), t) = timed(coradical_oracle);
    record(2, "coradical-dual-oracle", ok, d, t, None);
    let ((ok, d), t) = timed(wedge_primitive);
    record(3, "wedge-primitive-equivalence", ok, d, t, None);
    let ((ok, d), t) = timed(kronecker_identities);
    record(4, "kronecker-antipode-identities", ok, d, t, Some(Duration::from_secs(10)));
    let ((ok, d, blocks), t) = timed(random_decompositions);
    record(5, "multiplicative-decomposition", ok, d, t, None);
    let ((ok, d), t) = timed(link_components);
    record(6, "link-components", ok, d, t, None);
    let ((ok, d, h12_time), t) = timed(dcp_checks);
    let ok = ok && h12_time < Duration::from_secs(30);
    record(7, "component-translates", ok, d, t, None);
    let ((ok, d), t) = timed(smash_pipeline);
    record(8, "smash-pipeline", ok, d, t, None);
    let ((ok, d), t) = timed(|| idempotents_and_blocks(&blocks));
    record(9, "idempotents-and-block-triviality", ok, d, t, None);
    let ((ok, d), t) = timed(antipode_and_ideal);
    record(10, "antipode-components-and-ideal", ok, d, t, None);
    let ((ok, d, once), t) = timed(determinism);
    let ok = ok && once < Duration::from_secs(120);
    record(11, "determinism", ok, d, t, None);

    let mut all = true;
    for (n, name, o) in &lines {
        let in_time = o.limit.map_or(true, |l| o.elapsed < l);
        let pass = o.ok && in_time;
        all &= pass;
        let limit = o.limit.map(|l| format!(" < {:?}", l)).unwrap_or_default();
        println!(
            "criterion {:>2} {:<34} {}  [{:.2?}{}]  {}",
            n,
            name,
            if pass { "PASS" } else { "FAIL" },
            o.elapsed,
            limit,
            o.detail
        );
    }
    assert!(all, "acceptance criteria failed");
}
