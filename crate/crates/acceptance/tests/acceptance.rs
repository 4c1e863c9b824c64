//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
//!
//! Criteria that cannot hold for the data as published are reported red
//! together with the evidence; they are not weakened to pass.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lie_weyl::catalog::{self, Family, Params};
use lie_weyl::constructors::{
    build_snp_extension, derivations, dyer, extension_directions, gt_algebra, heisenberg,
    is_characteristically_nilpotent, n2_heisenberg, skew_derivations, AlternatingForm, GtTensor,
};
use lie_weyl::metric::MetricLieAlgebra;
use lie_weyl::sample;
use lie_weyl::scalar::{self, int, unit, Scalar};
use lie_weyl::weyl::{check_w2, snp_space, stretch_scan, verify_structure, WeylConnection};
use lie_weyl::{semidirect_sum, Error, InnerProduct, LieAlgebra, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;
const SWEEP_TRIALS: usize = 25;
const SWEEP_TIME_LIMIT: Duration = Duration::from_secs(5);
const EXTENSION_INSTANCES: usize = 50;
const EXTENSION_TIME_LIMIT: Duration = Duration::from_secs(10);
const DYER_METRICS: usize = 10;
const DYER_EXTENSIONS: usize = 5;
const ENGINE_INSTANCES: usize = 200;
const ENGINE_MAX_DIM: usize = 6;
const WEYL_INSTANCES: usize = 100;
const SCAN_GRID: [f64; 3] = [1.0, 10.0, 100.0];
const SCAN_SAMPLES: usize = 500;
/// Largest sampled `k̂` still counted as non-positive.
const SCAN_TOLERANCE: f64 = 1e-9;

/// Exceptional tensors with `m, n ≤ 5`.
const TENSORS_55: [&str; 10] = [
    "132 521 415 354",
    "125 144 153 234 243 252 342 351",
    "125 134 153 233 243 252 342 451",
    "125 135 144 152 234 242 251 343",
    "125 134 143 152 233 244 342 451",
    "125 143 154 233 242 251 341 352",
    "125 132 144 153 234 243 252 351",
    "125 134 141 153 243 252 342 351",
    "121 144 153 234 243 252 342 451",
    "125 134 143 152 233 242 251 341",
];

/// Exceptional tensors with `m ≤ 6, n ≤ 3`.
const TENSORS_63: [&str; 10] = [
    "531 152 313",
    "121 342 531 152 313",
    "143 162 233 252 351",
    "143 162 233 252 261 342 351",
    "153 162 233 242 252 261 341",
    "133 152 161 243 252 342 351",
    "143 161 233 242 251 341 352",
    "133 142 153 161 243 252 341",
    "123 141 152 242 261 351 362",
    "143 152 161 233 242 251 341",
];

/// Surjective rows among the twenty, pinned from the first recorded run. The
/// two exceptions ("132 521 415 354" and "121 144 ... 451") have rank 4 with
/// `n = 5`: the first has only four terms, the second never reaches `v5`.
const SURJECTIVE_ROWS: usize = 18;

struct Verdict {
    passed: bool,
    detail: String,
}

type Criterion = fn() -> Verdict;

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

/// Direct check of both SNP conditions on basis brackets: `E ⊥ [e_i,e_j]`
/// and `⟨[E,e_i],e_j⟩ + ⟨e_i,[E,e_j]⟩ = 0`.
fn snp_conditions_hold(m: &MetricLieAlgebra, e: &[Scalar]) -> bool {
    let n = m.dim();
    let alg = m.algebra();
    let orthogonal = (0..n).all(|i| (0..n).all(|j| m.inner(e, &alg.bracket_basis(i, j)) == int(0)));
    let skew = (0..n).all(|i| {
        let ai = alg.bracket(e, &unit(n, i)).unwrap();
        (0..n).all(|j| {
            let aj = alg.bracket(e, &unit(n, j)).unwrap();
            m.inner(&ai, &unit(n, j)) + m.inner(&unit(n, i), &aj) == int(0)
        })
    });
    orthogonal && skew
}

fn rebuild(family: Family, params: &Params) -> MetricLieAlgebra {
    catalog::build(family, params).expect("sweep parameters are admissible")
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let report = catalog::verify_classification(SWEEP_TRIALS, SEED);
    let elapsed = start.elapsed();
    let mismatches: Vec<String> = report
        .mismatches()
        .map(|e| format!("{} {} [{}]", e.family, e.draw, e.params))
        .collect();
    // oracle: every expected basis vector satisfies the conditions directly
    let oracle_failures = report
        .entries
        .iter()
        .filter(|e| {
            let m = rebuild(e.family, &e.params);
            !e.expected
                .space
                .basis()
                .iter()
                .all(|v| snp_conditions_hold(&m, v))
        })
        .count();
    let boundary = report
        .entries
        .iter()
        .filter(|e| matches!(e.draw, catalog::DrawKind::Boundary(_)))
        .count();
    Verdict::new(
        mismatches.is_empty() && oracle_failures == 0 && elapsed < SWEEP_TIME_LIMIT,
        format!(
            "{} draws ({} boundary), {} mismatches{}, {} oracle failures, {:.2}s (limit {}s)",
            report.entries.len(),
            boundary,
            mismatches.len(),
            if mismatches.is_empty() {
                String::new()
            } else {
                format!(": {}", mismatches.join("; "))
            },
            oracle_failures,
            elapsed.as_secs_f64(),
            SWEEP_TIME_LIMIT.as_secs()
        ),
    )
}

fn criterion_2() -> Verdict {
    let report = catalog::verify_classification(SWEEP_TRIALS, SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut fields, mut parallel_bad, mut w2_bad) = (0, 0, 0);
    for entry in report.entries.iter().filter(|e| !e.actual.is_zero()) {
        let m = rebuild(entry.family, &entry.params);
        let basis = entry.actual.basis();
        let mut candidates: Vec<Vec<Scalar>> = basis.to_vec();
        // one random combination per solution space as well
        let mut combo = scalar::zero_vector(4);
        for b in basis {
            combo = scalar::add(&combo, &scalar::scale(&int(rng.gen_range(1..=5)), b));
        }
        candidates.push(combo);
        for e in candidates {
            fields += 1;
            if !m.is_parallel(&e).unwrap() {
                parallel_bad += 1;
            }
            if !check_w2(&m, &e).unwrap() {
                w2_bad += 1;
            }
        }
    }
    Verdict::new(
        parallel_bad == 0 && w2_bad == 0 && fields > 0,
        format!("{fields} fields checked, {parallel_bad} not parallel, {w2_bad} failing W2"),
    )
}

fn criterion_3() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let overrides = [("b33", int(1)), ("b13", int(0)), ("b12", int(0))];
    let params = catalog::draw_params(Family::NilRtimesS1, &overrides, &mut rng);
    let m = rebuild(Family::NilRtimesS1, &params);
    let x4 = Family::NilRtimesS1.milnor_frame(&params).column(3);
    let structure = match verify_structure(&m, &x4) {
        Ok(r) => r,
        Err(e) => return Verdict::new(false, format!("verifier error on X4: {e}")),
    };
    let nil = rebuild(
        Family::NilxR,
        &catalog::draw_params(Family::NilxR, &[], &mut rng),
    );
    let central = verify_structure(&nil, &unit(4, 1));
    let central_ok = central.as_ref().err() == Some(&Error::CentralField);
    let alg = m.algebra();
    let s_derived = alg.bracket_of(&structure.complement, &structure.complement);
    Verdict::new(
        structure.all_passed() && central_ok,
        format!(
            "[{params}] ideal={} solvable={} unimodular={} skew={} [s,s]=[g,g]:{} \
             (dim [s,s]={}, dim [g,g]={}, [g,g]⊆s:{}); NilxR e2 -> {}",
            structure.is_ideal,
            structure.solvable,
            structure.unimodular,
            structure.skew_on_complement,
            structure.derived_equal,
            s_derived.dim(),
            alg.derived_algebra().dim(),
            structure.derived_contained,
            match central {
                Err(e) => e.to_string(),
                Ok(_) => "no error".into(),
            }
        ),
    )
}

/// A nilpotent base with a metric for which the rotation of the `(e1, e2)`
/// plane is an isometry.
fn extension_base(kind: usize, rng: &mut ChaCha8Rng) -> (LieAlgebra, InnerProduct) {
    let pos = |rng: &mut ChaCha8Rng| scalar::ratio(rng.gen_range(1..=9), rng.gen_range(1..=4));
    match kind {
        0 | 1 => {
            let half = kind + 1;
            let alg = heisenberg(&AlternatingForm::standard_symplectic(half)).unwrap();
            let mut diag = Vec::new();
            for _ in 0..half {
                let c = pos(rng);
                diag.extend([c.clone(), c]);
            }
            diag.push(pos(rng));
            (alg, InnerProduct::new(Matrix::diagonal(&diag)).unwrap())
        }
        _ => {
            // F1 = e12 + α e34, F2 = β e34 (β ≠ 0): both invariant under the (e1,e2) rotation
            let alpha = sample::rational(rng, 3);
            let beta = loop {
                let b = sample::rational(rng, 3);
                if b != int(0) {
                    break b;
                }
            };
            let f1 =
                AlternatingForm::wedge(4, 0, 1).add(&AlternatingForm::wedge(4, 2, 3).scale(&alpha));
            let f2 = AlternatingForm::wedge(4, 2, 3).scale(&beta);
            let alg = n2_heisenberg(&f1, &f2).unwrap();
            let c = pos(rng);
            let plane = InnerProduct::new(Matrix::diagonal(&[c.clone(), c])).unwrap();
            let g = plane
                .direct_sum(&sample::spd(rng, 2))
                .direct_sum(&sample::spd(rng, 2));
            (alg, g)
        }
    }
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let start = Instant::now();
    let (mut failures, mut nontrivial) = (Vec::new(), 0);
    for idx in 0..EXTENSION_INSTANCES {
        let (n, g) = extension_base(idx % 3, &mut rng);
        let skew = skew_derivations(&n, &g).unwrap();
        let coeffs = sample::vector(&mut rng, skew.dim(), 3);
        let d = skew.combination(&coeffs);
        if !d.is_zero() {
            nontrivial += 1;
        }
        let a_dim = rng.gen_range(1..=2);
        let family: Vec<Matrix> = (0..a_dim)
            .map(|_| d.scale(&sample::rational(&mut rng, 3)))
            .collect();
        let ext = match build_snp_extension(&n, &g, &family, a_dim) {
            Ok(ext) => ext,
            Err(e) => {
                failures.push(format!("#{idx}: {e}"));
                continue;
            }
        };
        let a = extension_directions(n.dim(), a_dim);
        let contained = snp_space(&ext).solution_space.contains(&a);
        let oracle = a.basis().iter().all(|e| snp_conditions_hold(&ext, e));
        if !(contained && oracle) {
            failures.push(format!("#{idx}: contained={contained} oracle={oracle}"));
        }
    }
    let elapsed = start.elapsed();
    Verdict::new(
        failures.is_empty() && elapsed < EXTENSION_TIME_LIMIT,
        format!(
            "{EXTENSION_INSTANCES} extensions ({nontrivial} with nonzero action), {} failures{}, {:.2}s (limit {}s)",
            failures.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!(": {}", failures.join("; "))
            },
            elapsed.as_secs_f64(),
            EXTENSION_TIME_LIMIT.as_secs()
        ),
    )
}

fn criterion_5() -> Verdict {
    let d = dyer();
    let validation = d.validate();
    let char_nil = is_characteristically_nilpotent(&d);
    let der = derivations(&d);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let skew_dims: Vec<usize> = (0..DYER_METRICS)
        .map(|_| {
            skew_derivations(&d, &sample::spd(&mut rng, 9))
                .unwrap()
                .dim()
        })
        .collect();
    let skew_ok = skew_dims.iter().all(|&k| k == 0);
    // trace-zero derivations: project random combinations onto trace 0
    let mut central_only = 0;
    let mut extension_errors = Vec::new();
    for _ in 0..DYER_EXTENSIONS {
        let coeffs = sample::vector(&mut rng, der.dim(), 3);
        let mut dm = der.combination(&coeffs);
        let tr = dm.trace();
        if tr != int(0) {
            // remove the trace along a basis derivation with nonzero trace
            let basis = der.basis();
            if let Some(b) = basis.iter().find(|b| b.trace() != int(0)) {
                dm = dm.sub(&b.scale(&(&tr / b.trace()))).unwrap();
            }
        }
        match semidirect_sum(&LieAlgebra::abelian(1).unwrap(), &d, &[dm]) {
            Ok(g) => {
                let metric = sample::spd(&mut rng, 10);
                let m = MetricLieAlgebra::new(g, metric).unwrap();
                if m.algebra().center().contains(&snp_space(&m).solution_space) {
                    central_only += 1;
                }
            }
            Err(e) => extension_errors.push(e.to_string()),
        }
    }
    let passed = validation.is_valid()
        && char_nil
        && skew_ok
        && central_only == DYER_EXTENSIONS
        && extension_errors.is_empty();
    Verdict::new(
        passed,
        format!(
            "Jacobi: {validation}; characteristically nilpotent: {char_nil} (dim Der = {}); \
             skew derivation dims over {DYER_METRICS} metrics: {skew_dims:?}; \
             trace-zero extensions with central-only SNP: {central_only}/{DYER_EXTENSIONS}{}",
            der.dim(),
            if extension_errors.is_empty() {
                String::new()
            } else {
                format!(" (errors: {})", extension_errors.join("; "))
            }
        ),
    )
}

/// Rank of the `n × C(m,2)` coefficient matrix of the tensor.
fn tensor_rank(t: &GtTensor) -> usize {
    let pairs: Vec<(usize, usize)> = (1..=t.m())
        .flat_map(|a| (a + 1..=t.m()).map(move |b| (a, b)))
        .collect();
    let mut rows = vec![scalar::zero_vector(pairs.len()); t.n()];
    for &(a, b, c) in t.terms() {
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let col = pairs.iter().position(|&p| p == (lo, hi)).unwrap();
        rows[c - 1][col] += int(sign);
    }
    Matrix::from_rows(rows).unwrap().rank()
}

fn criterion_6() -> Verdict {
    let mut problems = Vec::new();
    let mut surjective = 0;
    let mut non_surjective = Vec::new();
    for (table, (m, n)) in [(&TENSORS_55, (5, 5)), (&TENSORS_63, (6, 3))] {
        for text in table.iter() {
            let t = match GtTensor::parse(text, m, n) {
                Ok(t) => t,
                Err(e) => {
                    problems.push(format!("{text:?}: {e}"));
                    continue;
                }
            };
            let g = gt_algebra(&t);
            let alg = &g.algebra;
            let derived = alg.derived_algebra();
            let metabelian = alg.bracket_of(&Subspace::full(m + n), &derived).is_zero();
            if !alg.validate().is_valid() || !metabelian {
                problems.push(format!("{text:?}: not a metabelian Lie algebra"));
            }
            let rank = tensor_rank(&t);
            if g.surjective != (rank == n) || g.signature != (m + n - rank, rank) {
                problems.push(format!(
                    "{text:?}: signature {:?}, oracle rank {rank}",
                    g.signature
                ));
            }
            if g.surjective {
                surjective += 1;
                if g.signature != (m, n) {
                    problems.push(format!(
                        "{text:?}: surjective with signature {:?}",
                        g.signature
                    ));
                }
            } else {
                non_surjective.push(format!("{text:?} -> {:?}", g.signature));
            }
        }
    }
    if surjective != SURJECTIVE_ROWS {
        problems.push(format!(
            "surjective rows {surjective}, pinned {SURJECTIVE_ROWS}"
        ));
    }
    Verdict::new(
        problems.is_empty(),
        format!(
            "20 tensors, {surjective} surjective (pinned {SURJECTIVE_ROWS}); non-surjective: {}{}",
            non_surjective.join(", "),
            if problems.is_empty() {
                String::new()
            } else {
                format!("; problems: {}", problems.join("; "))
            }
        ),
    )
}

fn engine_instance_ok(m: &MetricLieAlgebra, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = m.dim();
    let alg = m.algebra();
    let conn = m.levi_civita();
    for i in 0..n {
        for j in 0..n {
            let torsion = scalar::sub(
                &scalar::sub(&conn.apply_basis(i, j), &conn.apply_basis(j, i)),
                &alg.bracket_basis(i, j),
            );
            if !scalar::is_zero_vector(&torsion) {
                return Err(format!("torsion at ({i},{j})"));
            }
            for k in 0..n {
                let d = m.inner(&conn.apply_basis(i, j), &unit(n, k))
                    + m.inner(&unit(n, j), &conn.apply_basis(i, k));
                if d != int(0) {
                    return Err(format!("metric compatibility at ({i},{j},{k})"));
                }
            }
        }
    }
    // ⟨R(e_a,e_b)e_c, e_d⟩
    let lowered: Vec<Vec<Scalar>> = (0..n * n * n)
        .map(|t| {
            let (a, b, c) = (t / (n * n), t / n % n, t % n);
            let r = m
                .curvature_tensor(&conn, &unit(n, a), &unit(n, b), &unit(n, c))
                .unwrap();
            m.metric().gram().mul_vec(&r).unwrap()
        })
        .collect();
    let r = |a: usize, b: usize, c: usize, d: usize| &lowered[(a * n + b) * n + c][d];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if r(a, b, c, d) + r(b, c, a, d) + r(c, a, b, d) != int(0) {
                        return Err(format!("first Bianchi at ({a},{b},{c},{d})"));
                    }
                    if r(a, b, c, d) != r(c, d, a, b) {
                        return Err(format!("pair symmetry at ({a},{b},{c},{d})"));
                    }
                }
            }
        }
    }
    let x = sample::nonzero_vector(rng, n, 2);
    let y = sample::nonzero_vector(rng, n, 2);
    if let Ok(k) = m.sectional_with(&conn, &x, &y) {
        let (p, q) = (int(rng.gen_range(1..=3)), int(rng.gen_range(-3..=3)));
        let u = scalar::add(&scalar::scale(&p, &x), &scalar::scale(&q, &y));
        let v = scalar::add(&scalar::scale(&q, &x), &scalar::scale(&int(2), &y));
        // det = 2p − q², never zero for p ∈ 1..=3, q ∈ −3..=3 except (p, q) = (2, ±2)
        if &int(2) * &p != &q * &q && m.sectional_with(&conn, &u, &v).unwrap() != k {
            return Err("sectional curvature depends on the plane basis".into());
        }
    }
    Ok(())
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    let mut max_dim = 0;
    for idx in 0..ENGINE_INSTANCES {
        let m = sample::metric_algebra(&mut rng, ENGINE_MAX_DIM);
        max_dim = max_dim.max(m.dim());
        if let Err(e) = engine_instance_ok(&m, &mut rng) {
            failures.push(format!("instance #{idx}: {e}"));
        }
    }
    let mut non_flat = 0;
    for n in 1..=ENGINE_MAX_DIM {
        let m = MetricLieAlgebra::new(LieAlgebra::abelian(n).unwrap(), sample::spd(&mut rng, n))
            .unwrap();
        let conn = m.levi_civita();
        if (0..n).any(|i| (0..n).any(|j| !scalar::is_zero_vector(&conn.apply_basis(i, j)))) {
            non_flat += 1;
        }
    }
    let mut weyl_bad = 0;
    for _ in 0..WEYL_INSTANCES {
        let m = sample::metric_algebra(&mut rng, ENGINE_MAX_DIM);
        let e = sample::nonzero_vector(&mut rng, m.dim(), 3);
        if WeylConnection::new(&m, &e)
            .unwrap()
            .nonmetricity_defect()
            .is_some()
        {
            weyl_bad += 1;
        }
    }
    Verdict::new(
        failures.is_empty() && non_flat == 0 && weyl_bad == 0,
        format!(
            "{ENGINE_INSTANCES} instances (dim ≤ {max_dim}), {} failures{}; {non_flat} non-flat abelian; \
             {weyl_bad}/{WEYL_INSTANCES} Weyl nonmetricity defects",
            failures.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!(": {}", failures.join("; "))
            }
        ),
    )
}

fn criterion_8() -> Verdict {
    let report = catalog::verify_classification(SWEEP_TRIALS, SEED);
    let (mut fields, mut positive_fields) = (0, Vec::new());
    let mut worst: f64 = f64::NEG_INFINITY;
    // grid value from which each field stays non-positive (None: never)
    let mut late_fields = 0;
    let mut never = 0;
    for (idx, entry) in report.entries.iter().enumerate() {
        if entry.actual.is_zero() {
            continue;
        }
        let m = rebuild(entry.family, &entry.params);
        for e in entry.actual.basis() {
            fields += 1;
            let scan = stretch_scan(&m, e, &SCAN_GRID, SCAN_SAMPLES, SEED ^ idx as u64).unwrap();
            match scan.gamma0 {
                None => never += 1,
                Some(g) if g > SCAN_GRID[0] => late_fields += 1,
                Some(_) => {}
            }
            for v in &scan.verdicts {
                worst = worst.max(v.max_value);
                if v.max_value > SCAN_TOLERANCE {
                    positive_fields.push(format!(
                        "{} {} [{}] E={} γ={}: max k̂ {:.3e} ({} planes)",
                        entry.family,
                        entry.draw,
                        entry.params,
                        e.iter().map(scalar::format).collect::<Vec<_>>().join(","),
                        v.gamma,
                        v.max_value,
                        v.positive_count
                    ));
                }
            }
        }
    }
    let shown: Vec<_> = positive_fields.iter().take(5).cloned().collect();
    Verdict::new(
        positive_fields.is_empty(),
        format!(
            "{fields} fields × γ∈{SCAN_GRID:?} × {SCAN_SAMPLES} planes, max k̂ {worst:.3e}, \
             {} positive (field, γ) pairs; fields non-positive only from a later γ: {late_fields}, \
             never non-positive: {never}{}",
            positive_fields.len(),
            if shown.is_empty() {
                String::new()
            } else {
                format!(", e.g. {}", shown.join("; "))
            }
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("4D classification sweep", criterion_1),
        ("parallel and W2 on sweep solutions", criterion_2),
        ("structure verifier", criterion_3),
        ("extension constructor soundness", criterion_4),
        ("Dyer negative results", criterion_5),
        ("metabelian tensor tables", criterion_6),
        ("Riemannian engine properties", criterion_7),
        ("stretch scan sanity", criterion_8),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        if !v.passed {
            failed += 1;
        }
        println!(
            "[{}] {}. {}: {}",
            if v.passed { "PASS" } else { "FAIL" },
            idx + 1,
            name,
            v.detail
        );
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
