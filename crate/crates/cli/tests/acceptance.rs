//! Acceptance criteria 1-10, one PASS/FAIL line each.
//!
//! A criterion that cannot hold as stated (the reference data contradicts
//! itself) prints FAIL; the run still succeeds when the accompanying proof of
//! that contradiction checks out and every other part of the criterion
//! passes. Any other failure makes the run fail.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use m2codes::acode::{audit_claims, ACyclicCode, AuditScope, Verdict};
use m2codes::bachoc::{bachoc_image, bachoc_weight_enumerator, doubled_cyclic_image, plotkin_image};
use m2codes::classify::{
    asymmetric_pair_count, compare_with_reference, enumerate_selfdual, table_rows, ReferenceData, RowStatus,
};
use m2codes::factor::{factorize_xn_minus_1, selfdual_exists};
use m2codes::qcode::{is_formally_self_dual, macwilliams_transform, Engine, QCyclicCode, WeightEnumerator};
use m2codes::{AElem, MatF2, PolyF4, F4};

struct Outcome {
    pass: bool,
    detail: String,
    /// For a failing criterion: the checked reason it cannot hold as stated.
    unattainable: Option<Result<String, String>>,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome {
        pass,
        detail,
        unattainable: None,
    }
}

fn p(s: &str) -> PolyF4 {
    s.parse().unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

// 1 ---------------------------------------------------------------------

fn ring_exhaustives() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for x in AElem::all() {
        for y in AElem::all() {
            if AElem::from_matrix(x.to_matrix() * y.to_matrix()) != x * y {
                bad.push(format!("product {x} * {y}"));
            }
            if (x * y).conj() != y.conj() * x.conj() {
                bad.push(format!("conj({x} * {y})"));
            }
        }
        let det = x.to_matrix().det();
        let expect = if det == 1 { AElem::ONE } else { AElem::ZERO };
        if x * x.conj() != expect {
            bad.push(format!("{x} conj({x}) != det"));
        }
        let rule = if x.is_zero() {
            0
        } else if det == 1 {
            1
        } else {
            2
        };
        if x.bachoc_weight() != rule {
            bad.push(format!("bachoc weight of {x}"));
        }
    }
    let w = AElem::W;
    let w2 = AElem::scalar(F4::W2);
    if AElem::I * w != w2 * AElem::I {
        bad.push("i w != w^2 i".into());
    }
    if AElem::I * AElem::I != AElem::ONE {
        bad.push("i^2 != 1".into());
    }
    if AElem::U * AElem::U != AElem::ZERO {
        bad.push("u^2 != 0".into());
    }
    if MatF2::all().count() != 16 {
        bad.push("matrix model size".into());
    }
    outcome(
        bad.is_empty(),
        format!(
            "256 products, 256 conjugation pairs, 16 norms and weights; {} ({bad:?})",
            secs(t.elapsed())
        ),
    )
}

// 2 ---------------------------------------------------------------------

fn factorization() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let f5: BTreeSet<String> = factorize_xn_minus_1(5)
        .unwrap()
        .factors()
        .map(|f| f.to_string())
        .collect();
    let expect5: BTreeSet<String> = ["x+1", "x^2+w*x+1", "x^2+w^2*x+1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if f5 != expect5 {
        bad.push(format!("x^5+1 factors {f5:?}"));
    }
    let data = ReferenceData::embedded().unwrap();
    let mut missing = Vec::new();
    for n in [15, 21, 27, 31] {
        let fact = factorize_xn_minus_1(n).unwrap();
        for (label, f) in data.printed_factors(n) {
            if fact.index_of(&f).is_none() {
                missing.push((n, label, f));
            }
        }
    }
    for n in (1..=63).step_by(2) {
        let fact = factorize_xn_minus_1(n).unwrap();
        if fact.product() != PolyF4::xn_minus_1(n) {
            bad.push(format!("product at n={n}"));
        }
        for item in &fact.items {
            let partner = &fact.items[item.partner];
            let neg: BTreeSet<usize> = item.coset.members.iter().map(|&m| (n - m) % n).collect();
            let pm: BTreeSet<usize> = partner.coset.members.iter().copied().collect();
            if neg != pm || item.factor.reciprocal().unwrap() != partner.factor {
                bad.push(format!("pairing at n={n}, coset {}", item.coset.representative));
            }
        }
    }
    let elapsed = t.elapsed();
    if elapsed > Duration::from_secs(5) {
        bad.push(format!("runtime {}", secs(elapsed)));
    }
    let others_ok = bad.is_empty();
    let detail = format!(
        "x^5+1 example, n<=63 products and pairings {}; named factors not dividing x^n+1: {:?}; {}",
        if others_ok { "ok" } else { "FAILED" },
        missing
            .iter()
            .map(|(n, l, f)| format!("n={n} {l}={f}"))
            .collect::<Vec<_>>(),
        secs(elapsed)
    );
    if missing.is_empty() {
        return outcome(others_ok, detail);
    }
    // the only permitted miss is the printed n = 31 f3, which is reducible
    let f3 = p("x^5+x^2+x+1");
    let proof = if !others_ok {
        Err(format!("other parts failed: {bad:?}"))
    } else if missing.len() != 1 || missing[0].0 != 31 || missing[0].2 != f3 {
        Err("unexpected factor mismatch".into())
    } else if f3 != &p("x+1").pow(2) * &p("x^3+x+1") || f3.divides(&PolyF4::xn_minus_1(31)) {
        Err("printed f3 is not the expected reducible polynomial".into())
    } else {
        Ok("printed f3 = (x+1)^2 (x^3+x+1) does not divide x^31+1".into())
    };
    Outcome {
        pass: false,
        detail,
        unattainable: Some(proof),
    }
}

// 3 ---------------------------------------------------------------------

/// Existence by cosets of 4 computed from scratch: some coset must differ
/// from its negation.
fn coset_scan(n: usize) -> bool {
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = BTreeSet::new();
        let mut x = start;
        while coset.insert(x) {
            seen[x] = true;
            x = x * 4 % n;
        }
        let neg: BTreeSet<usize> = coset.iter().map(|&m| (n - m) % n).collect();
        if neg != coset {
            return true;
        }
    }
    false
}

fn existence() -> Outcome {
    let t = Instant::now();
    let absent: BTreeSet<usize> = (3..=31)
        .step_by(2)
        .filter(|&n| !selfdual_exists(n).unwrap().exists())
        .collect();
    let stated: BTreeSet<usize> = [5, 13, 17, 25].into();
    let scan_disagree: Vec<usize> = (1..=201)
        .step_by(2)
        .filter(|&n| selfdual_exists(n).map(|e| e.exists()).ok() != Some(coset_scan(n)))
        .collect();
    let elapsed = t.elapsed();
    let others_ok = scan_disagree.is_empty() && elapsed < Duration::from_secs(5);
    let detail = format!(
        "nonexistence in 3..31 at {absent:?} (stated {stated:?}); coset-scan disagreements for odd n<=201: {scan_disagree:?}; {}",
        secs(elapsed)
    );
    if absent == stated {
        return outcome(others_ok, detail);
    }
    let data = ReferenceData::embedded().unwrap();
    let extra: Vec<usize> = absent.symmetric_difference(&stated).copied().collect();
    let proof = if !others_ok {
        Err("coset scan or runtime failed".into())
    } else if extra != [29] {
        Err(format!("unexpected difference {extra:?}"))
    } else {
        let g = data.generator(29).unwrap();
        let pow = (0..7).fold(1u64, |a, _| a * 4 % 29);
        let is_factor = factorize_xn_minus_1(29).unwrap().index_of(&g.f).is_some();
        if pow == 28 && g.f.is_self_reciprocal() && is_factor {
            Ok("4^7 = -1 (mod 29), and the printed n=29 generator is a self-reciprocal factor, so g = f* is impossible".into())
        } else {
            Err("n=29 analysis does not hold".into())
        }
    };
    Outcome {
        pass: false,
        detail,
        unattainable: Some(proof),
    }
}

// 4 ---------------------------------------------------------------------

fn exhaustive_triple_count(n: usize) -> usize {
    let fact = factorize_xn_minus_1(n).unwrap();
    let recip = |q: &PolyF4| {
        let mut c = q.coeffs().to_vec();
        c.reverse();
        let inv = c.last().unwrap().inv().unwrap();
        PolyF4::from_coeffs(c.into_iter().map(|x| x * inv).collect())
    };
    let mut count = 0;
    for idx in 0..3usize.pow(fact.items.len() as u32) {
        let (mut f, mut g, mut h) = (PolyF4::one(), PolyF4::one(), PolyF4::one());
        let mut k = idx;
        for item in &fact.items {
            match k % 3 {
                0 => f = &f * &item.factor,
                1 => g = &g * &item.factor,
                _ => h = &h * &item.factor,
            }
            k /= 3;
        }
        if !(f.is_one() && g.is_one()) && recip(&h) == h && recip(&f) == g {
            count += 1;
        }
    }
    count
}

fn classification_counts() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (n, total, classes) in [
        (3, 2, 1),
        (7, 2, 1),
        (11, 2, 1),
        (15, 26, 13),
        (27, 26, 13),
        (31, 26, 13),
    ] {
        let all = enumerate_selfdual(n, false).unwrap().len();
        let reps = enumerate_selfdual(n, true).unwrap().len();
        let t_pairs = asymmetric_pair_count(n).unwrap();
        if all != total || reps != classes || all != 3usize.pow(t_pairs as u32) - 1 {
            bad.push(format!("n={n}: {all} ({reps})"));
        }
    }
    for n in (3..=21).step_by(2) {
        let t_pairs = asymmetric_pair_count(n).unwrap();
        let brute = exhaustive_triple_count(n);
        if brute != 3usize.pow(t_pairs as u32) - 1 || brute != enumerate_selfdual(n, false).unwrap().len() {
            bad.push(format!("exhaustive n={n}: {brute}"));
        }
    }
    let data = ReferenceData::embedded().unwrap();
    let c21 = enumerate_selfdual(21, true).unwrap();
    let mut rows = table_rows(&c21, None);
    let cmp = compare_with_reference(&data, 21, &c21, &mut rows).unwrap();
    if c21.len() != 40 || cmp.extra_classes.len() != 19 || cmp.count(RowStatus::RowAbsent) != 0 {
        bad.push(format!(
            "n=21: {} classes, {} flagged",
            c21.len(),
            cmp.extra_classes.len()
        ));
    }
    let elapsed = t.elapsed();
    if elapsed > Duration::from_secs(30) {
        bad.push(format!("runtime {}", secs(elapsed)));
    }
    outcome(
        bad.is_empty(),
        format!(
            "3^t-1 counts, exhaustive filter n<=21, n=21: {} classes with {} flagged absent; {} {bad:?}",
            c21.len(),
            cmp.extra_classes.len(),
            secs(elapsed)
        ),
    )
}

// 5 ---------------------------------------------------------------------

fn distance_tables() -> Outcome {
    let data = ReferenceData::embedded().unwrap();
    let mut bad = Vec::new();
    let mut corrected = 0;
    let mut matched = 0;
    let mut check = |n: usize, cap: u32, bad: &mut Vec<String>| {
        let classes = enumerate_selfdual(n, true).unwrap();
        let mut rows = table_rows(&classes, Some(&Engine::new(cap)));
        let cmp = compare_with_reference(&data, n, &classes, &mut rows).unwrap();
        for r in &cmp.rows {
            match r.status {
                RowStatus::Match => matched += 1,
                RowStatus::Corrected => corrected += 1,
                s => bad.push(format!(
                    "n={n} h={} f={}: {s:?} printed {:?} computed {:?}",
                    r.row.h_label, r.row.f_label, r.row.printed, r.computed
                )),
            }
        }
    };
    let t = Instant::now();
    for n in [3, 7, 11, 15, 21, 27] {
        check(n, 14, &mut bad);
    }
    let fast = t.elapsed();
    if fast > Duration::from_secs(600) {
        bad.push(format!("E=14 tables took {}", secs(fast)));
    }
    let t = Instant::now();
    check(31, 16, &mut bad);
    let slow = t.elapsed();
    if slow > Duration::from_secs(3600) {
        bad.push(format!("n=31 took {}", secs(slow)));
    }
    // n = 29 has no nontrivial self-dual class, hence no rows (see criterion 3)
    let c29 = enumerate_selfdual(29, true).unwrap().len();
    outcome(
        bad.is_empty(),
        format!(
            "{matched} rows match, {corrected} match recorded corrections (n=31), n=29: {c29} classes; \
             n<=27 {} (E=14), n=31 {} (E=16); unexplained: {bad:?}",
            secs(fast),
            secs(slow)
        ),
    )
}

// 6, 7 ------------------------------------------------------------------

struct ImageRun {
    identities: Outcome,
    fsd: Outcome,
}

fn bachoc_identities() -> ImageRun {
    let engine = Engine::new(16);
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut not_fsd = Vec::new();
    let mut checked = 0;
    let mut fsd_checked = 0;
    let sets = [(3, false), (7, false), (9, false), (11, false), (15, true)];
    for (n, reps) in sets {
        for c in enumerate_selfdual(n, reps).unwrap() {
            let code = &c.code;
            let img = bachoc_image(code);
            if img != plotkin_image(code).unwrap() {
                bad.push(format!("half-swap {code}"));
            }
            let we = engine.weight_enumerator(&img).unwrap();
            if bachoc_weight_enumerator(code, &engine).unwrap().substitution() != we {
                bad.push(format!("substitution {code}"));
            }
            if engine
                .weight_enumerator(&doubled_cyclic_image(code).to_linear())
                .unwrap()
                != we
            {
                bad.push(format!("doubled {code}"));
            }
            checked += 1;
            fsd_checked += 1;
            if !is_formally_self_dual(&we).unwrap() {
                not_fsd.push(code.to_string());
            }
        }
    }
    let elapsed = t.elapsed();
    if elapsed > Duration::from_secs(120) {
        bad.push(format!("runtime {}", secs(elapsed)));
    }
    ImageRun {
        identities: outcome(
            bad.is_empty(),
            format!(
                "{checked} codes (all triples for n<=11, the 13 reversal classes for n=15); {} {bad:?}",
                secs(elapsed)
            ),
        ),
        fsd: outcome(
            not_fsd.is_empty(),
            format!("{fsd_checked} images are MacWilliams fixed points (n<=11 and n=15); failures {not_fsd:?}"),
        ),
    }
}

// 8 ---------------------------------------------------------------------

fn words(n: usize) -> impl Iterator<Item = Vec<F4>> {
    (0..4usize.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let c = F4::from_bits((k % 4) as u8);
                k /= 4;
                c
            })
            .collect()
    })
}

fn scan(n: usize, keep: impl Fn(&[F4]) -> bool) -> WeightEnumerator {
    let mut counts = vec![0u64; n + 1];
    for v in words(n) {
        if keep(&v) {
            counts[v.iter().filter(|c| !c.is_zero()).count()] += 1;
        }
    }
    WeightEnumerator::from_u64(n, &counts).unwrap()
}

fn macwilliams_correctness() -> Outcome {
    let engine = Engine::new(14);
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in [3, 5, 7] {
        let target = PolyF4::xn_minus_1(n);
        for d in 0..=n {
            for mut low in words(d) {
                low.push(F4::ONE);
                let g = PolyF4::from_coeffs(low);
                if !g.divides(&target) {
                    continue;
                }
                let code = QCyclicCode::new(n, &g).unwrap();
                let rows = code.generator_rows();
                let we = engine.weight_enumerator(&code.to_linear()).unwrap();
                let dual = scan(n, |v| {
                    rows.iter()
                        .all(|r| r.iter().zip(v).fold(F4::ZERO, |s, (&a, &b)| s + a * b).is_zero())
                });
                if macwilliams_transform(&we, &we.cardinality()).unwrap() != dual {
                    bad.push(format!("n={n} g={g}"));
                }
                checked += 1;
            }
        }
    }
    outcome(
        bad.is_empty() && checked == 24,
        format!("{checked} divisor codes; failures {bad:?}"),
    )
}

// 9 ---------------------------------------------------------------------

fn audits() -> Outcome {
    let mut codes = vec![ACyclicCode::trivial(1).unwrap()];
    for n in [3, 7] {
        codes.extend(enumerate_selfdual(n, false).unwrap().into_iter().map(|c| c.code));
    }
    let mut bad = Vec::new();
    let mut lines = Vec::new();
    for code in &codes {
        let r = match audit_claims(code, AuditScope::Full) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{code}: {e}"));
                continue;
            }
        };
        if !r.failures_have_witnesses() {
            bad.push(format!("{code}: FAIL without counterexample"));
        }
        let v = |id: &str| match r.claim(id).map(|c| c.verdict) {
            Some(Verdict::Pass) => "PASS",
            Some(Verdict::Fail) => "FAIL",
            Some(Verdict::Skip) => "SKIP",
            None => "MISSING",
        };
        let ids = [
            "euclidean-self-orthogonal",
            "not-hermitian-self-dual[code-left]",
            "predicted-dual[code-left]",
            "predicted-dual[code-right]",
        ];
        if ids.iter().any(|id| v(id) == "MISSING") {
            bad.push(format!("{code}: missing claim"));
        }
        lines.push(format!(
            "n={}: self-orth {}, not-Hermitian-self-dual {}, predicted dual L/R {}/{}",
            code.length(),
            v(ids[0]),
            v(ids[1]),
            v(ids[2]),
            v(ids[3])
        ));
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} audits, every FAIL carries a counterexample; {} {bad:?}",
            codes.len(),
            lines.join("; ")
        ),
    )
}

// 10 --------------------------------------------------------------------

fn classify_json(partitions: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_m2codes"))
        .args(["classify", "--n", "15", "--distances", "--json"])
        .env("M2CODES_PARTITIONS", partitions)
        .output()
        .expect("run m2codes");
    assert!(
        out.status.success(),
        "classify failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn determinism_and_throughput() -> Outcome {
    let a = classify_json("1");
    let b = classify_json("1");
    let c = classify_json("8");
    let identical = a == b && a == c && !a.is_empty();
    // n = 31, generator (x+1) times three quintics: dimension 15
    let gen = &(&(&p("x+1") * &p("x^5+x^2+1")) * &p("x^5+x^3+x^2+x+1")) * &p("x^5+x^4+x^2+x+1");
    let code = QCyclicCode::new(31, &gen).unwrap().to_linear();
    let engine = Engine::new(16);
    let t = Instant::now();
    let we = engine.weight_enumerator_direct(&code).unwrap();
    let elapsed = t.elapsed().as_secs_f64();
    // words actually visited: one per projective class
    let visited = (4f64.powi(code.dim() as i32) - 1.0) / 3.0;
    let rate = visited / elapsed;
    outcome(
        identical && rate >= 1e7 && we.min_distance() == Some(8),
        format!(
            "JSON byte-identical across runs and partitions 1/8: {identical}; n=31 [31,{}] enumeration {:.3e} words/s",
            code.dim(),
            rate
        ),
    )
}

fn main() {
    let mut results: Vec<(u32, &str, Outcome)> = vec![(1, "ring exhaustives", ring_exhaustives())];
    results.push((2, "factorization", factorization()));
    results.push((3, "existence predicate", existence()));
    results.push((4, "classification counts", classification_counts()));
    results.push((5, "distance tables", distance_tables()));
    let images = bachoc_identities();
    results.push((6, "Bachoc identities", images.identities));
    results.push((7, "formal self-duality", images.fsd));
    results.push((8, "MacWilliams correctness", macwilliams_correctness()));
    results.push((9, "non-commutative audits", audits()));
    results.push((10, "determinism/performance", determinism_and_throughput()));
    results.sort_by_key(|r| r.0);

    let mut ok = true;
    for (k, name, o) in &results {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {k:>2} {verdict} {name}: {}", o.detail);
        if !o.pass {
            match &o.unattainable {
                Some(Ok(why)) => println!("             unattainable as stated (verified): {why}"),
                Some(Err(why)) => {
                    println!("             unattainability proof failed: {why}");
                    ok = false;
                }
                None => ok = false,
            }
        }
    }
    if !ok {
        std::process::exit(1);
    }
}
