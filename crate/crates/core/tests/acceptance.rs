//! The eight acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion does.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperjac::brumer::SexticCurve;
use hyperjac::cartier::{
    cartier_manin, char3_brumer_obstruction, char3_criterion, closed_form_case, hasse_witt_coefficients,
    product_verdict, Verdict,
};
use hyperjac::ffield::{CharP, ExactDivision, FiniteField, PolyRing, PrimeField, Ring};
use hyperjac::galois::CertVerdict;
use hyperjac::harness::{
    fixture_polys, load_fixtures, reproduce_rows, scan, GridSpec, ScanHit, ScanJob, TableOptions,
    TABLE1_RESIDUAL,
};
use hyperjac::quadorder::{sweep_mod8_criterion, SplittingType};
use hyperjac::repmod;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn red_flag(hit: &ScanHit) -> bool {
    hit.verdict == Some(Verdict::Supersingular)
        && hit.splitting == Some(SplittingType::Split)
        && hit.certificate.as_ref().is_some_and(|c| c.verdict == CertVerdict::CertifiedA5)
}

fn criterion_1() -> Outcome {
    let rows = load_fixtures().unwrap();
    let opts = TableOptions::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for (table, expected_rows) in [(2u8, 10usize), (3, 22), (4, 24), (5, 12), (6, 8)] {
        let rep = reproduce_rows(&rows, table, &opts).unwrap();
        let good = rep.rows.iter().filter(|r| r.passed).count();
        let class_ok = rep.rows.iter().all(|r| {
            r.class == Some(if table == 4 { Verdict::Supersingular } else { Verdict::NotSupersingular })
        });
        for r in rep.rows.iter().filter(|r| !r.passed) {
            println!("  table {table} row {}: {:?}", r.row, r);
        }
        ok &= rep.passed && class_ok && rep.rows.len() == expected_rows;
        parts.push(format!("T{table} {good}/{}", rep.rows.len()));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_2() -> Outcome {
    let rows = load_fixtures().unwrap();
    let rep = reproduce_rows(&rows, 1, &TableOptions::default()).unwrap();
    let n = rep.rows.len();
    let rebuilt = rep.rows.iter().filter(|r| r.poly_match).count();
    let squares = rep.rows.iter().filter(|r| r.disc_square == Some(true)).count();
    let certified = rep
        .rows
        .iter()
        .filter(|r| {
            r.certificate.as_ref().is_some_and(|c| {
                c.verdict == CertVerdict::CertifiedA5 && c.samples == 200 && c.residual < TABLE1_RESIDUAL
            })
        })
        .count();
    let gcd = rep.gcd.as_ref().unwrap();
    let ok = n >= 80
        && rebuilt == n
        && squares == n
        && certified == n
        && gcd.non_coprime.is_empty()
        && gcd.self_pairs_not_coprime
        && rep.passed;
    outcome(
        ok,
        format!(
            "{n} rows, rebuilt {rebuilt}, square disc {squares}, certified {certified}, \
             {} gcd pairs with {} non-coprime",
            gcd.pairs_checked,
            gcd.non_coprime.len()
        ),
    )
}

/// Compares the closed-form case test with `M M^(p) = 0` on random
/// separable monic sextics; returns (checked, supersingular, discrepancies).
fn compare_cases<R: CharP + ExactDivision>(
    base: &R,
    p: u64,
    n: usize,
    rng: &mut ChaCha8Rng,
    mut coeff: impl FnMut(&mut ChaCha8Rng) -> R::Elem,
) -> (usize, usize, usize) {
    let (mut checked, mut ss, mut bad) = (0, 0, 0);
    while checked < n {
        let a: Vec<R::Elem> = (0..6).map(|_| coeff(rng)).collect();
        let curve = SexticCurve::from_coeffs(base.clone(), a, true).unwrap();
        if !curve.is_separable() {
            continue;
        }
        checked += 1;
        let c = hasse_witt_coefficients(&curve, p);
        let (_, _, _, v) = product_verdict(base, &c);
        if closed_form_case(base, &c).verdict() != v {
            bad += 1;
        }
        ss += (v == Verdict::Supersingular) as usize;
    }
    (checked, ss, bad)
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut parts = Vec::new();
    let mut total_bad = 0;
    for p in [3u64, 5, 7] {
        let f = PrimeField::new(p).unwrap();
        let (n, ss, bad) = compare_cases(&f, p, 10_000, &mut rng, |r| f.random_element(r));
        total_bad += bad;
        parts.push(format!("F{p}: {n} curves, {ss} ss, {bad} bad"));
    }
    for p in [3u64, 5] {
        let f = PrimeField::new(p).unwrap();
        let ring = PolyRing::new(f, "T");
        let (n, ss, bad) = compare_cases(&ring, p, 1_000, &mut rng, |r| {
            let deg = r.gen_range(0..=2);
            ring.from_coeffs((0..=deg).map(|_| f.random_element(r)).collect())
        });
        total_bad += bad;
        parts.push(format!("F{p}(T): {n} curves, {ss} ss, {bad} bad"));
    }
    outcome(total_bad == 0, parts.join("; "))
}

fn criterion_4() -> Outcome {
    let f = PrimeField::new(3).unwrap();
    let mut separable = 0;
    let mut disagreements = 0;
    let mut nonseparable = 0;
    let mut derivative_zero = BTreeSet::new();
    let mut case1_singular = BTreeSet::new();
    for idx in 0..729u64 {
        let a: Vec<u64> = (0..6).map(|i| (idx / 3u64.pow(i)) % 3).collect();
        let curve = SexticCurve::from_coeffs(f, a.clone(), true).unwrap();
        let ring = curve.ring();
        if ring.is_zero(&ring.derivative(curve.poly())) {
            derivative_zero.insert(a.clone());
        }
        if !curve.is_separable() {
            nonseparable += 1;
            if a[2] == 0 && a[4] == 0 && a[5] == 0 {
                case1_singular.insert(a.clone());
            }
            assert!(char3_criterion(&curve).is_err());
            continue;
        }
        separable += 1;
        let direct = cartier_manin(&curve, 3).map(|c| c.verdict);
        let fast = char3_criterion(&curve);
        if direct.is_err() || fast.is_err() || direct.unwrap() != fast.unwrap() {
            disagreements += 1;
        }
    }
    // f' = 2 a5 x^4 + a4 x^3 + 2 a2 x + a1 in characteristic 3
    let expected: BTreeSet<Vec<u64>> = (0..729u64)
        .map(|idx| (0..6).map(|i| (idx / 3u64.pow(i)) % 3).collect::<Vec<u64>>())
        .filter(|a| a[1] == 0 && a[2] == 0 && a[4] == 0 && a[5] == 0)
        .collect();
    let derivative_ok = derivative_zero == expected;
    // inside the a2 = a4 = a5 = 0 family, singular exactly when a1 = 0
    let case1_ok = case1_singular == expected;
    let all_singular = expected.iter().all(|a| {
        !SexticCurve::from_coeffs(f, a.clone(), true).unwrap().is_separable()
    });
    outcome(
        disagreements == 0 && derivative_ok && case1_ok && all_singular && separable + nonseparable == 729,
        format!(
            "{separable} separable, {disagreements} disagreements; f' = 0 on {} tuples \
             (a1=a2=a4=a5=0: {derivative_ok}), all singular: {all_singular}; \
             singular members of the a2=a4=a5=0 family are exactly a1=0: {case1_ok}; \
             {nonseparable} tuples have disc 0 in total",
            derivative_zero.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let (_, s3) = char3_brumer_obstruction(3).unwrap();
    let (f9, s9) = char3_brumer_obstruction(9).unwrap();
    let s = f9.generator();
    let minus_one = f9.from_i64(-1);
    let s_ok = f9.mul(&s, &s) == minus_one;
    let expected: BTreeSet<Vec<u64>> = [f9.add(&minus_one, &s), f9.sub(&minus_one, &s)].into();
    let got: BTreeSet<Vec<u64>> = s9.iter().cloned().collect();
    let rendered: Vec<String> = s9.iter().map(|e| f9.render(e)).collect();
    outcome(
        s3.is_empty() && s_ok && got == expected && s9.len() == 2,
        format!("F3: {} solutions; F9: {:?} (s^2 = -1: {s_ok})", s3.len(), rendered),
    )
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let r = repmod::verify(200, 1).unwrap();
    let secs = t.elapsed().as_secs_f64();
    let census_expected = [("1^6", 1), ("2^2 1^2", 15), ("3^2", 20), ("5 1", 24)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    let dims: BTreeSet<usize> = r.census.by_class.keys().map(|c| c.dim()).collect();
    let ok = r.passed
        && r.group_order == 60
        && r.cycle_types == census_expected
        && r.simple_over_f2
        && r.commutant_dim_f2 == 2
        && r.omega_squared_is_omega_plus_one
        && !r.simple_over_f4
        && r.commutant_f4_splits
        && dims == [1, 2, 8, 16].into()
        && r.census.by_class.values().sum::<usize>() == 65536
        && secs < 10.0;
    outcome(
        ok,
        format!(
            "order {}, census {:?}, algebra dims {:?}, {} join checks, {secs:.1}s",
            r.group_order, r.cycle_types, dims, r.census.join_pairs_checked
        ),
    )
}

fn criterion_7() -> Outcome {
    let (bad, n) = sweep_mod8_criterion(200, 20);
    outcome(bad.is_empty() && n > 0, format!("{n} (d, c) pairs, {} exceptions", bad.len()))
}

/// Seeded subsample of the `F_11(T)` linear grid.
const P11_SAMPLE: usize = 20_000;

fn criterion_8() -> Outcome {
    let mut job11 = ScanJob::new(11, GridSpec::Linear);
    job11.sample = Some(P11_SAMPLE);
    let (hits11, s11) = scan(&job11).unwrap();
    let ss_cert_11 = hits11
        .iter()
        .filter(|h| {
            h.verdict == Some(Verdict::Supersingular)
                && h.certificate.as_ref().is_some_and(|c| c.verdict == CertVerdict::CertifiedA5)
        })
        .count();

    let mut job5 = ScanJob::new(5, GridSpec::Linear);
    job5.only_supersingular = true;
    let (hits5, s5) = scan(&job5).unwrap();
    let found: BTreeSet<String> = hits5.iter().map(|h| h.poly.clone()).collect();
    let table4 = fixture_polys(&load_fixtures().unwrap(), 4).unwrap();
    let missing = table4.difference(&found).count();

    let flags = hits11.iter().chain(&hits5).filter(|h| red_flag(h)).count() + s11.red_flags + s5.red_flags;
    let ok = ss_cert_11 == 0
        && s11.errors == 0
        && s5.supersingular >= 24
        && missing == 0
        && flags == 0;
    outcome(
        ok,
        format!(
            "F11(T): {} of {} grid triples, {} supersingular, {ss_cert_11} supersingular+A5; \
             F5(T): {} triples, {} supersingular ({} with A5 certificate), Table 4 missing {missing}; \
             red flags {flags}",
            s11.triples,
            11usize.pow(6),
            s11.supersingular,
            s5.triples,
            s5.supersingular,
            s5.supersingular_certified
        ),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table reproduction, Tables 2-6", criterion_1),
        ("Table 1", criterion_2),
        ("closed-form case equivalence", criterion_3),
        ("characteristic 3 exhaustion", criterion_4),
        ("F9 obstruction", criterion_5),
        ("representation suite", criterion_6),
        ("mod 8 sweep", criterion_7),
        ("split-prime consistency scan", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        // written to the handle directly so the line survives output capture
        let line = format!("criterion {}: {status} {name} ({:.1}s): {}\n", i + 1, t.elapsed().as_secs_f64(), o.detail);
        std::io::stdout().write_all(line.as_bytes()).unwrap();
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
