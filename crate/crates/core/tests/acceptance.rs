//! Acceptance suite: each test prints one PASS/FAIL line for its criterion.
//! Run with `cargo test -p floercover --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use floercover::{
    builtin, emit_report, hf_table, is_zrz_lspace_surgery, lspace_knot_profile, obstruct_all,
    phi, phi_bounds, phi_bruteforce, phi_window_sum, run_survey, unknot, verify_trefoil_family,
    CheckKind, CoverQuery, ReportFormat, ReportHeader, ResolvedJob, Sign, SlopeRange, Status,
    SurgerySlope,
};

fn report(number: u32, name: &str, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {number} {name}: {verdict}");
    if !failures.is_empty() {
        for f in failures.iter().take(5) {
            println!("  {f}");
        }
        panic!(
            "acceptance criterion {number} ({name}) failed with {} counterexample(s)",
            failures.len()
        );
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All reduced slopes with 1 <= p <= p_max, 1 <= q <= q_max.
fn positive_slopes(p_max: i64, q_max: i64) -> Vec<SurgerySlope> {
    let mut out = Vec::new();
    for p in 1..=p_max {
        for q in 1..=q_max {
            if gcd(p as u64, q as u64) == 1 {
                out.push(SurgerySlope::new(p, q).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_1_phi_oracle_equivalence() {
    let start = Instant::now();
    let slopes: Vec<SurgerySlope> = (1..=20i64)
        .flat_map(|p| [p, -p])
        .flat_map(|p| (1..=20i64).map(move |q| (p, q)))
        .filter(|(p, q)| gcd(p.unsigned_abs(), *q as u64) == 1)
        .map(|(p, q)| SurgerySlope::new(p, q).unwrap())
        .collect();
    let failures: Vec<String> = slopes
        .par_iter()
        .flat_map_iter(|&slope| {
            let mut local = Vec::new();
            for i in -40..=40i64 {
                for s in -40..=40i64 {
                    let closed = phi(slope, i, s);
                    let brute = phi_bruteforce(slope, i, s);
                    if closed != brute {
                        local.push(format!(
                            "phi({slope}, {i}, {s}) = {closed} but oracle says {brute}"
                        ));
                    }
                }
            }
            local
        })
        .collect();
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "oracle sweep took {elapsed:?}, budget is 10 s"
    );
    report(1, "phi closed form equals brute-force oracle", &failures);
}

#[test]
fn criterion_2_phi_bounds_hold_on_grid() {
    let failures: Vec<String> = (1..=20i64)
        .flat_map(|p| [p, -p])
        .flat_map(|p| (1..=20i64).map(move |q| (p, q)))
        .filter(|(p, q)| gcd(p.unsigned_abs(), *q as u64) == 1)
        .par_bridge()
        .flat_map_iter(|(p, q)| {
            let slope = SurgerySlope::new(p, q).unwrap();
            let (lo, hi) = phi_bounds(slope);
            let mut local = Vec::new();
            for i in -40..=40i64 {
                for s in -40..=40i64 {
                    let v = phi(slope, i, s);
                    if v < lo || v > hi {
                        local.push(format!("phi({slope}, {i}, {s}) = {v} outside [{lo}, {hi}]"));
                    }
                }
            }
            local
        })
        .collect();
    report(2, "phi lies within floor/ceil of |q/p|", &failures);
}

#[test]
fn criterion_3_branch_overlap_identity() {
    let mut failures = Vec::new();
    for g in 1..=5u32 {
        let profile = lspace_knot_profile(&format!("genus-{g}"), g).unwrap();
        for q in 1..=10i64 {
            let p = (2 * i64::from(g) - 1) * q;
            let slope = SurgerySlope::new(p, q).unwrap();
            for i in 0..p {
                // S = 0 for these profiles, so the two positive branches are
                // 1 and -1 + 2*Phi; they agree iff Phi = 1.
                let edge = i64::from(g) - 1;
                let window = phi_window_sum(slope, i, -edge, edge).unwrap();
                let first_branch = 1i128;
                let second_branch = -1i128 + 2 * i128::from(window);
                if first_branch != second_branch {
                    failures.push(format!(
                        "g={g} q={q} i={i}: branch values {first_branch} vs {second_branch}"
                    ));
                }
                let dim = floercover::hf_dim(&profile, slope, i).unwrap();
                if i128::from(dim) != first_branch {
                    failures.push(format!(
                        "g={g} q={q} i={i}: hf_dim = {dim}, branch value {first_branch}"
                    ));
                }
            }
        }
    }
    report(3, "surgery-formula branches agree at p = (2nu-1)q", &failures);
}

#[test]
fn criterion_4_lspace_threshold() {
    let failures: Vec<String> = (1..=5u32)
        .into_par_iter()
        .flat_map_iter(|g| {
            let profile = lspace_knot_profile(&format!("genus-{g}"), g).unwrap();
            let threshold = 2 * i64::from(g) - 1;
            let mut local = Vec::new();
            for p in 1..=60i64 {
                for q in 1..=12i64 {
                    if gcd(p as u64, q as u64) != 1 {
                        continue;
                    }
                    let slope = SurgerySlope::new(p, q).unwrap();
                    let expected = p >= threshold * q;
                    let got = is_zrz_lspace_surgery(&profile, slope).unwrap();
                    if got != expected {
                        local.push(format!(
                            "g={g} slope {slope}: L-space = {got}, threshold predicts {expected}"
                        ));
                    }
                }
            }
            local
        })
        .collect();
    report(4, "L-space exactly when p/q >= 2g-1", &failures);
}

#[test]
fn criterion_5_lens_space_spot_values() {
    let mut failures = Vec::new();
    let trefoil = builtin("T(2,3)").unwrap();

    let table = hf_table(&trefoil, SurgerySlope::new(7, 1).unwrap()).unwrap();
    if table.dims() != [1u64; 7] || table.total() != 7 || !table.is_lspace() {
        failures.push(format!(
            "7/1 table: dims {:?} total {} lspace {}",
            table.dims(),
            table.total(),
            table.is_lspace()
        ));
    }
    let d = floercover::hf_dim(&trefoil, SurgerySlope::new(-1, 1).unwrap(), 0).unwrap();
    if d != 3 {
        failures.push(format!("hf_dim(T(2,3), -1/1, 0) = {d}, expected 3"));
    }
    let d = floercover::hf_dim(&trefoil, SurgerySlope::new(1, 2).unwrap(), 0).unwrap();
    if d != 3 {
        failures.push(format!("hf_dim(T(2,3), 1/2, 0) = {d}, expected 3"));
    }
    report(5, "lens-space and small-surgery spot dimensions", &failures);
}

#[test]
fn criterion_6_same_knot_soundness() {
    let start = Instant::now();
    let trefoil = builtin("T(2,3)").unwrap();
    let slopes = positive_slopes(12, 12);

    // Extremal dimensions per slope, ((max, min) positive, (max, min)
    // negative), computed once.
    type Extremes = BTreeMap<(i64, i64), ((u64, u64), (u64, u64))>;
    let extremes: Extremes = slopes
        .par_iter()
        .map(|&slope| {
            let pos = hf_table(&trefoil, slope).unwrap();
            let neg = hf_table(&trefoil, slope.negated().unwrap()).unwrap();
            (
                (slope.p(), slope.q()),
                ((pos.max_dim(), pos.min_dim()), (neg.max_dim(), neg.min_dim())),
            )
        })
        .collect();

    let mut failures = Vec::new();
    let mut hypothesis_count = 0u64;
    for &cover in &slopes {
        for &base in &slopes {
            let hypotheses = cover.p() <= cover.q()
                && (cover.q() + cover.p() - 1) / cover.p() < base.q() / base.p();
            if !hypotheses {
                continue;
            }
            hypothesis_count += 1;
            let (pos_cover, neg_cover) = extremes[&(cover.p(), cover.q())];
            let (pos_base, neg_base) = extremes[&(base.p(), base.q())];
            if pos_cover.0 >= pos_base.1 {
                failures.push(format!(
                    "positive {cover} -> {base}: max {} !< min {}",
                    pos_cover.0, pos_base.1
                ));
            }
            if neg_cover.0 >= neg_base.1 {
                failures.push(format!(
                    "negative -{cover} -> -{base}: max {} !< min {}",
                    neg_cover.0, neg_base.1
                ));
            }
        }
    }
    assert!(hypothesis_count > 0, "grid must exercise the hypotheses");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "same-knot sweep took {elapsed:?}, budget is 30 s"
    );
    report(
        6,
        "same-knot hypotheses imply the computed dimension gap",
        &failures,
    );
}

#[test]
fn criterion_7_lspace_knot_soundness() {
    let trefoil = builtin("T(2,3)").unwrap();
    let pretzel = builtin("P(-2,3,7)").unwrap();
    let slopes = positive_slopes(10, 10);
    let profiles = [&trefoil, &pretzel];

    let mut failures = Vec::new();
    let mut hypothesis_count = 0u64;
    for cover_profile in profiles {
        for base_profile in profiles {
            let g = 2 * u64::from(cover_profile.genus) - 1;
            let g2 = 2 * u64::from(base_profile.genus) - 1;
            for &cover in &slopes {
                for &base in &slopes {
                    let ceil = (cover.q() as u64).div_ceil(cover.p() as u64);
                    let floor = base.q() as u64 / base.p() as u64;
                    if g * ceil >= g2 * floor {
                        continue;
                    }
                    hypothesis_count += 1;
                    let query = CoverQuery::new(
                        cover_profile.clone(),
                        cover,
                        base_profile.clone(),
                        base,
                    );
                    let gap = floercover::obstruct_by_dimension_gap(&query).unwrap();
                    let lspace = floercover::obstruct_lspace_cover(&query).unwrap();
                    // Below the L-space threshold the computed gap must fire;
                    // at or above it, the descent contradiction must.
                    let cover_below_threshold =
                        cover.p() < (g as i64) * cover.q();
                    if cover_below_threshold && !gap.is_obstructed() {
                        failures.push(format!(
                            "{} {cover} -> {} {base}: gap did not fire below threshold",
                            cover_profile.name, base_profile.name
                        ));
                    }
                    if !cover_below_threshold && !lspace.is_obstructed() {
                        failures.push(format!(
                            "{} {cover} -> {} {base}: L-space test did not fire at threshold",
                            cover_profile.name, base_profile.name
                        ));
                    }
                }
            }
        }
    }
    assert!(hypothesis_count > 0, "grid must exercise the hypotheses");
    report(
        7,
        "genus hypotheses imply dimension gap or L-space contradiction",
        &failures,
    );
}

#[test]
fn criterion_8_known_covers_never_obstructed() {
    let mut failures = Vec::new();

    // Unknot family: S^3 = 1/q-surgery covers every lens space p'/q'-surgery.
    let u = unknot();
    for q in 1..=12i64 {
        let cover = SurgerySlope::new(1, q).unwrap();
        for p2 in 1..=12i64 {
            for q2 in 1..=12i64 {
                if gcd(p2 as u64, q2 as u64) != 1 {
                    continue;
                }
                let base = SurgerySlope::new(p2, q2).unwrap();
                let verdict =
                    obstruct_all(&CoverQuery::new(u.clone(), cover, u.clone(), base)).unwrap();
                if verdict.is_obstructed() {
                    failures.push(format!("unknot {cover} -> {base} obstructed"));
                }
            }
        }
    }

    // Trefoil lens family: arithmetic checks (a)-(c), both surgeries are
    // L-spaces, and no test fires on the pair.
    let trefoil = builtin("T(2,3)").unwrap();
    let family_failures: Vec<String> = (1..=50u64)
        .into_par_iter()
        .flat_map_iter(|q| {
            let trefoil = trefoil.clone();
            let mut local = Vec::new();
            for k in 1..=10u64 {
                for sign in [Sign::Plus, Sign::Minus] {
                    let record = verify_trefoil_family(q, k, sign).unwrap();
                    if !record.arithmetic_ok() {
                        local.push(format!(
                            "family q={q} k={k} sign={sign}: checks (a)-(c) = ({}, {}, {})",
                            record.product_identity, record.moser_applies, record.cover_matches
                        ));
                        continue;
                    }
                    let cover =
                        SurgerySlope::new(record.p as i64, record.q as i64).unwrap();
                    let base =
                        SurgerySlope::new(record.p_prime as i64, record.q_prime as i64).unwrap();
                    let cover_ls = is_zrz_lspace_surgery(&trefoil, cover).unwrap();
                    let base_ls = is_zrz_lspace_surgery(&trefoil, base).unwrap();
                    if !cover_ls || !base_ls {
                        local.push(format!(
                            "family q={q} k={k} sign={sign}: L-space flags ({cover_ls}, {base_ls})"
                        ));
                    }
                    let verdict = obstruct_all(&CoverQuery::new(
                        trefoil.clone(),
                        cover,
                        trefoil.clone(),
                        base,
                    ))
                    .unwrap();
                    if verdict.is_obstructed() {
                        local.push(format!("family q={q} k={k} sign={sign}: obstructed"));
                    }
                }
            }
            local
        })
        .collect();
    failures.extend(family_failures);

    report(8, "known cover families are never obstructed", &failures);
}

#[test]
fn criterion_9_survey_determinism() {
    let start = Instant::now();
    let range = SlopeRange {
        p_min: 1,
        p_max: 10,
        q_min: 1,
        q_max: 10,
    };
    let job = ResolvedJob {
        profiles: vec![builtin("T(2,3)").unwrap(), builtin("T(2,5)").unwrap()],
        cover_slopes: range.enumerate().unwrap(),
        base_slopes: range.enumerate().unwrap(),
        checks: CheckKind::all().to_vec(),
        prime: None,
        workers: None,
    };
    let rows_a = run_survey(&job).unwrap();
    let rows_b = run_survey(&job).unwrap();
    let mut failures = Vec::new();
    if rows_a.len() < 10_000 {
        failures.push(format!("survey produced {} rows, need >= 10000", rows_a.len()));
    }
    let header = ReportHeader::new(&job.profiles);
    for format in [ReportFormat::Text, ReportFormat::Csv, ReportFormat::Jsonl] {
        let doc_a = emit_report(&header, &rows_a, format);
        let doc_b = emit_report(&header, &rows_b, format);
        if doc_a != doc_b {
            failures.push(format!("{format:?} reports differ between runs"));
        }
    }
    // Spot-check the verdict mix is non-trivial in both directions.
    let obstructed = rows_a
        .iter()
        .filter(|r| r.verdict == Status::Obstructed)
        .count();
    if obstructed == 0 || obstructed == rows_a.len() {
        failures.push(format!(
            "degenerate verdict mix: {obstructed}/{} obstructed",
            rows_a.len()
        ));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 100.0,
        "survey determinism check took {elapsed:?}"
    );
    report(9, "large surveys are byte-deterministic", &failures);
}
