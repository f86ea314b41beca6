//! Acceptance suite: one test per criterion, so the harness prints one
//! pass/fail line for each. Every check here is exact (big integers or
//! certified rationals); run with `--nocapture` to see the per-criterion
//! detail lines with timings.

use std::process::Command;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use pmtk::bounds;
use pmtk::certificate::{verify_certificate, Certificate};
use pmtk::construct::{self, Outcome};
use pmtk::oracle::{self, CountMode, OracleLimits};
use pmtk::setsystem::{SetSystem, Subset};
use pmtk::Verdict;

fn prefix_set(n: usize, m: usize) -> Subset {
    Subset::from_elements(n, &(0..m).collect::<Vec<_>>()).expect("prefix set is valid")
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    let mask = rng.next_u64() & ((1u64 << n) - 1);
    let elements: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
    Subset::from_elements(n, &elements).expect("mask elements are in range")
}

#[test]
fn criterion_01_single_set_counts_stay_strictly_below_the_closed_form() {
    let t = Instant::now();
    let limits = OracleLimits::default();
    let mut cells = 0u64;
    for n in 1..=12usize {
        // the count depends on M only through |M|, so prefixes cover all sets
        for m in 0..=n {
            let set = prefix_set(n, m);
            for a in 1..=n as u64 {
                let count =
                    oracle::count_bad_colorings(&set, a, CountMode::Enumerate, &limits).unwrap();
                assert!(
                    bounds::count_below_chernoff_closed_form(&count, n as u64, a).unwrap(),
                    "count {count} at n={n}, |M|={m}, a={a} is not strictly below 2^(n - a²/2n)"
                );
                cells += 1;
            }
        }
    }
    println!(
        "criterion 01: {cells} (n, |M|, a) cells all strictly below 2^(n - a²/2n)  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_02_enumeration_and_closed_form_agree_everywhere() {
    let t = Instant::now();
    let limits = OracleLimits::default();
    let mut cells = 0u64;
    for n in 1..=12usize {
        for m in 0..=n {
            let set = prefix_set(n, m);
            for a in 1..=n as u64 {
                let by_walk =
                    oracle::count_bad_colorings(&set, a, CountMode::Enumerate, &limits).unwrap();
                let by_formula =
                    oracle::count_bad_colorings(&set, a, CountMode::ClosedForm, &limits).unwrap();
                assert_eq!(by_walk, by_formula, "modes differ at n={n}, |M|={m}, a={a}");
                cells += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_817);
    for _ in 0..1000 {
        let n = 1 + rng.next_u32() as usize % 24;
        let set = random_subset(&mut rng, n);
        let a = 1 + u64::from(rng.next_u32()) % n as u64;
        let by_walk = oracle::count_bad_colorings(&set, a, CountMode::Enumerate, &limits).unwrap();
        let by_formula =
            oracle::count_bad_colorings(&set, a, CountMode::ClosedForm, &limits).unwrap();
        assert_eq!(by_walk, by_formula, "modes differ at n={n}, M={set:?}, a={a}");
        cells += 1;
    }
    println!(
        "criterion 02: both count modes agree exactly on {cells} instances (sweep + 1000 random, n <= 24)  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_03_the_threshold_power_chain_holds_exactly_at_full_scale() {
    let t = Instant::now();
    // 2^(150²) > 2^(10·2000) > 600^2000, all three materialized exactly
    let lhs = BigUint::one() << 22_500u32;
    let mid = BigUint::one() << 20_000u32;
    let rhs = BigUint::from(600u32).pow(2_000);
    assert!(lhs > mid, "2^22500 must exceed 2^20000");
    assert!(mid > rhs, "2^20000 must exceed 600^2000");
    assert_eq!(lhs.bits(), 22_501);
    assert_eq!(rhs.bits(), 18_458, "600^2000 occupies 18458 bits");
    println!(
        "criterion 03: 2^22500 > 2^20000 > 600^2000 verified on exact integers ({} vs {} bits)  [{:.2?}]",
        lhs.bits() - 1,
        rhs.bits(),
        t.elapsed()
    );
}

#[test]
fn criterion_04_ten_million_vertex_verdict_true_by_two_independent_routes() {
    let t = Instant::now();
    let b = bounds::ramsey_bad_count_bound(10_000_000, 51).unwrap();
    assert_eq!(b.exact_route, Some(Verdict::True), "exact big-integer route must certify");
    assert_eq!(b.log_route, Verdict::True, "directed-rounding log route must certify");
    assert_eq!(b.verdict, Verdict::True);
    println!(
        "criterion 04: 2·C(10^7, 51) < 2^1275 certified exactly and in log2 with directed rounding  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_05_thousand_element_triple_system_verdict_true() {
    let t = Instant::now();
    let b = bounds::hypergraph_bad_count_bound(1000, 10, 3).unwrap();
    assert_eq!(b.exact_route, Some(Verdict::True));
    assert_eq!(b.log_route, Verdict::True);
    assert_eq!(b.verdict, Verdict::True);
    println!(
        "criterion 05: bad 2-colorings of triples of [1000] are outnumbered (2·C(1000,10) < 2^120)  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_06_exact_graph_counts_at_desk_scale() {
    let t = Instant::now();
    let limits = OracleLimits::default();
    let five = oracle::count_ramsey_graphs(5, 3, &limits).unwrap();
    let six = oracle::count_ramsey_graphs(6, 3, &limits).unwrap();
    assert_eq!(five, 1012);
    assert_eq!(six, 32_768);
    assert_eq!(six, 1u64 << 15, "every 6-vertex graph has a triangle or its mirror");
    println!(
        "criterion 06: 1012 of 1024 five-vertex graphs, 32768 of 32768 six-vertex graphs  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_07_guarantee_regime_systems_pass_all_three_checks() {
    let t = Instant::now();
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0u32;
    let mut attempts = 0u32;
    while accepted < 50 {
        attempts += 1;
        assert!(attempts < 10_000, "sampler failed to reach the guarantee regime");
        let n = 4 + rng.next_u32() as usize % 13; // 4..=16
        let s = 1 + rng.next_u32() as usize % 24; // 1..=24
        let sets: Vec<Subset> = (0..s).map(|_| random_subset(&mut rng, n)).collect();
        let sys = SetSystem::new(n, sets).unwrap();
        let a = bounds::discrepancy_guarantee(n as u64, s as u64).unwrap();
        if a > n as u64 {
            continue; // outside the regime where the guarantee says anything
        }
        accepted += 1;

        let exceeding = oracle::count_exceeding_colorings(&sys, a, &limits).unwrap();
        assert!(
            exceeding < (BigUint::one() << n),
            "n={n}, s={s}, a={a}: {exceeding} bad colorings is not strictly below 2^{n}"
        );

        let report = construct::find_low_discrepancy_coloring(&sys, Some(a), 0, 1000).unwrap();
        assert!(
            matches!(report.outcome, Outcome::Success { .. }),
            "n={n}, s={s}, a={a}: seed-0 construction exhausted its budget"
        );

        let (optimum, _) = oracle::min_max_discrepancy(&sys, &limits).unwrap();
        assert!(optimum < a, "n={n}, s={s}: exact optimum {optimum} is not below a={a}");
    }
    println!(
        "criterion 07: 50 sampled systems (n <= 16): bad count < 2^n, seed-0 build succeeded, optimum < a  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_08_full_scale_club_system_colors_within_budget() {
    let t = Instant::now();
    let sys = construct::sample_clubs(1000, 300, 50, 0).unwrap();
    let report = construct::find_low_discrepancy_coloring(&sys, Some(150), 0, 1000).unwrap();
    let Outcome::Success { witness, trial } = &report.outcome else {
        panic!("no coloring found within 1000 trials");
    };
    let check = verify_certificate(&Certificate::Discrepancy {
        a: 150,
        system: sys.clone(),
        coloring: witness.clone(),
    })
    .unwrap();
    assert!(check.ok, "witness failed re-verification: {}", check.reason);
    println!(
        "criterion 08: n=1000, s=300, a=150 coloring found at trial {trial} and re-verified  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_09_cosh_stays_below_the_gaussian_envelope_at_ten_thousand_points() {
    let t = Instant::now();
    let all_certified = (1..=10_000i64).into_par_iter().all(|i| {
        let lambda = BigRational::new(BigInt::from(i), BigInt::from(500)); // (0, 20]
        bounds::certify_cosh_inequality(&lambda).unwrap()
    });
    assert!(all_certified, "cosh(λ) < e^(λ²/2) failed certification somewhere on (0, 20]");
    println!(
        "criterion 09: cosh(λ) < e^(λ²/2) certified in exact rationals at 10000 points of (0, 20]  [{:.2?}]",
        t.elapsed()
    );
}

#[test]
fn criterion_10_reports_are_byte_identical_across_runs_and_thread_counts() {
    let t = Instant::now();
    let bin = env!("CARGO_BIN_EXE_pmtk");
    let dir = tempfile::tempdir().unwrap();
    let small = dir.path().join("small.json");
    let clubs = dir.path().join("clubs.json");

    let gen_small = ["gen", "clubs", "--n", "14", "--s", "6", "--size", "5", "--seed", "9"];
    let gen_clubs = ["gen", "clubs", "--n", "1000", "--s", "300", "--size", "50", "--seed", "0"];

    // generated documents must not depend on the thread count either
    for (args, path) in [(&gen_small, &small), (&gen_clubs, &clubs)] {
        let mut texts = Vec::new();
        for threads in ["1", "8"] {
            let out = Command::new(bin)
                .args(*args)
                .env("PMTK_THREADS", threads)
                .output()
                .expect("binary runs");
            assert!(out.status.success());
            texts.push(out.stdout);
        }
        assert_eq!(texts[0], texts[1], "generated document differs across thread counts");
        std::fs::write(path, &texts[0]).unwrap();
    }

    let small_arg = small.to_str().unwrap();
    let clubs_arg = clubs.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["oracle", "count-ramsey", "--r", "5", "--n", "3"],
        vec!["oracle", "count-ramsey", "--r", "6", "--n", "3"],
        vec!["oracle", "count-exceeding", "--in", small_arg, "--a", "4"],
        vec!["oracle", "exact-discrepancy", "--in", small_arg],
        vec!["construct", "coloring", "--in", clubs_arg, "--a", "150", "--seed", "0"],
    ];
    let mut invocations = 0;
    for args in &commands {
        let mut outputs = Vec::new();
        for threads in ["1", "8"] {
            for _run in 0..2 {
                let out = Command::new(bin)
                    .args(args)
                    .env("PMTK_THREADS", threads)
                    .output()
                    .expect("binary runs");
                outputs.push((out.status.code(), out.stdout));
                invocations += 1;
            }
        }
        for other in &outputs[1..] {
            assert_eq!(outputs[0].0, other.0, "exit code differs for {args:?}");
            assert_eq!(
                outputs[0].1, other.1,
                "stdout differs across runs/threads for {args:?}"
            );
        }
    }
    println!(
        "criterion 10: {invocations} invocations over {} commands byte-identical across 2 runs x {{1, 8}} threads  [{:.2?}]",
        commands.len(),
        t.elapsed()
    );
}
