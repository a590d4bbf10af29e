//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All comparisons are exact (big-integer equality, zero tolerance); the
//! scaling criterion alone carries a wall-clock completion budget.

use std::time::{Duration, Instant};

use multcoef_core::families::kron_aft2_query;
use multcoef_core::kronecker::{
    kronecker_character, kronecker_full, CharTableCache, KronConfig, KronPath, KronStrategy,
};
use multcoef_core::selftest::{
    sweep_bounds, sweep_character_tables, sweep_identities, sweep_kostka, sweep_kron_oracle_equiv,
    sweep_lr_agreement, sweep_plethysm, SweepReport,
};

fn gate(criterion: &str, report: &SweepReport) {
    let verdict = if report.ok() { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {criterion}: {verdict} ({} instances)",
        report.checked
    );
    assert!(
        report.ok(),
        "criterion {criterion} failed: {:?}",
        report.failures
    );
}

#[test]
fn criterion_1_kronecker_oracle_equivalence() {
    // exhaustive n in 2..=6, and aft(nu) <= 3 for n in {7,8,9}; exact
    let report = sweep_kron_oracle_equiv(6, &[(7, 3), (8, 3), (9, 3)], None);
    gate("1 kronecker jt = character", &report);
}

#[test]
fn criterion_2_lr_three_way_and_oracle() {
    // |mu| + |nu| <= 8 for tableaux/polytope/oracle; |nu| <= 6 adds small-skew
    let report = sweep_lr_agreement(8, 6);
    gate("2 LR three-way + oracle", &report);
}

#[test]
fn criterion_3_kostka_equivalence() {
    // all skew shapes |lambda| <= 7, all weak compositions; unit weight vs
    // hook-length dimension for n <= 10
    let report = sweep_kostka(7, 10);
    gate("3 Kostka GT = brute force", &report);
}

#[test]
fn criterion_4_plethysm_equivalence() {
    // oracle agreement dm <= 12 (ell <= 6); reduced overlap dm <= 16
    let report = sweep_plethysm(12, 6, 16);
    gate("4 plethysm vs oracle + reduced", &report);
}

#[test]
fn criterion_5_identity_suite() {
    // sum f^2 = n! (n <= 25); weighted LR identity (n <= 8); f = f' (n <= 20);
    // Kronecker S3 + double transpose (n <= 6)
    let report = sweep_identities(25, 8, 20, 6);
    gate("5 identity suite", &report);
}

#[test]
fn criterion_6_proven_bounds() {
    // aft bounds n <= 40 (aft <= 6); Regev n <= 20; LR ratio n <= 8
    let report = sweep_bounds(40, 6, 20, 8);
    gate("6 proven bounds", &report);
}

#[test]
fn criterion_7_scaling_kron_aft2() {
    // family nu = (n-2,1,1), lambda = mu balanced: values match the
    // character oracle on the n <= 12 overlap, and every grid query up to
    // n = 60 completes within 60 s
    let config = KronConfig::default();
    let cache = CharTableCache::in_memory();
    let mut checked = 0u64;
    let mut failures = Vec::new();

    for n in 5..=12usize {
        let q = kron_aft2_query(n).unwrap();
        let fast = kronecker_full(&q, KronStrategy::Auto, &config, &cache).unwrap();
        let oracle = kronecker_character(&q).unwrap();
        checked += 1;
        if fast.value != oracle {
            failures.push(format!("value mismatch at n={n}"));
        }
        if fast.path != KronPath::JacobiTrudi {
            failures.push(format!("expected the Jacobi-Trudi path at n={n}"));
        }
    }
    let budget = Duration::from_secs(60);
    for n in [20usize, 30, 40, 50, 60] {
        let q = kron_aft2_query(n).unwrap();
        let start = Instant::now();
        let out = kronecker_full(&q, KronStrategy::Auto, &config, &cache).unwrap();
        let elapsed = start.elapsed();
        checked += 1;
        println!(
            "  kron-aft2 n={n}: g = {} in {:.1} ms via {}",
            out.value,
            elapsed.as_secs_f64() * 1e3,
            out.path.as_str()
        );
        if elapsed > budget {
            failures.push(format!("n={n} took {elapsed:?}, over the 60 s budget"));
        }
    }

    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE 7 scaling kron-aft2: {verdict} ({checked} instances)");
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_8_character_table_integrity() {
    // column orthogonality and chi(1^n) = f^lambda for n <= 12
    let report = sweep_character_tables(12);
    gate("8 character table integrity", &report);
}
