//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{default_angles, dual_oracle, jord_oracle, property_suites, v};
use spdual::bounds::{
    filter_nonselfdual, filter_selfdual, parabolic_bound_vector, ExponentClassData, GroupKind,
};
use spdual::jordan::enumerate_jord_sn;
use spdual::verifier::{
    enumerate_dual_points, sp4_complementary_norm_sums, verify_bound_by_trivial,
    verify_filters_consistency, verify_isolation, verify_negative_bounds,
    verify_nonnegative_bounds, verify_strongly_negative_bounds, GridSpec, ViolationReport,
};
use spdual::{ExpVector, Rational};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn check(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn summarize(reports: &[ViolationReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            let first = &r.violations[0];
            format!(
                "{} q={}: {} violations, first {} norm ({}) vs {}",
                r.theorem,
                r.domain.q,
                r.violations.len(),
                first.point,
                first.norm,
                first.ordering
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn trivial_norm_reproduction() -> Outcome {
    let mut slowest = Duration::ZERO;
    for q in 1..=10 {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_spdual"))
            .args(["bounds", "trivial", "--group", "sp", "--q", &q.to_string()])
            .output()
            .expect("binary runs");
        slowest = slowest.max(start.elapsed());
        let got = String::from_utf8_lossy(&out.stdout).trim().to_string();
        let expected: ExpVector = (1..=q).rev().map(Rational::integer).collect();
        if !out.status.success() || got != expected.to_string() {
            return check(false, format!("q={q}: got {got:?}, expected {expected}"));
        }
    }
    check(
        slowest < Duration::from_secs(1),
        format!("q=1..10 exact, slowest call {} ms", slowest.as_millis()),
    )
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let got = parabolic_bound_vector(2, 5, GroupKind::Sp, 6);
    let elapsed = start.elapsed();
    check(
        got == v("13/2,11/2,9/2,7/2,5/2") && elapsed < Duration::from_secs(1),
        format!("({got})"),
    )
}

fn bound_by_trivial(grid: &GridSpec) -> Outcome {
    let mut reports = Vec::new();
    let mut checked = 0;
    let mut witness_ok = true;
    for q in 1..=5 {
        let report = verify_bound_by_trivial(q, grid).expect("q >= 1");
        checked += report.points_checked;
        let trivial = format!("sigma(t=[{}];s=[])", 2 * q + 1);
        witness_ok &= report.equality_witnesses == vec![trivial];
        reports.push(report);
    }
    let passed = reports.iter().all(ViolationReport::passed) && witness_ok;
    check(
        passed,
        format!(
            "q=1..5, {checked} points, equality set trivial only: {witness_ok} {}",
            summarize(&reports)
        ),
    )
}

fn isolation(grid: &GridSpec) -> Outcome {
    let reports: Vec<_> = (2..=5)
        .map(|q| verify_isolation(q, grid).expect("q >= 2"))
        .collect();
    let checked: u64 = reports.iter().map(|r| r.points_checked).sum();
    let witnesses: usize = reports.iter().map(|r| r.equality_witnesses.len()).sum();
    check(
        reports.iter().all(ViolationReport::passed) && witnesses == 0,
        format!(
            "q=2..5, {checked} non-trivial points, {witnesses} strictness witnesses {}",
            summarize(&reports)
        ),
    )
}

fn class_bounds(grid: &GridSpec) -> Outcome {
    let mut reports = Vec::new();
    for q in 2..=8 {
        reports.push(verify_strongly_negative_bounds(q, grid).expect("q >= 2"));
        reports.push(verify_negative_bounds(q, grid).expect("q >= 2"));
        if q <= 6 {
            reports.push(verify_nonnegative_bounds(q, grid).expect("q >= 2"));
        }
    }
    let sums = sp4_complementary_norm_sums(grid);
    let sums_ok = !sums.is_empty() && sums.values().all(|s| *s == Rational::ONE);
    let sum_values: BTreeSet<String> = sums.values().map(ToString::to_string).collect();
    check(
        reports.iter().all(ViolationReport::passed) && sums_ok,
        format!(
            "Sp(4) norm sums {:?} over {} grid points; {}",
            sum_values,
            sums.len(),
            summarize(&reports)
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    for q in 0..=10 {
        let ours = enumerate_jord_sn(q).len();
        let expected = jord_oracle(q).len();
        if ours != expected {
            return check(false, format!("Jord_sn({q}): {ours} vs {expected}"));
        }
    }
    let mut counts = Vec::new();
    for d in 2..=4u32 {
        let grid = GridSpec::with_denominator(d).unwrap();
        for q in 1..=3 {
            let ours: BTreeSet<String> = enumerate_dual_points(q, &grid)
                .iter()
                .map(ToString::to_string)
                .collect();
            let expected = dual_oracle(q, d as i64, &default_angles());
            if ours != expected {
                return check(
                    false,
                    format!("dual q={q} D={d}: {} vs {}", ours.len(), expected.len()),
                );
            }
            counts.push(format!("q={q},D={d}:{}", ours.len()));
        }
    }
    check(true, format!("Jord_sn q<=10; dual {}", counts.join(" ")))
}

fn filter_consistency(grid: &GridSpec) -> Outcome {
    let reports: Vec<_> = (1..=4)
        .map(|q| verify_filters_consistency(q, grid).expect("q >= 1"))
        .collect();
    let crafted_nsd =
        !filter_nonselfdual(&ExponentClassData::non_self_dual(v("3/4"))).is_accepted();
    let crafted_sd =
        !filter_selfdual(&ExponentClassData::self_dual(v("2"), Rational::ONE)).is_accepted();
    check(
        reports.iter().all(ViolationReport::passed) && crafted_nsd && crafted_sd,
        format!(
            "crafted counterexamples rejected: {}; {}",
            crafted_nsd && crafted_sd,
            summarize(&reports)
        ),
    )
}

fn properties() -> Outcome {
    let mut failures = Vec::new();
    for (name, run) in property_suites() {
        if let Err(e) = run() {
            failures.push(format!("{name}: {e}"));
        }
    }
    let n = property_suites().len();
    check(
        failures.is_empty(),
        format!(
            "{n} suites x {} cases {}",
            common::PROPERTY_CASES,
            failures.join("; ")
        ),
    )
}

fn main() {
    let grid = GridSpec::with_denominator(8).unwrap();
    let criteria: Vec<Criterion> = vec![
        (
            "trivial-norm reproduction",
            Box::new(trivial_norm_reproduction),
        ),
        ("worked-example reproduction", Box::new(worked_example)),
        (
            "bound-by-trivial verification",
            Box::new(|| bound_by_trivial(&grid)),
        ),
        ("isolation verification", Box::new(|| isolation(&grid))),
        ("class bounds", Box::new(|| class_bounds(&grid))),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("filter consistency", Box::new(|| filter_consistency(&grid))),
        ("property suites", Box::new(properties)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.passed);
        println!(
            "criterion {} {name}: {status} ({:.2}s) {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            outcome.detail.trim()
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
