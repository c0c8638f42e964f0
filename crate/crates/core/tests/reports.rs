use spdual::verifier::*;
use spdual::Rational;

#[test]
fn reports_are_deterministic() {
    let grid = GridSpec::default();
    for q in 2..=4 {
        let a = serde_json::to_string(&verify_isolation(q, &grid).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_isolation(q, &grid).unwrap()).unwrap();
        assert_eq!(a, b);
        let a = serde_json::to_string(&verify_filters_consistency(q, &grid).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_filters_consistency(q, &grid).unwrap()).unwrap();
        assert_eq!(a, b);
    }
    let a: Vec<String> = enumerate_dual_points(4, &grid)
        .iter()
        .map(ToString::to_string)
        .collect();
    let b: Vec<String> = enumerate_dual_points(4, &grid)
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(a, b);
}

#[test]
fn report_round_trip() {
    let report = verify_bound_by_trivial(3, &GridSpec::default()).unwrap();
    let text = serde_json::to_string_pretty(&report).unwrap();
    let back: ViolationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
}

#[test]
fn bound_by_trivial_at_rank_one() {
    let report = verify_bound_by_trivial(1, &GridSpec::default()).unwrap();
    assert!(report.passed());
    assert_eq!(report.points_checked, 11);
    assert_eq!(
        report.equality_witnesses,
        vec!["sigma(t=[3];s=[])".to_string()]
    );
}

#[test]
fn isolation_needs_the_trivial_point_excluded() {
    let grid = GridSpec::default();
    for q in 2..=4 {
        let trivial = enumerate_dual_points(q, &grid)
            .into_iter()
            .find(|p| p.is_trivial())
            .unwrap();
        let bound = spdual::bounds::isolation_weak_bound(q);
        assert!(!trivial.norm().leq_w(&bound).unwrap());
    }
}

#[test]
fn extremal_sums() {
    let grid = GridSpec::default();
    let (two, witness) = extremal_norm_sum(2, &grid).unwrap();
    assert!(two <= Rational::ONE);
    assert!(witness.phis().is_empty());
    let (three, _) = extremal_norm_sum(3, &grid).unwrap();
    assert!(three <= Rational::integer(3));
    for q in 2..=4 {
        let (max, _) = extremal_norm_sum(q, &grid).unwrap();
        assert!(max < Rational::integer((q * (q + 1) / 2) as i64));
    }
}

#[test]
fn max_prefix_sum_at_rank_two() {
    let pts = enumerate_dual_points(2, &GridSpec::default());
    let max = pts
        .iter()
        .filter(|p| !p.is_trivial())
        .map(|p| p.norm().entries()[0])
        .max()
        .unwrap();
    assert!(max <= Rational::ONE);
}
