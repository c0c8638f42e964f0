//! Independent oracles and property runners shared by the integration tests
//! and the acceptance harness.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use spdual::jordan::enumerate_jord_sn;
use spdual::spectrum::check_dual_conditions;
use spdual::{DualPoint, ExpVector, GLChar, JordSN, NegativeRep, Rational, UnitaryChar};

pub const PROPERTY_CASES: u32 = 10_000;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn v(s: &str) -> ExpVector {
    s.parse().unwrap()
}

/// `(t, s)` pairs found by scanning every pair of subsets of the odd numbers
/// up to `2q+1`.
pub fn jord_oracle(q: u32) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let odds: Vec<u32> = (0..=q).map(|i| 2 * i + 1).collect();
    let subsets: Vec<Vec<u32>> = (0u32..1 << odds.len())
        .map(|mask| {
            let mut parts: Vec<u32> = (0..odds.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| odds[i])
                .collect();
            parts.reverse();
            parts
        })
        .collect();
    let mut out = BTreeSet::new();
    for t in &subsets {
        for s in &subsets {
            let total: u32 = t.iter().sum::<u32>() + s.iter().sum::<u32>();
            if total == 2 * q + 1 && s.len() % 2 == 0 {
                out.insert((t.clone(), s.clone()));
            }
        }
    }
    out
}

fn canonical_angle(a: Rational) -> Rational {
    if a > r(1, 2) {
        Rational::ONE - a
    } else {
        a
    }
}

/// Every ordered sequence of items with total weight `budget`.
fn ordered_sequences<T: Clone>(items: &[(T, u32)], budget: u32) -> Vec<Vec<T>> {
    if budget == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (item, w) in items {
        if *w <= budget {
            for mut rest in ordered_sequences(items, budget - w) {
                rest.insert(0, item.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// Negative representations of rank `q` as display strings.
pub fn negative_oracle(q: u32, angles: &[Rational]) -> BTreeSet<String> {
    negative_reps(q, angles)
        .iter()
        .map(ToString::to_string)
        .collect()
}

/// Negative representations built from ordered `ψ` sequences over all
/// characters, collapsed by hand to canonical form.
fn negative_reps(q: u32, angles: &[Rational]) -> Vec<NegativeRep> {
    let mut out = Vec::new();
    for m in 0..=q {
        let items: Vec<((Rational, u32), u32)> = (1..=q - m)
            .flat_map(|n| angles.iter().map(move |&a| ((a, n), n)))
            .collect();
        let mut psi_sets = BTreeSet::new();
        for seq in ordered_sequences(&items, q - m) {
            let mut canon: Vec<(Rational, u32)> = seq
                .into_iter()
                .map(|(a, n)| (canonical_angle(a), n))
                .collect();
            canon.sort();
            psi_sets.insert(canon);
        }
        for (t, s) in jord_oracle(m) {
            let j = JordSN::from_parts(&t, &s).unwrap();
            for psis in &psi_sets {
                let psis = psis
                    .iter()
                    .map(|&(a, n)| (UnitaryChar::new(a), n))
                    .collect();
                out.push(NegativeRep::new(psis, j.clone()).unwrap());
            }
        }
    }
    out
}

/// Grid dual of `Sp(2q,F)` by brute force: every multiset of
/// `(χ, p, e)` over all characters, ranks and grid exponents, over every
/// negative representation of the remaining rank, kept when
/// `check_dual_conditions` accepts.
pub fn dual_oracle(q: u32, denominator: i64, angles: &[Rational]) -> BTreeSet<String> {
    let es: Vec<Rational> = (1..denominator).map(|k| r(k, denominator)).collect();
    let mut out = BTreeSet::new();
    for b in 0..=q {
        let items: Vec<((Rational, u32, Rational), u32)> = (1..=b)
            .flat_map(|p| {
                let es = es.clone();
                angles
                    .iter()
                    .flat_map(move |&a| es.clone().into_iter().map(move |e| ((a, p, e), p)))
            })
            .collect();
        let mut phi_sets = BTreeSet::new();
        for mut seq in ordered_sequences(&items, b) {
            seq.sort();
            phi_sets.insert(seq);
        }
        for neg in negative_reps(q - b, angles) {
            for phis in &phi_sets {
                let phis = phis
                    .iter()
                    .map(|&(a, p, e)| GLChar::new(UnitaryChar::new(a), p, e))
                    .collect();
                let pt = DualPoint::new(phis, neg.clone()).unwrap();
                if check_dual_conditions(&pt).is_accepted() {
                    out.insert(pt.to_string());
                }
            }
        }
    }
    out
}

pub fn default_angles() -> Vec<Rational> {
    vec![r(0, 1), r(1, 2), r(1, 4), r(3, 4)]
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn halves(len: std::ops::Range<usize>) -> impl Strategy<Value = ExpVector> {
    prop::collection::vec(-12i64..12, len)
        .prop_map(|xs| xs.into_iter().map(Rational::halves).collect())
}

fn sorted_desc(len: usize) -> impl Strategy<Value = ExpVector> {
    halves(len..len + 1).prop_map(|x| x.sort_desc())
}

fn non_negative_desc(len: usize) -> impl Strategy<Value = ExpVector> {
    prop::collection::vec(0i64..6, len).prop_map(|xs| {
        xs.into_iter()
            .map(Rational::halves)
            .collect::<ExpVector>()
            .sort_desc()
    })
}

fn non_negative(len: usize) -> impl Strategy<Value = ExpVector> {
    prop::collection::vec(0i64..6, len)
        .prop_map(|xs| xs.into_iter().map(Rational::halves).collect())
}

fn sub(x: &ExpVector, y: &ExpVector) -> ExpVector {
    x.iter().zip(y.iter()).map(|(a, b)| *a - *b).collect()
}

type Outcome = Result<(), String>;

pub type Suite = (&'static str, fn() -> Outcome);

fn outcome<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Outcome {
    r.map_err(|e| e.to_string())
}

/// Descending `x ≥_s y` implies `x ≥_s y_↓`.
pub fn sorting_preserves_domination() -> Outcome {
    let strat = (0usize..8).prop_flat_map(|n| (sorted_desc(n), non_negative(n)));
    outcome(runner().run(&strat, |(x, d)| {
        let y = sub(&x, &d);
        prop_assert!(y.leq_s(&x).unwrap());
        prop_assert!(y.sort_desc().leq_s(&x).unwrap());
        Ok(())
    }))
}

/// `x ≥_s x′` and `y ≥_s y′`, all descending, imply
/// `(x⌢y)_↓ ≥_s (x′⌢y′)_↓`.
pub fn sorted_concat_preserves_domination() -> Outcome {
    let strat = (0usize..6, 0usize..6).prop_flat_map(|(n, m)| {
        (
            sorted_desc(n),
            non_negative_desc(n),
            sorted_desc(m),
            non_negative_desc(m),
        )
    });
    outcome(runner().run(&strat, |(x1, dx, y1, dy)| {
        let x = x1.add(&dx).unwrap();
        let y = y1.add(&dy).unwrap();
        prop_assert!(x.is_descending() && y.is_descending());
        let big = x.concat(&y).sort_desc();
        let small = x1.concat(&y1).sort_desc();
        prop_assert!(small.leq_s(&big).unwrap());
        Ok(())
    }))
}

pub fn strong_implies_weak() -> Outcome {
    let strat = (0usize..8).prop_flat_map(|n| (halves(n..n + 1), halves(n..n + 1)));
    outcome(runner().run(&strat, |(x, y)| {
        if x.leq_s(&y).unwrap() {
            prop_assert!(x.leq_w(&y).unwrap());
        }
        // force the premise as well
        let hi: ExpVector = x.iter().zip(y.iter()).map(|(a, b)| *a.max(b)).collect();
        prop_assert!(x.leq_s(&hi).unwrap() && x.leq_w(&hi).unwrap());
        Ok(())
    }))
}

pub fn weak_below_sorted() -> Outcome {
    outcome(runner().run(&halves(0..10), |x| {
        prop_assert!(x.leq_w(&x.sort_desc()).unwrap());
        Ok(())
    }))
}

pub fn sort_idempotent() -> Outcome {
    outcome(runner().run(&halves(0..10), |x| {
        let once = x.sort_desc();
        prop_assert_eq!(once.sort_desc(), once.clone());
        prop_assert!(once.is_descending());
        let mut a = x.into_entries();
        let mut b = once.into_entries();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        Ok(())
    }))
}

fn any_char() -> impl Strategy<Value = UnitaryChar> {
    (0i64..8).prop_map(|k| UnitaryChar::new(r(k, 8)))
}

fn any_jord() -> impl Strategy<Value = JordSN> {
    (0u32..5, any::<prop::sample::Index>()).prop_map(|(m, i)| {
        let all = enumerate_jord_sn(m);
        all[i.index(all.len())].clone()
    })
}

fn any_psis() -> impl Strategy<Value = Vec<(UnitaryChar, u32)>> {
    prop::collection::vec((any_char(), 1u32..4), 0..4)
}

fn any_phis() -> impl Strategy<Value = Vec<GLChar>> {
    prop::collection::vec(
        (any_char(), 1u32..3, 1i64..8).prop_map(|(c, p, k)| GLChar::new(c, p, r(k, 8))),
        0..4,
    )
}

pub fn canonicalization_idempotent() -> Outcome {
    let strat = (any_psis(), any_jord());
    outcome(runner().run(&strat, |(psis, j)| {
        let neg = NegativeRep::new(psis.clone(), j.clone()).unwrap();
        prop_assert_eq!(neg.canonical(), neg.clone());
        prop_assert_eq!(neg.canonical().canonical(), neg.canonical());
        let mut shuffled = psis;
        shuffled.reverse();
        prop_assert_eq!(NegativeRep::new(shuffled, j).unwrap(), neg);
        Ok(())
    }))
}

/// Inverting one `ψ` leaves the negative representation unchanged; inverting
/// every `φ` character at once (with the same exponents) preserves the
/// verdict and the norm.
pub fn character_inversion_invariance() -> Outcome {
    let strat = (
        any_phis(),
        any_psis(),
        any_jord(),
        any::<prop::sample::Index>(),
    );
    outcome(runner().run(&strat, |(phis, psis, j, pick)| {
        let neg = NegativeRep::new(psis.clone(), j.clone()).unwrap();
        if !psis.is_empty() {
            let mut flipped = psis.clone();
            let i = pick.index(flipped.len());
            flipped[i].0 = flipped[i].0.inverse();
            let neg2 = NegativeRep::new(flipped, j.clone()).unwrap();
            prop_assert_eq!(&neg2, &neg);
            prop_assert_eq!(neg2.norm(), neg.norm());
        }
        let pt = DualPoint::new(phis.clone(), neg.clone()).unwrap();
        let mirrored: Vec<GLChar> = phis
            .iter()
            .map(|phi| GLChar::new(phi.chi.inverse(), phi.p, phi.e))
            .collect();
        let pt2 = DualPoint::new(mirrored, neg).unwrap();
        prop_assert_eq!(pt2.norm(), pt.norm());
        let tag = |p: &DualPoint| check_dual_conditions(p).rejection().map(|r| r.condition);
        prop_assert_eq!(tag(&pt2), tag(&pt));
        Ok(())
    }))
}

/// The named property suites, in a fixed order.
pub fn property_suites() -> Vec<Suite> {
    vec![
        (
            "sorting preserves domination",
            sorting_preserves_domination as fn() -> Outcome,
        ),
        (
            "sorted concatenation preserves domination",
            sorted_concat_preserves_domination,
        ),
        ("<=_s implies <=_w", strong_implies_weak),
        ("x <=_w sort_desc(x)", weak_below_sorted),
        ("sort idempotence", sort_idempotent),
        ("canonicalization idempotence", canonicalization_idempotent),
        (
            "character-inversion invariance",
            character_inversion_invariance,
        ),
    ]
}
