//! Exhaustive enumeration of the unramified unitary dual of `Sp(2q,F)` on a
//! finite grid of exponents and characters, and checks of the norm bounds
//! against it.
//!
//! Complementary-series exponents range over `(0,1) ∩ (1/D)ℤ`. Work is split
//! by negative representation and run in parallel; partial results are merged
//! in enumeration order, so every report is deterministic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    filter_nonselfdual, filter_selfdual, half_tail_bound, isolation_strong_bound,
    isolation_weak_bound, neg_bound_check, nonneg_unitary_bound_check, shifted_run, sn_bound_check,
    trivial_norm, ExponentClassData, GroupKind,
};
use crate::error::{Error, Result};
use crate::jordan::{enumerate_jord_sn, JordSN, SelfDualChar};
use crate::orderings::ExpVector;
use crate::rational::Rational;
use crate::spectrum::{
    check_dual_conditions, class_failure, reduces_at_half, reduces_at_zero_class, ClassKind,
    DualPoint, GLChar, NegativeRep, UnitaryChar, Verdict,
};

/// Reducibility points `α_{χ, 1_{Sp(0,F)}}` of the two self-dual unramified
/// characters.
pub fn alpha_cusp(chi: SelfDualChar) -> Rational {
    match chi {
        SelfDualChar::Trivial => Rational::ONE,
        SelfDualChar::Sgn => Rational::ZERO,
    }
}

/// Exponent denominator and character set of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    denominator: u32,
    characters: Vec<UnitaryChar>,
}

impl GridSpec {
    pub fn new(denominator: u32, characters: Vec<UnitaryChar>) -> Result<Self> {
        if denominator < 2 {
            return Err(Error::InvalidGrid(format!(
                "denominator must be at least 2, got {denominator}"
            )));
        }
        let mut characters = characters;
        characters.sort();
        characters.dedup();
        for chi in [UnitaryChar::TRIVIAL, UnitaryChar::SGN] {
            if !characters.contains(&chi) {
                return Err(Error::InvalidGrid(format!(
                    "character set must contain {chi}"
                )));
            }
        }
        if let Some(chi) = characters
            .iter()
            .find(|c| !characters.contains(&c.inverse()))
        {
            return Err(Error::InvalidGrid(format!(
                "character set contains {chi} but not its inverse"
            )));
        }
        Ok(GridSpec {
            denominator,
            characters,
        })
    }

    /// Angles `{0, 1/2, 1/4, 3/4}`.
    pub fn with_denominator(denominator: u32) -> Result<Self> {
        GridSpec::new(denominator, default_characters())
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn characters(&self) -> &[UnitaryChar] {
        &self.characters
    }

    /// One representative of each `{χ, χ⁻¹}`.
    pub fn canonical_characters(&self) -> Vec<UnitaryChar> {
        self.characters
            .iter()
            .copied()
            .filter(|c| c.canonical() == *c)
            .collect()
    }

    /// Grid exponents in the open interval `(0, bound)`.
    pub fn exponents_below(&self, bound: Rational) -> Vec<Rational> {
        let d = self.denominator as i64;
        (1..)
            .map(|k| Rational::new(k, d))
            .take_while(|e| *e < bound)
            .collect()
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::with_denominator(8).expect("default grid is valid")
    }
}

pub fn default_characters() -> Vec<UnitaryChar> {
    [(0, 1), (1, 2), (1, 4), (3, 4)]
        .into_iter()
        .map(|(n, d)| UnitaryChar::new(Rational::new(n, d)))
        .collect()
}

/// `Jord_sn(q)` with the norms of the corresponding `σ(J)`.
pub fn enumerate_strongly_negative(q: u32) -> Vec<(JordSN, ExpVector)> {
    enumerate_jord_sn(q)
        .into_iter()
        .map(|j| {
            let norm = j.sigma_norm();
            (j, norm)
        })
        .collect()
}

/// Multisets of `(χ, n)` with `χ` canonical and `Σ n = budget`, each sorted.
fn psi_multisets(chars: &[UnitaryChar], budget: u32) -> Vec<Vec<(UnitaryChar, u32)>> {
    let mut kinds: Vec<(UnitaryChar, u32)> = (1..=budget)
        .flat_map(|n| chars.iter().map(move |&c| (c, n)))
        .collect();
    kinds.sort();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        kinds: &[(UnitaryChar, u32)],
        start: usize,
        left: u32,
        current: &mut Vec<(UnitaryChar, u32)>,
        out: &mut Vec<Vec<(UnitaryChar, u32)>>,
    ) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..kinds.len() {
            let (c, n) = kinds[i];
            if n <= left {
                current.push((c, n));
                go(kinds, i, left - n, current, out);
                current.pop();
            }
        }
    }
    go(&kinds, 0, budget, &mut current, &mut out);
    out
}

/// All negative representations of `Sp(2q,F)` with `ψ` characters from the
/// grid, strongly negative ones first, with their norms.
pub fn enumerate_negative(q: u32, grid: &GridSpec) -> Vec<(NegativeRep, ExpVector)> {
    let chars = grid.canonical_characters();
    let mut out = Vec::new();
    for m in (0..=q).rev() {
        let psi_sets = psi_multisets(&chars, q - m);
        for j in enumerate_jord_sn(m) {
            for psis in &psi_sets {
                let neg =
                    NegativeRep::new(psis.clone(), j.clone()).expect("psi ranks are positive");
                let norm = neg.norm();
                out.push((neg, norm));
            }
        }
    }
    out
}

/// How an exponent class of a dual point is populated.
#[derive(Clone, Copy, Debug)]
enum ClassSlot {
    /// Non-self-dual pair `{χ, χ⁻¹}`: the same exponents attach to both.
    Pair { chi: UnitaryChar, p: u32 },
    /// Self-dual character with exponents below 1/2.
    Half { chi: UnitaryChar, p: u32 },
    /// Self-dual character in the complementary-series regime.
    Complementary { chi: SelfDualChar, p: u32 },
}

impl ClassSlot {
    fn cost(&self) -> u32 {
        match *self {
            ClassSlot::Pair { p, .. } => 2 * p,
            ClassSlot::Half { p, .. } | ClassSlot::Complementary { p, .. } => p,
        }
    }
}

fn class_slots(max_rank: u32, grid: &GridSpec) -> Vec<ClassSlot> {
    let mut slots = Vec::new();
    for p in 1..=max_rank {
        for chi in grid.canonical_characters() {
            slots.push(match chi.self_dual() {
                None => ClassSlot::Pair { chi, p },
                Some(_) if reduces_at_half(p) => ClassSlot::Half { chi, p },
                Some(sd) => ClassSlot::Complementary { chi: sd, p },
            });
        }
    }
    slots.retain(|s| s.cost() <= max_rank);
    slots
}

fn multisets(values: &[Rational], size: usize) -> Vec<Vec<Rational>> {
    fn go(
        values: &[Rational],
        start: usize,
        size: usize,
        cur: &mut Vec<Rational>,
        out: &mut Vec<Vec<Rational>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, i, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, 0, size, &mut Vec::with_capacity(size), &mut out);
    out
}

/// Admissible exponent multisets per class regime and size.
struct ExponentTables {
    half: Vec<Vec<Vec<Rational>>>,
    /// Indexed by whether `φ ⋊ σ_neg` reduces at zero.
    complementary: [Vec<Vec<Vec<Rational>>>; 2],
}

impl ExponentTables {
    fn new(max_size: u32, grid: &GridSpec) -> Self {
        let below_half = grid.exponents_below(Rational::HALF);
        let below_one = grid.exponents_below(Rational::ONE);
        let half = (0..=max_size as usize)
            .map(|k| multisets(&below_half, k))
            .collect();
        let complementary = [false, true].map(|reduces| {
            (0..=max_size as usize)
                .map(|k| {
                    multisets(&below_one, k)
                        .into_iter()
                        .filter(|m| {
                            class_failure(
                                ClassKind::Complementary {
                                    reduces_at_zero: reduces,
                                },
                                m,
                            )
                            .is_none()
                        })
                        .collect()
                })
                .collect()
        });
        ExponentTables {
            half,
            complementary,
        }
    }
}

fn extend_points(
    slots: &[ClassSlot],
    tables: &ExponentTables,
    neg: &NegativeRep,
    budget: u32,
    phis: &mut Vec<GLChar>,
    out: &mut Vec<DualPoint>,
) {
    let Some((slot, rest)) = slots.split_first() else {
        if budget == 0 {
            let pt =
                DualPoint::new(phis.clone(), neg.clone()).expect("grid exponents are positive");
            if check_dual_conditions(&pt).is_accepted() {
                out.push(pt);
            }
        }
        return;
    };
    let cost = slot.cost();
    for k in 0..=(budget / cost) as usize {
        let choices = match *slot {
            ClassSlot::Pair { .. } | ClassSlot::Half { .. } => &tables.half[k],
            ClassSlot::Complementary { chi, p } => {
                &tables.complementary[reduces_at_zero_class(chi, p, neg) as usize][k]
            }
        };
        for exps in choices {
            let before = phis.len();
            for &e in exps {
                match *slot {
                    ClassSlot::Pair { chi, p } => {
                        phis.push(GLChar::new(chi, p, e));
                        phis.push(GLChar::new(chi.inverse(), p, e));
                    }
                    ClassSlot::Half { chi, p } => phis.push(GLChar::new(chi, p, e)),
                    ClassSlot::Complementary { chi, p } => phis.push(GLChar::new(chi.into(), p, e)),
                }
            }
            extend_points(rest, tables, neg, budget - k as u32 * cost, phis, out);
            phis.truncate(before);
        }
    }
}

/// Dual points built on one negative representation, in a fixed order.
fn points_over(
    neg: &NegativeRep,
    q: u32,
    slots: &[ClassSlot],
    tables: &ExponentTables,
) -> Vec<DualPoint> {
    let mut out = Vec::new();
    extend_points(
        slots,
        tables,
        neg,
        q - neg.rank(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Negative representations of every rank up to `q`, the bases of dual points.
fn all_negatives(q: u32, grid: &GridSpec) -> Vec<NegativeRep> {
    (0..=q)
        .rev()
        .flat_map(|r| enumerate_negative(r, grid).into_iter().map(|(neg, _)| neg))
        .collect()
}

/// Applies `visit` to every dual point, one negative representation per task,
/// and returns the per-task results in enumeration order.
fn scan_dual<T, F>(q: u32, grid: &GridSpec, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(Vec<DualPoint>) -> T + Sync,
{
    let slots = class_slots(q, grid);
    let tables = ExponentTables::new(q, grid);
    all_negatives(q, grid)
        .par_iter()
        .map(|neg| visit(points_over(neg, q, &slots, &tables)))
        .collect()
}

/// Every point of the grid dual of `Sp(2q,F)`, each passing
/// [`check_dual_conditions`], without repetition.
pub fn enumerate_dual_points(q: u32, grid: &GridSpec) -> Vec<DualPoint> {
    scan_dual(q, grid, |pts| pts)
        .into_iter()
        .flatten()
        .collect()
}

/// Number of grid dual points, without materializing them.
pub fn count_dual_points(q: u32, grid: &GridSpec) -> u64 {
    scan_dual(q, grid, |pts| pts.len() as u64).into_iter().sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domain {
    pub q: u32,
    pub denominator: u32,
    pub characters: Vec<UnitaryChar>,
}

impl Domain {
    fn new(q: u32, grid: &GridSpec) -> Self {
        Domain {
            q,
            denominator: grid.denominator,
            characters: grid.characters.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub point: String,
    pub norm: ExpVector,
    pub bound: ExpVector,
    pub ordering: String,
}

/// Outcome of checking one statement over an enumerated domain. An empty
/// `violations` list means the statement held at every point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub theorem: String,
    pub domain: Domain,
    pub points_checked: u64,
    pub violations: Vec<Violation>,
    pub equality_witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ViolationReport {
    fn new(theorem: &str, q: u32, grid: &GridSpec) -> Self {
        ViolationReport {
            theorem: theorem.to_string(),
            domain: Domain::new(q, grid),
            points_checked: 0,
            violations: Vec::new(),
            equality_witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-task accumulator, merged in order.
#[derive(Default)]
struct Partial {
    checked: u64,
    violations: Vec<Violation>,
    witnesses: Vec<String>,
}

impl Partial {
    fn violate(
        &mut self,
        point: &impl ToString,
        norm: &ExpVector,
        bound: &ExpVector,
        ordering: &str,
    ) {
        self.violations.push(Violation {
            point: point.to_string(),
            norm: norm.clone(),
            bound: bound.clone(),
            ordering: ordering.to_string(),
        });
    }

    fn merge_into(parts: Vec<Partial>, report: &mut ViolationReport) {
        for part in parts {
            report.points_checked += part.checked;
            report.violations.extend(part.violations);
            report.equality_witnesses.extend(part.witnesses);
        }
    }
}

fn require_q(q: u32, min: u32, theorem: &str) -> Result<()> {
    if q < min {
        return Err(Error::Precondition(format!(
            "{theorem} requires q >= {min}, got {q}"
        )));
    }
    Ok(())
}

fn leq_s(x: &ExpVector, y: &ExpVector) -> bool {
    x.leq_s(y).unwrap_or(false)
}

fn leq_w(x: &ExpVector, y: &ExpVector) -> bool {
    x.leq_w(y).unwrap_or(false)
}

/// `‖π‖ ≤_s ‖1_{Sp(2q,F)}‖` on every dual point, with the points attaining
/// equality.
pub fn verify_bound_by_trivial(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    require_q(q, 1, "bound-by-trivial")?;
    let bound = trivial_norm(GroupKind::Sp, q);
    let mut report = ViolationReport::new("bound-by-trivial", q, grid);
    let parts = scan_dual(q, grid, |pts| {
        let mut part = Partial::default();
        for pt in pts {
            part.checked += 1;
            let norm = pt.norm();
            if !leq_s(&norm, &bound) {
                part.violate(&pt, &norm, &bound, "<=_s");
            } else if norm == bound {
                part.witnesses.push(pt.to_string());
            }
        }
        part
    });
    Partial::merge_into(parts, &mut report);
    report.notes.push(
        "the Steinberg representation also attains equality but is not unramified; \
         that case cannot be witnessed here"
            .to_string(),
    );
    Ok(report)
}

/// Over non-trivial dual points: `‖π‖ ≤_w (q−1,…,1,0)` and
/// `‖π‖ ≤_s (q−1,…,1,1/2)`. Witnesses are points equal to the second bound.
pub fn verify_isolation(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    require_q(q, 2, "isolation")?;
    let weak = isolation_weak_bound(q);
    let strong = isolation_strong_bound(q);
    let mut report = ViolationReport::new("isolation", q, grid);
    let parts = scan_dual(q, grid, |pts| {
        let mut part = Partial::default();
        let mut all_strict = 0u64;
        for pt in pts.iter().filter(|pt| !pt.is_trivial()) {
            part.checked += 1;
            let norm = pt.norm();
            if !leq_w(&norm, &weak) {
                part.violate(pt, &norm, &weak, "<=_w");
            }
            if !leq_s(&norm, &strong) {
                part.violate(pt, &norm, &strong, "<=_s");
            } else if norm == strong {
                part.witnesses.push(pt.to_string());
            }
            if norm.lt_s_all(&strong).unwrap_or(false) {
                all_strict += 1;
            }
        }
        (part, all_strict)
    });
    let all_strict: u64 = parts.iter().map(|(_, n)| n).sum();
    Partial::merge_into(parts.into_iter().map(|(p, _)| p).collect(), &mut report);
    report.notes.push(format!(
        "{all_strict} of {} points are below (q-1,...,1,1/2) in every coordinate",
        report.points_checked
    ));
    Ok(report)
}

/// Strongly negative points against `[1,q]_↓` and, when non-trivial,
/// `[0,q−1]_↓`. The trivial representation is the expected equality witness.
pub fn verify_strongly_negative_bounds(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    require_q(q, 2, "class-bounds-strongly-negative")?;
    let mut report = ViolationReport::new("class-bounds-strongly-negative", q, grid);
    let top = trivial_norm(GroupKind::Sp, q);
    for (j, norm) in enumerate_strongly_negative(q) {
        report.points_checked += 1;
        let trivial = j.is_trivial_block();
        if let Verdict::Rejected(why) = sn_bound_check(&norm, q, trivial) {
            report.violations.push(Violation {
                point: j.to_string(),
                norm: norm.clone(),
                bound: top.clone(),
                ordering: why.describe().to_string(),
            });
        } else if norm == top {
            report.equality_witnesses.push(j.to_string());
        }
    }
    Ok(report)
}

/// Negative, not strongly negative points against the two-way bound.
pub fn verify_negative_bounds(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    require_q(q, 2, "class-bounds-negative")?;
    let mut report = ViolationReport::new("class-bounds-negative", q, grid);
    let negs: Vec<_> = enumerate_negative(q, grid)
        .into_iter()
        .filter(|(neg, _)| !neg.is_strongly_negative())
        .collect();
    let parts: Vec<Partial> = negs
        .par_iter()
        .map(|(neg, norm)| {
            let mut part = Partial {
                checked: 1,
                ..Partial::default()
            };
            if let Verdict::Rejected(why) = neg_bound_check(norm, q) {
                part.violate(neg, norm, &shifted_run(q), why.describe());
            }
            part
        })
        .collect();
    Partial::merge_into(parts, &mut report);
    Ok(report)
}

/// Dual points with at least one positive exponent against
/// `([1,q−1]_↓ ⌢ (1/2))_↓` and the sum bound `q(q−1)/2`.
pub fn verify_nonnegative_bounds(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    require_q(q, 2, "class-bounds-nonnegative")?;
    let bound = half_tail_bound(q);
    let mut report = ViolationReport::new("class-bounds-nonnegative", q, grid);
    let parts = scan_dual(q, grid, |pts| {
        let mut part = Partial::default();
        for pt in pts.iter().filter(|pt| !pt.phis().is_empty()) {
            part.checked += 1;
            let norm = pt.norm();
            if let Verdict::Rejected(why) = nonneg_unitary_bound_check(&norm, q) {
                part.violate(pt, &norm, &bound, why.describe());
            }
        }
        part
    });
    Partial::merge_into(parts, &mut report);
    Ok(report)
}

/// The three class-wise bounds: strongly negative, negative, and unitary
/// non-negative points.
pub fn verify_class_bounds(q: u32, grid: &GridSpec) -> Result<Vec<ViolationReport>> {
    Ok(vec![
        verify_strongly_negative_bounds(q, grid)?,
        verify_negative_bounds(q, grid)?,
        verify_nonnegative_bounds(q, grid)?,
    ])
}

/// Norm sums of the grid points `ν^e·1_{GL(2)} ⋊ 1_{Sp(0,F)}` of `Sp(4,F)`
/// that lie in the dual, keyed by `e`.
pub fn sp4_complementary_norm_sums(grid: &GridSpec) -> BTreeMap<Rational, Rational> {
    enumerate_dual_points(2, grid)
        .into_iter()
        .filter_map(|pt| match pt.phis() {
            [phi]
                if phi.chi == UnitaryChar::TRIVIAL
                    && phi.p == 2
                    && pt.neg().is_strongly_negative()
                    && pt.neg().rank() == 0 =>
            {
                Some((phi.e, pt.norm().sum()))
            }
            _ => None,
        })
        .collect()
}

/// Absolute support exponents of a point grouped by cuspidal class, the
/// classes being characters up to inversion.
pub fn cuspidal_classes(pt: &DualPoint) -> BTreeMap<UnitaryChar, ExponentClassData> {
    let mut grouped: BTreeMap<UnitaryChar, Vec<Rational>> = BTreeMap::new();
    for (chi, e) in pt.support() {
        grouped.entry(chi.canonical()).or_default().push(e.abs());
    }
    grouped
        .into_iter()
        .map(|(chi, mut exps)| {
            exps.sort();
            let abs = ExpVector::new(exps);
            let data = match chi.self_dual() {
                Some(sd) => ExponentClassData::self_dual(abs, alpha_cusp(sd)),
                None => ExponentClassData::non_self_dual(abs),
            };
            (chi, data)
        })
        .collect()
}

/// Per-index caps the filters compare a class against, ascending: `i/2` for
/// a non-self-dual class, `i − 1/2` above a reducibility point 0, and
/// `α^{(π)} + i` otherwise.
pub fn filter_caps(data: &ExponentClassData) -> ExpVector {
    let exps = data.abs_exponents.entries();
    let Some(alpha) = data.alpha_cusp else {
        return (1..=exps.len() as i64).map(Rational::halves).collect();
    };
    let mut above: Vec<Rational> = exps.iter().copied().filter(|&a| a > alpha).collect();
    above.sort();
    above.dedup();
    let base = if alpha.is_zero() {
        -Rational::HALF
    } else {
        match exps.iter().copied().filter(|&a| a <= alpha).max() {
            Some(low) => low,
            None => return ExpVector::empty(),
        }
    };
    (1..=above.len() as i64)
        .map(|i| base + Rational::integer(i))
        .collect()
}

/// Runs the exponent-class filters on every dual point; any rejection is a
/// violation.
pub fn verify_filters_consistency(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    require_q(q, 1, "filter-consistency")?;
    let mut report = ViolationReport::new("filter-consistency", q, grid);
    let parts = scan_dual(q, grid, |pts| {
        let mut part = Partial::default();
        for pt in pts {
            part.checked += 1;
            for (chi, data) in cuspidal_classes(&pt) {
                let verdict = if data.alpha_cusp.is_some() {
                    filter_selfdual(&data)
                } else {
                    filter_nonselfdual(&data)
                };
                if let Verdict::Rejected(clause) = verdict {
                    let ordering = format!("class {chi} ({}): {clause}", data.abs_exponents);
                    part.violate(&pt, &pt.norm(), &filter_caps(&data), &ordering);
                }
            }
        }
        part
    });
    Partial::merge_into(parts, &mut report);
    Ok(report)
}

/// Largest entry sum of `‖π‖` over non-trivial dual points, with the first
/// point attaining it.
pub fn extremal_norm_sum(q: u32, grid: &GridSpec) -> Result<(Rational, DualPoint)> {
    require_q(q, 2, "extremal-norm-sum")?;
    let best = scan_dual(q, grid, |pts| {
        pts.into_iter()
            .filter(|pt| !pt.is_trivial())
            .map(|pt| (pt.norm().sum(), pt))
            .fold(
                None,
                |acc: Option<(Rational, DualPoint)>, (s, pt)| match acc {
                    Some((b, _)) if b >= s => acc,
                    _ => Some((s, pt)),
                },
            )
    });
    best.into_iter()
        .flatten()
        .fold(
            None,
            |acc: Option<(Rational, DualPoint)>, (s, pt)| match acc {
                Some((b, _)) if b >= s => acc,
                _ => Some((s, pt)),
            },
        )
        .ok_or_else(|| Error::Precondition(format!("no non-trivial points at q = {q}")))
}

/// Report form of [`extremal_norm_sum`]: a violation if the maximum exceeds
/// `q(q−1)/2`.
pub fn verify_extremal(q: u32, grid: &GridSpec) -> Result<ViolationReport> {
    let (sum, witness) = extremal_norm_sum(q, grid)?;
    let mut report = ViolationReport::new("extremal-norm-sum", q, grid);
    report.points_checked = count_dual_points(q, grid);
    let limit = Rational::new(q as i64 * (q as i64 - 1), 2);
    let norm = witness.norm();
    if sum > limit {
        report.violations.push(Violation {
            point: witness.to_string(),
            norm,
            bound: isolation_weak_bound(q),
            ordering: "sum <= q(q-1)/2".to_string(),
        });
    } else if sum == limit {
        report.equality_witnesses.push(witness.to_string());
    }
    report
        .notes
        .push(format!("maximum norm sum {sum}, limit {limit}"));
    Ok(report)
}
