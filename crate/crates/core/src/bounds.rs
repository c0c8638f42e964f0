//! Closed-form bound vectors and necessary conditions on exponent multisets.
//!
//! Everything here is exact: square-root comparisons are cross-multiplied
//! into integer inequalities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orderings::{interval_desc, ExpVector};
use crate::rational::Rational;
use crate::spectrum::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    /// `Sp(2q,F)`.
    Sp,
    /// `SO(2q+1,F)`.
    SoOdd,
}

impl GroupKind {
    /// Dimension of the standard representation of the dual group.
    pub fn q_star(self, q: u32) -> i64 {
        match self {
            GroupKind::Sp => 2 * q as i64 + 1,
            GroupKind::SoOdd => 2 * q as i64,
        }
    }

    /// Exponent of `δ_{P_min}^{1/2}` on the first `GL(1)` of `S_{q+1}`.
    pub fn e_q(self, q: u32) -> Rational {
        match self {
            GroupKind::Sp => Rational::integer(q as i64 + 1),
            GroupKind::SoOdd => Rational::integer(q as i64) + Rational::HALF,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sp => "sp",
            GroupKind::SoOdd => "so-odd",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(GroupKind::Sp),
            "so" | "so-odd" | "so_odd" => Ok(GroupKind::SoOdd),
            other => Err(Error::InvalidParameter(format!("unknown group {other:?}"))),
        }
    }
}

/// `‖1_G‖` for `G` of rank `q`.
pub fn trivial_norm(g: GroupKind, q: u32) -> ExpVector {
    let top = g.e_q(q) - Rational::ONE;
    let bottom = g.e_q(0);
    interval_desc(bottom, top).expect("unit-step run")
}

/// Upper bound for `α²_{ρ,σ}` when `α_{ρ,σ} ≥ 1`, with `ρ` a self-dual cuspidal
/// representation of `GL(p,F)`.
pub fn cuspidal_alpha_sq_bound(p: u32, g: GroupKind, q: u32, integral: bool) -> Rational {
    let base = Rational::new(g.q_star(q), p as i64);
    if integral {
        base
    } else {
        base + Rational::new(1, 4)
    }
}

/// Which formula fixes the smallest entry of a fixed-parabolic bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParabolicMode {
    /// `t² ≤ q*/p + 1/4` with `p` the `GL` rank; reproduces the worked
    /// `p = 2, n = 5, q = 6` example.
    #[default]
    GlRank,
    /// `t² ≤ q*/n + 1/4` with `n` the multiplicity of the `GL` block.
    Multiplicity,
    /// `t² ≤ 2q/(n+1)` with `n` the multiplicity.
    RankRatio,
}

impl FromStr for ParabolicMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl-rank" => Ok(ParabolicMode::GlRank),
            "multiplicity" => Ok(ParabolicMode::Multiplicity),
            "rank-ratio" => Ok(ParabolicMode::RankRatio),
            other => Err(Error::InvalidParameter(format!("unknown mode {other:?}"))),
        }
    }
}

/// Largest `m ≥ 0` with `a·m² ≤ b`.
fn largest_square_multiple(a: i64, b: i64) -> i64 {
    debug_assert!(a > 0 && b >= 0);
    let mut m = 0;
    while a * (m + 1) * (m + 1) <= b {
        m += 1;
    }
    m
}

/// `c = max{t ∈ ½ℤ : t² ≤ q*/p + 1/4}`.
pub fn c_parabolic(p: u32, g: GroupKind, q: u32) -> Rational {
    // t = m/2:  p·m² ≤ 4q* + p
    let p = p as i64;
    Rational::halves(largest_square_multiple(p, 4 * g.q_star(q) + p))
}

/// `c` under an explicit choice of formula; `p` is the `GL` rank and `n` the
/// multiplicity.
pub fn c_parabolic_with(mode: ParabolicMode, p: u32, n: u32, g: GroupKind, q: u32) -> Rational {
    match mode {
        ParabolicMode::GlRank => c_parabolic(p, g, q),
        ParabolicMode::Multiplicity => c_parabolic(n, g, q),
        ParabolicMode::RankRatio => {
            // (m/2)² ≤ 2q/(n+1)  ⟺  (n+1)·m² ≤ 8q
            Rational::halves(largest_square_multiple(n as i64 + 1, 8 * q as i64))
        }
    }
}

/// `[c, c+n−1]_↓` with `c = c_parabolic(p, g, q)`.
pub fn parabolic_bound_vector(p: u32, n: u32, g: GroupKind, q: u32) -> ExpVector {
    parabolic_bound_vector_with(ParabolicMode::GlRank, p, n, g, q)
}

pub fn parabolic_bound_vector_with(
    mode: ParabolicMode,
    p: u32,
    n: u32,
    g: GroupKind,
    q: u32,
) -> ExpVector {
    let c = c_parabolic_with(mode, p, n, g, q);
    unit_run_from(c, n)
}

fn unit_run_from(c: Rational, n: u32) -> ExpVector {
    if n == 0 {
        return ExpVector::empty();
    }
    interval_desc(c, c + Rational::integer(n as i64 - 1)).expect("unit-step run")
}

/// `[c, c+n−1]_↓` with `c = (1 + jord_card)/2`.
pub fn bernstein_bound_vector(jord_card: u32, n: u32) -> ExpVector {
    unit_run_from(Rational::halves(1 + jord_card as i64), n)
}

/// `(n/2, (n−1)/2, …, 1, 1/2)`.
pub fn nonselfdual_bound_vector(n: u32) -> ExpVector {
    (1..=n as i64).rev().map(Rational::halves).collect()
}

/// Absolute exponents attached to one cuspidal class, plus the reducibility
/// point of the class when it is self-dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentClassData {
    pub abs_exponents: ExpVector,
    pub alpha_cusp: Option<Rational>,
}

impl ExponentClassData {
    pub fn non_self_dual(abs_exponents: ExpVector) -> Self {
        ExponentClassData {
            abs_exponents,
            alpha_cusp: None,
        }
    }

    pub fn self_dual(abs_exponents: ExpVector, alpha_cusp: Rational) -> Self {
        ExponentClassData {
            abs_exponents,
            alpha_cusp: Some(alpha_cusp),
        }
    }

    fn ascending(&self) -> Vec<Rational> {
        let mut v = self.abs_exponents.entries().to_vec();
        v.sort();
        v
    }
}

/// Clause of the exponent-class filters that failed. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum FilterClause {
    /// `|e(ρ_i)| ≤ i/2` fails at `index`.
    HalfIndex { index: usize },
    /// Consecutive values above the reducibility point differ by more than 1.
    Gap { index: usize },
    /// `α_i ≤ i − 1/2` fails (reducibility point 0).
    IndexMinusHalf { index: usize },
    /// No exponent at or below the reducibility point.
    MissingLowExponent,
    /// `α_1 − α^{(π)} ≤ 1` fails.
    FirstGapFromCusp,
    /// `α_i ≤ α^{(π)} + i` fails.
    CuspPlusIndex { index: usize },
    /// The data does not match the filter it was passed to.
    WrongClassKind,
}

impl fmt::Display for FilterClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterClause::HalfIndex { index } => write!(f, "|e_{index}| <= {index}/2"),
            FilterClause::Gap { index } => write!(f, "alpha_{index} - alpha_{} <= 1", index - 1),
            FilterClause::IndexMinusHalf { index } => write!(f, "alpha_{index} <= {index} - 1/2"),
            FilterClause::MissingLowExponent => f.write_str("some |e| <= alpha_cusp"),
            FilterClause::FirstGapFromCusp => f.write_str("alpha_1 - alpha^(pi) <= 1"),
            FilterClause::CuspPlusIndex { index } => {
                write!(f, "alpha_{index} <= alpha^(pi) + {index}")
            }
            FilterClause::WrongClassKind => f.write_str("class kind"),
        }
    }
}

/// Non-self-dual class: the `i`-th smallest absolute exponent is at most `i/2`.
pub fn filter_nonselfdual(data: &ExponentClassData) -> Verdict<FilterClause> {
    if data.alpha_cusp.is_some() {
        return Verdict::Rejected(FilterClause::WrongClassKind);
    }
    for (i, a) in data.ascending().iter().enumerate() {
        let index = i + 1;
        if *a > Rational::halves(index as i64) {
            return Verdict::Rejected(FilterClause::HalfIndex { index });
        }
    }
    Verdict::Accepted
}

/// Self-dual class with reducibility point `α_cusp`.
///
/// Only the distinct values strictly above `α_cusp` enter the gap and index
/// clauses. When `α_cusp = 0` those values must satisfy `α_i ≤ i − 1/2`; when
/// `α_cusp ≥ 1/2` some exponent must lie at or below `α_cusp`, and with
/// `α^{(π)}` the largest such exponent, `α_1 − α^{(π)} ≤ 1` and
/// `α_i ≤ α^{(π)} + i`.
pub fn filter_selfdual(data: &ExponentClassData) -> Verdict<FilterClause> {
    let Some(alpha_cusp) = data.alpha_cusp else {
        return Verdict::Rejected(FilterClause::WrongClassKind);
    };
    let exps = data.ascending();
    let mut above: Vec<Rational> = exps.iter().copied().filter(|&a| a > alpha_cusp).collect();
    above.dedup();

    for (i, w) in above.windows(2).enumerate() {
        if w[1] - w[0] > Rational::ONE {
            return Verdict::Rejected(FilterClause::Gap { index: i + 2 });
        }
    }

    if alpha_cusp.is_zero() {
        for (i, a) in above.iter().enumerate() {
            let index = i + 1;
            if *a > Rational::integer(index as i64) - Rational::HALF {
                return Verdict::Rejected(FilterClause::IndexMinusHalf { index });
            }
        }
        return Verdict::Accepted;
    }

    if alpha_cusp >= Rational::HALF {
        let Some(low) = exps.iter().copied().filter(|&a| a <= alpha_cusp).max() else {
            return Verdict::Rejected(FilterClause::MissingLowExponent);
        };
        if let Some(&first) = above.first() {
            if first - low > Rational::ONE {
                return Verdict::Rejected(FilterClause::FirstGapFromCusp);
            }
        }
        for (i, a) in above.iter().enumerate() {
            let index = i + 1;
            if *a > low + Rational::integer(index as i64) {
                return Verdict::Rejected(FilterClause::CuspPlusIndex { index });
            }
        }
    }
    Verdict::Accepted
}

/// Which bound a norm vector exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundFailure {
    /// Not `≤_s [1,q]_↓`.
    ExceedsTrivial,
    /// Non-trivial but not `≤_s [0,q−1]_↓`.
    ExceedsShifted,
    /// Neither `≤_s [0,q−1]_↓` nor `≤_s [1,q−2]_↓ ⌢ (1/2,1/2)`.
    BothDisjunctsFail,
    /// Not `≤_s ([1,q−1]_↓ ⌢ (1/2))_↓`.
    ExceedsHalfTail,
    /// Entry sum above `q(q−1)/2`.
    SumTooLarge,
    /// The norm is not a descending vector of length `q`.
    Malformed,
}

impl BoundFailure {
    pub fn describe(&self) -> &'static str {
        match self {
            BoundFailure::ExceedsTrivial => "<=_s [1,q]",
            BoundFailure::ExceedsShifted => "<=_s [0,q-1]",
            BoundFailure::BothDisjunctsFail => "<=_s [0,q-1] or <=_s [1,q-2]^(1/2,1/2)",
            BoundFailure::ExceedsHalfTail => "<=_s [1,q-1]^(1/2)",
            BoundFailure::SumTooLarge => "sum <= q(q-1)/2",
            BoundFailure::Malformed => "well-formed norm",
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

/// `[1,q]_↓`.
pub fn upper_run(q: u32) -> ExpVector {
    interval_desc(int(1), int(q as i64)).expect("unit-step run")
}

/// `[0,q−1]_↓`.
pub fn shifted_run(q: u32) -> ExpVector {
    interval_desc(int(0), int(q as i64 - 1)).expect("unit-step run")
}

/// `[1,q−2]_↓ ⌢ (1/2, 1/2)`, for `q ≥ 2`.
pub fn half_pair_bound(q: u32) -> ExpVector {
    let head = interval_desc(int(1), int(q as i64 - 2)).expect("unit-step run");
    head.concat(&ExpVector::new(vec![Rational::HALF, Rational::HALF]))
}

/// `([1,q−1]_↓ ⌢ (1/2))_↓`, for `q ≥ 1`.
pub fn half_tail_bound(q: u32) -> ExpVector {
    let head = interval_desc(int(1), int(q as i64 - 1)).expect("unit-step run");
    head.concat(&ExpVector::new(vec![Rational::HALF]))
        .sort_desc()
}

/// `(q−1, …, 1, 0)`.
pub fn isolation_weak_bound(q: u32) -> ExpVector {
    shifted_run(q)
}

/// `(q−1, …, 2, 1, 1/2)`.
pub fn isolation_strong_bound(q: u32) -> ExpVector {
    half_tail_bound(q)
}

fn well_formed(norm: &ExpVector, q: u32) -> bool {
    norm.len() == q as usize && norm.is_descending()
}

fn leq_s(x: &ExpVector, y: &ExpVector) -> bool {
    x.leq_s(y).unwrap_or(false)
}

/// Strongly negative points: `≤_s [1,q]_↓`, and `≤_s [0,q−1]_↓` unless trivial.
pub fn sn_bound_check(norm: &ExpVector, q: u32, is_trivial: bool) -> Verdict<BoundFailure> {
    if !well_formed(norm, q) {
        return Verdict::Rejected(BoundFailure::Malformed);
    }
    if !leq_s(norm, &upper_run(q)) {
        return Verdict::Rejected(BoundFailure::ExceedsTrivial);
    }
    if !is_trivial && !leq_s(norm, &shifted_run(q)) {
        return Verdict::Rejected(BoundFailure::ExceedsShifted);
    }
    Verdict::Accepted
}

/// Negative, not strongly negative points: one of the two disjuncts.
pub fn neg_bound_check(norm: &ExpVector, q: u32) -> Verdict<BoundFailure> {
    if q < 2 || !well_formed(norm, q) {
        return Verdict::Rejected(BoundFailure::Malformed);
    }
    if leq_s(norm, &shifted_run(q)) || leq_s(norm, &half_pair_bound(q)) {
        Verdict::Accepted
    } else {
        Verdict::Rejected(BoundFailure::BothDisjunctsFail)
    }
}

/// Unitary points that are not negative.
pub fn nonneg_unitary_bound_check(norm: &ExpVector, q: u32) -> Verdict<BoundFailure> {
    if q < 2 || !well_formed(norm, q) {
        return Verdict::Rejected(BoundFailure::Malformed);
    }
    if !leq_s(norm, &half_tail_bound(q)) {
        return Verdict::Rejected(BoundFailure::ExceedsHalfTail);
    }
    let q = q as i64;
    if norm.sum() > Rational::new(q * (q - 1), 2) {
        return Verdict::Rejected(BoundFailure::SumTooLarge);
    }
    Verdict::Accepted
}
