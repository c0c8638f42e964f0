//! Candidate points of the unramified unitary dual of `Sp(2q,F)`.
//!
//! A point is `φ_1 × … × φ_m ⋊ σ_neg`: each `φ_i` is an unramified character
//! of some `GL(p,F)` with positive exponent and `σ_neg` is a negative
//! representation `ψ_1 × … × ψ_l ⋊ σ(J)`. [`check_dual_conditions`] decides
//! whether such data belongs to the unitary dual.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jordan::{JordSN, SelfDualChar};
use crate::orderings::ExpVector;
use crate::rational::Rational;

/// An unramified unitary character of `F^×`, stored as the angle `k/N` of its
/// value `exp(2πi·k/N)` at the uniformizer.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitaryChar(Rational);

impl UnitaryChar {
    pub const TRIVIAL: UnitaryChar = UnitaryChar(Rational::ZERO);
    pub const SGN: UnitaryChar = UnitaryChar(Rational::HALF);

    /// The character of angle `angle mod 1`.
    pub fn new(angle: Rational) -> Self {
        let reduced = angle - Rational::integer(angle.floor());
        UnitaryChar(reduced)
    }

    pub fn angle(&self) -> Rational {
        self.0
    }

    pub fn inverse(&self) -> Self {
        if self.0.is_zero() {
            *self
        } else {
            UnitaryChar(Rational::ONE - self.0)
        }
    }

    pub fn self_dual(&self) -> Option<SelfDualChar> {
        if self.0 == Rational::ZERO {
            Some(SelfDualChar::Trivial)
        } else if self.0 == Rational::HALF {
            Some(SelfDualChar::Sgn)
        } else {
            None
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual().is_some()
    }

    /// Representative of `{c, c⁻¹}` with angle at most 1/2.
    pub fn canonical(&self) -> Self {
        if self.0 <= Rational::HALF {
            *self
        } else {
            self.inverse()
        }
    }
}

impl From<SelfDualChar> for UnitaryChar {
    fn from(chi: SelfDualChar) -> Self {
        match chi {
            SelfDualChar::Trivial => UnitaryChar::TRIVIAL,
            SelfDualChar::Sgn => UnitaryChar::SGN,
        }
    }
}

impl fmt::Display for UnitaryChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for UnitaryChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi({})", self.0)
    }
}

impl FromStr for UnitaryChar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let angle: Rational = s.parse()?;
        if angle.is_negative() || angle >= Rational::ONE {
            return Err(Error::InvalidParameter(format!(
                "character angle {angle} outside [0,1)"
            )));
        }
        Ok(UnitaryChar(angle))
    }
}

impl Serialize for UnitaryChar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnitaryChar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Support exponents `center − (p−1)/2, …, center + (p−1)/2`.
fn centered_run(center: Rational, p: u32) -> impl Iterator<Item = Rational> {
    let start = center - Rational::halves(p as i64 - 1);
    (0..p as i64).map(move |i| start + Rational::integer(i))
}

/// `ν^e · χ∘det` on `GL(p,F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GLChar {
    pub chi: UnitaryChar,
    pub p: u32,
    pub e: Rational,
}

impl GLChar {
    pub fn new(chi: UnitaryChar, p: u32, e: Rational) -> Self {
        GLChar { chi, p, e }
    }

    pub fn support_exponents(&self) -> ExpVector {
        centered_run(self.e, self.p).collect()
    }

    pub fn is_self_dual(&self) -> bool {
        self.chi.is_self_dual() && self.e.is_zero()
    }
}

impl fmt::Display for GLChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi(chi={},p={},e={})", self.chi, self.p, self.e)
    }
}

/// `ψ_1 × … × ψ_l ⋊ σ(J)` with each `ψ_i` a unitary unramified character of
/// `GL(n_i,F)`, kept in canonical form: characters replaced by the
/// representative of `{ψ, ψ⁻¹}` with angle at most 1/2, list sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegativeRep {
    psis: Vec<(UnitaryChar, u32)>,
    jord: JordSN,
}

impl NegativeRep {
    pub fn new(psis: Vec<(UnitaryChar, u32)>, jord: JordSN) -> Result<Self> {
        if let Some((chi, _)) = psis.iter().find(|(_, n)| *n == 0) {
            return Err(Error::InvalidParameter(format!(
                "character {chi} attached to GL(0)"
            )));
        }
        Ok(NegativeRep { psis, jord }.canonical())
    }

    pub fn strongly_negative(jord: JordSN) -> Self {
        NegativeRep {
            psis: Vec::new(),
            jord,
        }
    }

    pub fn canonical(&self) -> Self {
        let mut psis: Vec<_> = self.psis.iter().map(|&(c, n)| (c.canonical(), n)).collect();
        psis.sort();
        NegativeRep {
            psis,
            jord: self.jord.clone(),
        }
    }

    pub fn psis(&self) -> &[(UnitaryChar, u32)] {
        &self.psis
    }

    pub fn jord(&self) -> &JordSN {
        &self.jord
    }

    pub fn rank(&self) -> u32 {
        self.psis.iter().map(|(_, n)| n).sum::<u32>() + self.jord.rank()
    }

    pub fn is_strongly_negative(&self) -> bool {
        self.psis.is_empty()
    }

    /// Signed cuspidal support, tagged by character.
    pub fn support(&self) -> Vec<(UnitaryChar, Rational)> {
        let mut out = Vec::with_capacity(self.rank() as usize);
        for &(chi, n) in &self.psis {
            out.extend(centered_run(Rational::ZERO, n).map(|e| (chi, e)));
        }
        out.extend(
            self.jord
                .sigma_support()
                .into_iter()
                .map(|(chi, e)| (chi.into(), e)),
        );
        out
    }

    /// `‖σ_neg‖`.
    pub fn norm(&self) -> ExpVector {
        negative_norm(self)
    }
}

impl fmt::Display for NegativeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (chi, n) in &self.psis {
            write!(f, "psi(chi={chi},n={n}) x ")?;
        }
        write!(f, "{}", self.jord)
    }
}

/// `φ_1 × … × φ_m ⋊ σ_neg` with every `e(φ_i) > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualPoint {
    phis: Vec<GLChar>,
    neg: NegativeRep,
}

impl DualPoint {
    pub fn new(mut phis: Vec<GLChar>, neg: NegativeRep) -> Result<Self> {
        for phi in &phis {
            if phi.p == 0 {
                return Err(Error::InvalidParameter(format!("{phi} has rank 0")));
            }
            if phi.e <= Rational::ZERO {
                return Err(Error::InvalidParameter(format!(
                    "{phi} must have a positive exponent"
                )));
            }
        }
        phis.sort();
        Ok(DualPoint { phis, neg })
    }

    pub fn negative(neg: NegativeRep) -> Self {
        DualPoint {
            phis: Vec::new(),
            neg,
        }
    }

    pub fn phis(&self) -> &[GLChar] {
        &self.phis
    }

    pub fn neg(&self) -> &NegativeRep {
        &self.neg
    }

    pub fn rank(&self) -> u32 {
        self.phis.iter().map(|phi| phi.p).sum::<u32>() + self.neg.rank()
    }

    /// The trivial representation `1_{Sp(2q,F)}`.
    pub fn is_trivial(&self) -> bool {
        self.phis.is_empty() && self.neg.psis.is_empty() && self.neg.jord.is_trivial_block()
    }

    /// Signed cuspidal support, tagged by character.
    pub fn support(&self) -> Vec<(UnitaryChar, Rational)> {
        let mut out: Vec<_> = self
            .phis
            .iter()
            .flat_map(|phi| centered_run(phi.e, phi.p).map(move |e| (phi.chi, e)))
            .collect();
        out.extend(self.neg.support());
        out
    }

    /// `‖π‖`.
    pub fn norm(&self) -> ExpVector {
        dual_point_norm(self)
    }

    /// Exponent multisets `e_π(φ)`, keyed by `(χ, p)`, each sorted ascending.
    pub fn exponent_classes(&self) -> BTreeMap<(UnitaryChar, u32), Vec<Rational>> {
        let mut classes: BTreeMap<(UnitaryChar, u32), Vec<Rational>> = BTreeMap::new();
        for phi in &self.phis {
            classes.entry((phi.chi, phi.p)).or_default().push(phi.e);
        }
        for exps in classes.values_mut() {
            exps.sort();
        }
        classes
    }
}

impl fmt::Display for DualPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for phi in &self.phis {
            write!(f, "{phi} x ")?;
        }
        write!(f, "{}", self.neg)
    }
}

/// `ν^{1/2} χ∘det_p ⋊ 1_{Sp(0,F)}` reduces exactly for even `p`.
pub fn reduces_at_half(p: u32) -> bool {
    p.is_multiple_of(2)
}

/// Reducibility of `χ∘det_p ⋊ σ_neg` for a self-dual `χ`.
pub fn reduces_at_zero_class(chi: SelfDualChar, p: u32, neg: &NegativeRep) -> bool {
    p % 2 == 1 && !neg.jord.contains(chi, p) && !neg.psis.contains(&(chi.into(), p))
}

/// Reducibility of `φ ⋊ σ_neg` for a unitary self-dual `φ`.
pub fn reduces_at_zero(phi: &GLChar, neg: &NegativeRep) -> Result<bool> {
    if !phi.e.is_zero() {
        return Err(Error::Precondition(format!("{phi} has non-zero exponent")));
    }
    let chi = phi
        .chi
        .self_dual()
        .ok_or_else(|| Error::Precondition(format!("{phi} is not self-dual")))?;
    Ok(reduces_at_zero_class(chi, phi.p, neg))
}

/// Absolute support exponents of `σ_neg`, descending; length equals the rank.
pub fn negative_norm(neg: &NegativeRep) -> ExpVector {
    neg.support()
        .into_iter()
        .map(|(_, e)| e.abs())
        .collect::<ExpVector>()
        .sort_desc()
}

/// Absolute support exponents of the whole point, descending.
pub fn dual_point_norm(pt: &DualPoint) -> ExpVector {
    pt.support()
        .into_iter()
        .map(|(_, e)| e.abs())
        .collect::<ExpVector>()
        .sort_desc()
}

/// Outcome of a membership or bound test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<R> {
    Accepted,
    Rejected(R),
}

impl<R> Verdict<R> {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }

    pub fn rejection(&self) -> Option<&R> {
        match self {
            Verdict::Accepted => None,
            Verdict::Rejected(r) => Some(r),
        }
    }
}

/// Classification conditions, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionTag {
    /// (1) `e_π(φ̃) = e_π(φ)`.
    InverseSymmetry,
    /// (2) every exponent below 1/2.
    BelowHalf,
    /// (3) every exponent below 1.
    BelowOne,
    /// (3) `β_1 < … < β_l`.
    BetaStrict,
    /// (3a) `α_i + β_j ≠ 1`, and `α_{k−1} ≠ 1/2` when `k > 1`.
    ComplementaryPair,
    /// (3b) evenly many `α_i > 1 − β_1`.
    EvenAboveFirstBeta,
    /// (3c) oddly many `α_i` strictly between `1 − β_{j+1}` and `1 − β_j`.
    OddBetweenBetas,
    /// (3d) `k + l` even when `φ ⋊ σ_neg` reduces.
    ParityAtReducibility,
}

impl ConditionTag {
    pub fn code(&self) -> &'static str {
        match self {
            ConditionTag::InverseSymmetry => "1",
            ConditionTag::BelowHalf => "2",
            ConditionTag::BelowOne => "3",
            ConditionTag::BetaStrict => "3-order",
            ConditionTag::ComplementaryPair => "3a",
            ConditionTag::EvenAboveFirstBeta => "3b",
            ConditionTag::OddBetweenBetas => "3c",
            ConditionTag::ParityAtReducibility => "3d",
        }
    }
}

impl fmt::Display for ConditionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.code())
    }
}

/// First failed condition and the exponent class `(χ, p)` it failed on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub condition: ConditionTag,
    pub chi: UnitaryChar,
    pub p: u32,
}

/// How an exponent class is constrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    /// Non-self-dual character, or self-dual with `ν^{1/2}φ ⋊ 1` reducible.
    HalfBounded,
    /// Self-dual with `ν^{1/2}φ ⋊ 1` irreducible; carries whether `φ ⋊ σ_neg`
    /// reduces.
    Complementary { reduces_at_zero: bool },
}

impl ClassKind {
    pub fn of(chi: UnitaryChar, p: u32, neg: &NegativeRep) -> ClassKind {
        match chi.self_dual() {
            Some(sd) if !reduces_at_half(p) => ClassKind::Complementary {
                reduces_at_zero: reduces_at_zero_class(sd, p, neg),
            },
            _ => ClassKind::HalfBounded,
        }
    }
}

/// Conditions (2)–(3d) on one exponent multiset (sorted ascending).
pub fn class_failure(kind: ClassKind, exps: &[Rational]) -> Option<ConditionTag> {
    let reduces = match kind {
        ClassKind::HalfBounded => {
            return exps
                .iter()
                .any(|&a| a >= Rational::HALF)
                .then_some(ConditionTag::BelowHalf);
        }
        ClassKind::Complementary { reduces_at_zero } => reduces_at_zero,
    };
    if exps.iter().any(|&a| a >= Rational::ONE) {
        return Some(ConditionTag::BelowOne);
    }
    let split = exps.partition_point(|&a| a <= Rational::HALF);
    let (alphas, betas) = exps.split_at(split);
    if betas.windows(2).any(|w| w[0] >= w[1]) {
        return Some(ConditionTag::BetaStrict);
    }
    let k = alphas.len();
    let sums_to_one = alphas
        .iter()
        .any(|&a| betas.iter().any(|&b| a + b == Rational::ONE));
    if sums_to_one || (k > 1 && alphas[k - 2] == Rational::HALF) {
        return Some(ConditionTag::ComplementaryPair);
    }
    if let Some(&b1) = betas.first() {
        let above = alphas.iter().filter(|&&a| a > Rational::ONE - b1).count();
        if above % 2 != 0 {
            return Some(ConditionTag::EvenAboveFirstBeta);
        }
    }
    for w in betas.windows(2) {
        let (hi, lo) = (Rational::ONE - w[0], Rational::ONE - w[1]);
        let between = alphas.iter().filter(|&&a| hi > a && a > lo).count();
        if between % 2 != 1 {
            return Some(ConditionTag::OddBetweenBetas);
        }
    }
    if reduces && !exps.len().is_multiple_of(2) {
        return Some(ConditionTag::ParityAtReducibility);
    }
    None
}

/// Decides membership of a candidate point in the unramified unitary dual,
/// reporting the first failed condition in the fixed order of [`ConditionTag`].
pub fn check_dual_conditions(pt: &DualPoint) -> Verdict<Rejection> {
    let classes = pt.exponent_classes();
    let mut first: Option<Rejection> = None;
    let mut record = |condition: ConditionTag, chi: UnitaryChar, p: u32| {
        if first.as_ref().is_none_or(|r| condition < r.condition) {
            first = Some(Rejection { condition, chi, p });
        }
    };
    for (&(chi, p), exps) in &classes {
        if !chi.is_self_dual() {
            let mirror = classes.get(&(chi.inverse(), p)).map(Vec::as_slice);
            if mirror != Some(exps.as_slice()) {
                record(ConditionTag::InverseSymmetry, chi, p);
                continue;
            }
        }
        if let Some(tag) = class_failure(ClassKind::of(chi, p, &pt.neg), exps) {
            record(tag, chi, p);
        }
    }
    match first {
        None => Verdict::Accepted,
        Some(r) => Verdict::Rejected(r),
    }
}
