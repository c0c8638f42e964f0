//! Jordan-block data of strongly negative unramified representations.
//!
//! A strongly negative unramified representation of `Sp(2q,F)` is encoded by
//! a pair `(t, s)` of partitions into distinct odd parts: `t` collects the
//! blocks attached to the trivial character, `s` those attached to the
//! unramified sign character. The pair must satisfy `|t| + |s| = 2q + 1` with
//! `card(s)` even.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orderings::{segment_exponents, ExpVector};
use crate::rational::Rational;

/// The two self-dual unramified characters of `F^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelfDualChar {
    Trivial,
    Sgn,
}

impl SelfDualChar {
    pub const ALL: [SelfDualChar; 2] = [SelfDualChar::Trivial, SelfDualChar::Sgn];
}

impl fmt::Display for SelfDualChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDualChar::Trivial => "1",
            SelfDualChar::Sgn => "sgn",
        })
    }
}

/// Strictly decreasing list of odd positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct OddPartition(Vec<u32>);

impl OddPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let odd = parts.iter().all(|&p| p % 2 == 1);
        let decreasing = parts.windows(2).all(|w| w[0] > w[1]);
        if !odd || !decreasing {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(OddPartition(parts))
    }

    pub fn empty() -> Self {
        OddPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `⊢(p)`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `card(p)`.
    pub fn card(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.contains(&part)
    }
}

impl TryFrom<Vec<u32>> for OddPartition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        OddPartition::new(parts)
    }
}

impl From<OddPartition> for Vec<u32> {
    fn from(p: OddPartition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n` into distinct odd parts, each part at most `max_part`,
/// in descending lexicographic order.
pub fn distinct_odd_partitions(n: u32, max_part: u32) -> Vec<OddPartition> {
    fn go(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<OddPartition>) {
        if n == 0 {
            out.push(OddPartition(prefix.clone()));
            return;
        }
        let mut part = max_part.min(n);
        if part.is_multiple_of(2) {
            part = part.saturating_sub(1);
        }
        while part >= 1 {
            prefix.push(part);
            go(n - part, part.saturating_sub(2), prefix, out);
            prefix.pop();
            if part < 2 {
                break;
            }
            part -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// A member `(t, s)` of `Jord_sn(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JordSN {
    t: OddPartition,
    s: OddPartition,
    rank: u32,
}

impl JordSN {
    pub fn new(t: OddPartition, s: OddPartition) -> Result<Self> {
        let total = t.size() + s.size();
        if total.is_multiple_of(2) {
            return Err(Error::InvalidJordan(format!(
                "|t| + |s| = {total} is not of the form 2q+1"
            )));
        }
        if !s.card().is_multiple_of(2) {
            return Err(Error::InvalidJordan(format!(
                "sign part {s} has odd cardinality"
            )));
        }
        Ok(JordSN {
            t,
            s,
            rank: (total - 1) / 2,
        })
    }

    pub fn from_parts(t: &[u32], s: &[u32]) -> Result<Self> {
        JordSN::new(
            OddPartition::new(t.to_vec())?,
            OddPartition::new(s.to_vec())?,
        )
    }

    /// `((2q+1), ∅)`, the datum of the trivial representation.
    pub fn trivial(q: u32) -> Self {
        JordSN {
            t: OddPartition(vec![2 * q + 1]),
            s: OddPartition::empty(),
            rank: q,
        }
    }

    pub fn t(&self) -> &OddPartition {
        &self.t
    }

    pub fn s(&self) -> &OddPartition {
        &self.s
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `J(χ)`.
    pub fn part(&self, chi: SelfDualChar) -> &OddPartition {
        match chi {
            SelfDualChar::Trivial => &self.t,
            SelfDualChar::Sgn => &self.s,
        }
    }

    /// `J(χ)'`: `J(1) ∪ {−1}` for the trivial character, `J(sgn)` otherwise.
    /// Always of even cardinality, sorted descending.
    pub fn adjoin_prime(&self, chi: SelfDualChar) -> Vec<i64> {
        let mut parts: Vec<i64> = self.part(chi).parts().iter().map(|&p| p as i64).collect();
        if chi == SelfDualChar::Trivial {
            parts.push(-1);
        }
        parts
    }

    /// Segments `(χ, r1, r2)` whose product induces `σ(J)`: consecutive pairs
    /// `(a_{2i}, a_{2i−1})` of `J(χ)'` give `[−(a_{2i}−1)/2, (a_{2i−1}−1)/2]`.
    pub fn sigma_segments(&self) -> Vec<(SelfDualChar, Rational, Rational)> {
        let mut segs = Vec::new();
        for chi in SelfDualChar::ALL {
            for pair in self.adjoin_prime(chi).chunks_exact(2) {
                let (larger, smaller) = (pair[0], pair[1]);
                segs.push((
                    chi,
                    Rational::halves(-(larger - 1)),
                    Rational::halves(smaller - 1),
                ));
            }
        }
        segs
    }

    /// Signed cuspidal-support exponents of `σ(J)`, tagged by character.
    pub fn sigma_support(&self) -> Vec<(SelfDualChar, Rational)> {
        let mut out = Vec::with_capacity(self.rank as usize);
        for (chi, r1, r2) in self.sigma_segments() {
            // both ends are integers, so the span is always integral or empty
            let exps = segment_exponents(r1, r2).expect("integral segment");
            out.extend(exps.iter().map(|&e| (chi, e)));
        }
        out
    }

    /// `‖σ(J)‖`: absolute values of the support exponents, descending.
    pub fn sigma_norm(&self) -> ExpVector {
        self.sigma_support()
            .into_iter()
            .map(|(_, e)| e.abs())
            .collect::<ExpVector>()
            .sort_desc()
    }

    pub fn is_trivial_block(&self) -> bool {
        self.s.card() == 0 && self.t.parts() == [2 * self.rank + 1]
    }

    /// `(χ, p) ∈ J`.
    pub fn contains(&self, chi: SelfDualChar, p: u32) -> bool {
        self.part(chi).contains(p)
    }

    fn canonical_cmp(&self, other: &JordSN) -> Ordering {
        // descending lexicographic on (t, s)
        (other.t.parts(), other.s.parts()).cmp(&(self.t.parts(), self.s.parts()))
    }
}

impl fmt::Display for JordSN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma(t={};s={})", self.t, self.s)
    }
}

impl PartialOrd for JordSN {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for JordSN {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.canonical_cmp(other))
    }
}

/// Every member of `Jord_sn(q)`, in descending lexicographic order on `(t, s)`.
pub fn enumerate_jord_sn(q: u32) -> Vec<JordSN> {
    let total = 2 * q + 1;
    let mut out = Vec::new();
    // |t| is odd because |s| is a sum of an even number of odd parts
    for t_size in (1..=total).step_by(2) {
        let s_size = total - t_size;
        let ss: Vec<OddPartition> = distinct_odd_partitions(s_size, s_size)
            .into_iter()
            .filter(|s| s.card() % 2 == 0)
            .collect();
        if ss.is_empty() {
            continue;
        }
        for t in distinct_odd_partitions(t_size, t_size) {
            for s in &ss {
                out.push(JordSN {
                    t: t.clone(),
                    s: s.clone(),
                    rank: q,
                });
            }
        }
    }
    out.sort();
    out
}
