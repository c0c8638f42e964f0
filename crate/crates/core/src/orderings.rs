//! Exponent vectors and the two dominance orderings on them.
//!
//! `x ≤_w y` compares prefix sums, `x ≤_s y` compares entries. Both are only
//! defined for vectors of equal length: callers that need padding must append
//! the zeros themselves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite sequence of exact exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVector(Vec<Rational>);

impl ExpVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        ExpVector(entries)
    }

    pub fn empty() -> Self {
        ExpVector(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        ExpVector(vec![Rational::ZERO; len])
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        ExpVector(entries.iter().copied().map(Rational::integer).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.0.iter()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    /// Descending rearrangement `x_↓`.
    pub fn sort_desc(&self) -> ExpVector {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        ExpVector(v)
    }

    pub fn is_descending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Entrywise absolute value, order preserved.
    pub fn abs(&self) -> ExpVector {
        ExpVector(self.0.iter().map(Rational::abs).collect())
    }

    pub fn concat(&self, other: &ExpVector) -> ExpVector {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        ExpVector(v)
    }

    /// Entrywise sum of two vectors of equal length.
    pub fn add(&self, other: &ExpVector) -> Result<ExpVector> {
        check_len(self, other)?;
        Ok(ExpVector(
            self.0.iter().zip(&other.0).map(|(a, b)| *a + *b).collect(),
        ))
    }

    pub fn prefix_sums(&self) -> Vec<Rational> {
        self.0
            .iter()
            .scan(Rational::ZERO, |acc, x| {
                *acc += *x;
                Some(*acc)
            })
            .collect()
    }

    /// `self ≤_w other`: every prefix sum is at most the matching prefix sum.
    pub fn leq_w(&self, other: &ExpVector) -> Result<bool> {
        check_len(self, other)?;
        Ok(self
            .prefix_sums()
            .iter()
            .zip(other.prefix_sums().iter())
            .all(|(a, b)| a <= b))
    }

    /// `self ≤_s other`: entrywise comparison.
    pub fn leq_s(&self, other: &ExpVector) -> Result<bool> {
        check_len(self, other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Every coordinate strictly smaller. Vacuously true for empty vectors.
    pub fn lt_s_all(&self, other: &ExpVector) -> Result<bool> {
        check_len(self, other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a < b))
    }

    /// `self ≤_s other` and `self ≠ other`.
    pub fn lt_s(&self, other: &ExpVector) -> Result<bool> {
        Ok(self.leq_s(other)? && self != other)
    }

    /// First index at which `self ≤_s other` fails.
    pub fn first_strong_excess(&self, other: &ExpVector) -> Result<Option<usize>> {
        check_len(self, other)?;
        Ok(self.0.iter().zip(&other.0).position(|(a, b)| a > b))
    }
}

fn check_len(x: &ExpVector, y: &ExpVector) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

impl From<Vec<Rational>> for ExpVector {
    fn from(v: Vec<Rational>) -> Self {
        ExpVector(v)
    }
}

impl FromIterator<Rational> for ExpVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        ExpVector(iter.into_iter().collect())
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the comma-separated form produced by `Display`, e.g. `"13/2,11/2"`.
impl FromStr for ExpVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(ExpVector::empty());
        }
        s.split(',').map(str::parse).collect()
    }
}

/// Unit-step run between `from` and `to`; empty when `to < from`.
fn unit_span(from: Rational, to: Rational) -> Result<Option<i64>> {
    if to < from {
        return Ok(None);
    }
    match (to - from).to_integer() {
        Some(n) => Ok(Some(n)),
        None => Err(Error::NonIntegralSpan { from, to }),
    }
}

/// `[u,v]_↓ = (v, v−1, …, u+1, u)`.
pub fn interval_desc(u: Rational, v: Rational) -> Result<ExpVector> {
    Ok(match unit_span(u, v)? {
        None => ExpVector::empty(),
        Some(n) => (0..=n).map(|i| v - Rational::integer(i)).collect(),
    })
}

/// Exponents `r1, r1+1, …, r2` of the segment `[ν^{r1}χ, ν^{r2}χ]`.
pub fn segment_exponents(r1: Rational, r2: Rational) -> Result<ExpVector> {
    Ok(match unit_span(r1, r2)? {
        None => ExpVector::empty(),
        Some(n) => (0..=n).map(|i| r1 + Rational::integer(i)).collect(),
    })
}
