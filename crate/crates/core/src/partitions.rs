//! Integer partitions: the index set for characters, Weyl modules and
//! power-sum monomials.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored; `Partition::new(vec![2, 1, 0])` and
/// `Partition::new(vec![2, 1])` are the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and canonicalizes `parts`.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return domain(format!("parts {parts:?} contain an interior zero"));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition by sorting arbitrary nonnegative parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n, …, n)` with `rows` parts.
    pub fn rectangle(n: usize, rows: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n; rows])
        }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::rectangle(n, 1)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with implicit trailing zeros (0-based index).
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `λ'_j = |{i : λ_i ≥ j}|`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return domain(format!(
                "dominance needs equal sizes, got {} and {}",
                self.size(),
                other.size()
            ));
        }
        Ok(dominates_prefix(&self.0, &other.0))
    }

    /// Multiplies every part by `c`.
    pub fn scale(&self, c: usize) -> Partition {
        if c == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * c).collect())
    }

    /// Multiplicities `m_r` of each part size `r ≥ 1`, as `(r, m_r)` pairs in increasing `r`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((r, m)) if *r == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Pads with zeros to exactly `len` entries; `None` if there are more parts.
    pub fn padded(&self, len: usize) -> Option<Vec<usize>> {
        if self.length() > len {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(len, 0);
        Some(v)
    }
}

/// Prefix-sum dominance for weakly decreasing sequences of equal total.
pub(crate) fn dominates_prefix(big: &[usize], small: &[usize]) -> bool {
    let len = big.len().max(small.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..len {
        a += big.get(i).copied().unwrap_or(0);
        b += small.get(i).copied().unwrap_or(0);
        if b > a {
            return false;
        }
    }
    true
}

/// All partitions of `total` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn enumerate_partitions(total: usize, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(total, total, max_parts, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    // the remaining parts can absorb at most `slots * part`
    for part in (1..=max_part.min(remaining)).rev() {
        if part * slots < remaining {
            break;
        }
        current.push(part);
        fill(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

/// All partitions of `total` with no bound on the number of parts.
pub fn partitions_of(total: usize) -> Vec<Partition> {
    enumerate_partitions(total, total.max(1))
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `4,2`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// Parses a comma-separated list of nonnegative integers. `""` and `"()"` are empty.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Domain(format!("malformed part {t:?} in {s:?}")))
        })
        .collect()
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(de)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}
