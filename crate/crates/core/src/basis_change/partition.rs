use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_data::Weight;

/// An integer partition, parts in non-increasing order, no zero parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The hook `(a, 1^r)`.
    pub fn hook(arm: u32, leg: usize) -> Self {
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ'ᵢ = #{j : λⱼ ≥ i}`.
    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    /// The weight `Σ λᵢ εᵢ` in rank `n`.
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        if self.len() > n {
            return Err(Error::PartitionTooLong {
                partition: self.to_string(),
                rank: n,
            });
        }
        Ok(Weight::from_integers((0..n).map(|i| self.0.get(i).copied().unwrap_or(0) as i32)))
    }

    /// Reads a dominant integral weight with non-negative coordinates.
    pub fn from_weight(w: &Weight) -> Option<Self> {
        if !w.is_integral() || w.doubled().iter().any(|&d| d < 0) {
            return None;
        }
        Some(Partition::new(w.doubled().iter().map(|&d| (d / 2) as u32).collect()))
    }

    /// All non-empty partitions of size at most `max_size` with at most
    /// `max_parts` parts, ordered by size then reverse-lexicographically.
    pub fn enumerate(max_size: u32, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for size in 1..=max_size {
            let mut cur = Vec::new();
            gen(size, size, max_parts, &mut cur, &mut out);
        }
        out
    }
}

fn gen(remaining: u32, max_part: u32, max_parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_parts {
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        cur.push(p);
        gen(remaining - p, p, max_parts, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition(vec![]));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}
