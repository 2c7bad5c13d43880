//! Integer partitions and the two partial orders used throughout:
//! containment (cell-wise) and dominance (prefix sums).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0. Normalized on construction (trailing zeros
/// stripped); comparisons treat missing parts as 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part before a positive part in {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The rectangle (m^k): k rows of length m. Empty if m or k is 0.
    pub fn rectangle(m: usize, k: usize) -> Self {
        if m == 0 || k == 0 {
            return Self::empty();
        }
        Self { parts: vec![m; k] }
    }

    /// The hook (m, 1^(k-1)): one row of length m and k-1 rows of length 1.
    /// Empty if m or k is 0.
    pub fn hook(m: usize, k: usize) -> Self {
        if m == 0 || k == 0 {
            return Self::empty();
        }
        let mut parts = vec![1; k];
        parts[0] = m;
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (0-based); 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the diagram: result[i] = #{j : parts[j] >= i+1}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Containment order: true iff `inner` fits inside `self` cell-wise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.num_parts() <= self.num_parts()
            && inner
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p <= self.part(i))
    }

    /// Dominance order: true iff every prefix sum of `other` is at most the
    /// corresponding prefix sum of `self` (missing parts read as 0).
    pub fn dominates(&self, other: &Partition) -> bool {
        let rows = self.num_parts().max(other.num_parts());
        let mut ours = 0usize;
        let mut theirs = 0usize;
        for i in 0..rows {
            ours += self.part(i);
            theirs += other.part(i);
            if theirs > ours {
                return false;
            }
        }
        true
    }

    /// Some((m, k)) if this is the rectangle (m^k) with m, k >= 1.
    pub fn as_rectangle(&self) -> Option<(usize, usize)> {
        let m = *self.parts.first()?;
        if self.parts.iter().all(|&p| p == m) {
            Some((m, self.parts.len()))
        } else {
            None
        }
    }

    /// Some((m, k)) if this is the hook (m, 1^(k-1)).
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        let m = *self.parts.first()?;
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some((m, self.parts.len()))
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. "4,2,1,1". "0" or the empty string
    /// denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order
/// (starting from the single row (n)).
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor in reverse-lex order: decrement the last part > 1 and
        // redistribute everything after it greedily into parts of that size.
        self.next = current.iter().rposition(|&p| p > 1).map(|i| {
            let cap = current[i] - 1;
            let mut rem = current[i] + (current.len() - i - 1);
            let mut next = current[..i].to_vec();
            while rem > 0 {
                let take = rem.min(cap);
                next.push(take);
                rem -= take;
            }
            next
        });
        Some(Partition { parts: current })
    }
}

/// All partitions of `n` with every part at most `max_part` and at most
/// `max_rows` parts, in reverse-lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        n: usize,
        max_part: usize,
        rows_left: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if n == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        if rows_left == 0 || max_part == 0 || n > max_part * rows_left {
            return;
        }
        let lo = n.div_ceil(rows_left).max(1);
        for p in (lo..=max_part.min(n)).rev() {
            stack.push(p);
            rec(n - p, p, rows_left - 1, stack, out);
            stack.pop();
        }
    }
    rec(n, max_part, max_rows, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        // column counts of the diagram of (4,2,1,1), computed by hand
        assert_eq!(p(&[4, 2, 1, 1]).conjugate(), p(&[4, 2, 1, 1]));
    }

    #[test]
    fn containment_examples() {
        assert!(!p(&[3, 1, 1]).contains(&p(&[2, 2])));
        assert!(p(&[4, 2, 1, 1]).contains(&p(&[4, 1, 1, 1])));
        assert!(p(&[3, 1]).contains(&Partition::empty()));
        assert!(Partition::empty().contains(&Partition::empty()));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])));
    }

    #[test]
    fn normalization_and_validation() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,2,1,1".parse::<Partition>().unwrap(), p(&[4, 2, 1, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[4, 2, 1, 1]).to_string(), "4,2,1,1");
        assert!("2,3".parse::<Partition>().is_err());
    }

    #[test]
    fn partitions_of_counts() {
        assert_eq!(partitions_of(0).count(), 1);
        assert_eq!(partitions_of(4).count(), 5);
        assert_eq!(partitions_of(10).count(), 42);
        // distinct, all of size n
        let all: Vec<_> = partitions_of(8).collect();
        for q in &all {
            assert_eq!(q.size(), 8);
        }
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn partitions_bounded_matches_filter() {
        for n in 0..=9 {
            for max_part in 0..=4 {
                for max_rows in 0..=5 {
                    let mut expect: Vec<_> = partitions_of(n)
                        .filter(|q| q.part(0) <= max_part && q.num_parts() <= max_rows)
                        .collect();
                    let mut got = partitions_bounded(n, max_part, max_rows);
                    expect.sort();
                    got.sort();
                    assert_eq!(got, expect, "n={n} max_part={max_part} max_rows={max_rows}");
                }
            }
        }
    }

    #[test]
    fn rectangle_and_hook_constructors() {
        assert_eq!(Partition::rectangle(3, 2), p(&[3, 3]));
        assert_eq!(Partition::hook(3, 3), p(&[3, 1, 1]));
        assert_eq!(Partition::hook(1, 4), p(&[1, 1, 1, 1]));
        assert_eq!(Partition::hook(4, 1), p(&[4]));
        assert_eq!(p(&[3, 3]).as_rectangle(), Some((3, 2)));
        assert_eq!(p(&[3, 1]).as_rectangle(), None);
        assert_eq!(p(&[3, 1, 1]).as_hook(), Some((3, 3)));
        assert_eq!(p(&[3, 2]).as_hook(), None);
    }
}
