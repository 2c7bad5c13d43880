//! Permutations in one-line notation, pattern flattening, and iteration
//! over the full symmetric group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {1..n} in one-line notation. Validated on construction;
/// all operations may assume well-formedness. Positions are 0-based
/// throughout the library, values are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "word {word:?} is not a rearrangement of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    /// The decreasing word (n, n-1, ..., 1).
    pub fn reversal(n: usize) -> Self {
        Self {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 0-based position i.
    pub fn value(&self, i: usize) -> usize {
        self.word[i]
    }

    /// The word read right to left.
    pub fn reverse(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Flattens the subsequence at the given positions to a permutation of
    /// {1..r} with the same relative order. Positions are 0-based and must be
    /// strictly increasing and in bounds.
    pub fn pattern_of(&self, positions: &[usize]) -> Result<Permutation> {
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPositions(format!(
                "positions {positions:?} are not strictly increasing"
            )));
        }
        if positions.last().is_some_and(|&p| p >= self.len()) {
            return Err(Error::InvalidPositions(format!(
                "position out of range for a permutation of length {}",
                self.len()
            )));
        }
        let values: Vec<usize> = positions.iter().map(|&p| self.word[p]).collect();
        let mut ranked: Vec<usize> = (0..values.len()).collect();
        ranked.sort_by_key(|&i| values[i]);
        let mut word = vec![0; values.len()];
        for (rank, &i) in ranked.iter().enumerate() {
            word[i] = rank + 1;
        }
        Ok(Permutation { word })
    }

    /// Positions (0-based, ascending) of the given values in the word.
    pub fn positions_of_values(&self, values: &[usize]) -> Result<Vec<usize>> {
        let mut pos = Vec::with_capacity(values.len());
        for &v in values {
            let p = self
                .word
                .iter()
                .position(|&w| w == v)
                .ok_or_else(|| Error::InvalidPositions(format!("value {v} not in word")))?;
            pos.push(p);
        }
        pos.sort_unstable();
        Ok(pos)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a comma-separated word ("6,5,1,2,7,8,4,3"). A bare digit
    /// string ("65127843") is accepted as shorthand only when n <= 9.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self { word: Vec::new() });
        }
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::InvalidPermutation(format!("entry {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::InvalidPermutation(
                    "digit-string shorthand is only valid for n <= 9; use commas".into(),
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

/// All permutations of {1..n} in lexicographic order of the word.
pub fn permutations_of(n: usize) -> SymmetricGroup {
    SymmetricGroup {
        next: Some((1..=n).collect()),
        sharded: false,
    }
}

/// Permutations of {1..n} whose word starts with `first`, in lexicographic
/// order. Used to shard full-group scans deterministically.
pub fn permutations_with_first(n: usize, first: usize) -> SymmetricGroup {
    assert!(first >= 1 && first <= n);
    let mut word = vec![first];
    word.extend((1..=n).filter(|&v| v != first));
    SymmetricGroup {
        next: Some(word),
        sharded: true,
    }
}

pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
    sharded: bool,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        // Lexicographic successor with the first symbol held fixed when the
        // iterator was built by `permutations_with_first` (the first symbol
        // never participates in a suffix swap until the suffix is exhausted,
        // and we stop there).
        let mut succ = current.clone();
        let n = succ.len();
        let sharded = self.sharded;
        self.next = (move || {
            if n < 2 {
                return None;
            }
            let i = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1])?;
            // A sharded iterator keeps the first symbol fixed: a pivot at
            // index 0 means the shard is exhausted.
            if i == 0 && sharded {
                return None;
            }
            let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            Some(succ)
        })();
        Some(Permutation { word: current })
    }
}
