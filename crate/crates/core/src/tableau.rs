//! Standard Young tableaux and the Robinson-Schensted-Knuth correspondence
//! (row insertion with recording), together with its inverse.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

/// A standard Young tableau: rows weakly decreasing in length, entries
/// exactly 1..size, strictly increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let mut seen = vec![false; n];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n || seen[e - 1] {
                    return Err(Error::InvalidTableau(format!(
                        "entries must be exactly 1..{n}"
                    )));
                }
                seen[e - 1] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("row not strictly increasing".into()));
            }
        }
        for w in rows.windows(2) {
            if w[0].iter().zip(&w[1]).any(|(a, b)| a >= b) {
                return Err(Error::InvalidTableau(
                    "column not strictly increasing".into(),
                ));
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows form a partition")
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// The (P, Q) output of RSK: insertion and recording tableaux of a common
/// shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RskPair {
    p: StandardTableau,
    q: StandardTableau,
}

impl RskPair {
    pub fn new(p: StandardTableau, q: StandardTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::InvalidTableau(format!(
                "tableau shapes differ: {} vs {}",
                p.shape(),
                q.shape()
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &StandardTableau {
        &self.p
    }

    pub fn q(&self) -> &StandardTableau {
        &self.q
    }

    pub fn shape(&self) -> Partition {
        self.p.shape()
    }
}

/// Row-inserts `x` into `rows`, bumping the smallest entry strictly greater
/// than the inserted value. Returns the index of the row that grew.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let j = row.partition_point(|&e| e < x);
        if j == row.len() {
            row.push(x);
            return r;
        }
        std::mem::swap(&mut row[j], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// The RSK correspondence by row insertion with recording.
pub fn rsk(pi: &Permutation) -> RskPair {
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in pi.word().iter().enumerate() {
        let r = row_insert(&mut p_rows, x);
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(step + 1);
    }
    RskPair {
        p: StandardTableau { rows: p_rows },
        q: StandardTableau { rows: q_rows },
    }
}

/// The shape of a permutation: the common shape of its RSK pair. Only the
/// insertion tableau is maintained.
pub fn shape_of(pi: &Permutation) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in pi.word() {
        row_insert(&mut rows, x);
    }
    Partition::new(rows.iter().map(|r| r.len()).collect()).expect("insertion rows are a partition")
}

/// Inverts RSK: reverse-bumps cells in the order recorded by Q. Total on
/// valid pairs (RskPair validates on construction).
pub fn rsk_inverse(pair: &RskPair) -> Permutation {
    let n = pair.p.size();
    let mut p_rows = pair.p.rows.clone();
    // cell (row, col) of each recording entry
    let mut q_cell = vec![(0usize, 0usize); n];
    for (r, row) in pair.q.rows.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            q_cell[e - 1] = (r, c);
        }
    }
    let mut word = vec![0usize; n];
    for t in (1..=n).rev() {
        let (r, _c) = q_cell[t - 1];
        let mut x = p_rows[r].pop().expect("Q entries mark row corners");
        if p_rows[r].is_empty() {
            p_rows.pop();
        }
        for row in p_rows[..r].iter_mut().rev() {
            // rightmost entry strictly smaller than x gets bumped back out
            let j = row.partition_point(|&e| e < x) - 1;
            std::mem::swap(&mut row[j], &mut x);
        }
        word[t - 1] = x;
    }
    Permutation::new(word).expect("inverse RSK yields a permutation")
}
