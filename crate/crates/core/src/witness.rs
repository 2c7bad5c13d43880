//! Constructive witnesses: given containment hypotheses on the shape of a
//! permutation, build an explicit subsequence of a prescribed shape.
//! Every returned witness is re-certified by recomputing the shape of its
//! flattened pattern, so a bug here surfaces as an error, never as a wrong
//! answer.

use crate::error::{Error, Result};
use crate::greene::{extract_chain_union, greedy_decompose, Direction};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::tableau::shape_of;

/// A set of positions in a host permutation together with the certified
/// shape of the pattern at those positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsequenceWitness {
    positions: Vec<usize>,
    shape: Partition,
}

impl SubsequenceWitness {
    /// Builds a witness from positions, computing (and thereby certifying)
    /// its shape from the host.
    pub fn certified(host: &Permutation, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        let pattern = host.pattern_of(&positions)?;
        Ok(Self {
            positions,
            shape: shape_of(&pattern),
        })
    }

    fn certified_as(host: &Permutation, positions: Vec<usize>, expected: &Partition) -> Result<Self> {
        let w = Self::certified(host, positions)?;
        if w.shape != *expected {
            return Err(Error::CertificationFailed {
                expected: expected.to_string(),
                got: w.shape.to_string(),
            });
        }
        Ok(w)
    }

    /// Positions in the host, 0-based, strictly increasing.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The flattened pattern at the witness positions.
    pub fn pattern(&self, host: &Permutation) -> Result<Permutation> {
        host.pattern_of(&self.positions)
    }
}

/// The grid decomposition of a permutation of rectangular shape (m^k):
/// k increasing chains of length m (rows), m decreasing chains of length k
/// (columns), each row meeting each column in exactly one position.
#[derive(Clone, Debug)]
pub struct RectangularGrid {
    m: usize,
    k: usize,
    /// cells[i][j] = position of the unique intersection of row i and
    /// column j.
    cells: Vec<Vec<usize>>,
}

impl RectangularGrid {
    pub fn columns_per_row(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.k
    }

    /// Position at row i, column j (0-based).
    pub fn cell(&self, i: usize, j: usize) -> usize {
        self.cells[i][j]
    }

    /// Row i as an increasing chain (positions ascending).
    pub fn row_chain(&self, i: usize) -> Vec<usize> {
        let mut c = self.cells[i].clone();
        c.sort_unstable();
        c
    }

    /// Column j as a decreasing chain (positions ascending).
    pub fn column_chain(&self, j: usize) -> Vec<usize> {
        let mut c: Vec<usize> = (0..self.k).map(|i| self.cells[i][j]).collect();
        c.sort_unstable();
        c
    }
}

/// Decomposes a permutation of rectangular shape (m^k) into its grid. The
/// rows are the greedy increasing chains and the columns the greedy
/// decreasing chains, both indexed by the position of their first element.
pub fn rectangular_grid(pi: &Permutation) -> Result<RectangularGrid> {
    let lambda = shape_of(pi);
    let (m, k) = lambda.as_rectangle().ok_or_else(|| {
        Error::Precondition(format!(
            "permutation has shape {lambda}, which is not rectangular"
        ))
    })?;
    let rows = greedy_decompose(pi, Direction::Increasing);
    let cols = greedy_decompose(pi, Direction::Decreasing);
    debug_assert_eq!(rows.chains().len(), k);
    debug_assert_eq!(cols.chains().len(), m);
    debug_assert!(rows.chains().iter().all(|c| c.len() == m));
    debug_assert!(cols.chains().iter().all(|c| c.len() == k));

    let mut col_of = vec![usize::MAX; pi.len()];
    for (j, col) in cols.chains().iter().enumerate() {
        for &p in col {
            col_of[p] = j;
        }
    }
    let mut cells = vec![vec![usize::MAX; m]; k];
    for (i, row) in rows.chains().iter().enumerate() {
        for &p in row {
            cells[i][col_of[p]] = p;
        }
    }
    debug_assert!(cells.iter().flatten().all(|&p| p != usize::MAX));
    Ok(RectangularGrid { m, k, cells })
}

/// Extracts a subsequence of shape `mu` from a permutation of rectangular
/// shape (m^k), for any `mu` contained in the rectangle: the witness takes
/// the first `mu[i]` column cells of row i.
pub fn extract_subshape_rectangular(
    pi: &Permutation,
    mu: &Partition,
) -> Result<SubsequenceWitness> {
    let grid = rectangular_grid(pi)?;
    let rect = Partition::rectangle(grid.m, grid.k);
    if !rect.contains(mu) {
        return Err(Error::Precondition(format!(
            "target shape {mu} is not contained in the rectangle {rect}"
        )));
    }
    let mut positions = Vec::with_capacity(mu.size());
    for i in 0..grid.k {
        for j in 0..mu.part(i) {
            positions.push(grid.cell(i, j));
        }
    }
    SubsequenceWitness::certified_as(pi, positions, mu)
}

/// Extracts a subsequence of shape exactly (m^k) from any permutation whose
/// shape contains that rectangle. Two stages: a maximal union of k
/// increasing chains, then within it a maximal union of m decreasing chains.
pub fn extract_rectangle(pi: &Permutation, m: usize, k: usize) -> Result<SubsequenceWitness> {
    let rect = Partition::rectangle(m, k);
    let lambda = shape_of(pi);
    if !lambda.contains(&rect) {
        return Err(Error::Precondition(format!(
            "shape {lambda} does not contain the rectangle {rect}"
        )));
    }
    if rect.is_empty() {
        return SubsequenceWitness::certified(pi, Vec::new());
    }
    let bar = extract_chain_union(pi, k, Direction::Increasing).positions();
    let bar_pattern = pi.pattern_of(&bar)?;
    let hat = extract_chain_union(&bar_pattern, m, Direction::Decreasing).positions();
    let positions: Vec<usize> = hat.into_iter().map(|p| bar[p]).collect();
    SubsequenceWitness::certified_as(pi, positions, &rect)
}

/// Extracts a subsequence of shape exactly `mu` from any permutation whose
/// shape contains the bounding rectangle (mu_1 ^ #parts(mu)): first extract
/// that rectangle, then carve `mu` out of it cell-wise.
pub fn extract_shape(pi: &Permutation, mu: &Partition) -> Result<SubsequenceWitness> {
    if mu.is_empty() {
        return SubsequenceWitness::certified(pi, Vec::new());
    }
    let m1 = mu.part(0);
    let k = mu.num_parts();
    let rect = Partition::rectangle(m1, k);
    let lambda = shape_of(pi);
    if !lambda.contains(&rect) {
        return Err(Error::Precondition(format!(
            "shape {lambda} does not contain the bounding rectangle {rect} of {mu}"
        )));
    }
    let outer = extract_rectangle(pi, m1, k)?;
    let sub = outer.pattern(pi)?;
    let inner = extract_subshape_rectangular(&sub, mu)?;
    let positions: Vec<usize> = inner
        .positions()
        .iter()
        .map(|&p| outer.positions()[p])
        .collect();
    SubsequenceWitness::certified_as(pi, positions, mu)
}

/// Extracts a subsequence of hook shape (m, 1^(k-1)).
///
/// Hypotheses (checked): either m <= 3 or k <= 3 and the shape contains the
/// hook itself; or m, k >= 4 and the shape contains (2m-3, 1^(k-1)) or
/// (m, 1^(2k-4)). The second family of hypotheses is tight: see
/// [`hook_counterexample`].
pub fn extract_hook(pi: &Permutation, m: usize, k: usize) -> Result<SubsequenceWitness> {
    if m == 0 || k == 0 {
        return SubsequenceWitness::certified(pi, Vec::new());
    }
    let lambda = shape_of(pi);
    let hook = Partition::hook(m, k);
    if m <= 3 || k <= 3 {
        if !lambda.contains(&hook) {
            return Err(Error::Precondition(format!(
                "shape {lambda} does not contain the hook {hook}"
            )));
        }
        if m <= 3 {
            construct_hook(pi, m, k, m)
        } else {
            // k <= 3 < m: work on the reversed word, where the target hook
            // conjugates to (k, 1^(m-1)) and the short arm is the row.
            construct_hook_reversed(pi, m, k, k)
        }
    } else {
        let wide = Partition::hook(2 * m - 3, k);
        let tall = Partition::hook(m, 2 * k - 3);
        if lambda.contains(&wide) {
            construct_hook(pi, m, k, 2 * m - 3)
        } else if lambda.contains(&tall) {
            construct_hook_reversed(pi, m, k, 2 * k - 3)
        } else {
            Err(Error::Precondition(format!(
                "shape {lambda} contains neither {wide} nor {tall}, so the hook {hook} \
                 is not guaranteed extractable"
            )))
        }
    }
}

/// Builds the hook (m, 1^(k-1)) by extracting the conjugate hook
/// (k, 1^(m-1)) from the reversed word and mapping positions back.
fn construct_hook_reversed(
    pi: &Permutation,
    m: usize,
    k: usize,
    row_budget: usize,
) -> Result<SubsequenceWitness> {
    let rev = pi.reverse();
    let w = construct_hook(&rev, k, m, row_budget)?;
    let n = pi.len();
    let positions: Vec<usize> = w.positions().iter().map(|&p| n - 1 - p).collect();
    SubsequenceWitness::certified_as(pi, positions, &Partition::hook(m, k))
}

/// Core hook construction: finds an increasing chain of length m and a
/// decreasing chain of length k sharing exactly one position, whose union
/// then necessarily has shape (m, 1^(k-1)).
///
/// `a` is the available increasing budget: the caller guarantees the shape
/// has a row of length at least `a`, with `a >= m` and, whenever the
/// disjoint case analysis may need to route through an element of the
/// decreasing chain, `a >= 2m - 3`.
fn construct_hook(pi: &Permutation, m: usize, k: usize, a: usize) -> Result<SubsequenceWitness> {
    debug_assert!(a >= m);
    let hook = Partition::hook(m, k);
    let alpha_full = extract_chain_union(pi, 1, Direction::Increasing)
        .chains()
        .first()
        .cloned()
        .unwrap_or_default();
    let beta_full = extract_chain_union(pi, 1, Direction::Decreasing)
        .chains()
        .first()
        .cloned()
        .unwrap_or_default();
    if alpha_full.len() < a || beta_full.len() < k {
        return Err(Error::Precondition(format!(
            "need an increasing chain of length {a} and a decreasing chain of length {k}"
        )));
    }
    let alpha = &alpha_full[..a];
    let beta = &beta_full[..k];

    if m == 1 {
        // the hook is a single column
        return SubsequenceWitness::certified_as(pi, beta.to_vec(), &hook);
    }
    if k == 1 {
        // the hook is a single row
        return SubsequenceWitness::certified_as(pi, alpha[..m].to_vec(), &hook);
    }

    let positions: Vec<usize> = if let Some(&shared) = alpha.iter().find(|p| beta.contains(p)) {
        // Already intersecting: truncate the increasing chain to an
        // m-window containing the shared position.
        let i = alpha.iter().position(|&p| p == shared).unwrap();
        let start = i.min(a - m);
        let mut pos = alpha[start..start + m].to_vec();
        pos.extend_from_slice(beta);
        pos
    } else {
        // Disjoint chains: route through the pivot alpha[m-2] (the (m-1)-th
        // element of the increasing chain).
        let pivot = alpha[m - 2];
        let pv = pi.value(pivot);
        // decreasing-chain elements after the pivot and above it in value
        let after_bigger = beta
            .iter()
            .copied()
            .rev()
            .find(|&p| p > pivot && pi.value(p) > pv);
        // decreasing-chain elements before the pivot and below it in value
        let before_smaller = beta
            .iter()
            .copied()
            .find(|&p| p < pivot && pi.value(p) < pv);
        if let Some(b) = after_bigger {
            // (alpha_1, ..., alpha_{m-1}, b) is increasing and meets the
            // decreasing chain at b.
            let mut pos = alpha[..m - 1].to_vec();
            pos.push(b);
            pos.extend_from_slice(beta);
            pos
        } else if let Some(b) = before_smaller {
            // (b, alpha_{m-1}, ..., alpha_{2m-3}) is increasing; this arm
            // needs the 2m-3 budget.
            debug_assert!(a >= 2 * m - 3);
            let mut pos = vec![b];
            pos.extend_from_slice(&alpha[m - 2..2 * m - 3]);
            pos.extend_from_slice(beta);
            pos
        } else {
            // Every beta element before the pivot is larger and every one
            // after is smaller, so the pivot slots into the decreasing
            // chain. Keep k of the k+1 elements, keeping the pivot.
            let before: Vec<usize> = beta.iter().copied().filter(|&p| p < pivot).collect();
            let after: Vec<usize> = beta.iter().copied().filter(|&p| p > pivot).collect();
            let mut chain = Vec::with_capacity(k + 1);
            chain.extend_from_slice(&before);
            chain.push(pivot);
            chain.extend_from_slice(&after);
            if before.is_empty() {
                chain.pop();
            } else {
                chain.remove(0);
            }
            let mut pos = alpha[..m].to_vec();
            pos.extend(chain);
            pos
        }
    };
    let mut positions = positions;
    positions.sort_unstable();
    positions.dedup();
    SubsequenceWitness::certified_as(pi, positions, &hook)
}

/// The tightness construction for the hook hypotheses: for m, k >= 4,
/// a permutation whose shape contains (2m-4, 1^(2k-5)) yet which has no
/// subsequence of shape (m, 1^(k-1)). For (m, k) = (4, 4) this is the word
/// (6,5,1,2,7,8,4,3).
pub fn hook_counterexample(m: usize, k: usize) -> Result<Permutation> {
    if m < 4 || k < 4 {
        return Err(Error::Precondition(format!(
            "the construction needs m >= 4 and k >= 4, got m={m}, k={k}"
        )));
    }
    // Four blocks: gamma, alpha, delta, beta. alpha and delta increase,
    // beta and gamma decrease.
    let alpha: Vec<usize> = (1..=m - 2).collect();
    let beta: Vec<usize> = (m - 1..=m + k - 4).rev().collect();
    let gamma: Vec<usize> = (m + k - 3..=m + 2 * k - 6).rev().collect();
    let delta: Vec<usize> = (m + 2 * k - 5..=2 * m + 2 * k - 8).collect();
    let mut word = gamma;
    word.extend(alpha);
    word.extend(delta);
    word.extend(beta);
    Permutation::new(word)
}

/// Scans all |mu|-element position subsets in lexicographic order and
/// returns the first whose pattern has shape `mu`, if any. Work is bounded
/// by `budget` units, one per subset.
pub fn brute_force_find_shape(
    pi: &Permutation,
    mu: &Partition,
    budget: u64,
) -> Result<Option<SubsequenceWitness>> {
    let n = pi.len();
    let m = mu.size();
    if mu.is_empty() {
        return Ok(Some(SubsequenceWitness::certified(pi, Vec::new())?));
    }
    if m > n {
        return Ok(None);
    }
    let work = binomial(n, m);
    if work > budget {
        return Err(Error::BudgetExceeded {
            needed: work,
            budget,
        });
    }
    let mut positions: Vec<usize> = (0..m).collect();
    loop {
        let pattern = pi.pattern_of(&positions)?;
        if shape_of(&pattern) == *mu {
            return Ok(Some(SubsequenceWitness::certified(pi, positions)?));
        }
        // next combination in lexicographic order
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if positions[i] != i + n - m {
                break;
            }
        }
        positions[i] += 1;
        for j in i + 1..m {
            positions[j] = positions[j - 1] + 1;
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// A negative family for the cell-union inclusion: for every n >= 5, a
/// permutation whose shape is a
/// hook (so it does not contain (2,2)) yet which has a subsequence of shape
/// (2,2). Built by prepending new maxima as leading descents to the base
/// word (2,5,3,1,4); both properties are re-verified at construction.
pub fn negative_inclusion_example(n: usize) -> Result<Permutation> {
    if n < 5 {
        return Err(Error::Precondition(format!(
            "the family starts at n = 5, got n = {n}"
        )));
    }
    let mut word: Vec<usize> = (6..=n).rev().collect();
    word.extend([2, 5, 3, 1, 4]);
    let pi = Permutation::new(word)?;
    let two_two = Partition::rectangle(2, 2);
    let lambda = shape_of(&pi);
    if lambda.contains(&two_two) {
        return Err(Error::CertificationFailed {
            expected: "a shape not containing 2,2".into(),
            got: lambda.to_string(),
        });
    }
    let found = brute_force_find_shape(&pi, &two_two, binomial(n, 4).max(1))?;
    if found.is_none() {
        return Err(Error::CertificationFailed {
            expected: "a subsequence of shape 2,2".into(),
            got: "none".into(),
        });
    }
    Ok(pi)
}
