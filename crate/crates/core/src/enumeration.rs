//! Exact counting: standard-tableau counts via the hook length formula,
//! Knuth cells, shape-avoidance counts (brute force and closed forms),
//! cell-sum upper bounds, set-identity verification, and growth series.
//!
//! Every count is an exact arbitrary-precision integer; floating point
//! appears only in growth roots and reference constants.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, partitions_of, Partition};
use crate::permutation::{permutations_with_first, Permutation};
use crate::tableau::{rsk_inverse, shape_of, RskPair, StandardTableau};

/// Default work budget, in units of one scanned object (permutation or
/// position subset).
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// What a count is a count of.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountTarget {
    /// All permutations of the shape's Knuth cell are avoided.
    Shape(Partition),
    /// A single pattern is avoided.
    Pattern(Permutation),
}

impl std::fmt::Display for CountTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountTarget::Shape(mu) => write!(f, "shape {mu}"),
            CountTarget::Pattern(sigma) => write!(f, "pattern {sigma}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    Brute,
    HookFormula,
    TwoTwoFormula,
    CellSumBound,
}

impl CountMethod {
    /// Cell-sum records are upper bounds only; everything else is exact.
    pub fn is_exact(self) -> bool {
        !matches!(self, CountMethod::CellSumBound)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CountMethod::Brute => "brute",
            CountMethod::HookFormula => "hook-formula",
            CountMethod::TwoTwoFormula => "two-two-formula",
            CountMethod::CellSumBound => "cell-sum-bound",
        }
    }
}

impl std::fmt::Display for CountMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl std::str::FromStr for CountMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(CountMethod::Brute),
            "hook" | "hook-formula" => Ok(CountMethod::HookFormula),
            "two-two" | "two-two-formula" => Ok(CountMethod::TwoTwoFormula),
            "bound" | "cell-sum-bound" => Ok(CountMethod::CellSumBound),
            other => Err(Error::Precondition(format!("unknown count method {other:?}"))),
        }
    }
}

/// One persisted count: (n, target, method, exact integer).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub n: usize,
    pub target: CountTarget,
    pub method: CountMethod,
    #[serde(with = "biguint_decimal")]
    pub count: BigUint,
}

/// Serde helper: arbitrary-precision counts travel as decimal strings.
pub mod biguint_decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// n! saturating in u64, for budget arithmetic.
pub fn factorial_saturating(n: usize) -> u64 {
    let mut acc: u64 = 1;
    for i in 1..=n as u64 {
        acc = acc.saturating_mul(i);
    }
    acc
}

fn check_budget(needed: u64, budget: u64) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// The number of standard Young tableaux of a shape, by the hook length
/// formula with exact division.
pub fn syt_count(shape: &Partition) -> BigUint {
    let n = shape.size();
    if n == 0 {
        return BigUint::one();
    }
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for i in 0..shape.num_parts() {
        for j in 0..shape.part(i) {
            let hook = (shape.part(i) - j) + (conj.part(j) - i) - 1;
            hooks *= BigUint::from(hook as u64);
        }
    }
    factorial(n) / hooks
}

/// All standard Young tableaux of a shape, by backtracking over row fills.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let k = shape.num_parts();
    let n = shape.size();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut out = Vec::new();
    fn rec(
        shape: &Partition,
        entry: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entry > n {
            out.push(
                StandardTableau::new(rows.clone()).expect("backtracking yields valid tableaux"),
            );
            return;
        }
        for r in 0..rows.len() {
            let fill = rows[r].len();
            if fill < shape.part(r) && (r == 0 || rows[r - 1].len() > fill) {
                rows[r].push(entry);
                rec(shape, entry + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(shape, 1, n, &mut rows, &mut out);
    out
}

/// The Knuth cell of `mu`: all permutations of S_|mu| of shape `mu`,
/// generated as RSK-inverses of tableau pairs (cost (f^mu)^2 instead of
/// |mu|!). Sorted lexicographically.
pub fn knuth_cell(mu: &Partition, budget: u64) -> Result<Vec<Permutation>> {
    let f = syt_count(mu);
    let work = (&f * &f).to_u64().unwrap_or(u64::MAX);
    check_budget(work, budget)?;
    let tableaux = standard_tableaux(mu);
    debug_assert_eq!(BigUint::from(tableaux.len()), f);
    let mut cell = Vec::with_capacity(tableaux.len() * tableaux.len());
    for p in &tableaux {
        for q in &tableaux {
            let pair = RskPair::new(p.clone(), q.clone()).expect("same shape by construction");
            cell.push(rsk_inverse(&pair));
        }
    }
    cell.sort();
    Ok(cell)
}

/// True iff some subsequence of `pi` is order-isomorphic to `sigma`.
/// Backtracking over candidate positions with value-interval pruning.
pub fn contains_pattern(pi: &Permutation, sigma: &Permutation) -> bool {
    let m = sigma.len();
    let n = pi.len();
    if m == 0 {
        return true;
    }
    if m > n {
        return false;
    }
    let sw = sigma.word();
    let pw = pi.word();
    // chosen[t] = value matched to sigma position t
    let mut chosen = vec![0usize; m];
    fn rec(pw: &[usize], sw: &[usize], t: usize, start: usize, chosen: &mut [usize]) -> bool {
        let m = sw.len();
        if t == m {
            return true;
        }
        // value window implied by the already-matched prefix
        let mut lo = 0usize;
        let mut hi = usize::MAX;
        for s in 0..t {
            if sw[s] < sw[t] {
                lo = lo.max(chosen[s]);
            } else {
                hi = hi.min(chosen[s]);
            }
        }
        for p in start..=pw.len() - (m - t) {
            let v = pw[p];
            if v > lo && v < hi {
                chosen[t] = v;
                if rec(pw, sw, t + 1, p + 1, chosen) {
                    return true;
                }
            }
        }
        false
    }
    rec(pw, sw, 0, 0, &mut chosen)
}

/// True iff `pi` contains no pattern from the given Knuth cell.
pub fn avoids_shape_with_cell(pi: &Permutation, cell: &[Permutation]) -> bool {
    cell.iter().all(|sigma| !contains_pattern(pi, sigma))
}

/// True iff `pi` avoids every permutation of shape `mu`.
pub fn avoids_shape(pi: &Permutation, mu: &Partition, budget: u64) -> Result<bool> {
    let cell = knuth_cell(mu, budget)?;
    Ok(avoids_shape_with_cell(pi, &cell))
}

/// Runs `per_shard` over the n first-symbol shards of S_n in parallel and
/// adds the exact per-shard tallies in shard order. Deterministic and
/// independent of worker count.
fn sharded_count<F>(n: usize, per_shard: F) -> BigUint
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    if n == 0 {
        // S_0 = { the empty word }
        return BigUint::from(per_shard(0));
    }
    let tallies: Vec<u64> = (1..=n).into_par_iter().map(per_shard).collect();
    tallies.into_iter().map(BigUint::from).sum()
}

/// Exact |Avoid_n^mu| by scanning S_n, sharded by first symbol.
pub fn avoid_count_brute(n: usize, mu: &Partition, budget: u64) -> Result<CountRecord> {
    let record = |count: BigUint| CountRecord {
        n,
        target: CountTarget::Shape(mu.clone()),
        method: CountMethod::Brute,
        count,
    };
    if mu.size() > n {
        // no pattern of the cell fits
        return Ok(record(factorial(n)));
    }
    let cell = knuth_cell(mu, budget)?;
    check_budget(factorial_saturating(n), budget)?;
    let count = sharded_count(n, |first| {
        if n == 0 {
            return u64::from(avoids_shape_with_cell(&Permutation::identity(0), &cell));
        }
        permutations_with_first(n, first)
            .filter(|pi| avoids_shape_with_cell(pi, &cell))
            .count() as u64
    });
    Ok(record(count))
}

/// Exact count of sigma-avoiding permutations in S_n by scanning.
pub fn single_pattern_avoid_count(
    n: usize,
    sigma: &Permutation,
    budget: u64,
) -> Result<CountRecord> {
    check_budget(factorial_saturating(n), budget)?;
    let count = sharded_count(n, |first| {
        if n == 0 {
            return u64::from(!contains_pattern(&Permutation::identity(0), sigma));
        }
        permutations_with_first(n, first)
            .filter(|pi| !contains_pattern(pi, sigma))
            .count() as u64
    });
    Ok(CountRecord {
        n,
        target: CountTarget::Pattern(sigma.clone()),
        method: CountMethod::Brute,
        count,
    })
}

/// Exact |Avoid_n^(m,1^(k-1))| as the two cell sums
/// sum over rows shorter than m plus sum over columns shorter than k.
///
/// Valid when n >= 4mk, or when m <= 3 or k <= 3 and n > (m-1)(k-1) (the
/// regime where the identity is proven and the two sums are disjoint).
/// Refused outside that regime.
pub fn avoid_count_hook(n: usize, m: usize, k: usize) -> Result<CountRecord> {
    if m == 0 || k == 0 {
        return Err(Error::Precondition("hook arms must be positive".into()));
    }
    let in_regime = n >= 4 * m * k || ((m <= 3 || k <= 3) && n > (m - 1) * (k - 1));
    if !in_regime {
        return Err(Error::Precondition(format!(
            "hook formula for (m,k)=({m},{k}) is only proven for n >= {} \
             or, when m <= 3 or k <= 3, for n > {}; got n = {n} \
             (use the brute method instead)",
            4 * m * k,
            (m - 1) * (k - 1),
        )));
    }
    let mut count = BigUint::zero();
    // shapes with fewer than m columns
    for lambda in partitions_bounded(n, m - 1, n) {
        let f = syt_count(&lambda);
        count += &f * &f;
    }
    // shapes with fewer than k rows
    for lambda in partitions_bounded(n, n, k - 1) {
        let f = syt_count(&lambda);
        count += &f * &f;
    }
    Ok(CountRecord {
        n,
        target: CountTarget::Shape(Partition::hook(m, k)),
        method: CountMethod::HookFormula,
        count,
    })
}

/// Exact |Avoid_n^(2,2)| by the integer recursion a_1 = 1, a_2 = 2,
/// a_n = 4 a_{n-1} - 2 a_{n-2}.
pub fn avoid_count_22(n: usize) -> Result<CountRecord> {
    if n == 0 {
        return Err(Error::Precondition("two-two recursion starts at n = 1".into()));
    }
    let mut prev = BigUint::one(); // a_1
    let mut cur = BigUint::from(2u32); // a_2
    if n == 1 {
        cur = prev.clone();
    } else {
        for _ in 3..=n {
            let next = BigUint::from(4u32) * &cur - BigUint::from(2u32) * &prev;
            prev = cur;
            cur = next;
        }
    }
    Ok(CountRecord {
        n,
        target: CountTarget::Shape(Partition::rectangle(2, 2)),
        method: CountMethod::TwoTwoFormula,
        count: cur,
    })
}

/// Floating cross-check of the closed form
/// (1/2)(2+sqrt(2))^(n-1) + (1/2)(2-sqrt(2))^(n-1).
pub fn two_two_closed_form(n: usize) -> f64 {
    let r = 2f64.sqrt();
    0.5 * (2.0 + r).powi(n as i32 - 1) + 0.5 * (2.0 - r).powi(n as i32 - 1)
}

/// The exact finite cell sum over shapes not containing the bounding
/// rectangle of `mu` — an upper bound on |Avoid_n^mu| (flagged as such in
/// the record's method).
pub fn cell_sum_bound(n: usize, mu: &Partition) -> CountRecord {
    let rect = Partition::rectangle(mu.part(0), mu.num_parts());
    let mut count = BigUint::zero();
    for lambda in partitions_of(n) {
        if !lambda.contains(&rect) {
            let f = syt_count(&lambda);
            count += &f * &f;
        }
    }
    CountRecord {
        n,
        target: CountTarget::Shape(mu.clone()),
        method: CountMethod::CellSumBound,
        count,
    }
}

/// How Avoid_n^mu relates to the union of Knuth cells of shapes not
/// containing mu.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetRelation {
    Equal,
    /// Avoid is a strict subset of the cell union.
    AvoidStrictlyContained,
    /// The cell union is a strict subset of Avoid.
    UnionStrictlyContained,
    Incomparable,
}

impl std::fmt::Display for SetRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SetRelation::Equal => write!(f, "="),
            SetRelation::AvoidStrictlyContained => write!(f, "subset-strictly"),
            SetRelation::UnionStrictlyContained => write!(f, "superset-strictly"),
            SetRelation::Incomparable => write!(f, "incomparable"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellIdentityReport {
    pub n: usize,
    pub mu: Partition,
    pub relation: SetRelation,
    /// |Avoid_n^mu|
    pub avoid_size: u64,
    /// size of the union of cells of shapes not containing mu
    pub union_size: u64,
    /// permutations avoiding mu whose shape contains mu
    pub avoid_only: u64,
    /// permutations whose shape does not contain mu but which contain a
    /// pattern of shape mu
    pub union_only: u64,
}

/// Classifies every permutation of S_n by shape-avoidance and by shape
/// containment, and reports the relation between Avoid_n^mu and the union
/// of Knuth cells of shapes not containing mu.
pub fn verify_cell_identity(n: usize, mu: &Partition, budget: u64) -> Result<CellIdentityReport> {
    let cell = knuth_cell(mu, budget)?;
    check_budget(factorial_saturating(n), budget)?;
    // tallies: (avoid&union, avoid only, union only)
    let classify = |pi: &Permutation| -> (u64, u64, u64) {
        let avoids = avoids_shape_with_cell(pi, &cell);
        let in_union = !shape_of(pi).contains(mu);
        (
            u64::from(avoids && in_union),
            u64::from(avoids && !in_union),
            u64::from(!avoids && in_union),
        )
    };
    let tallies: Vec<(u64, u64, u64)> = if n == 0 {
        vec![classify(&Permutation::identity(0))]
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut acc = (0u64, 0u64, 0u64);
                for pi in permutations_with_first(n, first) {
                    let t = classify(&pi);
                    acc = (acc.0 + t.0, acc.1 + t.1, acc.2 + t.2);
                }
                acc
            })
            .collect()
    };
    let (both, avoid_only, union_only) = tallies
        .into_iter()
        .fold((0, 0, 0), |a, t| (a.0 + t.0, a.1 + t.1, a.2 + t.2));
    let relation = match (avoid_only, union_only) {
        (0, 0) => SetRelation::Equal,
        (0, _) => SetRelation::AvoidStrictlyContained,
        (_, 0) => SetRelation::UnionStrictlyContained,
        _ => SetRelation::Incomparable,
    };
    Ok(CellIdentityReport {
        n,
        mu: mu.clone(),
        relation,
        avoid_size: both + avoid_only,
        union_size: both + union_only,
        avoid_only,
        union_only,
    })
}

/// One point of a growth study: the 1/(2n)-th root of a count.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GrowthPoint {
    pub n: usize,
    pub root: f64,
}

/// The sequence count^(1/2n) with the reference bounds max(ht, wd) and
/// ht + wd (ht = rows - 1, wd = first part - 1), plus the sharper hook
/// limit max(m-1, k-1) when the target is a hook.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthSeries {
    pub mu: Partition,
    pub points: Vec<GrowthPoint>,
    pub lower_ref: f64,
    pub upper_ref: f64,
    pub hook_limit: Option<f64>,
}

pub fn growth_series(counts: &[CountRecord], mu: &Partition) -> Result<GrowthSeries> {
    if counts.is_empty() {
        return Err(Error::Precondition("growth series needs at least one count".into()));
    }
    let target = CountTarget::Shape(mu.clone());
    let mut points = Vec::with_capacity(counts.len());
    for rec in counts {
        if rec.target != target {
            return Err(Error::Precondition(format!(
                "count record targets {}, expected {target}",
                rec.target
            )));
        }
        points.push(GrowthPoint {
            n: rec.n,
            root: nth_root(&rec.count, 2 * rec.n as u64),
        });
    }
    points.sort_by_key(|p| p.n);
    let ht = mu.num_parts().saturating_sub(1) as f64;
    let wd = mu.part(0).saturating_sub(1) as f64;
    Ok(GrowthSeries {
        mu: mu.clone(),
        points,
        lower_ref: ht.max(wd),
        upper_ref: ht + wd,
        hook_limit: mu
            .as_hook()
            .map(|(m, k)| ((m - 1).max(k - 1)) as f64),
    })
}

/// x^(1/r) as a double, via the natural log (exact enough for display:
/// the log is taken from the top 53 bits plus the bit length).
pub fn nth_root(x: &BigUint, r: u64) -> f64 {
    if x.is_zero() || r == 0 {
        return 0.0;
    }
    let bits = x.bits();
    let ln = if bits <= 53 {
        x.to_f64().unwrap().ln()
    } else {
        let shift = bits - 53;
        let top = (x >> shift).to_f64().unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    };
    (ln / r as f64).exp()
}
