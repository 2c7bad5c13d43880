//! Greene invariants: maximal unions of k disjoint monotone subsequences.
//!
//! `greene_prefix` reads the invariant off the shape; `extract_chain_union`
//! produces an explicit optimal union via min-cost max-flow on the position
//! DAG; `greedy_decompose` partitions the whole word into monotone chains;
//! `brute_force_max_union` is an independent subset-enumeration oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tableau::shape_of;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Direction::Increasing => write!(f, "increasing"),
            Direction::Decreasing => write!(f, "decreasing"),
        }
    }
}

/// A union of pairwise disjoint monotone chains, stored as 0-based position
/// lists (strictly increasing within each chain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainUnion {
    chains: Vec<Vec<usize>>,
    direction: Direction,
}

impl ChainUnion {
    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn total_size(&self) -> usize {
        self.chains.iter().map(|c| c.len()).sum()
    }

    /// All covered positions, ascending.
    pub fn positions(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.chains.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Chain lengths sorted descending, as a partition-like vector.
    pub fn sorted_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.chains.iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Checks the invariants against a host permutation: chains disjoint,
    /// positions strictly increasing, values monotone in the stated
    /// direction.
    pub fn validate(&self, pi: &Permutation) -> Result<()> {
        let mut seen = vec![false; pi.len()];
        for chain in &self.chains {
            for w in chain.windows(2) {
                let (i, j) = (w[0], w[1]);
                if i >= j {
                    return Err(Error::InvalidPositions(
                        "chain positions not strictly increasing".into(),
                    ));
                }
                let ok = match self.direction {
                    Direction::Increasing => pi.value(i) < pi.value(j),
                    Direction::Decreasing => pi.value(i) > pi.value(j),
                };
                if !ok {
                    return Err(Error::InvalidPositions(format!(
                        "chain not {} at positions {i},{j}",
                        self.direction
                    )));
                }
            }
            for &p in chain {
                if p >= pi.len() {
                    return Err(Error::InvalidPositions("position out of range".into()));
                }
                if seen[p] {
                    return Err(Error::InvalidPositions(format!(
                        "position {p} covered twice"
                    )));
                }
                seen[p] = true;
            }
        }
        Ok(())
    }
}

/// Sum of the first `i` parts of the shape (increasing) or of its conjugate
/// (decreasing): the maximal size of a union of `i` disjoint monotone
/// subsequences, by Greene's theorem. Saturates at n.
pub fn greene_prefix(pi: &Permutation, i: usize, direction: Direction) -> usize {
    let lambda = match direction {
        Direction::Increasing => shape_of(pi),
        Direction::Decreasing => shape_of(pi).conjugate(),
    };
    lambda.parts().iter().take(i).sum()
}

/// An explicit union of at most `k` disjoint monotone chains of maximal
/// total size, i.e. of size `greene_prefix(pi, k, direction)`.
///
/// Decreasing-direction extraction reverses the word and reuses the
/// increasing machinery. Deterministic: chains are reported in order of
/// their first position.
pub fn extract_chain_union(pi: &Permutation, k: usize, direction: Direction) -> ChainUnion {
    assert!(k >= 1, "k must be positive");
    match direction {
        Direction::Increasing => extract_increasing(pi, k),
        Direction::Decreasing => {
            let rev = pi.reverse();
            let union = extract_increasing(&rev, k);
            reverse_chain_union(union, pi.len(), Direction::Decreasing)
        }
    }
}

/// Maps a chain union on the reversed word back to the original positions.
fn reverse_chain_union(union: ChainUnion, n: usize, direction: Direction) -> ChainUnion {
    let mut chains: Vec<Vec<usize>> = union
        .chains
        .into_iter()
        .map(|chain| {
            let mut c: Vec<usize> = chain.into_iter().map(|p| n - 1 - p).collect();
            c.reverse();
            c
        })
        .collect();
    chains.sort_by_key(|c| c.first().copied());
    ChainUnion { chains, direction }
}

/// Max-coverage union of at most k increasing chains via min-cost max-flow.
///
/// Graph: source -> hub (cap k); hub -> in(i) (cap 1); in(i) -> out(i)
/// (cap 1, cost -1); out(i) -> in(j) for i < j with value(i) < value(j);
/// out(i) -> sink. Each unit of flow traces one chain; covered positions
/// are exactly the in/out splits carrying flow.
fn extract_increasing(pi: &Permutation, k: usize) -> ChainUnion {
    let n = pi.len();
    if n == 0 {
        return ChainUnion {
            chains: Vec::new(),
            direction: Direction::Increasing,
        };
    }
    let source = 0;
    let hub = 1;
    let node_in = |i: usize| 2 + 2 * i;
    let node_out = |i: usize| 3 + 2 * i;
    let sink = 2 + 2 * n;
    let mut flow = MinCostFlow::new(sink + 1);
    flow.add_edge(source, hub, k as i64, 0);
    for i in 0..n {
        flow.add_edge(hub, node_in(i), 1, 0);
        flow.add_edge(node_in(i), node_out(i), 1, -1);
        flow.add_edge(node_out(i), sink, 1, 0);
    }
    for i in 0..n {
        for j in i + 1..n {
            if pi.value(i) < pi.value(j) {
                flow.add_edge(node_out(i), node_in(j), 1, 0);
            }
        }
    }
    flow.run(source, sink);

    // Decode: follow each unit of flow from the hub.
    let mut chains = Vec::new();
    for i in 0..n {
        // chain starts at i iff hub -> in(i) carries flow
        if !flow.edge_has_flow(hub, node_in(i)) {
            continue;
        }
        let mut chain = vec![i];
        let mut cur = i;
        loop {
            let mut next = None;
            for j in cur + 1..n {
                if pi.value(cur) < pi.value(j)
                    && flow.flow_between(node_out(cur), node_in(j)) > 0
                {
                    next = Some(j);
                    break;
                }
            }
            match next {
                Some(j) => {
                    chain.push(j);
                    cur = j;
                }
                None => break,
            }
        }
        chains.push(chain);
    }
    let union = ChainUnion {
        chains,
        direction: Direction::Increasing,
    };
    debug_assert_eq!(union.total_size(), greene_prefix(pi, k, Direction::Increasing));
    union
}

/// Partitions all of `pi` into monotone chains by a left-to-right pass:
/// position i joins chain c where c is the length of the longest monotone
/// (opposite direction) subsequence ending at i. For increasing chains the
/// chain count equals the longest decreasing subsequence length, and dually.
pub fn greedy_decompose(pi: &Permutation, direction: Direction) -> ChainUnion {
    match direction {
        Direction::Increasing => greedy_increasing(pi),
        Direction::Decreasing => {
            let rev = pi.reverse();
            let union = greedy_increasing(&rev);
            reverse_chain_union(union, pi.len(), Direction::Decreasing)
        }
    }
}

fn greedy_increasing(pi: &Permutation) -> ChainUnion {
    let n = pi.len();
    let mut class = vec![0usize; n]; // LDS length ending at i, 1-based
    for i in 0..n {
        let mut best = 0;
        for (j, &c) in class.iter().enumerate().take(i) {
            if pi.value(j) > pi.value(i) {
                best = best.max(c);
            }
        }
        class[i] = best + 1;
    }
    let num = class.iter().copied().max().unwrap_or(0);
    let mut chains = vec![Vec::new(); num];
    for i in 0..n {
        chains[class[i] - 1].push(i);
    }
    ChainUnion {
        chains,
        direction: Direction::Increasing,
    }
}

/// Hard scale guard for the subset-enumeration oracle.
pub const MAX_ORACLE_N: usize = 16;

/// Independent oracle for Greene's theorem: the maximum cardinality of a
/// position set whose restriction has no monotone (opposite direction)
/// subsequence longer than k. By Dilworth's theorem such a set is exactly a
/// union of at most k chains in the stated direction.
pub fn brute_force_max_union(pi: &Permutation, k: usize, direction: Direction) -> Result<usize> {
    let table = brute_force_max_union_table(pi, direction)?;
    let k = k.min(table.len());
    Ok(if k == 0 { 0 } else { table[k - 1] })
}

/// The full table for k = 1..=n in a single subset scan.
pub fn brute_force_max_union_table(pi: &Permutation, direction: Direction) -> Result<Vec<usize>> {
    let n = pi.len();
    if n > MAX_ORACLE_N {
        return Err(Error::Precondition(format!(
            "oracle scale: subset enumeration is limited to n <= {MAX_ORACLE_N}, got n = {n}"
        )));
    }
    let word: Vec<usize> = match direction {
        Direction::Increasing => pi.word().to_vec(),
        Direction::Decreasing => pi.word().iter().map(|&v| n + 1 - v).collect(),
    };
    // best[d] = largest subset whose longest decreasing subsequence is <= d
    let mut best = vec![0usize; n + 1];
    let mut vals = Vec::with_capacity(n);
    let mut dp = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << n) {
        vals.clear();
        for (i, &v) in word.iter().enumerate() {
            if mask >> i & 1 == 1 {
                vals.push(v);
            }
        }
        let size = vals.len();
        // longest decreasing subsequence of the restriction
        dp.clear();
        let mut lds = 0;
        for i in 0..size {
            let mut b = 1;
            for j in 0..i {
                if vals[j] > vals[i] && dp[j] + 1 > b {
                    b = dp[j] + 1;
                }
            }
            dp.push(b);
            lds = lds.max(b);
        }
        if size > best[lds] {
            best[lds] = size;
        }
    }
    // a set with LDS <= d also has LDS <= d+1
    let mut table = Vec::with_capacity(n);
    let mut running = 0;
    for &b in &best[1..] {
        running = running.max(b);
        table.push(running);
    }
    Ok(table)
}


/// Minimal SPFA-based min-cost max-flow. Augments along most negative cost
/// paths and stops once no negative-cost augmenting path remains (flow units
/// beyond that would cover no new position).
struct MinCostFlow {
    graph: Vec<Vec<usize>>, // node -> edge indices
    to: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
}

impl MinCostFlow {
    fn new(nodes: usize) -> Self {
        Self {
            graph: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    /// Returns the forward edge index.
    fn add_edge(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.to.len();
        self.graph[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.cost.push(cost);
        self.graph[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.cost.push(-cost);
        id
    }

    fn run(&mut self, s: usize, t: usize) {
        loop {
            let n = self.graph.len();
            let mut dist = vec![i64::MAX; n];
            let mut in_queue = vec![false; n];
            let mut prev_edge = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            in_queue[s] = true;
            while let Some(u) = queue.pop_front() {
                in_queue[u] = false;
                for &e in &self.graph[u] {
                    if self.cap[e] > 0 {
                        let v = self.to[e];
                        let nd = dist[u] + self.cost[e];
                        if nd < dist[v] {
                            dist[v] = nd;
                            prev_edge[v] = e;
                            if !in_queue[v] {
                                queue.push_back(v);
                                in_queue[v] = true;
                            }
                        }
                    }
                }
            }
            if dist[t] >= 0 {
                break;
            }
            // bottleneck along the path
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let e = prev_edge[v];
                push = push.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = prev_edge[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.to[e ^ 1];
            }
        }
    }

    fn flow_between(&self, u: usize, v: usize) -> i64 {
        self.graph[u]
            .iter()
            .filter(|&&e| e % 2 == 0 && self.to[e] == v)
            .map(|&e| self.cap[e ^ 1])
            .sum()
    }

    fn edge_has_flow(&self, u: usize, v: usize) -> bool {
        self.flow_between(u, v) > 0
    }
}
