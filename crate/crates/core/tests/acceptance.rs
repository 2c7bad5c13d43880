//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Every computed value is cross-checked against an
//! independent route (subset oracles, exact formulas, or exhaustive
//! enumeration); tolerances are exact unless a line states otherwise.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shape_avoid::enumeration::{
    avoid_count_22, avoid_count_brute, avoid_count_hook, cell_sum_bound, factorial, growth_series,
    knuth_cell, nth_root, syt_count, verify_cell_identity, SetRelation, DEFAULT_BUDGET,
};
use shape_avoid::greene::{
    brute_force_max_union_table, extract_chain_union, greene_prefix, Direction,
};
use shape_avoid::partition::{partitions_of, Partition};
use shape_avoid::permutation::{permutations_of, Permutation};
use shape_avoid::tableau::{rsk, rsk_inverse, shape_of};
use shape_avoid::verify::random_permutation;
use shape_avoid::witness::{
    brute_force_find_shape, extract_rectangle, extract_shape, hook_counterexample,
};

const B: u64 = DEFAULT_BUDGET;

fn report(num: usize, name: &str, outcome: std::result::Result<String, String>) {
    match outcome {
        Ok(detail) => println!("criterion {num} ({name}): pass — {detail}"),
        Err(detail) => {
            println!("criterion {num} ({name}): FAIL — {detail}");
            panic!("criterion {num} ({name}) failed: {detail}");
        }
    }
}

/// Roundtrip on all of S_n for n <= 7, shape histogram = (f^lambda)^2, and
/// the summed squares equal n! exactly up to n = 40.
#[test]
fn criterion_1_rsk_roundtrip_and_partition_identity() {
    let run = || -> std::result::Result<String, String> {
        for n in 0..=7 {
            let mut histogram: BTreeMap<Partition, u64> = BTreeMap::new();
            for pi in permutations_of(n) {
                let pair = rsk(&pi);
                if rsk_inverse(&pair) != pi {
                    return Err(format!("roundtrip failed for {pi}"));
                }
                *histogram.entry(pair.shape()).or_insert(0) += 1;
            }
            for lambda in partitions_of(n) {
                let f = syt_count(&lambda);
                let expected = &f * &f;
                let got = BigUint::from(histogram.get(&lambda).copied().unwrap_or(0));
                if got != expected {
                    return Err(format!(
                        "histogram at n={n}, lambda={lambda}: {got} != {expected}"
                    ));
                }
            }
        }
        for n in 0..=40 {
            let total: BigUint = partitions_of(n)
                .map(|l| {
                    let f = syt_count(&l);
                    &f * &f
                })
                .sum();
            if total != factorial(n) {
                return Err(format!("sum of squares at n={n}: {total} != {}!", n));
            }
        }
        Ok("S_0..S_7 roundtrip + histograms; square-sum identity to n=40".into())
    };
    report(1, "rsk roundtrip and partition identity", run());
}

/// Prefix invariant = constructive extraction = subset oracle, both
/// directions and all k, exhaustively on S_6 and on 500 seeded samples
/// from S_12.
#[test]
fn criterion_2_greene_theorem() {
    let agree = |pi: &Permutation| -> std::result::Result<(), String> {
        for dir in [Direction::Increasing, Direction::Decreasing] {
            let table = brute_force_max_union_table(pi, dir).map_err(|e| e.to_string())?;
            for k in 1..=pi.len() {
                let invariant = greene_prefix(pi, k, dir);
                let union = extract_chain_union(pi, k, dir);
                union.validate(pi).map_err(|e| e.to_string())?;
                if union.total_size() != invariant || table[k - 1] != invariant {
                    return Err(format!(
                        "pi={pi} k={k} {dir}: invariant {invariant}, extraction {}, oracle {}",
                        union.total_size(),
                        table[k - 1]
                    ));
                }
            }
        }
        Ok(())
    };
    let run = || -> std::result::Result<String, String> {
        for pi in permutations_of(6) {
            agree(&pi)?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(20240);
        for _ in 0..500 {
            agree(&random_permutation(12, &mut rng))?;
        }
        Ok("S_6 exhaustive + 500 seeded S_12, all k, both directions".into())
    };
    report(2, "greene invariants vs extraction vs oracle", run());
}

/// On every permutation of rectangular shape (m^k), a subsequence of shape
/// mu exists if and only if mu fits in the rectangle, and the constructive
/// extraction certifies it whenever it fits. Exact.
#[test]
fn criterion_3_rectangular_iff() {
    let run = || -> std::result::Result<String, String> {
        let mut witnesses = 0usize;
        for (m, k) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
            let rect = Partition::rectangle(m, k);
            let cell = knuth_cell(&rect, B).map_err(|e| e.to_string())?;
            let shapes: Vec<Partition> = (0..=m * k).flat_map(partitions_of).collect();
            for pi in &cell {
                for mu in &shapes {
                    let fits = rect.contains(mu);
                    let found = brute_force_find_shape(pi, mu, B)
                        .map_err(|e| e.to_string())?
                        .is_some();
                    if found != fits {
                        return Err(format!("pi={pi} mu={mu}: oracle {found}, fits {fits}"));
                    }
                    if fits {
                        match extract_shape(pi, mu) {
                            Ok(w) if w.shape() == mu => witnesses += 1,
                            Ok(w) => {
                                return Err(format!(
                                    "pi={pi} mu={mu}: extracted shape {}",
                                    w.shape()
                                ))
                            }
                            Err(e) => return Err(format!("pi={pi} mu={mu}: {e}")),
                        }
                    }
                }
            }
        }
        Ok(format!(
            "cells (2^2),(2^3),(3^2),(3^3), all |mu| <= mk; {witnesses} certified witnesses"
        ))
    };
    report(3, "rectangular cells: iff + certified extraction", run());
}

/// Rectangle and general-shape extraction, exhaustive over S_7: every
/// applicable target yields a certified witness of exactly that shape.
#[test]
fn criterion_4_rectangle_and_shape_extraction() {
    let run = || -> std::result::Result<String, String> {
        let shapes: Vec<Partition> = (1..=7).flat_map(partitions_of).collect();
        let mut witnesses = 0usize;
        for pi in permutations_of(7) {
            let lambda = shape_of(&pi);
            for m in 1..=7usize {
                for k in 1..=7usize {
                    if m * k <= 7 && lambda.contains(&Partition::rectangle(m, k)) {
                        let w = extract_rectangle(&pi, m, k)
                            .map_err(|e| format!("pi={pi} rect ({m}^{k}): {e}"))?;
                        if *w.shape() != Partition::rectangle(m, k) {
                            return Err(format!("pi={pi} rect ({m}^{k}): got {}", w.shape()));
                        }
                        witnesses += 1;
                    }
                }
            }
            for mu in &shapes {
                let rect = Partition::rectangle(mu.part(0), mu.num_parts());
                if lambda.contains(&rect) {
                    let w = extract_shape(&pi, mu).map_err(|e| format!("pi={pi} mu={mu}: {e}"))?;
                    if w.shape() != mu {
                        return Err(format!("pi={pi} mu={mu}: got {}", w.shape()));
                    }
                    witnesses += 1;
                }
            }
        }
        Ok(format!("S_7 exhaustive; {witnesses} certified witnesses"))
    };
    report(4, "rectangle and general-shape extraction on S_7", run());
}

/// Set relations between Avoid_n^mu and the union of cells of shapes not
/// containing mu, exhaustive for n <= 7: equality for one-row/one-column
/// shapes up to 4 and for hooks with a short arm; strict containment for
/// (2,2) at n = 5, 6, 7.
#[test]
fn criterion_5_cell_identity_relations() {
    let run = || -> std::result::Result<String, String> {
        let mut equal_targets: Vec<Partition> = Vec::new();
        for m in 1..=4usize {
            equal_targets.push(Partition::rectangle(m, 1));
            equal_targets.push(Partition::rectangle(1, m));
        }
        for m in 1..=6usize {
            for k in 1..=6usize {
                if (m <= 3 || k <= 3) && m + k - 1 <= 6 && m >= 2 && k >= 2 {
                    equal_targets.push(Partition::hook(m, k));
                }
            }
        }
        equal_targets.sort();
        equal_targets.dedup();
        let mut checked = 0usize;
        for n in 1..=7 {
            for mu in &equal_targets {
                let r = verify_cell_identity(n, mu, B).map_err(|e| e.to_string())?;
                if r.relation != SetRelation::Equal {
                    return Err(format!("n={n} mu={mu}: relation {}", r.relation));
                }
                checked += 1;
            }
        }
        let two_two = Partition::rectangle(2, 2);
        for n in 5..=7 {
            let r = verify_cell_identity(n, &two_two, B).map_err(|e| e.to_string())?;
            if r.relation != SetRelation::AvoidStrictlyContained {
                return Err(format!("n={n} mu=2,2: relation {}", r.relation));
            }
            checked += 1;
        }
        Ok(format!("{checked} (n, mu) classifications, all as required"))
    };
    report(5, "avoid vs cell-union set relations, n <= 7", run());
}

/// The tightness fixture: the (4,4) instance is the exact word
/// (6,5,1,2,7,8,4,3) of shape (4,2,1,1) with no (4,1,1,1) subsequence;
/// the (4,5) and (5,4) instances pass containment and oracle-absence.
#[test]
fn criterion_6_hook_counterexamples() {
    let run = || -> std::result::Result<String, String> {
        let pi = hook_counterexample(4, 4).map_err(|e| e.to_string())?;
        if pi.to_string() != "6,5,1,2,7,8,4,3" {
            return Err(format!("(4,4) word is {pi}"));
        }
        let lambda = shape_of(&pi);
        if lambda != "4,2,1,1".parse().unwrap() {
            return Err(format!("(4,4) shape is {lambda}"));
        }
        if brute_force_find_shape(&pi, &Partition::hook(4, 4), B)
            .map_err(|e| e.to_string())?
            .is_some()
        {
            return Err("(4,4) fixture contains a (4,1,1,1) subsequence".into());
        }
        for (m, k) in [(4usize, 5usize), (5, 4)] {
            let pi = hook_counterexample(m, k).map_err(|e| e.to_string())?;
            let lambda = shape_of(&pi);
            let contained = Partition::hook(2 * m - 4, 2 * k - 4);
            if !lambda.contains(&contained) {
                return Err(format!("({m},{k}): shape {lambda} misses hook {contained}"));
            }
            if brute_force_find_shape(&pi, &Partition::hook(m, k), B)
                .map_err(|e| e.to_string())?
                .is_some()
            {
                return Err(format!("({m},{k}) fixture contains the target hook"));
            }
        }
        Ok("(4,4) verbatim; (4,5) and (5,4) containment + absence".into())
    };
    report(6, "hook tightness fixtures", run());
}

/// The (2,2) integer recursion agrees with brute-force counts for n <= 9
/// and reproduces the known prefix.
#[test]
fn criterion_7_two_two_recursion_vs_brute() {
    let run = || -> std::result::Result<String, String> {
        let mu = Partition::rectangle(2, 2);
        let prefix = [1u64, 2, 6, 20, 68, 232, 792, 2704];
        for n in 1..=9usize {
            let formula = avoid_count_22(n).map_err(|e| e.to_string())?;
            let brute = avoid_count_brute(n, &mu, B).map_err(|e| e.to_string())?;
            if formula.count != brute.count {
                return Err(format!(
                    "n={n}: recursion {} != brute {}",
                    formula.count, brute.count
                ));
            }
            if n <= 8 && formula.count != BigUint::from(prefix[n - 1]) {
                return Err(format!("n={n}: {} != expected {}", formula.count, prefix[n - 1]));
            }
        }
        Ok("recursion = brute for n <= 9; prefix 1,2,6,20,68,232,792,2704".into())
    };
    report(7, "(2,2) recursion vs brute force", run());
}

/// The hook closed form agrees with brute-force counts on its regime for
/// the five smallest nontrivial hooks, up to n = 9.
#[test]
fn criterion_8_hook_formula_vs_brute() {
    let run = || -> std::result::Result<String, String> {
        let mut checked = 0usize;
        for (m, k) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3), (2, 4)] {
            let mu = Partition::hook(m, k);
            for n in (m - 1) * (k - 1) + 1..=9 {
                let formula = avoid_count_hook(n, m, k).map_err(|e| e.to_string())?;
                let brute = avoid_count_brute(n, &mu, B).map_err(|e| e.to_string())?;
                if formula.count != brute.count {
                    return Err(format!(
                        "hook ({m},{k}) n={n}: formula {} != brute {}",
                        formula.count, brute.count
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} (hook, n) agreements up to n = 9"))
    };
    report(8, "hook formula vs brute force", run());
}

/// Finite-scale stand-ins for the asymptotics: the cell-sum bound dominates
/// brute counts for |mu| <= 5, n <= 8 (exact inequality); the (2,2) growth
/// roots stay strictly inside (1, 2) and land within 1e-3 of sqrt(2+sqrt 2)
/// at n = 10^4; hook growth series rise monotonically toward
/// max(m-1, k-1) over n <= 200.
#[test]
fn criterion_9_bounds_and_growth() {
    let run = || -> std::result::Result<String, String> {
        // exact inequality at desk scale
        let shapes: Vec<Partition> = (1..=5).flat_map(partitions_of).collect();
        for n in 1..=8usize {
            for mu in &shapes {
                let brute = avoid_count_brute(n, mu, B).map_err(|e| e.to_string())?;
                let bound = cell_sum_bound(n, mu);
                if brute.count > bound.count {
                    return Err(format!(
                        "n={n} mu={mu}: brute {} exceeds bound {}",
                        brute.count, bound.count
                    ));
                }
            }
        }
        // (2,2) growth roots from the exact recursion
        let limit = (2.0 + 2f64.sqrt()).sqrt();
        let mut last_root = 0.0;
        for n in [10usize, 100, 1000, 10_000] {
            let rec = avoid_count_22(n).map_err(|e| e.to_string())?;
            let root = nth_root(&rec.count, 2 * n as u64);
            if root <= 1.0 || root >= 2.0 {
                return Err(format!("(2,2) root at n={n} is {root}, outside (1,2)"));
            }
            last_root = root;
        }
        if (last_root - limit).abs() > 1e-3 {
            return Err(format!(
                "(2,2) root at n=10^4 is {last_root}, limit {limit}: off by {}",
                (last_root - limit).abs()
            ));
        }
        // hook series rise monotonically toward max(m-1, k-1)
        for (m, k) in [(3usize, 2usize), (4, 2), (3, 3)] {
            let mu = Partition::hook(m, k);
            let hook_limit = (m - 1).max(k - 1) as f64;
            let counts: Vec<_> = ((m - 1) * (k - 1) + 1..=200)
                .map(|n| avoid_count_hook(n, m, k))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let series = growth_series(&counts, &mu).map_err(|e| e.to_string())?;
            if series.hook_limit != Some(hook_limit) {
                return Err(format!("({m},{k}): hook limit {:?}", series.hook_limit));
            }
            let roots: Vec<f64> = series.points.iter().map(|p| p.root).collect();
            if roots.windows(2).any(|w| w[1] <= w[0]) {
                return Err(format!("({m},{k}): growth roots are not increasing"));
            }
            let last = *roots.last().unwrap();
            if last >= hook_limit || hook_limit - last > 0.2 {
                return Err(format!(
                    "({m},{k}): final root {last} vs limit {hook_limit}"
                ));
            }
        }
        Ok("bound >= brute (|mu| <= 5, n <= 8); (2,2) root within 1e-3 at n=10^4; \
            hook series monotone to n=200"
            .into())
    };
    report(9, "cell-sum bounds and growth convergence", run());
}

/// The shape of every subsequence is dominated by the shape of the host,
/// exhaustively over S_6 and all position subsets.
#[test]
fn criterion_10_subsequence_dominance() {
    let run = || -> std::result::Result<String, String> {
        let mut checked = 0usize;
        for pi in permutations_of(6) {
            let lambda = shape_of(&pi);
            for mask in 0u32..64 {
                let positions: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
                let pattern = pi.pattern_of(&positions).map_err(|e| e.to_string())?;
                let sub = shape_of(&pattern);
                if !lambda.dominates(&sub) {
                    return Err(format!(
                        "pi={pi} positions {positions:?}: {sub} not dominated by {lambda}"
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} subsequences over S_6"))
    };
    report(10, "subsequence shapes dominated by host shape", run());
}
