//! Shape avoidance of permutations through the RSK correspondence.
//!
//! The library computes RSK insertion/recording pairs and their inverse,
//! Greene's chain-union invariants with constructive extraction, witness
//! subsequences of prescribed shapes (rectangles, general shapes, hooks),
//! and exact avoidance counts with closed forms where they are proven.
//!
//! Conventions: permutations are words on {1..n} (values 1-based,
//! positions 0-based); partitions are weakly decreasing positive parts;
//! every count is an exact integer; every constructive witness re-certifies
//! its own shape before it is returned.

pub mod cache;
pub mod enumeration;
pub mod error;
pub mod greene;
pub mod partition;
pub mod permutation;
pub mod tableau;
pub mod verify;
pub mod witness;

pub use cache::CountCache;
pub use enumeration::{
    avoid_count_22, avoid_count_brute, avoid_count_hook, avoids_shape, cell_sum_bound,
    contains_pattern, growth_series, knuth_cell, single_pattern_avoid_count, syt_count,
    verify_cell_identity, CellIdentityReport, CountMethod, CountRecord, CountTarget,
    GrowthPoint, GrowthSeries, SetRelation, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use greene::{
    brute_force_max_union, extract_chain_union, greedy_decompose, greene_prefix, ChainUnion,
    Direction,
};
pub use partition::{partitions_bounded, partitions_of, Partition};
pub use permutation::{permutations_of, permutations_with_first, Permutation};
pub use tableau::{rsk, rsk_inverse, shape_of, RskPair, StandardTableau};
pub use witness::{
    brute_force_find_shape, extract_hook, extract_rectangle, extract_shape,
    extract_subshape_rectangular, hook_counterexample, negative_inclusion_example,
    rectangular_grid, RectangularGrid, SubsequenceWitness,
};
