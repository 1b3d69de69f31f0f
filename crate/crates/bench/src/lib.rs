//! Fixtures shared by the benchmark targets.

use sl2sum_core::{enumerate, TraversalOrder, UnimodularPair};

/// All tree nodes down to the given depth, in breadth-first order.
pub fn full_levels(depth: u32) -> Vec<UnimodularPair> {
    let budget = (1u64 << (depth + 1)) - 1;
    enumerate(TraversalOrder::BreadthFirst, budget)
        .map(|(p, _)| p)
        .collect()
}

/// A quarter-circle boundary sampled at n+1 points, densest fixture the
/// sampled-curve path sees in practice.
pub fn quarter_circle(n: usize) -> Vec<(f64, f64)> {
    (0..=n)
        .map(|i| {
            let t = std::f64::consts::FRAC_PI_2 * (i as f64) / (n as f64);
            (t.cos(), t.sin())
        })
        .collect()
}
