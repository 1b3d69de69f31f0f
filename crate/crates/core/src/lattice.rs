//! The positive unimodular lattice tree.
//!
//! Every 2x2 matrix with nonnegative integer entries and determinant one
//! sits at exactly one node of an infinite binary tree rooted at the
//! identity. A node holds two row vectors u = (a, b) and w = (c, d); its
//! children replace one row by the sum of both, which is the classical
//! mediant subdivision of the Stern-Brocot tree. The mediant (a+c, b+d)
//! runs over all coprime pairs of positive integers exactly once, so the
//! tree doubles as an enumeration of primitive vectors.

use crate::error::{Error, Result};

/// A tree node: rows u = (a, b) and w = (c, d) with a*d - b*c = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularPair {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

/// A coprime, nonzero pair of nonnegative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimitiveVector {
    pub v1: u64,
    pub v2: u64,
}

pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

impl UnimodularPair {
    /// Build a pair, checking the determinant condition.
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self> {
        let p = UnimodularPair { a, b, c, d };
        if p.det() != 1 {
            return Err(Error::InvalidInput(format!(
                "determinant of ({a},{b},{c},{d}) is {}, expected 1",
                p.det()
            )));
        }
        Ok(p)
    }

    /// Determinant a*d - b*c, computed exactly in 128 bits.
    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    pub fn children(&self) -> Result<(UnimodularPair, UnimodularPair)> {
        children(*self)
    }

    pub fn mediant(&self) -> Result<PrimitiveVector> {
        mediant(*self)
    }
}

impl PrimitiveVector {
    /// Build a vector, checking primitivity.
    pub fn new(v1: u64, v2: u64) -> Result<Self> {
        if v1 == 0 && v2 == 0 {
            return Err(Error::InvalidInput("(0, 0) is not primitive".into()));
        }
        if gcd(v1, v2) != 1 {
            return Err(Error::InvalidInput(format!(
                "({v1}, {v2}) is not primitive: gcd = {}",
                gcd(v1, v2)
            )));
        }
        Ok(PrimitiveVector { v1, v2 })
    }
}

/// The tree root, the identity matrix. It is itself a summation node: its
/// rows are the boundary vectors (1,0) and (0,1) and its mediant is (1,1).
pub fn root() -> UnimodularPair {
    UnimodularPair {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    }
}

/// Both children of a node. The left child keeps row u and replaces w by
/// the mediant; the right child does the opposite. Fails if any entry
/// would leave the 64-bit range.
pub fn children(p: UnimodularPair) -> Result<(UnimodularPair, UnimodularPair)> {
    let m1 = p
        .a
        .checked_add(p.c)
        .ok_or(Error::Overflow("child entry exceeds 64 bits"))?;
    let m2 = p
        .b
        .checked_add(p.d)
        .ok_or(Error::Overflow("child entry exceeds 64 bits"))?;
    let left = UnimodularPair {
        a: p.a,
        b: p.b,
        c: m1,
        d: m2,
    };
    let right = UnimodularPair {
        a: m1,
        b: m2,
        c: p.c,
        d: p.d,
    };
    Ok((left, right))
}

/// The mediant (a+c, b+d) of a node. Primitive because the node has
/// determinant one.
pub fn mediant(p: UnimodularPair) -> Result<PrimitiveVector> {
    let v1 = p
        .a
        .checked_add(p.c)
        .ok_or(Error::Overflow("mediant entry exceeds 64 bits"))?;
    let v2 = p
        .b
        .checked_add(p.d)
        .ok_or(Error::Overflow("mediant entry exceeds 64 bits"))?;
    Ok(PrimitiveVector { v1, v2 })
}

/// Find the unique node whose mediant is `v`.
///
/// Runs the subtractive descent in accelerated form: instead of stepping
/// down the tree one level at a time, each loop iteration absorbs a whole
/// run of identical turns with a division, so the cost is logarithmic in
/// max(v1, v2) like the Euclidean algorithm.
///
/// The boundary vectors (1,0) and (0,1) are row vectors of the root, not
/// mediants, so they are rejected.
pub fn locate(v: PrimitiveVector) -> Result<UnimodularPair> {
    if gcd(v.v1, v.v2) != 1 || (v.v1 == 0 && v.v2 == 0) {
        return Err(Error::InvalidInput(format!(
            "({}, {}) is not primitive",
            v.v1, v.v2
        )));
    }
    if v.v1 == 0 || v.v2 == 0 {
        return Err(Error::Domain(format!(
            "({}, {}) is a boundary vector, not a mediant",
            v.v1, v.v2
        )));
    }
    // Invariant: v = alpha*u + beta*w for the current rows u, w. Replacing
    // w by w + k*u preserves it with alpha -= k*beta, and symmetrically for
    // the other row. Each replacement is one run of identical tree turns;
    // when alpha = beta = 1 the rows are the node whose mediant is v.
    let mut u = (1u64, 0u64);
    let mut w = (0u64, 1u64);
    let mut alpha = v.v1;
    let mut beta = v.v2;
    while alpha != 1 || beta != 1 {
        if alpha > beta {
            let k = (alpha - 1) / beta;
            w.0 += k * u.0;
            w.1 += k * u.1;
            alpha -= k * beta;
        } else {
            let k = (beta - 1) / alpha;
            u.0 += k * w.0;
            u.1 += k * w.1;
            beta -= k * alpha;
        }
    }
    Ok(UnimodularPair {
        a: u.0,
        b: u.1,
        c: w.0,
        d: w.1,
    })
}

/// Order in which [`enumerate`] visits the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TraversalOrder {
    /// Explicit-stack depth-first, left child before right. The default:
    /// threshold pruning composes naturally with it.
    #[default]
    DepthFirst,
    /// Level by level from the root, for diagnostics.
    BreadthFirst,
}

/// Streaming tree iterator produced by [`enumerate`].
///
/// Yields `(node, depth)` with the root at depth 0. Subtrees whose entries
/// would overflow 64 bits are silently pruned; the number of such prunes is
/// available afterwards through [`TreeIter::overflow_truncations`].
pub struct TreeIter {
    order: TraversalOrder,
    remaining: u64,
    // Depth-first uses `stack` as a LIFO; breadth-first uses `queue` as a
    // FIFO. Only one is populated.
    stack: Vec<(UnimodularPair, u32)>,
    queue: std::collections::VecDeque<(UnimodularPair, u32)>,
    overflow_truncations: u64,
}

impl TreeIter {
    /// How many subtrees were dropped because an entry left the 64-bit
    /// range. Meaningful once iteration has finished or paused.
    pub fn overflow_truncations(&self) -> u64 {
        self.overflow_truncations
    }
}

impl Iterator for TreeIter {
    type Item = (UnimodularPair, u32);

    fn next(&mut self) -> Option<(UnimodularPair, u32)> {
        if self.remaining == 0 {
            return None;
        }
        let (node, depth) = match self.order {
            TraversalOrder::DepthFirst => self.stack.pop()?,
            TraversalOrder::BreadthFirst => self.queue.pop_front()?,
        };
        self.remaining -= 1;
        match children(node) {
            Ok((left, right)) => match self.order {
                TraversalOrder::DepthFirst => {
                    // Push right first so the left child is visited next.
                    self.stack.push((right, depth + 1));
                    self.stack.push((left, depth + 1));
                }
                TraversalOrder::BreadthFirst => {
                    self.queue.push_back((left, depth + 1));
                    self.queue.push_back((right, depth + 1));
                }
            },
            Err(_) => self.overflow_truncations += 1,
        }
        Some((node, depth))
    }
}

/// Walk the tree from the root in the given order, yielding at most
/// `budget` nodes.
pub fn enumerate(order: TraversalOrder, budget: u64) -> TreeIter {
    let mut it = TreeIter {
        order,
        remaining: budget,
        stack: Vec::new(),
        queue: std::collections::VecDeque::new(),
        overflow_truncations: 0,
    };
    match order {
        TraversalOrder::DepthFirst => it.stack.push((root(), 0)),
        TraversalOrder::BreadthFirst => it.queue.push_back((root(), 0)),
    }
    it
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn root_is_identity_with_mediant_one_one() {
        let r = root();
        assert_eq!(r, UnimodularPair { a: 1, b: 0, c: 0, d: 1 });
        assert_eq!(r.det(), 1);
        assert_eq!(mediant(r).unwrap(), PrimitiveVector { v1: 1, v2: 1 });
    }

    #[test]
    fn children_of_root_and_grandchild() {
        let (l, r) = children(root()).unwrap();
        assert_eq!(l, UnimodularPair { a: 1, b: 0, c: 1, d: 1 });
        assert_eq!(r, UnimodularPair { a: 1, b: 1, c: 0, d: 1 });
        let (ll, lr) = children(l).unwrap();
        assert_eq!(ll, UnimodularPair { a: 1, b: 0, c: 2, d: 1 });
        assert_eq!(lr, UnimodularPair { a: 2, b: 1, c: 1, d: 1 });
        let p = UnimodularPair::new(2, 1, 1, 1).unwrap();
        let (cl, cr) = children(p).unwrap();
        assert_eq!(cl.det(), 1);
        assert_eq!(cr.det(), 1);
    }

    #[test]
    fn mediant_examples() {
        let p = UnimodularPair::new(2, 1, 1, 1).unwrap();
        assert_eq!(mediant(p).unwrap(), PrimitiveVector { v1: 3, v2: 2 });
    }

    /// Brute-force reference for locate: search every nonnegative det-1
    /// split of v into two rows.
    fn locate_brute(v: PrimitiveVector) -> Vec<UnimodularPair> {
        let mut found = Vec::new();
        for a in 0..=v.v1 {
            let c = v.v1 - a;
            for b in 0..=v.v2 {
                let d = v.v2 - b;
                let det = a as i128 * d as i128 - b as i128 * c as i128;
                if det == 1 {
                    found.push(UnimodularPair { a, b, c, d });
                }
            }
        }
        found
    }

    #[test]
    fn locate_matches_frozen_examples() {
        assert_eq!(
            locate(PrimitiveVector::new(1, 1).unwrap()).unwrap(),
            root()
        );
        assert_eq!(
            locate(PrimitiveVector::new(3, 2).unwrap()).unwrap(),
            UnimodularPair { a: 2, b: 1, c: 1, d: 1 }
        );
        assert_eq!(
            locate(PrimitiveVector::new(5, 2).unwrap()).unwrap(),
            UnimodularPair { a: 3, b: 1, c: 2, d: 1 }
        );
    }

    #[test]
    fn locate_agrees_with_brute_force_and_split_is_unique() {
        for v1 in 1u64..=60 {
            for v2 in 1u64..=60 {
                if gcd(v1, v2) != 1 {
                    continue;
                }
                let v = PrimitiveVector::new(v1, v2).unwrap();
                let splits = locate_brute(v);
                assert_eq!(splits.len(), 1, "({v1},{v2}) has {} splits", splits.len());
                let p = locate(v).unwrap();
                assert_eq!(p, splits[0]);
                assert_eq!(mediant(p).unwrap(), v);
            }
        }
    }

    #[test]
    fn locate_rejects_bad_input() {
        assert!(locate(PrimitiveVector { v1: 2, v2: 4 }).is_err());
        assert!(locate(PrimitiveVector { v1: 1, v2: 0 }).is_err());
        assert!(locate(PrimitiveVector { v1: 0, v2: 1 }).is_err());
    }

    #[test]
    fn enumerate_respects_budget_and_starts_at_root() {
        let nodes: Vec<_> = enumerate(TraversalOrder::DepthFirst, 1).collect();
        assert_eq!(nodes, vec![(root(), 0)]);
        let nodes: Vec<_> = enumerate(TraversalOrder::BreadthFirst, 3).collect();
        assert_eq!(nodes.len(), 3);
        assert_eq!(nodes[0].0, root());
        let (l, r) = children(root()).unwrap();
        assert_eq!(nodes[1].0, l);
        assert_eq!(nodes[2].0, r);
    }

    #[test]
    fn depth_counts_are_binary_tree_counts() {
        // 2^(k+1) - 1 nodes at depth <= k.
        for k in 0..=15u32 {
            let want = (1u64 << (k + 1)) - 1;
            let got = enumerate(TraversalOrder::BreadthFirst, u64::MAX)
                .take_while(|&(_, depth)| depth <= k)
                .count() as u64;
            assert_eq!(got, want, "depth {k}");
        }
    }

    #[test]
    fn no_duplicates_and_det_one_in_prefix() {
        let mut seen = HashSet::new();
        for (p, _) in enumerate(TraversalOrder::DepthFirst, 100_000) {
            assert_eq!(p.det(), 1);
            assert!(seen.insert(p), "duplicate node {p:?}");
        }
        assert_eq!(seen.len(), 100_000);
    }

    #[test]
    fn max_entry_strictly_increases_below_depth_one() {
        // Along any path the max entry strictly grows once past depth 1.
        fn walk(p: UnimodularPair, depth: u32) {
            if depth >= 9 {
                return;
            }
            let max_p = p.a.max(p.b).max(p.c).max(p.d);
            let (l, r) = children(p).unwrap();
            for ch in [l, r] {
                let max_c = ch.a.max(ch.b).max(ch.c).max(ch.d);
                if depth >= 1 {
                    assert!(max_c > max_p, "no growth {p:?} -> {ch:?}");
                } else {
                    assert!(max_c >= max_p);
                }
                walk(ch, depth + 1);
            }
        }
        walk(root(), 0);
    }

    #[test]
    fn overflow_prunes_and_counts() {
        // A node close to the 64-bit edge: children overflow immediately.
        let near = UnimodularPair {
            a: u64::MAX - 1,
            b: 1,
            c: u64::MAX - 2,
            d: 1,
        };
        assert!(children(near).is_err());
        let mut it = TreeIter {
            order: TraversalOrder::DepthFirst,
            remaining: 10,
            stack: vec![(near, 0)],
            queue: std::collections::VecDeque::new(),
            overflow_truncations: 0,
        };
        let visited: Vec<_> = (&mut it).collect();
        assert_eq!(visited.len(), 1);
        assert_eq!(it.overflow_truncations(), 1);
    }

    #[test]
    fn new_validates_determinant() {
        assert!(UnimodularPair::new(1, 0, 0, 1).is_ok());
        assert!(UnimodularPair::new(2, 1, 1, 1).is_ok());
        assert!(UnimodularPair::new(1, 1, 1, 1).is_err());
        assert!(UnimodularPair::new(0, 0, 0, 0).is_err());
    }
}
