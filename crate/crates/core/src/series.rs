//! The lattice summation engine.
//!
//! Sums per-node support differences over the unimodular tree: power sums
//! with exponent s, the squared arctan variant for the cycloid, and mixed
//! two-curve sums. Depth-first descent with threshold pruning does the
//! heavy lifting; every pruned subtree is either covered by a certified
//! geometric bound (convex curves, s in {1, 2}) or counted toward a
//! heuristic tail estimate.
//!
//! Determinism: a given entry point with fixed controls and plan produces
//! bit-identical results on every run and every thread count. The parallel
//! plan fixes the tree partition and the merge order up front, so worker
//! scheduling cannot influence the value.

use crate::accum::Accumulator;
use crate::error::{Error, Result};
use crate::geomoracle::cheap_subtree_bound;
use crate::lattice::{children, root, UnimodularPair};
use crate::quad::QuadratureSpec;
use crate::support::{Convexity, Curve};
use crate::AccumulationMode;

/// Parameters of a lattice sum.
#[derive(Debug, Clone, Copy)]
pub struct SumControls {
    /// Exponent applied to each term, preserving sign for integer values.
    pub s: f64,
    /// Subtrees whose root term magnitude falls below this are pruned.
    pub prune_epsilon: f64,
    /// Maximum tree depth expanded (root is depth 0).
    pub depth_cap: u32,
    /// Maximum number of nodes evaluated.
    pub node_budget: u64,
    /// How terms are added up.
    pub accumulation: AccumulationMode,
}

impl SumControls {
    /// Defaults: prune threshold 1e-9, depth cap 60, budget 10^8,
    /// compensated accumulation.
    pub fn new(s: f64) -> Self {
        SumControls {
            s,
            prune_epsilon: 1e-9,
            depth_cap: 60,
            node_budget: 100_000_000,
            accumulation: AccumulationMode::Compensated,
        }
    }

    pub fn with_prune_epsilon(mut self, eps: f64) -> Self {
        self.prune_epsilon = eps;
        self
    }

    pub fn with_depth_cap(mut self, cap: u32) -> Self {
        self.depth_cap = cap;
        self
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_accumulation(mut self, mode: AccumulationMode) -> Self {
        self.accumulation = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.s.is_finite() || self.s <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "exponent must be finite and positive, got {}",
                self.s
            )));
        }
        if !self.prune_epsilon.is_finite() || self.prune_epsilon < 0.0 {
            return Err(Error::InvalidInput(format!(
                "prune threshold must be finite and nonnegative, got {}",
                self.prune_epsilon
            )));
        }
        // Branch entries grow at least linearly with depth, so the walk
        // stack holds at most one frame per level; a million levels keeps
        // that under a few dozen megabytes while letting the slowly
        // decaying spine families (term ~ 1/depth^2) run until the prune
        // threshold cuts them, which tight tolerances require.
        if self.depth_cap == 0 || self.depth_cap > 1_000_000 {
            return Err(Error::InvalidInput(format!(
                "depth cap must be in 1..=1000000, got {}",
                self.depth_cap
            )));
        }
        if self.node_budget == 0 {
            return Err(Error::InvalidInput("node budget must be at least 1".into()));
        }
        Ok(())
    }
}

/// What the reported tail magnitude means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailKind {
    /// A rigorous upper bound on everything pruned.
    Certified,
    /// A heuristic estimate (pruned-subtree count times the largest pruned
    /// contribution); reported, not trusted.
    Estimated,
    /// No tail claim; the node budget ran out.
    None,
}

/// Outcome of a lattice sum.
#[derive(Debug, Clone, Copy)]
pub struct SeriesResult {
    /// The accumulated sum over all retained nodes (tail not included).
    pub value: f64,
    /// Nodes whose term was evaluated.
    pub nodes_used: u64,
    /// Subtrees cut off by pruning, the depth cap, or the budget.
    pub truncated_subtrees: u64,
    pub tail_kind: TailKind,
    /// Bound or estimate for the magnitude of everything not summed.
    pub tail_magnitude: f64,
    /// Subtrees dropped because an entry left the 64-bit range.
    pub overflow_truncations: u64,
}

/// Execution plan for the parallel driver.
///
/// The tree is walked sequentially above `seed_depth`; the 2^seed_depth
/// subtrees rooted there are distributed over threads and merged in fixed
/// index order, with the remaining node budget split evenly between them
/// up front. Results depend on `seed_depth` (through that budget split)
/// but never on `threads`, so the same plan is bit-identical on any
/// machine. The even split means skewed workloads need budget headroom:
/// give the budget several times the expected node count, or use the
/// sequential entry points, whose single global budget is exact.
#[derive(Debug, Clone, Copy)]
pub struct ExecPlan {
    /// Worker threads; 0 means use the available parallelism.
    pub threads: usize,
    /// Depth of the partition frontier; 0 means one sequential walk.
    pub seed_depth: u32,
}

impl Default for ExecPlan {
    fn default() -> Self {
        ExecPlan {
            threads: 0,
            seed_depth: 6,
        }
    }
}

/// Sign-preserving power: integer exponents keep the term's sign,
/// non-integer exponents require a nonnegative base.
fn powered(t: f64, s: f64) -> Result<f64> {
    if s == 2.0 {
        return Ok(t * t);
    }
    if s == 1.0 {
        return Ok(t);
    }
    if s.fract() == 0.0 && s <= 64.0 {
        return Ok(t.powi(s as i32));
    }
    if t < 0.0 {
        return Err(Error::Domain(format!(
            "negative term {t:e} under non-integer exponent {s}"
        )));
    }
    Ok(t.powf(s))
}

/// n * arctan(n / m) with the quarter-turn convention at m = 0.
#[inline]
fn ang(n: f64, m: f64) -> f64 {
    n * f64::atan2(n, m)
}

/// Unevaluated sum of two doubles, |lo| <= ulp(hi)/2. The handful of
/// classic error-free transformations below (Dekker, Knuth) is all the
/// astroid term needs to survive its cancellation.
#[derive(Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let lo = s.lo + self.lo + other.lo;
        two_sum(s.hi, lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = p.lo + self.hi * other.lo + self.lo * other.hi;
        two_sum(p.hi, lo)
    }

    fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.add(other.mul(Dd::from(-q1)));
        let q2 = (r.hi + r.lo) / other.hi;
        two_sum(q1, q2)
    }

    fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::from(0.0);
        }
        let s = self.hi.sqrt();
        let r = self.add(two_prod(s, s).neg());
        let c = (r.hi + r.lo) / (2.0 * s);
        two_sum(s, c)
    }
}

/// a*b / sqrt(a^2 + b^2) carried in roughly quadruple precision.
fn astroid_gamma_dd(a: f64, b: f64) -> Dd {
    if a == 0.0 || b == 0.0 {
        return Dd::from(0.0);
    }
    let norm2 = two_prod(a, a).add(two_prod(b, b));
    two_prod(a, b).div(norm2.sqrt())
}

/// Term of the series in its most cancellation-stable available form.
#[inline]
fn stable_term(curve: &Curve, a: f64, b: f64, c: f64, d: f64, m1: f64, m2: f64) -> f64 {
    match curve {
        // |u| + |w| - |u+w| rewritten with the Lagrange identity
        // (|u||w|)^2 - (u.w)^2 = det^2 = 1, leaving only additions of
        // positive quantities.
        Curve::Circle => {
            let p = (a * a + b * b).sqrt();
            let q = (c * c + d * d).sqrt();
            let r = (m1 * m1 + m2 * m2).sqrt();
            2.0 / ((p * q + a * c + b * d) * (p + q + r))
        }
        // The quadratic support telescopes to an exact product form.
        Curve::Parabola => 0.25 / ((a + b) * (c + d) * (m1 + m2)),
        // The three supports cancel to machine noise on deep nodes while
        // the entries are still exact in f64, so the difference is fully
        // recoverable in doubled precision.
        Curve::Astroid => {
            let t = astroid_gamma_dd(a, b)
                .add(astroid_gamma_dd(c, d))
                .add(astroid_gamma_dd(m1, m2).neg());
            t.hi + t.lo
        }
        _ => {
            let (gu, gw, gm) = (
                curve.gamma(a, b),
                curve.gamma(c, d),
                curve.gamma(m1, m2),
            );
            let t = gu + gw - gm;
            // The difference cancels almost completely on deep nodes. Once
            // it falls below the rounding noise of its inputs the computed
            // value carries no information, and treating that noise as a
            // real term would keep branches alive forever (the noise grows
            // with the entries while a true term shrinks). Snap to zero so
            // thresholds can cut such branches.
            let scale = gu.abs() + gw.abs() + gm.abs();
            if t.abs() < 16.0 * f64::EPSILON * scale {
                0.0
            } else {
                t
            }
        }
    }
}

/// Series term at a node: gamma(a,b) + gamma(c,d) - gamma(a+c, b+d),
/// via the stable rearrangement where one exists. Entry sums are formed
/// in floating point, so the result stays finite even when the integer
/// mediant would overflow.
pub fn term(curve: &Curve, p: UnimodularPair) -> f64 {
    let (a, b, c, d) = (p.a as f64, p.b as f64, p.c as f64, p.d as f64);
    stable_term(curve, a, b, c, d, a + c, b + d)
}

/// Upper bound on the magnitude of the sum of term^s over the entire
/// subtree rooted at `p`, from the curvilinear region between the arc and
/// the node's two tangent lines: twice its area for s = 2, the two tangent
/// segment lengths for s = 1.
pub fn subtree_tail_bound(curve: &Curve, p: UnimodularPair, s: u32) -> Result<f64> {
    if curve.convexity() != Convexity::ConvexCertified {
        return Err(Error::Unsupported(format!(
            "certified subtree bounds need a convex-certified curve, got {}",
            curve.name()
        )));
    }
    match s {
        2 => Ok(2.0 * crate::geomoracle::region_between(
            curve,
            (p.a, p.b),
            (p.c, p.d),
            &QuadratureSpec::default(),
        )?),
        1 => Ok(cheap_subtree_bound(
            curve, p.a as f64, p.b as f64, p.c as f64, p.d as f64, false,
        )),
        _ => Err(Error::InvalidInput(format!(
            "subtree bounds exist for exponents 1 and 2, got {s}"
        ))),
    }
}

/// What the inner loop is summing.
enum Kernel<'a> {
    /// term(curve)^s.
    Power { curve: &'a Curve, s: f64 },
    /// (2g)^2 where g is the arctan form of the cycloid term; equals the
    /// squared cycloid term exactly.
    CycloidArctan,
    /// Half the product of the two curves' terms.
    Mixed { f: &'a Curve, g: &'a Curve },
}

impl Kernel<'_> {
    /// The per-node quantity that pruning thresholds compare against.
    #[inline]
    fn raw(&self, a: f64, b: f64, c: f64, d: f64, m1: f64, m2: f64) -> f64 {
        match self {
            Kernel::Power { curve, .. } => stable_term(curve, a, b, c, d, m1, m2),
            Kernel::CycloidArctan => 2.0 * (ang(a, b) + ang(c, d) - ang(m1, m2)),
            Kernel::Mixed { f, g } => {
                0.5 * stable_term(f, a, b, c, d, m1, m2) * stable_term(g, a, b, c, d, m1, m2)
            }
        }
    }

    /// The contribution added to the accumulator for raw value `t`.
    #[inline]
    fn contribution(&self, t: f64) -> Result<f64> {
        match self {
            Kernel::Power { s, .. } => powered(t, *s),
            Kernel::CycloidArctan => Ok(t * t),
            Kernel::Mixed { .. } => Ok(t),
        }
    }

    /// Whether pruned subtrees get rigorous bounds.
    fn certified(&self) -> bool {
        match self {
            Kernel::Power { curve, s } => {
                curve.convexity() == Convexity::ConvexCertified && (*s == 1.0 || *s == 2.0)
            }
            Kernel::CycloidArctan => true,
            Kernel::Mixed { f, g } => {
                f.convexity() == Convexity::ConvexCertified
                    && g.convexity() == Convexity::ConvexCertified
            }
        }
    }

    /// Rigorous bound on the subtree with rows (a,b), (c,d). Callers must
    /// check `certified` first.
    fn bound(&self, a: f64, b: f64, c: f64, d: f64) -> f64 {
        match self {
            Kernel::Power { curve, s } => cheap_subtree_bound(curve, a, b, c, d, *s == 2.0),
            Kernel::CycloidArctan => cheap_subtree_bound(&Curve::Cycloid, a, b, c, d, true),
            // Cauchy-Schwarz across the subtree: |sum fg/2| is at most
            // half the geometric mean of the two squared-sum bounds.
            Kernel::Mixed { f, g } => {
                let bf = cheap_subtree_bound(f, a, b, c, d, true);
                let bg = cheap_subtree_bound(g, a, b, c, d, true);
                0.5 * (bf * bg).sqrt()
            }
        }
    }

    /// Magnitude fed into the heuristic tail estimate when a subtree is
    /// dropped without a certificate.
    fn pruned_magnitude(&self, t: f64) -> f64 {
        match self {
            Kernel::Power { s, .. } => {
                if *s == 2.0 {
                    t * t
                } else if *s == 1.0 {
                    t.abs()
                } else {
                    t.abs().powf(*s)
                }
            }
            Kernel::CycloidArctan => t * t,
            Kernel::Mixed { .. } => t.abs(),
        }
    }
}

#[derive(Default)]
struct Stats {
    nodes_used: u64,
    truncated: u64,
    overflow: u64,
    tail_bound: f64,
    max_pruned: f64,
    budget_exhausted: bool,
}

impl Stats {
    fn absorb(&mut self, other: &Stats) {
        self.nodes_used += other.nodes_used;
        self.truncated += other.truncated;
        self.overflow += other.overflow;
        self.tail_bound += other.tail_bound;
        self.max_pruned = self.max_pruned.max(other.max_pruned);
        self.budget_exhausted |= other.budget_exhausted;
    }
}

/// Sequential DFS over one subtree. `observer`, when present, is invoked
/// every `stride` nodes with (nodes so far, partial value so far), where
/// the partial includes `base`, the value accumulated before this walk.
#[allow(clippy::too_many_arguments)]
fn run_subtree(
    kernel: &Kernel<'_>,
    controls: &SumControls,
    start: UnimodularPair,
    start_depth: u32,
    budget: u64,
    acc: &mut Accumulator,
    stats: &mut Stats,
    mut observer: Option<(&mut dyn FnMut(u64, f64), u64, f64)>,
) -> Result<()> {
    let certified = kernel.certified();
    let eps = controls.prune_epsilon;
    let mut stack: Vec<(UnimodularPair, u32)> = vec![(start, start_depth)];
    let mut used = 0u64;
    while let Some((p, depth)) = stack.pop() {
        if used == budget {
            stats.budget_exhausted = true;
            stats.truncated += 1 + stack.len() as u64;
            break;
        }
        used += 1;
        let (a, b, c, d) = (p.a as f64, p.b as f64, p.c as f64, p.d as f64);
        let (m1, m2) = (a + c, b + d);
        let t = kernel.raw(a, b, c, d, m1, m2);
        if t.abs() < eps {
            stats.truncated += 1;
            if certified {
                stats.tail_bound += kernel.bound(a, b, c, d);
            } else {
                stats.max_pruned = stats.max_pruned.max(kernel.pruned_magnitude(t));
            }
            continue;
        }
        acc.add(kernel.contribution(t)?);
        if let Some((ref mut f, stride, base)) = observer {
            if used % stride == 0 {
                f(used, base + acc.value());
            }
        }
        let expandable = depth < controls.depth_cap;
        if expandable {
            match children(p) {
                Ok((l, r)) => {
                    stack.push((r, depth + 1));
                    stack.push((l, depth + 1));
                    continue;
                }
                Err(_) => stats.overflow += 1,
            }
        }
        // Children cut off by the depth cap or 64-bit overflow: the two
        // child subtrees have rows (a,b),(m1,m2) and (m1,m2),(c,d).
        stats.truncated += 2;
        if certified {
            stats.tail_bound += kernel.bound(a, b, m1, m2);
            stats.tail_bound += kernel.bound(m1, m2, c, d);
        } else {
            stats.max_pruned = stats.max_pruned.max(kernel.pruned_magnitude(t));
        }
    }
    stats.nodes_used += used;
    Ok(())
}

fn finish(kernel: &Kernel<'_>, acc: &Accumulator, stats: Stats) -> SeriesResult {
    let (tail_kind, tail_magnitude) = if stats.budget_exhausted {
        (TailKind::None, 0.0)
    } else if kernel.certified() {
        (TailKind::Certified, stats.tail_bound)
    } else {
        (
            TailKind::Estimated,
            stats.truncated as f64 * stats.max_pruned,
        )
    };
    SeriesResult {
        value: acc.value(),
        nodes_used: stats.nodes_used,
        truncated_subtrees: stats.truncated,
        tail_kind,
        tail_magnitude,
        overflow_truncations: stats.overflow,
    }
}

/// Single sequential walk with one global budget.
fn run_single(
    kernel: &Kernel<'_>,
    controls: &SumControls,
    observer: Option<(&mut dyn FnMut(u64, f64), u64)>,
) -> Result<SeriesResult> {
    let mut acc = Accumulator::new(controls.accumulation);
    let mut stats = Stats::default();
    run_subtree(
        kernel,
        controls,
        root(),
        0,
        controls.node_budget,
        &mut acc,
        &mut stats,
        observer.map(|(f, stride)| (f, stride, 0.0)),
    )?;
    Ok(finish(kernel, &acc, stats))
}

/// Phased walk: sequential above the seed depth, independent subtrees
/// below it, merged in seed order.
fn run_planned(kernel: &Kernel<'_>, controls: &SumControls, plan: &ExecPlan) -> Result<SeriesResult> {
    if plan.seed_depth == 0 {
        return run_single(kernel, controls, None);
    }
    let certified = kernel.certified();
    let eps = controls.prune_epsilon;
    let seed_depth = plan.seed_depth.min(controls.depth_cap);
    let mut acc = Accumulator::new(controls.accumulation);
    let mut stats = Stats::default();
    let mut seeds: Vec<UnimodularPair> = Vec::new();
    let mut stack: Vec<(UnimodularPair, u32)> = vec![(root(), 0)];

    // Phase A: depths strictly above the frontier, one stack, collecting
    // frontier nodes in visit order.
    while let Some((p, depth)) = stack.pop() {
        if stats.nodes_used == controls.node_budget {
            stats.budget_exhausted = true;
            stats.truncated += 1 + stack.len() as u64 + seeds.len() as u64;
            seeds.clear();
            break;
        }
        stats.nodes_used += 1;
        let (a, b, c, d) = (p.a as f64, p.b as f64, p.c as f64, p.d as f64);
        let (m1, m2) = (a + c, b + d);
        let t = kernel.raw(a, b, c, d, m1, m2);
        if t.abs() < eps {
            stats.truncated += 1;
            if certified {
                stats.tail_bound += kernel.bound(a, b, c, d);
            } else {
                stats.max_pruned = stats.max_pruned.max(kernel.pruned_magnitude(t));
            }
            continue;
        }
        acc.add(kernel.contribution(t)?);
        match children(p) {
            Ok((l, r)) => {
                if depth + 1 == seed_depth {
                    seeds.push(l);
                    seeds.push(r);
                } else {
                    stack.push((r, depth + 1));
                    stack.push((l, depth + 1));
                }
            }
            Err(_) => {
                stats.overflow += 1;
                stats.truncated += 2;
                if certified {
                    stats.tail_bound += kernel.bound(a, b, m1, m2);
                    stats.tail_bound += kernel.bound(m1, m2, c, d);
                } else {
                    stats.max_pruned = stats.max_pruned.max(kernel.pruned_magnitude(t));
                }
            }
        }
    }

    if seeds.is_empty() {
        return Ok(finish(kernel, &acc, stats));
    }

    // Phase B: even budget split, fixed merge order. The quota division
    // is what makes the value independent of the thread count.
    let remaining = controls.node_budget - stats.nodes_used;
    let quota = remaining / seeds.len() as u64;
    if quota == 0 {
        stats.budget_exhausted = true;
        stats.truncated += seeds.len() as u64;
        return Ok(finish(kernel, &acc, stats));
    }
    let threads = match plan.threads {
        0 => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        n => n,
    }
    .min(seeds.len());

    let mut partials: Vec<Option<Result<(Accumulator, Stats)>>> = Vec::new();
    if threads <= 1 {
        for &seed in &seeds {
            partials.push(Some(run_seed(kernel, controls, seed, seed_depth, quota)));
        }
    } else {
        let slots: Vec<std::sync::OnceLock<Result<(Accumulator, Stats)>>> =
            (0..seeds.len()).map(|_| std::sync::OnceLock::new()).collect();
        let next = std::sync::atomic::AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= seeds.len() {
                        break;
                    }
                    let out = run_seed(kernel, controls, seeds[i], seed_depth, quota);
                    let _ = slots[i].set(out);
                });
            }
        });
        for slot in slots {
            partials.push(Some(slot.into_inner().expect("worker finished every claimed seed")));
        }
    }

    for partial in partials {
        let (seed_acc, seed_stats) = partial.expect("slot filled")?;
        acc.merge(&seed_acc);
        stats.absorb(&seed_stats);
    }
    Ok(finish(kernel, &acc, stats))
}

fn run_seed(
    kernel: &Kernel<'_>,
    controls: &SumControls,
    seed: UnimodularPair,
    depth: u32,
    budget: u64,
) -> Result<(Accumulator, Stats)> {
    let mut acc = Accumulator::new(controls.accumulation);
    let mut stats = Stats::default();
    run_subtree(kernel, controls, seed, depth, budget, &mut acc, &mut stats, None)?;
    Ok((acc, stats))
}

/// Sum of term(curve)^s over the tree, sequential, with an exact global
/// node budget.
pub fn sum_power(curve: &Curve, controls: &SumControls) -> Result<SeriesResult> {
    controls.validate()?;
    run_single(&Kernel::Power { curve, s: controls.s }, controls, None)
}

/// As [`sum_power`], under an explicit execution plan. See [`ExecPlan`]
/// for the budget semantics of the phased walk.
pub fn sum_power_with(
    curve: &Curve,
    controls: &SumControls,
    plan: &ExecPlan,
) -> Result<SeriesResult> {
    controls.validate()?;
    run_planned(&Kernel::Power { curve, s: controls.s }, controls, plan)
}

/// As [`sum_power`], invoking `observer(nodes, partial_value)` every
/// `stride` retained nodes. Always sequential.
pub fn sum_power_stream(
    curve: &Curve,
    controls: &SumControls,
    stride: u64,
    observer: &mut dyn FnMut(u64, f64),
) -> Result<SeriesResult> {
    controls.validate()?;
    if stride == 0 {
        return Err(Error::InvalidInput("observer stride must be at least 1".into()));
    }
    run_single(
        &Kernel::Power { curve, s: controls.s },
        controls,
        Some((observer, stride)),
    )
}

/// The squared cycloid series in its arctan form: 4 times the sum over
/// the tree of (a*arctan(a/b) + c*arctan(c/d) - (a+c)*arctan((a+c)/(b+d)))^2,
/// with arctan(x/0) = pi/2. Term for term this equals the squared support
/// difference of the cycloid, so it must reproduce sum_power(cycloid, s=2);
/// controls must carry s = 2.
pub fn sum_cycloid_arctan(controls: &SumControls) -> Result<SeriesResult> {
    controls.validate()?;
    if controls.s != 2.0 {
        return Err(Error::InvalidInput(format!(
            "the arctan form is the squared series; controls.s must be 2, got {}",
            controls.s
        )));
    }
    run_single(&Kernel::CycloidArctan, controls, None)
}

/// Half the sum over the tree of the product of the two curves' terms.
/// Symmetric in its arguments by construction. The exponent in `controls`
/// is ignored; pruning applies to the product magnitude.
pub fn mixed_sum(curve_f: &Curve, curve_g: &Curve, controls: &SumControls) -> Result<SeriesResult> {
    controls.validate()?;
    run_single(
        &Kernel::Mixed {
            f: curve_f,
            g: curve_g,
        },
        controls,
        None,
    )
}
