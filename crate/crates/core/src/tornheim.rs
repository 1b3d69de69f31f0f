//! Coprime double series of Mordell-Tornheim type:
//! T(s) = sum over coprime pairs (b, d), b, d >= 1, of 1/(b d (b+d))^s.
//!
//! Two evaluation routes. The direct route filters a double loop by gcd up
//! to a cutoff and reports an integral-comparison tail estimate. The
//! zeta-accelerated route evaluates the unrestricted all-pairs sum with
//! Euler-Maclaurin tail corrections and divides by zeta(3s), since scaling
//! a coprime pair by g = gcd multiplies the summand by g^{-3s}.
//!
//! T(s) here is the bare coprime sum. Some conventions attach a 2^s
//! prefactor; multiply by 2^s to convert.

use crate::accum::{AccumulationMode, Accumulator};
use crate::error::{Error, Result};
use crate::lattice::{children, gcd, root, UnimodularPair};
use crate::quad::{integrate, QuadratureSpec};
use crate::series::{SeriesResult, TailKind};

const EULER_GAMMA: f64 = 0.5772156649015328606;

/// Uninflated direct-mode tail estimates measured against brute force run
/// 0.86x to 1.03x of the truth, so reported estimates carry this factor.
const TAIL_INFLATION: f64 = 1.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TornheimMode {
    /// gcd-filtered double loop up to `cutoff`, estimated tail.
    Direct,
    /// All-pairs sum with Euler-Maclaurin corrections, divided by zeta(3s).
    /// Ignores `cutoff`; far more accurate for equal work.
    ZetaAccelerated,
}

#[derive(Debug, Clone, Copy)]
pub struct TornheimQuery {
    /// Exponent; the series converges for s > 2/3.
    pub s: f64,
    /// Direct mode sums pairs with max(b, d) <= cutoff.
    pub cutoff: u64,
    pub mode: TornheimMode,
}

impl TornheimQuery {
    pub fn new(s: f64) -> Self {
        TornheimQuery {
            s,
            cutoff: 10_000,
            mode: TornheimMode::ZetaAccelerated,
        }
    }

    pub fn with_cutoff(mut self, cutoff: u64) -> Self {
        self.cutoff = cutoff;
        self
    }

    pub fn with_mode(mut self, mode: TornheimMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.s.is_finite() || self.s <= 2.0 / 3.0 {
            return Err(Error::Domain(format!(
                "the coprime series diverges for exponents <= 2/3, got {}",
                self.s
            )));
        }
        if self.cutoff < 2 {
            return Err(Error::InvalidInput(format!(
                "cutoff must be at least 2, got {}",
                self.cutoff
            )));
        }
        Ok(())
    }
}

/// Riemann zeta for real x > 1: 10^4 direct terms summed smallest first
/// plus an Euler-Maclaurin tail, good to about 1e-14 relative for x >= 2.
pub fn zeta(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::Domain(format!(
            "zeta is evaluated for exponents > 1 only, got {x}"
        )));
    }
    let n = 10_000u64;
    let mut acc = Accumulator::new(AccumulationMode::Compensated);
    for k in (1..=n).rev() {
        acc.add((k as f64).powf(-x));
    }
    Ok(acc.value() + tail_power(x, n as f64))
}

/// Euler-Maclaurin estimate of sum_{k > N} k^{-x}.
fn tail_power(x: f64, n: f64) -> f64 {
    n.powf(1.0 - x) / (x - 1.0) - 0.5 * n.powf(-x) + (x / 12.0) * n.powf(-x - 1.0)
        - x * (x + 1.0) * (x + 2.0) / 720.0 * n.powf(-x - 3.0)
        + x * (x + 1.0) * (x + 2.0) * (x + 3.0) * (x + 4.0) / 30240.0 * n.powf(-x - 5.0)
}

/// Euler-Maclaurin estimate of sum_{k > N} ln(k)/k^2.
fn tail_log2(n: f64) -> f64 {
    let ln = n.ln();
    (ln + 1.0) / n - ln / (2.0 * n * n) - (1.0 - 2.0 * ln) / (12.0 * n * n * n)
        + (26.0 - 24.0 * ln) / (720.0 * n.powi(5))
}

/// Euler-Maclaurin estimate of sum_{k > N} ln(k)/k^5.
fn tail_log5(n: f64) -> f64 {
    let ln = n.ln();
    ln / (4.0 * n.powi(4)) + 1.0 / (16.0 * n.powi(4)) - ln / (2.0 * n.powi(5))
}

/// Take the quadrature value even when the tolerance target was missed;
/// callers here only need estimates.
fn integrate_or_best<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> f64 {
    match integrate(f, a, b, spec) {
        Ok(v) => v,
        Err(Error::ToleranceNotMet { best, .. }) => best,
        Err(_) => 0.0,
    }
}

/// Continuous estimate of the single-strip sum
/// sum_{b > N} sum_{d >= 1} (b d (b+d))^{-s}, via midpoint-rule integrals.
/// The full out-of-cutoff mass is about twice this (two strips; the
/// doubly-excluded corner is higher order and absorbed by the inflation
/// factor).
fn strip_mass(s: f64, n: f64) -> f64 {
    if s == 1.0 {
        // inner integral in closed form: int_{1/2}^inf dy/(y(x+y)) = ln(1+2x)/x,
        // then int_N^inf ln(1+2x)/x^2 dx in closed form.
        return (1.0 + 2.0 * n).ln() / n + 2.0 * ((1.0 + 2.0 * n) / (2.0 * n)).ln();
    }
    if s == 2.0 {
        // inner integral in closed form; the outer one numerically, mapped
        // to (0,1] by x = N/w. Tolerance keyed to the integral's own scale:
        // estimates here only need a few correct digits.
        let h = |x: f64| {
            (2.0 + 1.0 / (x + 0.5)) / x.powi(4) - 2.0 * (1.0 + 2.0 * x).ln() / x.powi(5)
        };
        let spec = QuadratureSpec {
            abs_tol: (1e-6 / (n * n * n)).max(1e-300),
            max_subdivisions: 1 << 14,
        };
        return integrate_or_best(
            |w| if w == 0.0 { 0.0 } else { h(n / w) * n / (w * w) },
            0.0,
            1.0,
            &spec,
        );
    }
    // Generic s: nested quadrature. Inner tail int_{1/2}^inf (y(x+y))^{-s} dy
    // flattened by the power map y = (1/2) z^{-e}, e = 1/(2s-1), which makes
    // the integrand approach the finite limit 2^{2s-1} e at z = 0. The inner
    // tolerance tracks the integral's x-dependent scale.
    let e = 1.0 / (2.0 * s - 1.0);
    let inner = |x: f64| {
        integrate_or_best(
            |z| {
                if z == 0.0 {
                    return 2f64.powf(2.0 * s - 1.0) * e;
                }
                let y = 0.5 * z.powf(-e);
                (y * (x + y)).powf(-s) * 0.5 * e * z.powf(-e - 1.0)
            },
            0.0,
            1.0,
            &QuadratureSpec {
                abs_tol: (1e-5 * (1.0 + x).powf(-s)).max(1e-300),
                max_subdivisions: 1 << 12,
            },
        )
    };
    // Outer decay exponent: x^{-(3s-1)} for s < 1 (inner mass sits below
    // y = x), x^{-2s} for s >= 1; flatten with the matching power map.
    let p = if s < 1.0 { 3.0 * s - 2.0 } else { 2.0 * s - 1.0 };
    let ep = 1.0 / p;
    let outer = |z: f64| {
        if z == 0.0 {
            return 0.0;
        }
        let x = n * z.powf(-ep);
        x.powf(-s) * inner(x) * n * ep * z.powf(-ep - 1.0)
    };
    // Midpoint pre-pass sets an absolute tolerance worth ~4 digits of the
    // actual magnitude.
    let mut rough = 0.0;
    for i in 0..64 {
        rough += outer((i as f64 + 0.5) / 64.0) / 64.0;
    }
    let spec = QuadratureSpec {
        abs_tol: (1e-4 * rough.abs()).max(1e-18),
        max_subdivisions: 1 << 12,
    };
    integrate_or_best(outer, 0.0, 1.0, &spec)
}

/// All-pairs sum A(s) = sum_{m,n >= 1} (m n (m+n))^{-s} with a reported
/// uncertainty, grouped by k = m + n for s in {1, 2} where partial
/// fractions give one-dimensional harmonic forms.
fn allpairs(s: f64) -> (f64, u64, f64) {
    let mut acc = Accumulator::new(AccumulationMode::Compensated);
    if s == 1.0 {
        // sum_k 2 H_{k-1} / k^2, truncated at N with Euler-Maclaurin tail
        // from H_{k-1} = ln k + gamma - 1/(2k) - 1/(12k^2) + 1/(120k^4).
        let n = 100_000u64;
        let mut h = 0.0f64;
        for k in 2..=n {
            h += 1.0 / (k - 1) as f64;
            let kf = k as f64;
            acc.add(2.0 * h / (kf * kf));
        }
        let nf = n as f64;
        let tail = 2.0 * tail_log2(nf) + 2.0 * EULER_GAMMA * tail_power(2.0, nf)
            - tail_power(3.0, nf)
            - tail_power(4.0, nf) / 6.0
            + tail_power(6.0, nf) / 60.0;
        let value = acc.value() + tail;
        return (value, n - 1, 5e-13 * value.abs().max(1.0));
    }
    if s == 2.0 {
        // sum_k (2 H2_{k-1} + 4 H_{k-1}/k) / k^4 with the matching tail.
        let n = 20_000u64;
        let mut h = 0.0f64;
        let mut h2 = 0.0f64;
        for k in 2..=n {
            let prev = (k - 1) as f64;
            h += 1.0 / prev;
            h2 += 1.0 / (prev * prev);
            let kf = k as f64;
            acc.add((2.0 * h2 + 4.0 * h / kf) / kf.powi(4));
        }
        let nf = n as f64;
        let z2 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
        let tail = 2.0 * z2 * tail_power(4.0, nf)
            + (4.0 * EULER_GAMMA - 2.0) * tail_power(5.0, nf)
            + 4.0 * tail_log5(nf)
            - 3.0 * tail_power(6.0, nf);
        let value = acc.value() + tail;
        return (value, n - 1, 5e-13 * value.abs().max(1.0));
    }
    // Generic exponent: symmetric double loop plus, for s > 1, a two-strip
    // correction sum_{m > N} ~ zeta(s) m^{-2s} whose own relative error is
    // covered by the reported uncertainty.
    let n = 3000u64;
    let mut terms = 0u64;
    for m in 1..=n {
        let mf = m as f64;
        for nn in m..=n {
            let nf = nn as f64;
            let t = (mf * nf * (mf + nf)).powf(-s);
            acc.add(if nn == m { t } else { 2.0 * t });
            terms += 1;
        }
    }
    let nf = n as f64;
    if s > 1.0 {
        let corr = 2.0 * zeta(s).expect("s > 1 here") * tail_power(2.0 * s, nf);
        (
            acc.value() + corr,
            terms,
            0.15 * corr.abs() + 1e-14 * acc.value().abs(),
        )
    } else {
        let est = TAIL_INFLATION * 2.0 * strip_mass(s, nf);
        (acc.value(), terms, est)
    }
}

/// Evaluate the coprime series T(s) by the route selected in the query.
/// The estimated tail magnitude reports the expected truncation error of
/// the chosen route; it is never a certified bound.
pub fn tornheim_coprime(q: &TornheimQuery) -> Result<SeriesResult> {
    q.validate()?;
    match q.mode {
        TornheimMode::Direct => {
            let n = q.cutoff;
            let mut acc = Accumulator::new(AccumulationMode::Compensated);
            let mut terms = 0u64;
            for b in 1..=n {
                let bf = b as f64;
                for d in b..=n {
                    if gcd(b, d) != 1 {
                        continue;
                    }
                    let df = d as f64;
                    let x = bf * df * (bf + df);
                    let t = if q.s == 1.0 {
                        1.0 / x
                    } else if q.s == 2.0 {
                        1.0 / (x * x)
                    } else {
                        x.powf(-q.s)
                    };
                    acc.add(if d == b { t } else { 2.0 * t });
                    terms += 1;
                }
            }
            // Coprime pairs thin the lattice by 6/pi^2.
            let density = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
            let est = TAIL_INFLATION * density * 2.0 * strip_mass(q.s, n as f64);
            Ok(SeriesResult {
                value: acc.value(),
                nodes_used: terms,
                truncated_subtrees: 0,
                tail_kind: TailKind::Estimated,
                tail_magnitude: est,
                overflow_truncations: 0,
            })
        }
        TornheimMode::ZetaAccelerated => {
            let (all, terms, all_err) = allpairs(q.s);
            let z = zeta(3.0 * q.s)?;
            Ok(SeriesResult {
                value: all / z,
                nodes_used: terms,
                truncated_subtrees: 0,
                tail_kind: TailKind::Estimated,
                tail_magnitude: all_err / z,
                overflow_truncations: 0,
            })
        }
    }
}

/// Iterator over all coprime pairs (b, d) with max(b, d) <= cutoff, each
/// pair exactly once, produced as lattice-tree mediants (the root's
/// mediant is (1,1)). Mediants grow monotonically down the tree, so a
/// subtree is abandoned as soon as its root mediant leaves the box.
pub struct CoprimePairs {
    stack: Vec<UnimodularPair>,
    cutoff: u64,
}

impl Iterator for CoprimePairs {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        while let Some(p) = self.stack.pop() {
            let (m1, m2) = (p.a + p.c, p.b + p.d);
            if m1.max(m2) > self.cutoff {
                continue;
            }
            if let Ok((l, r)) = children(p) {
                self.stack.push(r);
                self.stack.push(l);
            }
            return Some((m1, m2));
        }
        None
    }
}

/// Stream of coprime pairs with max coordinate at most `cutoff`, from the
/// lattice tree.
pub fn coprime_pairs_via_tree(cutoff: u64) -> Result<CoprimePairs> {
    if cutoff < 1 {
        return Err(Error::InvalidInput("cutoff must be at least 1".into()));
    }
    if cutoff > u64::MAX / 4 {
        return Err(Error::InvalidInput(
            "cutoff too large for overflow-safe mediant formation".into(),
        ));
    }
    Ok(CoprimePairs {
        stack: vec![root()],
        cutoff,
    })
}
