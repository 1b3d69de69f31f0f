//! Adaptive quadrature for the geometric reference values.
//!
//! Plain adaptive Simpson with Richardson extrapolation. The error budget
//! is split in half at every subdivision, so the final absolute error is
//! bounded by the requested tolerance even when the work concentrates near
//! one endpoint. Several of the arc integrals in this crate end at a
//! square-root singularity; those need around fifty levels of refinement
//! at the singular end, which is why the depth limit is generous.

use crate::error::{Error, Result};

/// Tolerance and work limits for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    /// Absolute error target for the whole integral.
    pub abs_tol: f64,
    /// Cap on the total number of interval splits.
    pub max_subdivisions: u64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            max_subdivisions: 1 << 20,
        }
    }
}

const MAX_DEPTH: u32 = 60;

fn simpson(fa: f64, fm: f64, fb: f64, len: f64) -> f64 {
    len / 6.0 * (fa + 4.0 * fm + fb)
}

struct Adapt<'a> {
    f: &'a dyn Fn(f64) -> f64,
    splits_left: u64,
    converged: bool,
}

impl Adapt<'_> {
    #[allow(clippy::too_many_arguments)]
    fn run(
        &mut self,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        // Standard acceptance test: the halved estimate is within 15x of
        // the local budget, so the extrapolated value is within it.
        if delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        if depth == 0 || self.splits_left == 0 {
            self.converged = false;
            return left + right + delta / 15.0;
        }
        self.splits_left -= 1;
        self.run(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + self.run(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Integrate `f` over [a, b] to absolute tolerance `spec.abs_tol`.
///
/// Returns the tolerance-not-met error, carrying the best estimate, if the
/// subdivision budget or depth limit runs out first.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || !(spec.abs_tol > 0.0) {
        return Err(Error::InvalidInput(
            "quadrature needs finite endpoints and a positive tolerance".into(),
        ));
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(fa, fm, fb, b - a);
    let mut state = Adapt {
        f: &f,
        splits_left: spec.max_subdivisions,
        converged: true,
    };
    let best = state.run(a, b, fa, fm, fb, whole, spec.abs_tol, MAX_DEPTH);
    if state.converged {
        Ok(best)
    } else {
        Err(Error::ToleranceNotMet {
            best,
            requested: spec.abs_tol,
        })
    }
}
