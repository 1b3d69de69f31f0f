//! Numerical-geometry oracle.
//!
//! Everything here is computed from tangent lines, arc parametrizations,
//! and quadrature, with no reference to the lattice series. That makes the
//! module an independent witness for the series engine: triangle areas
//! check single terms, curvilinear-region areas check second-power sums,
//! tangent-segment lengths check first-power sums, and the Minkowski-sum
//! polarization checks mixed sums.
//!
//! Sign convention: the catalog formulas for the cycloid and the astroid
//! describe tangent geometry whose term differences come out nonpositive,
//! so the oracle values that must be comparable to first-power sums carry
//! that sign rather than an absolute value.

use crate::error::{Error, Result};
use crate::lattice::UnimodularPair;
use crate::quad::{integrate, QuadratureSpec};
use crate::support::{Convexity, Curve};

/// A supporting line a*x + b*y = gamma together with its tangency point.
///
/// `gamma` is the support value of the arc the oracle actually draws. For
/// the cycloid the catalog formula describes the mirror image of that arc,
/// so `gamma` differs from the catalog value by the linear correction that
/// cancels in every term difference; for all other built-ins it equals the
/// catalog value at the best sample or tangency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentLine {
    pub a: u64,
    pub b: u64,
    pub gamma: f64,
    pub tangency: (f64, f64),
}

/// Support value of the drawn arc in real direction (a, b).
pub(crate) fn line_support(curve: &Curve, a: f64, b: f64) -> f64 {
    match curve {
        // The drawn arc is (t - sin t, 1 - cos t) on [-pi, 0]; its true
        // support is 2b - 2a*atan2(b, a), the catalog value minus 4b.
        Curve::Cycloid => 2.0 * b - 2.0 * a * f64::atan2(b, a),
        _ => curve.gamma(a, b),
    }
}

/// Point where the supporting line with normal (a, b) touches the arc.
pub(crate) fn tangency_point(curve: &Curve, a: f64, b: f64) -> Result<(f64, f64)> {
    match curve {
        Curve::Circle => {
            let r = (a * a + b * b).sqrt();
            Ok((a / r, b / r))
        }
        Curve::Parabola => {
            let w = a / (2.0 * (a + b));
            Ok((1.0 + w - w * w, 1.0 - w * w))
        }
        Curve::Hyperbola => {
            let r = ((a + b) * (3.0 * a + b)).sqrt();
            Ok((-(3.0 * a + 2.0 * b) / r, -(2.0 * a + b) / r))
        }
        Curve::Cycloid => {
            let t = -2.0 * f64::atan2(b, a);
            Ok((t - t.sin(), 1.0 - t.cos()))
        }
        Curve::Tractrix => {
            if b == 0.0 {
                return Err(Error::DegenerateGeometry(
                    "tractrix tangency for a horizontal normal lies at infinity".into(),
                ));
            }
            let r = a / b;
            let r2 = r * r;
            Ok((r / (1.0 + r2), 0.5 * r2.ln_1p() - r2 / (1.0 + r2)))
        }
        Curve::Astroid => {
            let t = f64::atan2(a, b);
            let (s, c) = t.sin_cos();
            Ok((c * c * c, s * s * s))
        }
        Curve::Sampled(sc) => {
            let mut best = f64::NEG_INFINITY;
            let mut pt = (0.0, 0.0);
            for &(x, y) in sc.points() {
                let v = a * x + b * y;
                if v > best {
                    best = v;
                    pt = (x, y);
                }
            }
            Ok(pt)
        }
    }
}

/// Build the supporting line with integer normal (a, b).
pub fn tangent(curve: &Curve, a: u64, b: u64) -> Result<TangentLine> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidInput("zero direction".into()));
    }
    let (af, bf) = (a as f64, b as f64);
    let tangency = tangency_point(curve, af, bf)?;
    let gamma = match curve {
        // The line through the best sample supports all samples exactly.
        Curve::Sampled(_) => af * tangency.0 + bf * tangency.1,
        _ => line_support(curve, af, bf),
    };
    Ok(TangentLine {
        a,
        b,
        gamma,
        tangency,
    })
}

/// Intersection of the lines u . X = gu and w . X = gw, assuming the
/// integer rows u, w have determinant exactly 1.
pub(crate) fn corner_unit_det(u: (f64, f64), w: (f64, f64), gu: f64, gw: f64) -> (f64, f64) {
    (w.1 * gu - u.1 * gw, u.0 * gw - w.0 * gu)
}

fn intersect(n1: (f64, f64), g1: f64, n2: (f64, f64), g2: f64) -> Result<(f64, f64)> {
    let det = n1.0 * n2.1 - n1.1 * n2.0;
    if det.abs() < 1e-14 {
        return Err(Error::DegenerateGeometry(format!(
            "near-parallel lines: determinant {det:e}"
        )));
    }
    Ok(((g1 * n2.1 - g2 * n1.1) / det, (n1.0 * g2 - n2.0 * g1) / det))
}

/// Area of the triangle cut out by the three supporting lines of a node:
/// the lines with normals (a, b), (c, d), and their sum. Each term of the
/// lattice series squares to twice this area.
pub fn triangle_area(curve: &Curve, p: UnimodularPair) -> Result<f64> {
    let (a, b) = (p.a as f64, p.b as f64);
    let (c, d) = (p.c as f64, p.d as f64);
    let (m1, m2) = (a + c, b + d);
    let gu = curve.gamma(a, b);
    let gw = curve.gamma(c, d);
    let gm = curve.gamma(m1, m2);
    let v12 = intersect((a, b), gu, (c, d), gw)?;
    let v13 = intersect((a, b), gu, (m1, m2), gm)?;
    let v23 = intersect((c, d), gw, (m1, m2), gm)?;
    let e1 = (v13.0 - v12.0, v13.1 - v12.1);
    let e2 = (v23.0 - v12.0, v23.1 - v12.1);
    Ok(0.5 * (e1.0 * e2.1 - e1.1 * e2.0).abs())
}

/// Arc parameter of the tangency for direction (a, b), matching the
/// parametrizations used in `arc_integrand`.
fn arc_param(curve: &Curve, a: f64, b: f64) -> f64 {
    match curve {
        Curve::Circle => f64::atan2(b, a),
        Curve::Parabola => a / (2.0 * (a + b)),
        Curve::Hyperbola => -(2.0 * a + b) / ((a + b) * (3.0 * a + b)).sqrt(),
        Curve::Cycloid => -2.0 * f64::atan2(b, a),
        Curve::Astroid | Curve::Tractrix => f64::atan2(a, b),
        Curve::Sampled(_) => unreachable!("sampled arcs use index walks, not parameters"),
    }
}

/// The signed area element x * dy/dp along each curve's arc, used in the
/// shoelace loop around a curvilinear region.
fn arc_integrand(curve: &Curve, p: f64) -> f64 {
    match curve {
        Curve::Circle => {
            let c = p.cos();
            c * c
        }
        Curve::Parabola => (1.0 + p - p * p) * (-2.0 * p),
        Curve::Hyperbola => 2.0 * p + (p * p - 1.0).max(0.0).sqrt(),
        Curve::Cycloid => (p - p.sin()) * p.sin(),
        Curve::Astroid => {
            let (s, c) = p.sin_cos();
            3.0 * c * c * c * c * s * s
        }
        Curve::Tractrix => {
            let (s, c) = p.sin_cos();
            s * s * (1.0 - 2.0 * c * c)
        }
        Curve::Sampled(_) => unreachable!("sampled arcs use index walks, not parameters"),
    }
}

/// Shoelace contribution of the straight segment from p to q.
fn segment_x_dy(p: (f64, f64), q: (f64, f64)) -> f64 {
    0.5 * (p.0 + q.0) * (q.1 - p.1)
}

fn check_unit_det(u: (u64, u64), w: (u64, u64)) -> Result<()> {
    let det = u.0 as i128 * w.1 as i128 - u.1 as i128 * w.0 as i128;
    if det != 1 {
        return Err(Error::InvalidInput(format!(
            "directions ({}, {}) and ({}, {}) have determinant {det}, expected 1",
            u.0, u.1, w.0, w.1
        )));
    }
    Ok(())
}

fn sampled_region(sc: &crate::support::SampledCurve, u: (u64, u64), w: (u64, u64)) -> f64 {
    let (ua, ub) = (u.0 as f64, u.1 as f64);
    let (wa, wb) = (w.0 as f64, w.1 as f64);
    let pts = sc.points();
    let argmax = |a: f64, b: f64| {
        let mut best = f64::NEG_INFINITY;
        let mut idx = 0;
        for (i, &(x, y)) in pts.iter().enumerate() {
            let v = a * x + b * y;
            if v > best {
                best = v;
                idx = i;
            }
        }
        (idx, best)
    };
    let (iu, gu) = argmax(ua, ub);
    let (iw, gw) = argmax(wa, wb);
    let corner = corner_unit_det((ua, ub), (wa, wb), gu, gw);
    let mut arc = 0.0;
    let step: isize = if iu <= iw { 1 } else { -1 };
    let mut i = iu as isize;
    while i != iw as isize {
        let p = pts[i as usize];
        let q = pts[(i + step) as usize];
        arc += segment_x_dy(p, q);
        i += step;
    }
    (arc + segment_x_dy(pts[iw], corner) + segment_x_dy(corner, pts[iu])).abs()
}

/// Area of the curvilinear region enclosed by the curve's arc and the two
/// supporting lines with normals `u` and `w`, which must be the rows of a
/// valid lattice node (determinant 1). The boundary loop is the arc
/// between the tangency points, then the two tangent segments through the
/// lines' intersection.
pub fn region_between(
    curve: &Curve,
    u: (u64, u64),
    w: (u64, u64),
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_unit_det(u, w)?;
    if let Curve::Sampled(sc) = curve {
        return Ok(sampled_region(sc, u, w));
    }
    let (ua, ub) = (u.0 as f64, u.1 as f64);
    let (wa, wb) = (w.0 as f64, w.1 as f64);
    let pu = arc_param(curve, ua, ub);
    let pw = arc_param(curve, wa, wb);
    let arc = integrate(|t| arc_integrand(curve, t), pu, pw, spec)?;
    let gu = line_support(curve, ua, ub);
    let gw = line_support(curve, wa, wb);
    let corner = corner_unit_det((ua, ub), (wa, wb), gu, gw);
    if matches!(curve, Curve::Tractrix) && u.1 == 0 {
        // The u-tangency recedes to infinity along the vertical asymptote
        // x = 0; the closing run down that asymptote contributes nothing
        // to the x dy loop, so only one segment remains.
        let tw = tangency_point(curve, wa, wb)?;
        return Ok((arc + segment_x_dy(tw, corner)).abs());
    }
    let tu = tangency_point(curve, ua, ub)?;
    let tw = tangency_point(curve, wa, wb)?;
    Ok((arc + segment_x_dy(tw, corner) + segment_x_dy(corner, tu)).abs())
}

/// Area between the curve and its two supporting lines with normals (1,0)
/// and (0,1). Twice this area is the reference value for the second-power
/// lattice sum.
pub fn region_area(curve: &Curve) -> Result<f64> {
    region_area_with(curve, &QuadratureSpec::default())
}

/// As [`region_area`], with explicit quadrature controls.
pub fn region_area_with(curve: &Curve, spec: &QuadratureSpec) -> Result<f64> {
    region_between(curve, (1, 0), (0, 1), spec)
}

/// Total length of the two tangent segments with normals (1,0) and (0,1),
/// from their intersection point to the tangency points, signed by the
/// curve's term convention. This is the reference value for the
/// first-power lattice sum.
pub fn tangent_lengths(curve: &Curve) -> Result<f64> {
    let tu = tangent(curve, 1, 0)?;
    let tw = tangent(curve, 0, 1)?;
    let x = corner_unit_det((1.0, 0.0), (0.0, 1.0), tu.gamma, tw.gamma);
    let du = (x.0 - tu.tangency.0).hypot(x.1 - tu.tangency.1);
    let dw = (x.0 - tw.tangency.0).hypot(x.1 - tw.tangency.1);
    let sign = match curve {
        Curve::Cycloid | Curve::Astroid => -1.0,
        _ => 1.0,
    };
    Ok(sign * (du + dw))
}

/// O(1) upper bound on the tail of a subtree, from the corner triangle of
/// the node's two tangency points: for squared terms, twice the area of
/// the triangle (tangency, corner, tangency), which contains the whole
/// curvilinear region; for plain terms, the two tangent segment lengths.
/// Entries arrive as reals so the bound also works past 64-bit range.
/// Only meaningful for convex-certified curves.
pub(crate) fn cheap_subtree_bound(curve: &Curve, a: f64, b: f64, c: f64, d: f64, squared: bool) -> f64 {
    let tu = tangency_point(curve, a, b).expect("certified curves have finite tangencies");
    let tw = tangency_point(curve, c, d).expect("certified curves have finite tangencies");
    let gu = line_support(curve, a, b);
    let gw = line_support(curve, c, d);
    let x = corner_unit_det((a, b), (c, d), gu, gw);
    if squared {
        let e1 = (tu.0 - x.0, tu.1 - x.1);
        let e2 = (tw.0 - x.0, tw.1 - x.1);
        (e1.0 * e2.1 - e1.1 * e2.0).abs()
    } else {
        (tu.0 - x.0).hypot(tu.1 - x.1) + (tw.0 - x.0).hypot(tw.1 - x.1)
    }
}

/// Mixed volume of the curvilinear triangles of two convex-certified
/// curves, by polarization: (area(T_f + T_g) - area(T_f) - area(T_g)) / 2
/// where the Minkowski sum is sampled at matched tangent directions. All
/// three areas use the same direction grid so the polygonal sampling bias
/// cancels in the difference. The result carries the sign of the two
/// curves' term conventions so it is directly comparable to a mixed sum.
pub fn mixed_volume_oracle(curve_f: &Curve, curve_g: &Curve) -> Result<f64> {
    for c in [curve_f, curve_g] {
        if c.convexity() != Convexity::ConvexCertified {
            return Err(Error::Unsupported(format!(
                "mixed volume needs convex-certified curves, got {}",
                c.name()
            )));
        }
    }
    const N: usize = 1 << 14;
    let sign = |c: &Curve| if matches!(c, Curve::Cycloid) { -1.0 } else { 1.0 };
    let boundary = |c: &Curve| -> Result<Vec<(f64, f64)>> {
        let gu = line_support(c, 1.0, 0.0);
        let gw = line_support(c, 0.0, 1.0);
        let mut pts = Vec::with_capacity(N + 2);
        pts.push(corner_unit_det((1.0, 0.0), (0.0, 1.0), gu, gw));
        for i in 0..=N {
            let t = std::f64::consts::FRAC_PI_2 * i as f64 / N as f64;
            let (s, cth) = t.sin_cos();
            pts.push(tangency_point(c, cth, s)?);
        }
        Ok(pts)
    };
    let shoelace = |pts: &[(f64, f64)]| {
        let mut acc = 0.0;
        for i in 0..pts.len() {
            let p = pts[i];
            let q = pts[(i + 1) % pts.len()];
            acc += p.0 * q.1 - q.0 * p.1;
        }
        0.5 * acc.abs()
    };
    let bf = boundary(curve_f)?;
    let bg = boundary(curve_g)?;
    let sum_body: Vec<(f64, f64)> = bf
        .iter()
        .zip(&bg)
        .map(|(p, q)| (p.0 + q.0, p.1 + q.1))
        .collect();
    let af = shoelace(&bf);
    let ag = shoelace(&bg);
    let asum = shoelace(&sum_body);
    Ok(sign(curve_f) * sign(curve_g) * 0.5 * (asum - af - ag))
}
