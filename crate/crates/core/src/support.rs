//! Support functions for the curve catalog.
//!
//! For a direction (a, b) with nonnegative integer components, the support
//! value gamma(a, b) is the largest value of a*x + b*y over the curve, so
//! the line a*x + b*y = gamma(a, b) touches the curve and keeps it inside
//! one half-plane. Each built-in curve has a closed form for gamma; user
//! data enters as a sampled arc whose support is taken over the samples
//! with a local parabolic correction.
//!
//! All built-in gammas are positively homogeneous of degree 1, which is
//! what makes the tree series telescope along depth.

use crate::error::{Error, Result};
use std::path::Path;
use std::str::FromStr;

/// Whether subtree tail bounds may be certified for a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convexity {
    /// The relevant arc is convex, so geometric containment arguments give
    /// rigorous tail bounds.
    ConvexCertified,
    /// Known not to be convex toward the sampled directions; tails can only
    /// be estimated heuristically.
    NonConvex,
    /// Nothing is assumed (sampled data).
    Unknown,
}

/// The sign every series term of a curve takes, when it is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermSign {
    NonNegative,
    NonPositive,
    Mixed,
}

/// A convex arc given by ordered sample points.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    points: Vec<(f64, f64)>,
}

impl SampledCurve {
    /// Validate and wrap an ordered point list.
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "sampled curve needs at least 3 points, got {}",
                points.len()
            )));
        }
        for (i, &(x, y)) in points.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "sample {i} is not finite: ({x}, {y})"
                )));
            }
        }
        Ok(SampledCurve { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Parse CSV text with two columns x,y. A single header line is
    /// tolerated; separators are commas with optional whitespace.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        let mut first_data_line = true;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(',').map(str::trim);
            let fx = fields.next().unwrap_or("");
            let fy = fields.next().unwrap_or("");
            match (fx.parse::<f64>(), fy.parse::<f64>()) {
                (Ok(x), Ok(y)) => {
                    if fields.next().is_some() {
                        return Err(Error::InvalidInput(format!(
                            "csv line {}: expected two columns",
                            lineno + 1
                        )));
                    }
                    points.push((x, y));
                    first_data_line = false;
                }
                _ if first_data_line => {
                    // Header row.
                    first_data_line = false;
                }
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "csv line {}: cannot parse '{line}'",
                        lineno + 1
                    )));
                }
            }
        }
        SampledCurve::new(points)
    }

    /// Parse a JSON array of [x, y] pairs.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let pairs: Vec<[f64; 2]> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("json curve: {e}")))?;
        SampledCurve::new(pairs.into_iter().map(|[x, y]| (x, y)).collect())
    }

    /// Load from a .csv or .json file, dispatching on the extension.
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => SampledCurve::from_json_str(&text),
            Some("csv") => SampledCurve::from_csv_str(&text),
            _ => Err(Error::InvalidInput(format!(
                "{}: expected .csv or .json extension",
                path.display()
            ))),
        }
    }

    /// Support value in direction (a, b): the maximum of a*x + b*y over the
    /// samples, sharpened by a parabolic fit through the maximizing sample
    /// and its neighbors. The fit removes the first-order sampling bias
    /// whenever the maximizer is interior and the local profile is concave.
    pub fn support(&self, a: f64, b: f64) -> f64 {
        let mut best = f64::NEG_INFINITY;
        let mut best_i = 0;
        for (i, &(x, y)) in self.points.iter().enumerate() {
            let v = a * x + b * y;
            if v > best {
                best = v;
                best_i = i;
            }
        }
        if best_i == 0 || best_i + 1 == self.points.len() {
            return best;
        }
        let at = |i: usize| {
            let (x, y) = self.points[i];
            a * x + b * y
        };
        let vm = at(best_i - 1);
        let vp = at(best_i + 1);
        let curvature = 2.0 * best - vm - vp;
        if curvature > 0.0 {
            best + (vp - vm) * (vp - vm) / (8.0 * curvature)
        } else {
            best
        }
    }
}

/// A curve from the catalog, or user-supplied samples.
#[derive(Debug, Clone, PartialEq)]
pub enum Curve {
    Circle,
    Parabola,
    Hyperbola,
    Cycloid,
    Tractrix,
    Astroid,
    Sampled(SampledCurve),
}

impl Curve {
    pub fn name(&self) -> &'static str {
        match self {
            Curve::Circle => "circle",
            Curve::Parabola => "parabola",
            Curve::Hyperbola => "hyperbola",
            Curve::Cycloid => "cycloid",
            Curve::Tractrix => "tractrix",
            Curve::Astroid => "astroid",
            Curve::Sampled(_) => "sampled",
        }
    }

    /// Whether tail bounds for this curve may be certified.
    pub fn convexity(&self) -> Convexity {
        match self {
            Curve::Circle | Curve::Parabola | Curve::Hyperbola | Curve::Cycloid => {
                Convexity::ConvexCertified
            }
            Curve::Tractrix | Curve::Astroid => Convexity::NonConvex,
            Curve::Sampled(_) => Convexity::Unknown,
        }
    }

    /// The sign of every series term, when known. The cycloid's terms are
    /// nonpositive because its gamma describes the arc traversed with the
    /// opposite orientation; the astroid and tractrix arcs bend away from
    /// their corner, which also makes every difference nonpositive, but
    /// that is an observation rather than a certificate, so they stay
    /// `Mixed` here.
    pub fn term_sign(&self) -> TermSign {
        match self {
            Curve::Circle | Curve::Parabola | Curve::Hyperbola => TermSign::NonNegative,
            Curve::Cycloid => TermSign::NonPositive,
            Curve::Tractrix | Curve::Astroid | Curve::Sampled(_) => TermSign::Mixed,
        }
    }

    /// Support value in direction (a, b), for real nonnegative components.
    /// Hot path: no allocation, no validation beyond debug builds.
    #[inline]
    pub fn gamma(&self, a: f64, b: f64) -> f64 {
        debug_assert!(a >= 0.0 && b >= 0.0 && (a > 0.0 || b > 0.0));
        match self {
            Curve::Circle => (a * a + b * b).sqrt(),
            Curve::Parabola => a * a / (4.0 * (a + b)) + a + b,
            Curve::Hyperbola => -((a + b) * (3.0 * a + b)).sqrt(),
            Curve::Cycloid => {
                let n2 = a * a + b * b;
                let arg = (a * a - b * b) / n2;
                debug_assert!(arg.abs() <= 1.0 + 1e-12);
                a * arg.clamp(-1.0, 1.0).acos() + 2.0 * b
            }
            Curve::Tractrix => {
                if b == 0.0 {
                    0.0
                } else {
                    0.5 * b * (a * a / (b * b)).ln_1p()
                }
            }
            Curve::Astroid => {
                if a == 0.0 || b == 0.0 {
                    0.0
                } else {
                    a * b / (a * a + b * b).sqrt()
                }
            }
            Curve::Sampled(s) => s.support(a, b),
        }
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Curve> {
        match s.to_ascii_lowercase().as_str() {
            "circle" => Ok(Curve::Circle),
            "parabola" => Ok(Curve::Parabola),
            "hyperbola" => Ok(Curve::Hyperbola),
            "cycloid" => Ok(Curve::Cycloid),
            "tractrix" => Ok(Curve::Tractrix),
            "astroid" => Ok(Curve::Astroid),
            other => Err(Error::InvalidInput(format!(
                "unknown curve '{other}' (expected circle, parabola, hyperbola, cycloid, tractrix, or astroid)"
            ))),
        }
    }
}

fn check_direction(a: u64, b: u64) {
    assert!(
        a > 0 || b > 0,
        "support direction must not be the zero vector"
    );
}

/// Distance from the origin to the tangent of the unit circle: sqrt(a^2 + b^2).
pub fn gamma_circle(a: u64, b: u64) -> f64 {
    check_direction(a, b);
    Curve::Circle.gamma(a as f64, b as f64)
}

/// Support of the arc x(y) = y + sqrt(1 - y): a^2/(4(a+b)) + a + b.
pub fn gamma_parabola(a: u64, b: u64) -> f64 {
    check_direction(a, b);
    Curve::Parabola.gamma(a as f64, b as f64)
}

/// Support of the branch x(y) = 2y + sqrt(y^2 - 1), y <= -1:
/// -sqrt((a+b)(3a+b)). Negative because the arc lies in the third quadrant.
pub fn gamma_hyperbola(a: u64, b: u64) -> f64 {
    check_direction(a, b);
    Curve::Hyperbola.gamma(a as f64, b as f64)
}

/// Support of one inverted cycloid arch: a*arccos((a^2-b^2)/(a^2+b^2)) + 2b.
pub fn gamma_cycloid(a: u64, b: u64) -> f64 {
    check_direction(a, b);
    Curve::Cycloid.gamma(a as f64, b as f64)
}

/// Support of the tractrix arc: b*ln(sqrt(a^2+b^2)/b), extended by its
/// limit 0 at b = 0.
pub fn gamma_tractrix(a: u64, b: u64) -> f64 {
    check_direction(a, b);
    Curve::Tractrix.gamma(a as f64, b as f64)
}

/// Support of one astroid petal: a*b/sqrt(a^2+b^2).
pub fn gamma_astroid(a: u64, b: u64) -> f64 {
    check_direction(a, b);
    Curve::Astroid.gamma(a as f64, b as f64)
}

/// Support of a sampled curve in integer direction (a, b).
pub fn gamma_sampled(curve: &SampledCurve, a: u64, b: u64) -> f64 {
    check_direction(a, b);
    curve.support(a as f64, b as f64)
}
