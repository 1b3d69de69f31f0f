//! Continued-fraction expansions and two weighted series over their
//! convergents: with quotients r_1, r_2, ... and convergents seeded
//! (p_0, q_0) = (1, 0), (p_1, q_1) = (floor(alpha), 1),
//!
//!   sum_k |p_k - alpha q_k|   * r_{k+1}  converges to alpha + 1,
//!   sum_k (p_k - alpha q_k)^2 * r_{k+1}  converges to alpha.
//!
//! Quadratic surds expand by the exact periodic algorithm; decimal inputs
//! expand by integer Euclid on a fixed-precision rational with a guard
//! that stops before rounding noise could corrupt a quotient. Series terms
//! are accumulated in exact integer arithmetic over the rational proxy for
//! alpha and converted to floating point once at the end.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// The exact constants accepted by name. `Pi` and `E` carry 100-digit
/// decimal expansions; `Phi` and `Sqrt2` expand exactly as surds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedAlpha {
    Phi,
    Sqrt2,
    Pi,
    E,
}

const PI_DIGITS: &str =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117067";
const E_DIGITS: &str =
    "2.718281828459045235360287471352662497757247093699959574966967627724076630353547594571382178525166427";

/// How a target number is described: by name, as a quadratic surd
/// (p + sqrt(d)) / q, or as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaSpec {
    Named(NamedAlpha),
    Surd { p: i64, d: i64, q: i64 },
    Decimal(String),
}

impl std::str::FromStr for AlphaSpec {
    type Err = Error;

    /// `phi`, `sqrt2`, `pi`, `e`, a surd triple `p,d,q`, or a decimal
    /// literal.
    fn from_str(s: &str) -> Result<AlphaSpec> {
        match s.to_ascii_lowercase().as_str() {
            "phi" => return Ok(AlphaSpec::Named(NamedAlpha::Phi)),
            "sqrt2" => return Ok(AlphaSpec::Named(NamedAlpha::Sqrt2)),
            "pi" => return Ok(AlphaSpec::Named(NamedAlpha::Pi)),
            "e" => return Ok(AlphaSpec::Named(NamedAlpha::E)),
            _ => {}
        }
        if s.contains(',') {
            let parts: Vec<&str> = s.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(Error::InvalidInput(format!(
                    "surd form is p,d,q with three integers, got {s:?}"
                )));
            }
            let nums: Result<Vec<i64>> = parts
                .iter()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::InvalidInput(format!("bad surd integer {t:?}")))
                })
                .collect();
            let nums = nums?;
            return Ok(AlphaSpec::Surd {
                p: nums[0],
                d: nums[1],
                q: nums[2],
            });
        }
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '.') {
            return Ok(AlphaSpec::Decimal(s.to_string()));
        }
        Err(Error::InvalidInput(format!(
            "expected phi|sqrt2|pi|e, a p,d,q surd, or a decimal literal, got {s:?}"
        )))
    }
}

/// Significant decimal digits used when a target must be approximated by
/// a rational. Read from SL2SUM_PRECISION at call time, clamped to
/// 30..=120; default 50.
pub fn working_digits() -> u32 {
    match std::env::var("SL2SUM_PRECISION") {
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(n) => n.clamp(30, 120),
            Err(_) => 50,
        },
        Err(_) => 50,
    }
}

/// A continued-fraction expansion with its convergents and the rational
/// proxy for alpha used to evaluate the weighted series.
#[derive(Debug, Clone)]
pub struct CFExpansion {
    /// Partial quotients r_1 .. r_n.
    pub quotients: Vec<u64>,
    /// Convergents (p_k, q_k), k = 0..n, seeded at (1, 0).
    pub convergents: Vec<(BigInt, BigInt)>,
    /// The input was exactly rational and the expansion is complete.
    pub terminated: bool,
    /// Expansion stopped early: further quotients would be rounding noise.
    pub precision_exhausted: bool,
    alpha_num: BigInt,
    alpha_den: BigInt,
}

impl CFExpansion {
    /// alpha as f64, from the working-precision rational proxy.
    pub fn alpha(&self) -> f64 {
        ratio_to_f64(&self.alpha_num, &self.alpha_den)
    }

    /// Number of partial quotients produced.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }
}

fn pow10(w: u32) -> BigInt {
    BigInt::from(10u32).pow(w)
}

/// num/den (den > 0) to f64 with one final division: scale by 2^64 in
/// integer arithmetic, convert, unscale.
fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    use num::ToPrimitive;
    let scaled = (num << 64u32) / den;
    scaled.to_f64().unwrap_or(f64::NAN) / 2f64.powi(64)
}

fn floor_div_i128(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a % b;
    if r != 0 && ((r < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Integer square root with exact verification.
fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    let mut s = (n as f64).sqrt() as i128;
    while s > 0 && s.checked_mul(s).map_or(true, |ss| ss > n) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|ss| ss <= n) {
        s += 1;
    }
    s
}

/// floor((p + sqrt(d)) / q) for non-square d > 0, exact in integers.
fn surd_floor(p: i128, d: i128, q: i128) -> i128 {
    let sd = isqrt_i128(d);
    let m = p + sd;
    let f = floor_div_i128(m, q);
    // sqrt(d) lies strictly between sd and sd+1, so when q < 0 an exact
    // multiple at m means the true value sits just below the boundary.
    if q < 0 && m % q == 0 {
        f - 1
    } else {
        f
    }
}

struct ExpansionBuilder {
    quotients: Vec<u64>,
    convergents: Vec<(BigInt, BigInt)>,
}

impl ExpansionBuilder {
    fn new() -> Self {
        ExpansionBuilder {
            quotients: Vec::new(),
            convergents: vec![(BigInt::one(), BigInt::zero())],
        }
    }

    fn push(&mut self, r: u64) {
        let k = self.convergents.len();
        let (p1, q1) = self.convergents[k - 1].clone();
        let (p0, q0) = if k >= 2 {
            self.convergents[k - 2].clone()
        } else {
            // Virtual (p_{-1}, q_{-1}) making the seeds work out to
            // (p_1, q_1) = (r_1, 1).
            (BigInt::zero(), BigInt::one())
        };
        let rb = BigInt::from(r);
        self.convergents.push((&rb * &p1 + p0, &rb * &q1 + q0));
        self.quotients.push(r);
    }

    fn build(self, num: BigInt, den: BigInt, terminated: bool, exhausted: bool) -> CFExpansion {
        CFExpansion {
            quotients: self.quotients,
            convergents: self.convergents,
            terminated,
            precision_exhausted: exhausted,
            alpha_num: num,
            alpha_den: den,
        }
    }
}

/// Expand an exactly-known rational num/den (> 1) by integer Euclid.
/// With `guarded` set the input is a truncation of a longer expansion, so
/// the walk stops (flagging precision exhaustion) before the next
/// denominator q reaches q^2 * 10^5 > den, the point past which quotients
/// reflect the truncation rather than the underlying number. Unguarded
/// inputs are exact rationals whose termination is genuine.
fn expand_rational(num: BigInt, den: BigInt, n: usize, guarded: bool) -> Result<CFExpansion> {
    if num <= den {
        return Err(Error::Domain(
            "expansion needs a target greater than 1".into(),
        ));
    }
    let hundred_thousand = BigInt::from(100_000u32);
    let mut b = ExpansionBuilder::new();
    let (mut a, mut m) = (num.clone(), den.clone());
    let mut terminated = false;
    let mut exhausted = false;
    for _ in 0..n {
        let (r, rem) = num::Integer::div_rem(&a, &m);
        use num::ToPrimitive;
        let Some(r64) = r.to_u64() else {
            return Err(Error::Overflow("partial quotient exceeds u64"));
        };
        // Peek at the next denominator before committing the quotient.
        if guarded {
            let k = b.convergents.len();
            let q1 = &b.convergents[k - 1].1;
            let q0 = if k >= 2 {
                b.convergents[k - 2].1.clone()
            } else {
                BigInt::one()
            };
            let q_next = BigInt::from(r64) * q1 + q0;
            if &q_next * &q_next * &hundred_thousand > den {
                exhausted = true;
                break;
            }
        }
        b.push(r64);
        if rem.is_zero() {
            terminated = true;
            break;
        }
        a = m;
        m = rem;
    }
    Ok(b.build(num, den, terminated, exhausted))
}

/// Expand (p + sqrt(d)) / q by the exact periodic algorithm, with the
/// working-precision rational proxy attached for series evaluation.
fn expand_surd(p0: i64, d0: i64, q0: i64, n: usize) -> Result<CFExpansion> {
    if d0 < 0 {
        return Err(Error::InvalidInput("surd discriminant must be nonnegative".into()));
    }
    if q0 == 0 {
        return Err(Error::InvalidInput("surd denominator must be nonzero".into()));
    }
    let w = working_digits();
    let sd0 = isqrt_i128(d0 as i128);
    if sd0 * sd0 == d0 as i128 {
        // Perfect square: the surd is rational and expands exactly.
        let num = BigInt::from(p0) + BigInt::from(sd0);
        let den = BigInt::from(q0);
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        return expand_rational(num, den, n, false);
    }

    // Working-precision rational proxy: (p 10^w + floor(sqrt(d 10^{2w}))) / (q 10^w).
    let scale = pow10(w);
    let sqrt_scaled = (BigInt::from(d0) * &scale * &scale).sqrt();
    let mut num = BigInt::from(p0) * &scale + sqrt_scaled;
    let mut den = BigInt::from(q0) * &scale;
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if num <= den {
        return Err(Error::Domain(
            "expansion needs a target greater than 1".into(),
        ));
    }

    let (mut p, d, mut q) = (p0 as i128, d0 as i128, q0 as i128);
    // The recurrence q' = (d - p'^2)/q needs q | d - p^2; scaling the surd
    // by |q|/q restores it without changing the value.
    if (d - p * p) % q != 0 {
        let f = q.abs();
        p = p.checked_mul(f).ok_or(Error::Overflow("surd normalization"))?;
        q = q.checked_mul(f).ok_or(Error::Overflow("surd normalization"))?;
        // d scales by f^2.
        return expand_surd_normalized(
            p,
            d.checked_mul(f)
                .and_then(|x| x.checked_mul(f))
                .ok_or(Error::Overflow("surd normalization"))?,
            q,
            n,
            num,
            den,
        );
    }
    expand_surd_normalized(p, d, q, n, num, den)
}

fn expand_surd_normalized(
    mut p: i128,
    d: i128,
    mut q: i128,
    n: usize,
    num: BigInt,
    den: BigInt,
) -> Result<CFExpansion> {
    let mut b = ExpansionBuilder::new();
    for _ in 0..n {
        let r = surd_floor(p, d, q);
        let r64 = u64::try_from(r).map_err(|_| Error::Overflow("partial quotient exceeds u64"))?;
        b.push(r64);
        let p_next = r
            .checked_mul(q)
            .and_then(|x| x.checked_sub(p))
            .ok_or(Error::Overflow("surd recurrence"))?;
        let q_next = (d - p_next
            .checked_mul(p_next)
            .ok_or(Error::Overflow("surd recurrence"))?)
            / q;
        debug_assert_eq!((d - p_next * p_next) % q, 0);
        p = p_next;
        q = q_next;
        if q == 0 {
            return Err(Error::Domain("surd recurrence degenerated; discriminant is a square".into()));
        }
    }
    Ok(b.build(num, den, false, false))
}

/// Parse a decimal literal, truncate it to the working precision, and
/// return (numerator, denominator, truncated). `truncated` is set only
/// when nonzero digits were dropped; a short literal stays an exact
/// rational.
fn decimal_to_rational(text: &str, digits: u32) -> Result<(BigInt, BigInt, bool)> {
    let t = text.trim();
    let (int_part, frac_part) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if int_part.is_empty()
        || !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(Error::InvalidInput(format!(
            "not a plain decimal literal: {text:?}"
        )));
    }
    let int_digits = int_part.trim_start_matches('0').len() as u32;
    let keep_frac = digits
        .saturating_sub(int_digits)
        .min(frac_part.len() as u32);
    let frac_kept = &frac_part[..keep_frac as usize];
    let truncated = frac_part[keep_frac as usize..].chars().any(|c| c != '0');
    let digits_str = format!("{int_part}{frac_kept}");
    let num: BigInt = digits_str
        .parse()
        .map_err(|_| Error::InvalidInput(format!("unparseable digits in {text:?}")))?;
    Ok((num, pow10(keep_frac), truncated))
}

/// First n partial quotients and convergents of the target. Surd and
/// named-surd targets expand exactly; decimal targets expand until n
/// quotients, exact termination, or the precision guard.
pub fn expand(alpha: &AlphaSpec, n: usize) -> Result<CFExpansion> {
    if n == 0 {
        return Err(Error::InvalidInput("term count must be at least 1".into()));
    }
    match alpha {
        AlphaSpec::Named(NamedAlpha::Phi) => expand_surd(1, 5, 2, n),
        AlphaSpec::Named(NamedAlpha::Sqrt2) => expand_surd(0, 2, 1, n),
        AlphaSpec::Named(NamedAlpha::Pi) => expand(&AlphaSpec::Decimal(PI_DIGITS.into()), n),
        AlphaSpec::Named(NamedAlpha::E) => expand(&AlphaSpec::Decimal(E_DIGITS.into()), n),
        AlphaSpec::Surd { p, d, q } => expand_surd(*p, *d, *q, n),
        AlphaSpec::Decimal(text) => {
            let (num, den, truncated) = decimal_to_rational(text, working_digits())?;
            expand_rational(num, den, n, truncated)
        }
    }
}

/// Shared exact accumulation: sum over k of w_k * r_{k+1} where
/// w_k = |p_k den - num q_k| (power 1) or its square (power 2), divided by
/// den or den^2 once at the end.
fn series(e: &CFExpansion, squared: bool) -> Result<f64> {
    if e.convergents.len() < 2 {
        return Err(Error::InvalidInput(
            "series need an expansion with at least one quotient".into(),
        ));
    }
    let mut total = BigInt::zero();
    for (k, &r) in e.quotients.iter().enumerate() {
        let (p, q) = &e.convergents[k];
        let resid = (p * &e.alpha_den - &e.alpha_num * q).abs();
        let weighted = if squared { &resid * &resid } else { resid } * BigInt::from(r);
        total += weighted;
    }
    let den = if squared {
        &e.alpha_den * &e.alpha_den
    } else {
        e.alpha_den.clone()
    };
    Ok(ratio_to_f64(&total, &den))
}

/// sum_{k=0}^{n-1} |p_k - alpha q_k| * r_{k+1}; converges to alpha + 1.
pub fn series_abs(e: &CFExpansion) -> Result<f64> {
    series(e, false)
}

/// sum_{k=0}^{n-1} (p_k - alpha q_k)^2 * r_{k+1}; converges to alpha.
pub fn series_sq(e: &CFExpansion) -> Result<f64> {
    series(e, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;

    const PHI: f64 = 1.618033988749894848;

    #[test]
    fn phi_expansion_is_all_ones() {
        let e = expand(&AlphaSpec::Named(NamedAlpha::Phi), 10).unwrap();
        assert_eq!(e.quotients, vec![1; 10]);
        let expect: [(i64, i64); 5] = [(1, 0), (1, 1), (2, 1), (3, 2), (5, 3)];
        for (k, (p, q)) in expect.iter().enumerate() {
            assert_eq!(e.convergents[k].0, BigInt::from(*p));
            assert_eq!(e.convergents[k].1, BigInt::from(*q));
        }
        assert!(!e.terminated && !e.precision_exhausted);
        assert!((e.alpha() - PHI).abs() < 1e-15);
    }

    #[test]
    fn one_plus_sqrt2_expansion() {
        let e = expand(&AlphaSpec::Surd { p: 1, d: 2, q: 1 }, 5).unwrap();
        assert_eq!(e.quotients, vec![2, 2, 2, 2, 2]);
    }

    #[test]
    fn named_decimal_prefixes_pin_the_digit_strings() {
        let e = expand(&AlphaSpec::Named(NamedAlpha::Pi), 13).unwrap();
        assert_eq!(e.quotients, vec![3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14]);
        let e = expand(&AlphaSpec::Named(NamedAlpha::E), 12).unwrap();
        assert_eq!(e.quotients, vec![2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8]);
    }

    #[test]
    fn rational_terminates() {
        let e = expand(&AlphaSpec::Decimal("2.5".into()), 10).unwrap();
        assert_eq!(e.quotients, vec![2, 2]);
        assert!(e.terminated);
        assert!(!e.precision_exhausted);
        let e = expand(&AlphaSpec::Decimal("3".into()), 4).unwrap();
        assert_eq!(e.quotients, vec![3]);
        assert!(e.terminated);
    }

    #[test]
    fn domain_and_input_errors() {
        assert!(expand(&AlphaSpec::Decimal("0.5".into()), 4).is_err());
        assert!(expand(&AlphaSpec::Decimal("1".into()), 4).is_err());
        assert!(expand(&AlphaSpec::Named(NamedAlpha::Phi), 0).is_err());
        assert!(expand(&AlphaSpec::Surd { p: 0, d: 2, q: 0 }, 3).is_err());
        assert!(expand(&AlphaSpec::Decimal("2.5e3".into()), 3).is_err());
    }

    #[test]
    fn unimodularity_and_monotone_residuals() {
        for spec in [
            AlphaSpec::Named(NamedAlpha::Phi),
            AlphaSpec::Named(NamedAlpha::Pi),
            AlphaSpec::Surd { p: 3, d: 7, q: 2 },
        ] {
            let e = expand(&spec, 15).unwrap();
            for k in 1..e.convergents.len() {
                let (p1, q1) = &e.convergents[k];
                let (p0, q0) = &e.convergents[k - 1];
                let det = p1 * q0 - p0 * q1;
                assert_eq!(det.abs(), BigInt::from(1), "{spec:?} k={k}");
            }
            let mut prev: Option<BigInt> = None;
            for (p, q) in &e.convergents {
                let resid = (p * &e.alpha_den - &e.alpha_num * q).abs();
                if let Some(pr) = prev {
                    assert!(resid < pr, "{spec:?}: residual not strictly decreasing");
                }
                prev = Some(resid);
            }
        }
    }

    #[test]
    fn reconstruction_from_quotients() {
        let e = expand(&AlphaSpec::Named(NamedAlpha::Pi), 12).unwrap();
        // Fold the finite fraction bottom-up in exact rationals.
        let mut val: Option<BigRational> = None;
        for &r in e.quotients.iter().rev() {
            let rb = BigRational::from(BigInt::from(r));
            val = Some(match val {
                None => rb,
                Some(v) => rb + v.recip(),
            });
        }
        let v = val.unwrap();
        let (p, q) = e.convergents.last().unwrap();
        assert_eq!(v.numer(), p);
        assert_eq!(v.denom(), q);
    }

    #[test]
    fn series_values_for_surds() {
        let e = expand(&AlphaSpec::Named(NamedAlpha::Phi), 40).unwrap();
        let sq = series_sq(&e).unwrap();
        assert!(
            (sq - PHI).abs() < 1e-14,
            "squared series at 40 terms: {sq:.16e}"
        );
        let abs = series_abs(&e).unwrap();
        // Exact partial sum (phi+1)(1 - phi^-40); the infinite limit is
        // phi + 1, still 1.1e-8 away at this depth.
        assert!((abs - 2.618033977308745).abs() < 1e-13);
        let e80 = expand(&AlphaSpec::Named(NamedAlpha::Phi), 80).unwrap();
        let abs80 = series_abs(&e80).unwrap();
        assert!((abs80 - (PHI + 1.0)).abs() < 1e-12);

        let e = expand(&AlphaSpec::Surd { p: 1, d: 2, q: 1 }, 30).unwrap();
        let a = 1.0 + std::f64::consts::SQRT_2;
        assert!((series_abs(&e).unwrap() - (a + 1.0)).abs() < 1e-10);
        assert!((series_sq(&e).unwrap() - a).abs() < 1e-12);
    }

    #[test]
    fn series_value_for_pi() {
        let e = expand(&AlphaSpec::Named(NamedAlpha::Pi), 20).unwrap();
        let sq = series_sq(&e).unwrap();
        assert!((sq - std::f64::consts::PI).abs() < 1e-8);
    }

    #[test]
    fn first_term_is_floor_alpha() {
        let e = expand(&AlphaSpec::Named(NamedAlpha::Pi), 1).unwrap();
        assert_eq!(series_abs(&e).unwrap(), 3.0);
    }

    #[test]
    fn partial_sums_monotone_and_bounded() {
        let alpha = 1.0 + std::f64::consts::SQRT_2;
        let mut prev_abs = 0.0;
        let mut prev_sq = 0.0;
        for n in 1..=25 {
            let e = expand(&AlphaSpec::Surd { p: 1, d: 2, q: 1 }, n).unwrap();
            let a = series_abs(&e).unwrap();
            let s = series_sq(&e).unwrap();
            assert!(a >= prev_abs && s >= prev_sq, "partial sums decreased at {n}");
            assert!(a <= alpha + 1.0 + 1e-12 && s <= alpha + 1e-12);
            prev_abs = a;
            prev_sq = s;
        }
    }

    #[test]
    fn spec_parsing() {
        use std::str::FromStr;
        assert_eq!(
            AlphaSpec::from_str("phi").unwrap(),
            AlphaSpec::Named(NamedAlpha::Phi)
        );
        assert_eq!(
            AlphaSpec::from_str("1,5,2").unwrap(),
            AlphaSpec::Surd { p: 1, d: 5, q: 2 }
        );
        assert_eq!(
            AlphaSpec::from_str("2.75").unwrap(),
            AlphaSpec::Decimal("2.75".into())
        );
        assert!(AlphaSpec::from_str("bogus!").is_err());
        assert!(AlphaSpec::from_str("1,5").is_err());
    }

    #[test]
    fn precision_guard_trips_before_noise() {
        // The named pi string carries 100 digits but the default working
        // precision keeps 50, so a deep expansion must stop on the guard,
        // never fake-terminate, and every quotient it does emit must match
        // the true expansion of pi.
        let e = expand(&AlphaSpec::Named(NamedAlpha::Pi), 70).unwrap();
        assert!(e.precision_exhausted);
        assert!(!e.terminated);
        assert!(e.quotients.len() < 70, "guard never engaged");
        assert!(e.quotients.len() > 20, "guard far too eager");
        let truth = [
            3u64, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2, 1, 84, 2, 1, 1,
        ];
        for (i, &r) in e.quotients.iter().take(truth.len()).enumerate() {
            assert_eq!(r, truth[i], "quotient {i} corrupted by rounding noise");
        }
        // A short literal is exact: no guard, genuine termination.
        let exact = expand(&AlphaSpec::Decimal("2.5000000".into()), 10).unwrap();
        assert_eq!(exact.quotients, vec![2, 2]);
        assert!(exact.terminated && !exact.precision_exhausted);
    }

    #[test]
    fn working_digits_env_clamps() {
        // No env manipulation here (tests run in parallel); just the
        // default path.
        let w = working_digits();
        assert!((30..=120).contains(&w));
    }
}
