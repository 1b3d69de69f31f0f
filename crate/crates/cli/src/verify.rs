use std::f64::consts::PI;
use std::time::Instant;

use clap::{Args, ValueEnum};
use sl2sum_core::{
    expand, mixed_sum, region_area, series_abs, series_sq, sum_cycloid_arctan, sum_power,
    tornheim_coprime, AlphaSpec, Curve, NamedAlpha, Result, SumControls, TornheimMode,
    TornheimQuery,
};

use crate::report::{csv_row, sig, Reference, RunReport, CSV_HEADER};
use crate::Format;

#[derive(Args)]
pub struct VerifyArgs {
    /// quick: fast identity spot-checks; full: the complete tolerance table
    #[arg(value_enum)]
    profile: Profile,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Profile {
    Quick,
    Full,
}

enum Check {
    /// Row passes when the report matches its reference to at least this
    /// many decimal digits.
    MinDigits(u32),
    /// Row passes when |value - reference| is at most this.
    AbsTol(f64),
}

struct Row {
    name: &'static str,
    check: Check,
    /// Printed under the row when it fails, for failures that are
    /// understood and expected to stay.
    note: Option<&'static str>,
    run: Box<dyn FnOnce() -> Result<RunReport>>,
}

/// Tree walks in this table run deep: accuracy comes from the prune
/// threshold, and the slowly decaying branch families must not be cut by
/// the depth cap before they reach it.
const DEPTH_CAP: u32 = 200_000;
const BUDGET: u64 = 1_000_000_000;

fn deep_controls(s: f64, prune: f64) -> SumControls {
    SumControls::new(s)
        .with_prune_epsilon(prune)
        .with_depth_cap(DEPTH_CAP)
        .with_node_budget(BUDGET)
}

fn power_row(
    name: &'static str,
    curve: Curve,
    s: f64,
    prune: f64,
    reference: Reference,
    check: Check,
) -> Row {
    Row {
        name,
        check,
        note: None,
        run: Box::new(move || {
            let command = format!(
                "eval --curve {} --power {s} --prune {prune:e} --depth-cap {DEPTH_CAP} --budget {BUDGET}",
                curve.name()
            );
            let started = Instant::now();
            let r = sum_power(&curve, &deep_controls(s, prune))?;
            Ok(RunReport::from_series(
                command,
                &r,
                Some(reference),
                started.elapsed(),
            ))
        }),
    }
}

fn arctan_row(name: &'static str, prune: f64, check: Check) -> Row {
    Row {
        name,
        check,
        note: None,
        run: Box::new(move || {
            let command = format!(
                "eval --curve cycloid-arctan --power 2 --prune {prune:e} --depth-cap {DEPTH_CAP} --budget {BUDGET}"
            );
            let started = Instant::now();
            let r = sum_cycloid_arctan(&deep_controls(2.0, prune))?;
            Ok(RunReport::from_series(
                command,
                &r,
                Some(Reference {
                    value: PI,
                    source: "closed-form",
                }),
                started.elapsed(),
            ))
        }),
    }
}

/// The tractrix has no known closed-form limit, so its row is checked
/// against the quadrature route instead.
fn tractrix_row(prune: f64, check: Check) -> Row {
    Row {
        name: "tractrix second power",
        check,
        note: None,
        run: Box::new(move || {
            let reference = Reference {
                value: 2.0 * region_area(&Curve::Tractrix)?,
                source: "geometric-oracle",
            };
            let command = format!(
                "eval --curve tractrix --power 2 --prune {prune:e} --depth-cap {DEPTH_CAP} --budget {BUDGET}"
            );
            let started = Instant::now();
            let r = sum_power(&Curve::Tractrix, &deep_controls(2.0, prune))?;
            Ok(RunReport::from_series(
                command,
                &r,
                Some(reference),
                started.elapsed(),
            ))
        }),
    }
}

fn tornheim_row(name: &'static str, s: f64, reference: f64, check: Check) -> Row {
    const CUTOFF: u64 = 2000;
    Row {
        name,
        check,
        note: None,
        run: Box::new(move || {
            let command = format!("tornheim --power {s} --cutoff {CUTOFF} --mode zeta");
            let query = TornheimQuery::new(s)
                .with_cutoff(CUTOFF)
                .with_mode(TornheimMode::ZetaAccelerated);
            let started = Instant::now();
            let r = tornheim_coprime(&query)?;
            Ok(RunReport::from_series(
                command,
                &r,
                Some(Reference {
                    value: reference,
                    source: "closed-form",
                }),
                started.elapsed(),
            ))
        }),
    }
}

fn mixed_row(check: Check) -> Row {
    Row {
        name: "mixed circle x circle",
        check,
        note: None,
        run: Box::new(move || {
            let prune = 1e-9;
            let command = format!(
                "mixed --curve-f circle --curve-g circle --prune {prune:e} --depth-cap {DEPTH_CAP} --budget {BUDGET}"
            );
            let started = Instant::now();
            let r = mixed_sum(
                &Curve::Circle,
                &Curve::Circle,
                &deep_controls(2.0, prune),
            )?;
            Ok(RunReport::from_series(
                command,
                &r,
                Some(Reference {
                    value: (2.0 - PI / 2.0) / 2.0,
                    source: "closed-form",
                }),
                started.elapsed(),
            ))
        }),
    }
}

fn cf_row(
    name: &'static str,
    alpha_label: &'static str,
    spec: AlphaSpec,
    terms: usize,
    squared: bool,
    check: Check,
    note: Option<&'static str>,
) -> Row {
    Row {
        name,
        check,
        note,
        run: Box::new(move || {
            let started = Instant::now();
            let e = expand(&spec, terms)?;
            let value = if squared {
                series_sq(&e)?
            } else {
                series_abs(&e)?
            };
            let reference = if squared {
                e.alpha()
            } else {
                e.alpha() + 1.0
            };
            let series = if squared { "squared" } else { "absolute" };
            Ok(RunReport::from_value(
                format!("cf --alpha {alpha_label} --terms {terms} [{series} series]"),
                value,
                e.len() as u64,
                Some(Reference {
                    value: reference,
                    source: "closed-form",
                }),
                started.elapsed(),
            ))
        }),
    }
}

/// Fast spot-checks: every identity the engine claims, at prune settings
/// chosen to clear three decimal digits in a few seconds total.
fn quick_rows() -> Vec<Row> {
    let d = Check::MinDigits;
    vec![
        power_row(
            "circle second power",
            Curve::Circle,
            2.0,
            1e-6,
            Reference {
                value: 2.0 - PI / 2.0,
                source: "closed-form",
            },
            d(3),
        ),
        power_row(
            "circle first power",
            Curve::Circle,
            1.0,
            3e-11,
            Reference {
                value: 2.0,
                source: "closed-form",
            },
            d(3),
        ),
        power_row(
            "parabola second power",
            Curve::Parabola,
            2.0,
            1e-8,
            Reference {
                value: 1.0 / 48.0,
                source: "closed-form",
            },
            d(3),
        ),
        power_row(
            "parabola first power",
            Curve::Parabola,
            1.0,
            1e-11,
            Reference {
                value: 0.5,
                source: "closed-form",
            },
            d(3),
        ),
        power_row(
            "hyperbola second power",
            Curve::Hyperbola,
            2.0,
            1e-7,
            Reference {
                value: 0.5 * 3f64.ln() + 2.0 * 3f64.sqrt() - 4.0,
                source: "closed-form",
            },
            d(3),
        ),
        power_row(
            "cycloid second power",
            Curve::Cycloid,
            2.0,
            1e-7,
            Reference {
                value: PI,
                source: "closed-form",
            },
            d(3),
        ),
        arctan_row("cycloid arctan form", 1e-7, d(3)),
        power_row(
            "astroid second power",
            Curve::Astroid,
            2.0,
            1e-7,
            Reference {
                value: 3.0 * PI / 16.0,
                source: "closed-form",
            },
            d(3),
        ),
        power_row(
            "astroid first power",
            Curve::Astroid,
            1.0,
            3e-11,
            Reference {
                value: -2.0,
                source: "closed-form",
            },
            d(3),
        ),
        tornheim_row("tornheim first power", 1.0, 2.0, d(3)),
        tornheim_row("tornheim second power", 2.0, 1.0 / 3.0, d(3)),
    ]
}

/// The complete table at its stated tolerances. One row is expected to
/// fail: the 40-term first-power series for phi stops a fixed 1.1e-8
/// short of its limit, which no correct implementation can close, so its
/// 1e-12 target is unreachable and the row reports that honestly.
fn full_rows() -> Vec<Row> {
    let t = Check::AbsTol;
    vec![
        power_row(
            "circle second power",
            Curve::Circle,
            2.0,
            1e-8,
            Reference {
                value: 2.0 - PI / 2.0,
                source: "closed-form",
            },
            t(1e-6),
        ),
        power_row(
            "circle first power",
            Curve::Circle,
            1.0,
            1e-12,
            Reference {
                value: 2.0,
                source: "closed-form",
            },
            t(1e-3),
        ),
        power_row(
            "parabola second power",
            Curve::Parabola,
            2.0,
            1e-10,
            Reference {
                value: 1.0 / 48.0,
                source: "closed-form",
            },
            t(1e-8),
        ),
        power_row(
            "parabola first power",
            Curve::Parabola,
            1.0,
            2e-13,
            Reference {
                value: 0.5,
                source: "closed-form",
            },
            t(1e-4),
        ),
        power_row(
            "hyperbola second power",
            Curve::Hyperbola,
            2.0,
            1e-9,
            Reference {
                value: 0.5 * 3f64.ln() + 2.0 * 3f64.sqrt() - 4.0,
                source: "closed-form",
            },
            t(1e-6),
        ),
        power_row(
            "cycloid second power",
            Curve::Cycloid,
            2.0,
            1e-8,
            Reference {
                value: PI,
                source: "closed-form",
            },
            t(1e-4),
        ),
        arctan_row("cycloid arctan form", 1e-8, t(1e-4)),
        power_row(
            "astroid second power",
            Curve::Astroid,
            2.0,
            1e-9,
            Reference {
                value: 3.0 * PI / 16.0,
                source: "closed-form",
            },
            t(1e-4),
        ),
        power_row(
            "astroid first power",
            Curve::Astroid,
            1.0,
            3e-12,
            Reference {
                value: -2.0,
                source: "closed-form",
            },
            t(1e-3),
        ),
        tractrix_row(1e-6, t(1e-4)),
        tornheim_row("tornheim first power", 1.0, 2.0, t(1e-6)),
        tornheim_row("tornheim second power", 2.0, 1.0 / 3.0, t(1e-8)),
        mixed_row(t(1e-4)),
        cf_row(
            "cf phi squared @40",
            "phi",
            AlphaSpec::Named(NamedAlpha::Phi),
            40,
            true,
            t(1e-14),
            None,
        ),
        cf_row(
            "cf phi absolute @40",
            "phi",
            AlphaSpec::Named(NamedAlpha::Phi),
            40,
            false,
            t(1e-12),
            Some(
                "the 40-term partial sum equals (phi+1)(1 - phi^-40) exactly, \
                 1.14e-8 short of phi+1; the 1e-12 target needs about 80 terms",
            ),
        ),
        cf_row(
            "cf 1+sqrt2 absolute @30",
            "1,2,1",
            AlphaSpec::Surd { p: 1, d: 2, q: 1 },
            30,
            false,
            t(1e-10),
            None,
        ),
        cf_row(
            "cf 1+sqrt2 squared @30",
            "1,2,1",
            AlphaSpec::Surd { p: 1, d: 2, q: 1 },
            30,
            true,
            t(1e-10),
            None,
        ),
        cf_row(
            "cf pi absolute @25",
            "pi",
            AlphaSpec::Named(NamedAlpha::Pi),
            25,
            false,
            t(1e-6),
            None,
        ),
        cf_row(
            "cf pi squared @25",
            "pi",
            AlphaSpec::Named(NamedAlpha::Pi),
            25,
            true,
            t(1e-6),
            None,
        ),
    ]
}

fn requirement_text(check: &Check) -> String {
    match check {
        Check::MinDigits(d) => format!("needs >= {d} digits"),
        Check::AbsTol(t) => format!("tol {t:e}"),
    }
}

fn row_line(name: &str, report: &RunReport, pass: bool, requirement: &str) -> String {
    let err = report
        .reference_value
        .map(|rv| format!("{:.2e}", (report.value - rv).abs()))
        .unwrap_or_else(|| "-".into());
    let digits = report
        .digits_matched
        .map(|d| d.to_string())
        .unwrap_or_else(|| "-".into());
    format!(
        "{}  {:<26} value {}  err {err}  digits {digits:>2}  {requirement}  [{} ms]",
        if pass { "PASS" } else { "FAIL" },
        name,
        sig(report.value),
        report.wall_time_ms
    )
}

pub fn cmd_verify(args: VerifyArgs) -> i32 {
    let rows = match args.profile {
        Profile::Quick => quick_rows(),
        Profile::Full => full_rows(),
    };
    let mut reports = Vec::new();
    let mut lines = Vec::new();
    let mut all_pass = true;
    for row in rows {
        let requirement = requirement_text(&row.check);
        match (row.run)() {
            Ok(report) => {
                let pass = match row.check {
                    Check::MinDigits(d) => report.digits_matched.unwrap_or(0) >= d,
                    Check::AbsTol(t) => {
                        let rv = report
                            .reference_value
                            .expect("tolerance rows always carry a reference");
                        (report.value - rv).abs() <= t
                    }
                };
                all_pass &= pass;
                lines.push(row_line(row.name, &report, pass, &requirement));
                if !pass {
                    if let Some(note) = row.note {
                        lines.push(format!("      note: {note}"));
                    }
                }
                reports.push(report);
            }
            Err(e) => {
                all_pass = false;
                lines.push(format!("FAIL  {:<26} error: {e}", row.name));
            }
        }
    }
    match args.format {
        Format::Text => {
            for line in &lines {
                crate::out_line(line);
            }
            crate::out_line("");
            crate::out_line(if all_pass {
                "all checks passed"
            } else {
                "some checks FAILED"
            });
        }
        Format::Json => crate::out_line(
            &serde_json::to_string_pretty(&reports).expect("reports always serialize"),
        ),
        Format::Csv => {
            crate::out_line(CSV_HEADER);
            for r in &reports {
                crate::out_line(&csv_row(r));
            }
        }
    }
    if all_pass {
        0
    } else {
        1
    }
}
