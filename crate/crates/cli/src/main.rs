mod report;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sl2sum_core::{
    expand, mixed_sum, mixed_volume_oracle, region_area, series_abs, series_sq,
    sum_cycloid_arctan, sum_power_stream, sum_power_with, tangent_lengths, tornheim_coprime,
    AlphaSpec, Curve, Error, ExecPlan, SampledCurve, SumControls, TornheimMode, TornheimQuery,
};

use report::{csv_row, sig, text_block, Reference, RunReport, CSV_HEADER};

/// Series over the Stern-Brocot tree of coprime directions: tangent-line
/// gaps of a convex curve summed at integer powers, with certified or
/// estimated truncation error, plus the coprime double series and
/// continued-fraction companions they connect to.
#[derive(Parser)]
#[command(name = "sl2sum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one curve's series and report value, tail, and reference
    Eval(EvalArgs),
    /// Run a table of cross-checks; exits nonzero if any row misses
    Verify(verify::VerifyArgs),
    /// Coprime double series at the given power, direct or zeta-accelerated
    Tornheim(TornheimArgs),
    /// Continued-fraction expansion and its two convergent series
    Cf(CfArgs),
    /// Product-of-terms sum for two curves, against the area-based oracle
    Mixed(MixedArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["curve", "curve_file"])))]
struct EvalArgs {
    /// circle, parabola, hyperbola, cycloid, cycloid-arctan, tractrix, astroid
    #[arg(long)]
    curve: Option<String>,
    /// CSV file of boundary points (x,y per line) for a sampled curve
    #[arg(long)]
    curve_file: Option<PathBuf>,
    /// Exponent applied to each term
    #[arg(long, default_value_t = 2.0)]
    power: f64,
    /// Subtrees whose bound falls below this are cut and accounted to the tail
    #[arg(long, default_value_t = 1e-9)]
    prune: f64,
    /// Maximum tree depth walked
    #[arg(long, default_value_t = 60)]
    depth_cap: u32,
    /// Maximum number of node evaluations
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Worker threads; 0 means all available cores
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Depth at which the walk is split into parallel subtrees
    #[arg(long, default_value_t = 6)]
    seed_depth: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Stream partial,nodes,value rows while summing (forces the
    /// sequential walk; rows go to stderr under --format json)
    #[arg(long)]
    emit_partials: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TornMode {
    Direct,
    Zeta,
}

#[derive(Args)]
struct TornheimArgs {
    /// Exponent of each of the three factors
    #[arg(long, default_value_t = 1.0)]
    power: f64,
    /// Largest index summed explicitly
    #[arg(long, default_value_t = 2000)]
    cutoff: u64,
    #[arg(long, value_enum, default_value_t = TornMode::Zeta)]
    mode: TornMode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CfArgs {
    /// phi, sqrt2, pi, e, a surd p,d,q meaning (p+sqrt(d))/q, or a decimal
    #[arg(long)]
    alpha: String,
    /// Number of continued-fraction terms requested
    #[arg(long, default_value_t = 40)]
    terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MixedArgs {
    /// First curve (named curves only)
    #[arg(long)]
    curve_f: String,
    /// Second curve
    #[arg(long)]
    curve_g: String,
    #[arg(long, default_value_t = 1e-9)]
    prune: f64,
    #[arg(long, default_value_t = 60)]
    depth_cap: u32,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => verify::cmd_verify(a),
        Command::Tornheim(a) => cmd_tornheim(a),
        Command::Cf(a) => cmd_cf(a),
        Command::Mixed(a) => cmd_mixed(a),
    };
    std::process::exit(code);
}

/// Input and domain problems are usage errors (2); anything the engine
/// hits mid-run is a runtime failure (1).
fn code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::Domain(_) | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    code_for(e)
}

/// Write a line to stdout, treating a closed pipe as a normal end of
/// output rather than a panic (the default behavior under `| head`).
pub(crate) fn out_line(line: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

pub(crate) fn emit(reports: &[RunReport], format: Format) {
    match format {
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    out_line("");
                }
                out_line(text_block(r).trim_end());
            }
        }
        Format::Json => {
            let doc = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            }
            .expect("reports always serialize");
            out_line(&doc);
        }
        Format::Csv => {
            out_line(CSV_HEADER);
            for r in reports {
                out_line(&csv_row(r));
            }
        }
    }
}

enum Target {
    Power(Curve),
    CycloidArctan,
}

fn resolve_target(args: &EvalArgs) -> Result<Target, i32> {
    if let Some(path) = &args.curve_file {
        let text = fs::read_to_string(path).map_err(|e| {
            eprintln!("error: cannot read {}: {e}", path.display());
            2
        })?;
        let sc = SampledCurve::from_csv_str(&text).map_err(|e| fail(&e))?;
        return Ok(Target::Power(Curve::Sampled(sc)));
    }
    let name = args.curve.as_deref().expect("clap enforces a curve source");
    if name.eq_ignore_ascii_case("cycloid-arctan") {
        return Ok(Target::CycloidArctan);
    }
    match Curve::from_str(name) {
        Ok(c) => Ok(Target::Power(c)),
        Err(e) => {
            eprintln!("error: {e}; cycloid-arctan and --curve-file are also accepted");
            Err(2)
        }
    }
}

/// Known closed-form limits for the named curves at first and second power.
fn closed_form(curve: &Curve, s: f64) -> Option<f64> {
    use std::f64::consts::PI;
    let sq = s == 2.0;
    let first = s == 1.0;
    Some(match curve {
        Curve::Circle if sq => 2.0 - PI / 2.0,
        Curve::Circle if first => 2.0,
        Curve::Parabola if sq => 1.0 / 48.0,
        Curve::Parabola if first => 0.5,
        Curve::Hyperbola if sq => 0.5 * 3f64.ln() + 2.0 * 3f64.sqrt() - 4.0,
        Curve::Cycloid if sq => PI,
        Curve::Astroid if sq => 3.0 * PI / 16.0,
        Curve::Astroid if first => -2.0,
        _ => return None,
    })
}

/// Best available reference: an exact constant when one is known, else the
/// quadrature oracle (twice the corner region for squared terms, the two
/// axis tangent lengths for plain terms), else nothing.
fn reference_for(curve: &Curve, s: f64) -> Option<Reference> {
    if let Some(value) = closed_form(curve, s) {
        return Some(Reference {
            value,
            source: "closed-form",
        });
    }
    if s == 2.0 {
        if let Ok(area) = region_area(curve) {
            return Some(Reference {
                value: 2.0 * area,
                source: "geometric-oracle",
            });
        }
    }
    if s == 1.0 {
        if let Ok(len) = tangent_lengths(curve) {
            return Some(Reference {
                value: len,
                source: "geometric-oracle",
            });
        }
    }
    None
}

fn echo_eval(args: &EvalArgs, target: &Target) -> String {
    let source = match (&args.curve_file, target) {
        (Some(p), _) => format!("--curve-file {}", p.display()),
        (None, Target::CycloidArctan) => "--curve cycloid-arctan".to_string(),
        (None, Target::Power(c)) => format!("--curve {}", c.name()),
    };
    let mut s = format!(
        "eval {source} --power {} --prune {:e} --depth-cap {} --budget {}",
        args.power, args.prune, args.depth_cap, args.budget
    );
    if args.emit_partials {
        s.push_str(" --emit-partials");
    } else {
        s.push_str(&format!(
            " --threads {} --seed-depth {}",
            args.threads, args.seed_depth
        ));
    }
    s
}

fn partial_stride(budget: u64) -> u64 {
    (budget / 1000).clamp(1, 1_000_000)
}

fn cmd_eval(args: EvalArgs) -> i32 {
    let target = match resolve_target(&args) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let controls = SumControls::new(args.power)
        .with_prune_epsilon(args.prune)
        .with_depth_cap(args.depth_cap)
        .with_node_budget(args.budget);

    let started = Instant::now();
    let outcome = match &target {
        Target::CycloidArctan => {
            if args.emit_partials {
                eprintln!("error: --emit-partials applies to the power form only");
                return 2;
            }
            sum_cycloid_arctan(&controls)
        }
        Target::Power(curve) => {
            if args.emit_partials {
                let stride = partial_stride(args.budget);
                let to_stderr = args.format == Format::Json;
                sum_power_stream(curve, &controls, stride, &mut |nodes, value| {
                    let row = format!("partial,{nodes},{}", sig(value));
                    if to_stderr {
                        eprintln!("{row}");
                    } else {
                        out_line(&row);
                    }
                })
            } else {
                let plan = ExecPlan {
                    threads: args.threads,
                    seed_depth: args.seed_depth,
                };
                sum_power_with(curve, &controls, &plan)
            }
        }
    };
    let wall = started.elapsed();
    let result = match outcome {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };

    let reference = match &target {
        Target::CycloidArctan => Some(Reference {
            value: std::f64::consts::PI,
            source: "closed-form",
        }),
        Target::Power(curve) => reference_for(curve, args.power),
    };
    let report = RunReport::from_series(echo_eval(&args, &target), &result, reference, wall);
    emit(&[report], args.format);
    0
}

fn cmd_tornheim(args: TornheimArgs) -> i32 {
    let (mode, mode_name) = match args.mode {
        TornMode::Direct => (TornheimMode::Direct, "direct"),
        TornMode::Zeta => (TornheimMode::ZetaAccelerated, "zeta"),
    };
    let query = TornheimQuery::new(args.power)
        .with_cutoff(args.cutoff)
        .with_mode(mode);
    let started = Instant::now();
    let result = match tornheim_coprime(&query) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let wall = started.elapsed();
    let reference = if args.power == 1.0 {
        Some(Reference {
            value: 2.0,
            source: "closed-form",
        })
    } else if args.power == 2.0 {
        Some(Reference {
            value: 1.0 / 3.0,
            source: "closed-form",
        })
    } else {
        None
    };
    let command = format!(
        "tornheim --power {} --cutoff {} --mode {mode_name}",
        args.power, args.cutoff
    );
    emit(
        &[RunReport::from_series(command, &result, reference, wall)],
        args.format,
    );
    0
}

fn cmd_cf(args: CfArgs) -> i32 {
    let spec = match AlphaSpec::from_str(&args.alpha) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let started = Instant::now();
    let expansion = match expand(&spec, args.terms) {
        Ok(e) => e,
        Err(e) => return fail(&e),
    };
    let (abs, sq) = match (series_abs(&expansion), series_sq(&expansion)) {
        (Ok(a), Ok(s)) => (a, s),
        (Err(e), _) | (_, Err(e)) => return fail(&e),
    };
    let wall = started.elapsed();
    let alpha = expansion.alpha();
    let terms = expansion.len() as u64;
    let mut notes = String::new();
    if expansion.terminated {
        notes.push_str(" [terminated]");
    }
    if expansion.precision_exhausted {
        notes.push_str(" [precision-exhausted]");
    }
    let base = format!("cf --alpha {} --terms {}{notes}", args.alpha, args.terms);
    let reports = [
        RunReport::from_value(
            format!("{base} [absolute series]"),
            abs,
            terms,
            Some(Reference {
                value: alpha + 1.0,
                source: "closed-form",
            }),
            wall,
        ),
        RunReport::from_value(
            format!("{base} [squared series]"),
            sq,
            terms,
            Some(Reference {
                value: alpha,
                source: "closed-form",
            }),
            wall,
        ),
    ];
    emit(&reports, args.format);
    0
}

fn cmd_mixed(args: MixedArgs) -> i32 {
    let parse = |name: &str| -> Result<Curve, i32> {
        Curve::from_str(name).map_err(|e| {
            eprintln!("error: {e}");
            2
        })
    };
    let curve_f = match parse(&args.curve_f) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let curve_g = match parse(&args.curve_g) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let controls = SumControls::new(2.0)
        .with_prune_epsilon(args.prune)
        .with_depth_cap(args.depth_cap)
        .with_node_budget(args.budget);
    let started = Instant::now();
    let result = match mixed_sum(&curve_f, &curve_g, &controls) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let wall = started.elapsed();
    let reference = if matches!(curve_f, Curve::Circle) && matches!(curve_g, Curve::Circle) {
        Some(Reference {
            value: (2.0 - std::f64::consts::PI / 2.0) / 2.0,
            source: "closed-form",
        })
    } else {
        mixed_volume_oracle(&curve_f, &curve_g)
            .ok()
            .map(|value| Reference {
                value,
                source: "geometric-oracle",
            })
    };
    let command = format!(
        "mixed --curve-f {} --curve-g {} --prune {:e} --depth-cap {} --budget {}",
        curve_f.name(),
        curve_g.name(),
        args.prune,
        args.depth_cap,
        args.budget
    );
    emit(
        &[RunReport::from_series(command, &result, reference, wall)],
        args.format,
    );
    0
}
