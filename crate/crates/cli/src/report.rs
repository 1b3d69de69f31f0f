use std::time::Duration;

use serde::Serialize;
use sl2sum_core::{SeriesResult, TailKind};

/// A reference value the computed sum can be compared against, along with
/// where it came from: "closed-form" for an exact constant, or
/// "geometric-oracle" for a value produced by the independent quadrature
/// route.
#[derive(Debug, Clone, Copy)]
pub struct Reference {
    pub value: f64,
    pub source: &'static str,
}

/// One completed run in a shape every output format can consume.
///
/// `command` echoes the work actually performed, with every effective
/// setting spelled out, so a report is reproducible on its own. When no
/// reference is known, `reference_value` and `digits_matched` are null and
/// `reference_source` is "none".
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub value: f64,
    pub nodes_used: u64,
    pub truncated_subtrees: u64,
    pub tail_kind: String,
    pub tail_magnitude: f64,
    pub overflow_truncations: u64,
    pub reference_value: Option<f64>,
    pub reference_source: String,
    pub digits_matched: Option<u32>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn from_series(
        command: String,
        r: &SeriesResult,
        reference: Option<Reference>,
        wall: Duration,
    ) -> Self {
        RunReport {
            command,
            value: r.value,
            nodes_used: r.nodes_used,
            truncated_subtrees: r.truncated_subtrees,
            tail_kind: tail_kind_name(r.tail_kind).to_string(),
            tail_magnitude: r.tail_magnitude,
            overflow_truncations: r.overflow_truncations,
            reference_value: reference.map(|r| r.value),
            reference_source: reference.map_or("none", |r| r.source).to_string(),
            digits_matched: reference.map(|rf| digits_matched(r.value, rf.value)),
            wall_time_ms: wall.as_millis() as u64,
        }
    }

    /// For results that are not lattice sums (continued-fraction series):
    /// `terms` plays the role of the node count and there is no tail claim.
    pub fn from_value(
        command: String,
        value: f64,
        terms: u64,
        reference: Option<Reference>,
        wall: Duration,
    ) -> Self {
        RunReport {
            command,
            value,
            nodes_used: terms,
            truncated_subtrees: 0,
            tail_kind: "none".to_string(),
            tail_magnitude: 0.0,
            overflow_truncations: 0,
            reference_value: reference.map(|r| r.value),
            reference_source: reference.map_or("none", |r| r.source).to_string(),
            digits_matched: reference.map(|rf| digits_matched(value, rf.value)),
            wall_time_ms: wall.as_millis() as u64,
        }
    }
}

pub fn tail_kind_name(k: TailKind) -> &'static str {
    match k {
        TailKind::Certified => "certified",
        TailKind::Estimated => "estimated",
        TailKind::None => "none",
    }
}

/// 17 significant digits, enough to round-trip any f64 exactly.
pub fn sig(x: f64) -> String {
    format!("{x:.16e}")
}

/// Agreement between a computed value and its reference, in decimal
/// digits: floor(-log10(|v - r| / max(|r|, 1))), clamped to 0..=17.
/// Exact agreement counts as the full 17.
pub fn digits_matched(value: f64, reference: f64) -> u32 {
    let err = (value - reference).abs();
    if err == 0.0 {
        return 17;
    }
    let rel = err / reference.abs().max(1.0);
    let d = (-rel.log10()).floor();
    d.clamp(0.0, 17.0) as u32
}

/// Column set shared by every CSV emission; the order is part of the
/// output contract and must not change.
pub const CSV_HEADER: &str = "command,value,nodes_used,truncated_subtrees,tail_kind,\
tail_magnitude,overflow_truncations,reference_value,reference_source,digits_matched,\
wall_time_ms";

pub fn csv_row(r: &RunReport) -> String {
    // Only the command field can contain a comma (surd alphas are written
    // p,d,q), so it is the only quoted column.
    format!(
        "\"{}\",{},{},{},{},{:e},{},{},{},{},{}",
        r.command.replace('"', "\"\""),
        sig(r.value),
        r.nodes_used,
        r.truncated_subtrees,
        r.tail_kind,
        r.tail_magnitude,
        r.overflow_truncations,
        r.reference_value.map(sig).unwrap_or_default(),
        r.reference_source,
        r.digits_matched.map(|d| d.to_string()).unwrap_or_default(),
        r.wall_time_ms,
    )
}

pub fn text_block(r: &RunReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("command:              {}\n", r.command));
    out.push_str(&format!("value:                {}\n", sig(r.value)));
    out.push_str(&format!("nodes used:           {}\n", r.nodes_used));
    out.push_str(&format!("truncated subtrees:   {}\n", r.truncated_subtrees));
    out.push_str(&format!(
        "tail:                 {} (magnitude {:e})\n",
        r.tail_kind, r.tail_magnitude
    ));
    if r.tail_kind == "none" && r.truncated_subtrees > 0 {
        out.push_str("                      node budget exhausted; no tail claim\n");
    }
    if r.overflow_truncations > 0 {
        out.push_str(&format!(
            "overflow truncations: {}\n",
            r.overflow_truncations
        ));
    }
    match r.reference_value {
        Some(rv) => {
            out.push_str(&format!(
                "reference:            {} ({})\n",
                sig(rv),
                r.reference_source
            ));
            out.push_str(&format!(
                "digits matched:       {}\n",
                r.digits_matched.unwrap_or(0)
            ));
        }
        None => out.push_str("reference:            none\n"),
    }
    out.push_str(&format!("wall time:            {} ms\n", r.wall_time_ms));
    out
}
