//! Text and JSON renderings of fusion results.
//!
//! Tables round to four decimals; JSON keeps full precision.

use std::fmt::Write as _;

use dsq_core::{FocalSet, Frame, FusionError, FusionResult, StrategyOutcome};
use serde_json::{json, Map, Value};

/// Focal sets in display order: by size, then by the frame order of labels.
fn display_order(sets: &mut [FocalSet]) {
    sets.sort_by_key(|s| (s.cardinality(), s.indices().collect::<Vec<_>>()));
}

fn fused_sets(result: &FusionResult) -> Vec<FocalSet> {
    let mut sets: Vec<FocalSet> = result.fused.focal_elements().map(|(s, _)| s).collect();
    display_order(&mut sets);
    sets
}

fn masses_json(result: &FusionResult) -> Value {
    let frame = result.fused.frame();
    let mut map = Map::new();
    for s in fused_sets(result) {
        map.insert(frame.format_subset(s), json!(result.fused.mass(s)));
    }
    Value::Object(map)
}

pub fn fusion_json(result: &FusionResult) -> Value {
    let credibilities: Vec<Value> = result
        .credibilities
        .iter()
        .map(|(id, c)| json!({ "source_id": id, "credibility": c }))
        .collect();
    json!({
        "strategy": result.strategy.name(),
        "masses": masses_json(result),
        "credibilities": credibilities,
        "conflicts": result.conflicts,
    })
}

pub fn fusion_table(result: &FusionResult) -> String {
    let frame = result.fused.frame();
    let mut out = String::new();
    let _ = writeln!(out, "strategy: {}", result.strategy.name());
    let _ = writeln!(out, "{:<16} {:>8}", "focal set", "mass");
    for s in fused_sets(result) {
        let _ = writeln!(
            out,
            "{:<16} {:>8.4}",
            frame.format_subset(s),
            result.fused.mass(s)
        );
    }
    if !result.credibilities.is_empty() {
        let _ = writeln!(out, "{:<16} {:>8}", "source", "Crd");
        for (id, c) in &result.credibilities {
            let _ = writeln!(out, "{id:<16} {c:>8.4}");
        }
    }
    let _ = writeln!(out, "{:<16} {:>8}", "step", "K");
    for (i, k) in result.conflicts.iter().enumerate() {
        let _ = writeln!(out, "{:<16} {k:>8.4}", i + 1);
    }
    out
}

pub fn error_label(err: &FusionError) -> &'static str {
    match err {
        e if e.is_total_conflict() => "TotalConflict",
        FusionError::AllUnreliable { .. } => "AllUnreliable",
        FusionError::Curve { .. } => "CurveError",
        FusionError::MissingReliability { .. } => "MissingReliability",
        _ => "Error",
    }
}

/// Columns for a comparison: every singleton, then any other set that
/// carries mass in some row.
fn comparison_columns(frame: &Frame, rows: &[StrategyOutcome]) -> Vec<FocalSet> {
    let mut sets: Vec<FocalSet> = frame
        .labels()
        .iter()
        .map(|l| frame.singleton(l).expect("own label"))
        .collect();
    for row in rows {
        if let Ok(r) = &row.result {
            for (s, _) in r.fused.focal_elements() {
                if !sets.contains(&s) {
                    sets.push(s);
                }
            }
        }
    }
    display_order(&mut sets);
    sets
}

pub fn comparison_json(rows: &[StrategyOutcome]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| match &row.result {
            Ok(r) => {
                let mut v = fusion_json(r);
                v["status"] = json!("ok");
                v
            }
            Err(e) => json!({
                "strategy": row.strategy.name(),
                "status": error_label(e),
                "error": e.to_string(),
            }),
        })
        .collect();
    json!({ "rows": rows })
}

pub fn comparison_table(frame: &Frame, rows: &[StrategyOutcome]) -> String {
    let columns = comparison_columns(frame, rows);
    let mut out = String::new();
    let _ = write!(out, "{:<22}", "strategy");
    for s in &columns {
        let _ = write!(out, " {:>8}", frame.format_subset(*s));
    }
    let _ = writeln!(out, "  status");
    for row in rows {
        let _ = write!(out, "{:<22}", row.strategy.name());
        match &row.result {
            Ok(r) => {
                for s in &columns {
                    let _ = write!(out, " {:>8.4}", r.fused.mass(*s));
                }
                let _ = writeln!(out, "  ok");
            }
            Err(e) => {
                for _ in &columns {
                    let _ = write!(out, " {:>8}", "-");
                }
                let _ = writeln!(out, "  {}: {e}", error_label(e));
            }
        }
    }
    out
}
