//! Text and JSON report builders. All integers are emitted as exact
//! decimal strings; JSON object keys are sorted, so output is
//! byte-deterministic for a given input.

use serde_json::{json, Value};
use triline::{IncidenceReport, ProjLine, ProjPoint, ProofStep, WitnessResult};

pub fn point_triple(p: &ProjPoint) -> Value {
    json!([p.x().to_string(), p.y().to_string(), p.z().to_string()])
}

pub fn line_triple(l: &ProjLine) -> Value {
    json!([l.a().to_string(), l.b().to_string(), l.c().to_string()])
}

pub fn analyze_text(report: &IncidenceReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("n: {}\n", report.n()));
    out.push_str(&format!("spanned lines: {}\n", report.spanned.len()));
    out.push_str(&format!("t: {}\n", report.t));
    out.push_str(&format!("threshold: {}\n", report.threshold));
    out.push_str(&format!(
        "verdict: t {} threshold ({})\n",
        if report.dirac_holds() { ">=" } else { "<" },
        if report.dirac_holds() { "yes" } else { "no" }
    ));
    out.push_str("counts:\n");
    for (p, c) in report.counts() {
        out.push_str(&format!("  {p}: {c}\n"));
    }
    out.push_str(&format!("ordinary points: {}\n", report.ordinary_points.len()));
    for p in &report.ordinary_points {
        out.push_str(&format!("  {p}\n"));
    }
    out.push_str(&format!("ordinary lines: {}\n", report.ordinary_lines.len()));
    for l in &report.ordinary_lines {
        out.push_str(&format!("  {l}\n"));
    }
    out
}

pub fn analyze_json(report: &IncidenceReport) -> Value {
    json!({
        "n": report.n(),
        "spanned_lines": report.spanned.len(),
        "t": report.t,
        "threshold": report.threshold,
        "dirac_holds": report.dirac_holds(),
        "counts": report
            .counts()
            .map(|(p, c)| json!({"point": point_triple(p), "lines": c}))
            .collect::<Vec<_>>(),
        "ordinary_points": report.ordinary_points.iter().map(point_triple).collect::<Vec<_>>(),
        "ordinary_lines": report.ordinary_lines.iter().map(line_triple).collect::<Vec<_>>(),
    })
}

pub fn step_text(step: &ProofStep) -> String {
    match step {
        ProofStep::NonSuccessive { heavy_first } => {
            format!("non-successive(heavy_first={heavy_first})")
        }
        ProofStep::Successive { start } => format!("successive(start={start})"),
        ProofStep::BothUnspanned => "both-unspanned".to_string(),
        ProofStep::LoneAnchorOnFirst { equal_cardinality } => {
            format!("lone-anchor-first(equal={equal_cardinality})")
        }
        ProofStep::LoneAnchorOnSecond { equal_cardinality } => {
            format!("lone-anchor-second(equal={equal_cardinality})")
        }
        ProofStep::CaseA { crossing, removed } => {
            format!("case-a(crossing={crossing}, removed={removed})")
        }
        ProofStep::CaseB { crossing, removed } => {
            format!("case-b(crossing={crossing}, removed={removed})")
        }
        ProofStep::CaseC { first_branch } => format!("case-c(first_branch={first_branch})"),
        ProofStep::EmptySegment { second_anchor } => {
            format!("empty-segment(second_anchor={second_anchor})")
        }
    }
}

pub fn witness_text(result: &WitnessResult, threshold: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!("witness: {}\n", result.point));
    out.push_str(&format!("count: {}\n", result.count));
    out.push_str(&format!("threshold: {threshold}\n"));
    out.push_str("trace:\n");
    for step in &result.trace {
        out.push_str(&format!("  {}\n", step_text(step)));
    }
    out
}

pub fn witness_json(result: &WitnessResult, threshold: usize) -> Value {
    json!({
        "witness": point_triple(&result.point),
        "count": result.count,
        "threshold": threshold,
        "trace": result.trace.iter().map(step_text).collect::<Vec<_>>(),
    })
}
