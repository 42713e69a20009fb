use std::fmt::Write;

use super::{Pipeline, Provenance, Status, Tagged, VerdictReport};

fn tag(t: &Tagged) -> String {
    let p = match t.provenance {
        Provenance::Published => "published",
        Provenance::Derived => "derived",
    };
    format!("{} [{p}]", t.value)
}

/// Human-readable report, grouped by pipeline.
pub fn render_text(r: &VerdictReport) -> String {
    let m = &r.metadata;
    let mut out = String::new();
    let _ = writeln!(out, "heptic-verify {}", m.tool_version);
    let _ = writeln!(
        out,
        "seed {} primes {:?} exact {} truncation {} max-depth {} cert-degree {}",
        m.seed, m.primes, m.exact, m.truncation, m.max_depth, m.cert_degree
    );
    let _ = writeln!(
        out,
        "syzygies {} catalog {}",
        m.syzygy_source, m.catalog_source
    );
    let mut current: Option<Pipeline> = None;
    for s in &r.sections {
        if current != Some(s.pipeline) {
            let _ = writeln!(out, "\n== {} ==", s.pipeline);
            current = Some(s.pipeline);
        }
        let label = match (s.status, s.load_bearing) {
            (Status::Match, _) => "MATCH",
            (Status::Mismatch, true) => "MISMATCH",
            (Status::Inconclusive, true) => "INCONCLUSIVE",
            (_, false) => "WARN",
        };
        let _ = writeln!(out, "[{label:<12}] {}: {}", s.id, s.claim);
        if let Some(reference) = &s.reference {
            let _ = writeln!(out, "    reference: {}", tag(reference));
        }
        let _ = writeln!(out, "    computed:  {}", tag(&s.computed));
        if !s.evidence.is_empty() {
            let _ = writeln!(out, "    evidence:  {}", s.evidence);
        }
    }
    let sum = r.summary();
    let _ = writeln!(
        out,
        "\nsummary: {} sections, {} match, {} mismatch, {} inconclusive, {} warnings",
        sum.sections, sum.matches, sum.mismatches, sum.inconclusive, sum.warnings
    );
    for w in r.warnings() {
        let _ = writeln!(out, "warning: {} is {} (flag only)", w.id, w.status);
    }
    let _ = writeln!(out, "exit status {}", r.exit_code());
    out
}

/// Stable JSON: metadata, then one object per section, then the summary.
pub fn render_json(r: &VerdictReport) -> String {
    let value = serde_json::json!({
        "metadata": r.metadata,
        "sections": r.sections,
        "summary": r.summary(),
        "exit_code": r.exit_code(),
    });
    let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
    s.push('\n');
    s
}
