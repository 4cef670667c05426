//! Report assembly.  Every command produces a `Report`: a `meta` object
//! (invocation context, timings, engine statistics — anything allowed to
//! vary between identical runs) and a `results` object, which is a pure
//! function of the inputs and seed and therefore byte-reproducible.

use std::sync::Arc;
use std::time::Instant;

use corelab_core::engine::{
    CharScanReport, CoreReport, Dim1Report, SandwichReport, ScanOutcome, StabilizationEvidence,
    Verdict,
};
use corelab_core::reductions::ReductionCertificate;
use corelab_core::{FieldSpec, Ideal, PresentedRing};
use serde_json::{json, Map, Value};

pub struct Report {
    pub meta: Map<String, Value>,
    pub results: Value,
    /// Exit code the verdict (if any) maps to; commands without verdicts
    /// leave this at 0.
    pub exit: i32,
}

impl Report {
    pub fn new(results: Value) -> Self {
        Report {
            meta: Map::new(),
            results,
            exit: 0,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({ "meta": Value::Object(self.meta.clone()), "results": self.results })
    }

    /// Plain-text rendering: a stable, indentation-based dump of the
    /// results tree (meta is omitted — it is context, not content).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        render_value(&self.results, 0, &mut out);
        out
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_short(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline_value(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_short(item) {
                    out.push_str(&format!("{pad}- {}\n", inline_value(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_value(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline_value(other))),
    }
}

fn is_short(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.len() <= 8 && items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline_value).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn field_label(field: &FieldSpec) -> String {
    match field {
        FieldSpec::Prime(p) => format!("F_{p}"),
        FieldSpec::Rationals => "QQ".to_string(),
    }
}

pub fn polys_json(ring: &PresentedRing, polys: &[corelab_core::Polynomial]) -> Value {
    Value::Array(
        polys
            .iter()
            .map(|p| Value::String(ring.ambient().render(p)))
            .collect(),
    )
}

pub fn ideal_json(ideal: &Ideal) -> Value {
    polys_json(ideal.ring(), ideal.gens())
}

pub fn basis_json(ideal: &Ideal) -> Value {
    match ideal.gb() {
        Ok(gb) => polys_json(ideal.ring(), gb.elements()),
        Err(_) => Value::Null,
    }
}

pub fn dims_json(table: &[(u64, usize)]) -> Value {
    Value::Array(
        table
            .iter()
            .map(|&(d, dim)| json!([d, dim]))
            .collect(),
    )
}

pub fn verdict_json(verdict: &Verdict, ring: &PresentedRing) -> Value {
    match verdict {
        Verdict::Consistent => json!({ "kind": "consistent" }),
        Verdict::Refuted { witness, violated } => json!({
            "kind": "refuted",
            "witness": ring.ambient().render(witness),
            "violated": violated,
        }),
        Verdict::Inconclusive { reason } => json!({
            "kind": "inconclusive",
            "reason": reason,
        }),
    }
}

pub fn verdict_exit(verdict: &Verdict) -> i32 {
    match verdict {
        Verdict::Consistent => 0,
        Verdict::Refuted { .. } => 1,
        Verdict::Inconclusive { .. } => 2,
    }
}

fn stabilization_json(e: &StabilizationEvidence) -> Value {
    json!({
        "samples_used": e.samples_used,
        "window": e.window,
        "stable_for": e.stable_for,
        "stabilized": e.stabilized,
        "truncation_degree": e.truncation_degree,
    })
}

pub fn certificates_json(ring: &PresentedRing, certs: &[ReductionCertificate]) -> Value {
    json!({
        "count": certs.len(),
        "reduction_numbers": certs.iter().map(|c| c.reduction_number()).collect::<Vec<_>>(),
        "first": certs.first().map(|c| polys_json(ring, c.generators())),
    })
}

pub fn core_report_json(report: &CoreReport) -> Value {
    let ring = report.result.ring();
    let mut map = Map::new();
    map.insert("target".into(), json!(report.target));
    map.insert(
        "mode".into(),
        json!(match report.mode {
            corelab_core::engine::Mode::MonteCarlo => "monte-carlo",
            corelab_core::engine::Mode::Colon => "colon",
        }),
    );
    map.insert("generators".into(), ideal_json(&report.result));
    map.insert("reduced_basis".into(), basis_json(&report.result));
    map.insert("dims".into(), dims_json(&report.dimension_table));
    map.insert(
        "certificates".into(),
        certificates_json(ring, &report.certificates),
    );
    map.insert(
        "max_reduction_number".into(),
        json!(report.max_reduction_number),
    );
    if let Some(e) = &report.stabilization {
        map.insert("stabilization".into(), stabilization_json(e));
    }
    if let Some(r) = report.colon_exponent {
        map.insert("colon_exponent".into(), json!(r));
    }
    if let Some(c) = &report.candidate {
        map.insert("candidate".into(), ideal_json(c));
    }
    if let Some(v) = &report.verdict {
        map.insert("verdict".into(), verdict_json(v, ring));
    }
    map.insert("notes".into(), json!(report.notes));
    Value::Object(map)
}

pub fn sandwich_json(report: &SandwichReport) -> Value {
    let ring = report.lower.ring();
    json!({
        "k0": report.k0,
        "lower": ideal_json(&report.lower),
        "upper": ideal_json(&report.upper),
        "gap_degrees": report.gap_degrees,
        "lower_contained": report.lower_contained,
        "upper_contains": report.upper_contains,
        "level": report.level,
        "gorenstein": report.gorenstein,
        "equality_with_upper": report.equality_with_upper,
        "graded_core": core_report_json(&report.graded_core),
        "verdict": verdict_json(&report.verdict, ring),
        "notes": report.notes,
    })
}

pub fn dim1_json(report: &Dim1Report) -> Value {
    let ring = report.core.result.ring().clone();
    let witness = report.witness.as_ref().map(|w| {
        json!({
            "poly": ring.ambient().render(&w.poly),
            "in_graded_core": w.in_graded_core,
            "outside_core": w.outside_core,
            "excluding_reduction": w.excluding_reduction.as_ref().map(|c| json!({
                "generators": polys_json(&ring, c.generators()),
                "reduction_number": c.reduction_number(),
            })),
        })
    });
    json!({
        "nzd_degree_one": report.nzd_degree_one,
        "nzd_witness": report.nzd_witness.as_ref().map(|p| ring.ambient().render(p)),
        "core": core_report_json(&report.core),
        "graded_core": core_report_json(&report.graded_core),
        "equal": report.equal,
        "theorem_violation": report.theorem_violation,
        "witness": witness,
        "verdict": verdict_json(&report.verdict, &ring),
        "notes": report.notes,
    })
}

pub fn charscan_json(report: &CharScanReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let outcome = match &row.outcome {
                ScanOutcome::Computed {
                    basis,
                    dims,
                    stabilized,
                    max_reduction_number,
                } => json!({
                    "computed": {
                        "basis": basis,
                        "dims": dims_json(dims),
                        "stabilized": stabilized,
                        "max_reduction_number": max_reduction_number,
                    }
                }),
                ScanOutcome::Rejected { reason } => json!({ "rejected": reason }),
            };
            json!({ "field": field_label(&row.field), "outcome": outcome })
        })
        .collect();
    json!({
        "ring": report.ring,
        "n": report.n,
        "rows": rows,
        "agreement": report.agreement,
        "notes": report.notes,
    })
}

/// Meta assembly shared by all commands.
pub struct MetaContext {
    pub command: String,
    pub field: FieldSpec,
    pub seed: u64,
    pub started: Instant,
    pub options: Value,
    pub stats: Option<Value>,
}

impl MetaContext {
    pub fn apply(self, report: &mut Report) {
        report.meta.insert("tool".into(), json!("corelab"));
        report
            .meta
            .insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        report.meta.insert("command".into(), json!(self.command));
        report
            .meta
            .insert("field".into(), json!(field_label(&self.field)));
        report.meta.insert("seed".into(), json!(self.seed));
        report.meta.insert(
            "elapsed_ms".into(),
            json!(self.started.elapsed().as_millis() as u64),
        );
        report.meta.insert("options".into(), self.options);
        if let Some(stats) = self.stats {
            report.meta.insert("stats".into(), stats);
        }
    }
}

pub fn ring_json(ring: &Arc<PresentedRing>) -> Value {
    json!({
        "presentation": ring.describe(),
        "weights": ring.weights(),
    })
}
