//! Text and JSON rendering of analyses and suite runs.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use ringlab_core::torsion::SplitWitness;

use crate::analysis::RingAnalysis;
use crate::error::CliError;
use crate::suites::{Status, SuiteResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Input(format!("unknown format {s:?}; expected text or json"))),
        }
    }
}

/// Witness records of one analysis: the splitting witness and any failed
/// theorem check.
fn analysis_witnesses(a: &RingAnalysis) -> Vec<Value> {
    let v = &a.report.verdict;
    let mut out = Vec::new();
    match &v.witness {
        SplitWitness::InjectiveNotProjective { simple, size, injective, projective, .. } => out.push(json!({
            "kind": "injective_not_projective",
            "ring": a.entry.name,
            "module": a.witness_label,
            "simple": simple,
            "size": size,
            "injective": injective,
            "projective": projective,
        })),
        SplitWitness::Decomposition(d) => out.push(json!({
            "kind": "decomposition",
            "ring": a.entry.name,
            "idempotent": d.idempotent,
            "t_size": d.t_size,
            "s_size": d.s_size,
            "t_almost_small": d.t_almost_small,
            "s_semisimple": d.s_semisimple,
        })),
        SplitWitness::Missing => out.push(json!({"kind": "missing", "ring": a.entry.name})),
    }
    for c in &v.contradictions {
        out.push(json!({"kind": "contradiction", "ring": a.entry.name, "detail": c}));
    }
    for t in a.report.theorem_results.iter().filter(|t| !t.passed) {
        out.push(json!({"kind": "theorem_failure", "ring": a.entry.name, "theorem": t.id, "detail": t.detail}));
    }
    out
}

/// Deterministic part of one analysis.
pub fn analysis_value(a: &RingAnalysis) -> Value {
    let r = &a.report;
    let mut classifiers = serde_json::to_value(&r.classifiers).expect("plain data");
    let extra = classifiers.as_object_mut().expect("object");
    extra.insert("socle_inclusion_lr".into(), json!(r.socle_inclusion_lr));
    extra.insert("socle_inclusion_rl".into(), json!(r.socle_inclusion_rl));
    extra.insert("teply_condition".into(), json!(r.teply_condition));
    extra.insert("regular_elements_are_units".into(), json!(r.regular_elements_are_units));
    let mut verdict = serde_json::to_value(&r.verdict).expect("plain data");
    let vo = verdict.as_object_mut().expect("object");
    vo.insert("symbol".into(), json!(r.verdict.kind.symbol()));
    vo.insert("scope".into(), json!("corpus-extensional"));
    vo.insert("witness_module".into(), json!(a.witness_label));
    json!({
        "ring": a.entry.name,
        "size": r.size,
        "corpus_modules": a.corpus.len(),
        "classifiers": classifiers,
        "verdict": verdict,
        "theorems": r.theorem_results,
        "witnesses": analysis_witnesses(a),
    })
}

pub fn analysis_json(a: &RingAnalysis) -> String {
    let mut v = analysis_value(a);
    v.as_object_mut().expect("object").insert("timing".into(), json!({ "seconds": a.seconds }));
    serde_json::to_string_pretty(&v).expect("plain data") + "\n"
}

fn flags(v: &Value) -> String {
    v.as_object()
        .map(|o| o.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

pub fn analysis_text(a: &RingAnalysis) -> String {
    let r = &a.report;
    let v = &r.verdict;
    let name = &a.entry.name;
    let value = analysis_value(a);
    let mut s = String::new();
    writeln!(s, "ring {name} (order {}, {} corpus modules)", r.size, a.corpus.len()).unwrap();
    writeln!(s, "classifiers: {}", flags(&value["classifiers"])).unwrap();
    writeln!(
        s,
        "verdict: {} splits={} cohereditary={} stable={} goldie_leq_cg={} (corpus-extensional)",
        v.kind.symbol(),
        v.splits,
        v.cohereditary,
        v.stable,
        v.goldie_leq_cg
    )
    .unwrap();
    writeln!(
        s,
        "criteria: injective simples projective={} injective simples embed in R={}",
        v.injective_simples_projective, v.injective_simples_embed
    )
    .unwrap();
    for t in &r.theorem_results {
        writeln!(s, "{name} {} {} {}", t.id, if t.passed { "PASS" } else { "FAIL" }, t.detail).unwrap();
    }
    for w in analysis_witnesses(a) {
        let mut w = w;
        let o = w.as_object_mut().expect("object");
        let kind = o.remove("kind").and_then(|k| k.as_str().map(String::from)).unwrap_or_default();
        o.remove("ring");
        writeln!(s, "witness {kind}:").unwrap();
        for (k, v) in o.iter() {
            let shown = match v {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            writeln!(s, "  {k}: {shown}").unwrap();
        }
    }
    writeln!(s, "time: {:.3}s", a.seconds).unwrap();
    s
}

pub fn render_analysis(a: &RingAnalysis, format: Format) -> String {
    match format {
        Format::Text => analysis_text(a),
        Format::Json => analysis_json(a),
    }
}

pub fn suite_value(res: &SuiteResult) -> Value {
    let rings: Vec<Value> = res
        .analyses
        .iter()
        .map(|a| match a {
            Ok(a) => analysis_value(a),
            Err((name, e)) => json!({ "ring": name, "skipped": e.is_cutoff(), "error": e.to_string() }),
        })
        .collect();
    json!({
        "rings": rings,
        "checks": res.checks,
        "aggregates": res.aggregates,
    })
}

pub fn suite_json(res: &SuiteResult) -> String {
    let mut v = suite_value(res);
    let timing: serde_json::Map<String, Value> = res
        .analyses
        .iter()
        .filter_map(|a| a.as_ref().ok())
        .map(|a| (a.entry.name.clone(), json!(a.seconds)))
        .collect();
    v.as_object_mut().expect("object").insert("timing".into(), Value::Object(timing));
    serde_json::to_string_pretty(&v).expect("plain data") + "\n"
}

pub fn suite_text(res: &SuiteResult) -> String {
    let mut s = String::new();
    for c in &res.checks {
        writeln!(s, "{} {} {} {}", c.suite, c.ring, c.status.label(), c.detail).unwrap();
        for w in &c.witnesses {
            writeln!(s, "  witness ring={} module={}", w.ring, w.module).unwrap();
            for (k, v) in &w.values {
                writeln!(s, "    {k}: {v}").unwrap();
            }
        }
    }
    writeln!(s).unwrap();
    for a in &res.aggregates {
        writeln!(
            s,
            "{}: {} rings checked, {} passed, {} failed, {} skipped, {} not applicable",
            a.suite, a.rings_checked, a.passes, a.failures, a.skipped, a.not_applicable
        )
        .unwrap();
    }
    let fails = res.checks.iter().filter(|c| c.status == Status::Fail).count();
    writeln!(s, "{}", if fails == 0 { "all checks passed".to_string() } else { format!("{fails} checks failed") })
        .unwrap();
    s
}

pub fn render_suite(res: &SuiteResult, format: Format) -> String {
    match format {
        Format::Text => suite_text(res),
        Format::Json => suite_json(res),
    }
}

/// Writes to `out`, or to stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.display().to_string(), e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
