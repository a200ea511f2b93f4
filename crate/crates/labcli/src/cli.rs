//! Command-line front end.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use ringlab_core::homological::{injective_hull, is_injective, is_injective_dual, is_projective};
use ringlab_core::torsion::{cg_radical, is_small_module, singular_submodule, zstar};
use ringlab_core::{Limits, RingContext};

use crate::analysis::{analyze, analyze_entry};
use crate::corpus::{default_corpus, entry_from_spec, load_corpus, Corpus};
use crate::error::CliError;
use crate::modspec::{build_module, identify, parse_module_spec};
use crate::predicate::{lookup, parse_predicate};
use crate::report::{emit, render_analysis, render_suite, Format};
use crate::suites::{parse_suites, run_suite};

pub const MODULE_CUTOFF_ENV: &str = "RINGLAB_MODULE_CUTOFF";
pub const HOM_CUTOFF_ENV: &str = "RINGLAB_HOM_CUTOFF";

#[derive(Debug, Parser)]
#[command(name = "ringlab", version, about = "Torsion theory of finite rings, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// resource limits, e.g. `module=4096,hom=65536`
    #[arg(long)]
    pub limits: Option<String>,
    /// text or json
    #[arg(long, default_value = "text")]
    pub format: String,
    /// write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one ring and decide whether its torsion theory splits.
    Analyze {
        spec: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run theorem suites over a corpus.
    Check {
        /// comma-separated suite ids, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        /// `default` or a corpus file
        #[arg(long, default_value = "default")]
        corpus: String,
        #[command(flatten)]
        common: Common,
    },
    /// Injective hull of a module and its torsion data.
    Hull {
        ring: String,
        #[arg(long)]
        module: String,
        #[command(flatten)]
        common: Common,
    },
    /// List corpus rings satisfying a predicate over classifier names.
    Scan {
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value = "default")]
        corpus: String,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_cutoff(key: &str, v: &str) -> Result<u128, CliError> {
    v.trim().parse().map_err(|_| CliError::Input(format!("{key}: expected a positive integer, got {v:?}")))
}

/// Defaults, then the environment, then `--limits`.
pub fn resolve_limits(flag: Option<&str>, env: impl Fn(&str) -> Option<String>) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Some(v) = env(MODULE_CUTOFF_ENV) {
        limits.module_cutoff = parse_cutoff(MODULE_CUTOFF_ENV, &v)?;
    }
    if let Some(v) = env(HOM_CUTOFF_ENV) {
        limits.hom_cutoff = parse_cutoff(HOM_CUTOFF_ENV, &v)?;
    }
    if let Some(flag) = flag {
        for part in flag.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("--limits: expected key=value, got {part:?}")))?;
            match k.trim() {
                "module" => limits.module_cutoff = parse_cutoff("module", v)?,
                "hom" => limits.hom_cutoff = parse_cutoff("hom", v)?,
                other => return Err(CliError::Input(format!("--limits: unknown key {other:?}; expected module or hom"))),
            }
        }
    }
    Ok(limits)
}

fn common_setup(c: &Common) -> Result<(Limits, Format), CliError> {
    let limits = resolve_limits(c.limits.as_deref(), |k| std::env::var(k).ok())?;
    Ok((limits, c.format.parse()?))
}

fn get_corpus(which: &str, limits: Limits) -> Result<Corpus, CliError> {
    if which == "default" {
        Ok(default_corpus(limits))
    } else {
        load_corpus(std::path::Path::new(which), limits)
    }
}

/// Exit status for an error: 3 for cutoffs, 1 for failed internal checks,
/// 2 for everything caused by the input.
pub fn error_code(e: &CliError) -> i32 {
    use ringlab_core::Error as E;
    if e.is_cutoff() {
        3
    } else if matches!(e, CliError::Core(E::Internal(_)) | CliError::Core(E::SemilocalHypothesisViolated)) {
        1
    } else {
        2
    }
}

fn run_analyze(spec: &str, common: &Common) -> Result<i32, CliError> {
    let (limits, format) = common_setup(common)?;
    let a = analyze(spec, limits)?;
    emit(&render_analysis(&a, format), common.out.as_deref())?;
    let ok = a.report.theorem_results.iter().all(|t| t.passed) && a.report.verdict.contradictions.is_empty();
    Ok(if ok { 0 } else { 1 })
}

fn run_check(suite: &str, corpus: &str, common: &Common) -> Result<i32, CliError> {
    let (limits, format) = common_setup(common)?;
    let ids = parse_suites(suite)?;
    let corpus = get_corpus(corpus, limits)?;
    let res = run_suite(&corpus, &ids);
    emit(&render_suite(&res, format), common.out.as_deref())?;
    Ok(res.exit_code())
}

fn run_hull(ring: &str, module: &str, common: &Common) -> Result<i32, CliError> {
    let (limits, format) = common_setup(common)?;
    let entry = entry_from_spec(ring)?;
    let expr = parse_module_spec(module)?;
    let ctx = RingContext::new(entry.ring.clone(), limits);
    let m = build_module(&ctx, &expr)?;
    let h = injective_hull(&ctx, &m)?;
    let baer = is_injective(&ctx, &m)?;
    let dual = is_injective_dual(&ctx, &m)?;
    let v = json!({
        "ring": entry.name,
        "module": expr.to_string(),
        "size": m.size(),
        "hull_size": h.hull.size(),
        "hull": identify(&ctx, &h.hull)?,
        "injective": baer,
        "injective_dual": dual,
        "projective": is_projective(&ctx, &m)?,
        "hull_projective": is_projective(&ctx, &h.hull)?,
        "small": is_small_module(&ctx, &m)?,
        "zstar_size": zstar(&ctx, &m)?.size(),
        "cg_radical_size": cg_radical(&ctx, &m)?.size(),
        "singular_size": singular_submodule(&ctx, &m)?.size(),
    });
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&v)? + "\n",
        Format::Text => {
            let mut s = String::new();
            for (k, val) in v.as_object().expect("object") {
                let shown = match val {
                    Value::String(t) => t.clone(),
                    Value::Null => "-".into(),
                    other => other.to_string(),
                };
                s.push_str(&format!("{k}: {shown}\n"));
            }
            s
        }
    };
    emit(&text, common.out.as_deref())?;
    Ok(if baer == dual { 0 } else { 1 })
}

fn run_scan(predicate: &str, corpus: &str, common: &Common) -> Result<i32, CliError> {
    let (limits, format) = common_setup(common)?;
    let pred = parse_predicate(predicate)?;
    let corpus = get_corpus(corpus, limits)?;
    let results: Vec<_> = corpus.rings.par_iter().map(|e| (e.name.clone(), analyze_entry(e, limits))).collect();
    let mut hits = Vec::new();
    let mut skipped = Vec::new();
    let mut failed = Vec::new();
    for (name, r) in &results {
        match r {
            Ok(a) => {
                if pred.eval(&a.report) {
                    let values: serde_json::Map<String, Value> = pred
                        .names()
                        .into_iter()
                        .map(|n| (n.to_string(), json!(lookup(&a.report, n))))
                        .collect();
                    hits.push(json!({ "ring": name, "values": values }));
                }
            }
            Err(e) if e.is_cutoff() => skipped.push(json!({ "ring": name, "reason": e.to_string() })),
            Err(e) => failed.push(json!({ "ring": name, "error": e.to_string() })),
        }
    }
    let text = match format {
        Format::Json => {
            let v = json!({
                "predicate": predicate,
                "rings_scanned": results.len(),
                "hits": hits,
                "skipped": skipped,
                "errors": failed,
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for h in &hits {
                s.push_str(&format!("hit {} {}\n", h["ring"].as_str().unwrap_or_default(), h["values"]));
            }
            for k in &skipped {
                s.push_str(&format!("skipped {} {}\n", k["ring"].as_str().unwrap_or_default(), k["reason"]));
            }
            for k in &failed {
                s.push_str(&format!("error {} {}\n", k["ring"].as_str().unwrap_or_default(), k["error"]));
            }
            s.push_str(&format!("{} hits for {predicate:?} over {} rings\n", hits.len(), results.len()));
            s
        }
    };
    emit(&text, common.out.as_deref())?;
    Ok(if !failed.is_empty() {
        1
    } else if !skipped.is_empty() {
        3
    } else {
        0
    })
}

pub fn execute(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Analyze { spec, common } => run_analyze(spec, common),
        Command::Check { suite, corpus, common } => run_check(suite, corpus, common),
        Command::Hull { ring, module, common } => run_hull(ring, module, common),
        Command::Scan { predicate, corpus, common } => run_scan(predicate, corpus, common),
    }
}

/// Parses arguments, runs, reports errors on stderr and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}
