//! One full analysis per ring: context, module corpus, per-module facts and
//! the classifier report.

use std::time::Instant;

use ringlab_core::corpus::{corpus_modules, CorpusModule};
use ringlab_core::torsion::{classify_ring_with, corpus_facts, ModuleFacts, RingReport, SplitWitness};
use ringlab_core::{Limits, RingContext};

use crate::corpus::{entry_from_spec, RingEntry};
use crate::error::CliError;
use crate::modspec::identify;

pub struct RingAnalysis {
    pub entry: RingEntry,
    pub ctx: RingContext,
    pub corpus: Vec<CorpusModule>,
    pub facts: Vec<ModuleFacts>,
    pub report: RingReport,
    /// module spec of the failing injective simple, when the theory does not split
    pub witness_label: Option<String>,
    pub seconds: f64,
}

pub fn analyze_entry(entry: &RingEntry, limits: Limits) -> Result<RingAnalysis, CliError> {
    let start = Instant::now();
    let ctx = RingContext::new(entry.ring.clone(), limits);
    let corpus = corpus_modules(&ctx)?;
    let facts = corpus_facts(&ctx, &corpus)?;
    let report = classify_ring_with(&ctx, &corpus, &facts)?;
    let witness_label = match &report.verdict.witness {
        SplitWitness::InjectiveNotProjective { module, simple, .. } => {
            Some(identify(&ctx, module)?.unwrap_or_else(|| format!("simple:{simple}")))
        }
        _ => None,
    };
    Ok(RingAnalysis {
        entry: entry.clone(),
        ctx,
        corpus,
        facts,
        report,
        witness_label,
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn analyze(spec: &str, limits: Limits) -> Result<RingAnalysis, CliError> {
    analyze_entry(&entry_from_spec(spec)?, limits)
}
