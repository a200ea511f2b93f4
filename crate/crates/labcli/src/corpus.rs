//! Ring corpora: the built-in list or a file of ring specs / raw-ring JSON.

use std::path::Path;

use ringlab_core::spec::{expr_name, parse, RingExpr};
use ringlab_core::{FiniteRing, Limits, RawRing};

use crate::error::CliError;

pub const DEFAULT_SPECS: &[&str] = &[
    "Z/2",
    "Z/3",
    "Z/4",
    "Z/5",
    "Z/6",
    "Z/8",
    "Z/9",
    "Z/12",
    "Z/16",
    "GF(2)",
    "GF(3)",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "GF(2)[x]/(x^2)",
    "GF(2)[x]/(x^3)",
    "GF(3)[x]/(x^2)",
    "Mat(2,GF(2))",
    "Tri(2,GF(2))",
    "Tri(2,GF(3))",
    "op(Tri(2,GF(2)))",
    "GF(2) x Z/4",
    "Z/4 x Z/9",
    "Tri(2,GF(2)) x GF(2)",
];

#[derive(Clone, Debug)]
pub struct RingEntry {
    pub name: String,
    pub ring: FiniteRing,
    /// the two factors when the ring was given as a product
    pub factors: Option<(FiniteRing, FiniteRing)>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub rings: Vec<RingEntry>,
    pub limits: Limits,
}

fn build_expr(e: &RingExpr) -> Result<FiniteRing, CliError> {
    Ok(e.build()?.with_name(expr_name(e)))
}

pub fn entry_from_spec(spec: &str) -> Result<RingEntry, CliError> {
    let e = parse(spec)?;
    let ring = build_expr(&e)?;
    let factors = match e.factors() {
        Some((a, b)) => Some((build_expr(a)?, build_expr(b)?)),
        None => None,
    };
    Ok(RingEntry { name: ring.name().to_string(), ring, factors })
}

pub fn entry_from_raw(raw: &RawRing) -> Result<RingEntry, CliError> {
    let ring = FiniteRing::from_raw(raw)?;
    Ok(RingEntry { name: ring.name().to_string(), ring, factors: None })
}

pub fn default_corpus(limits: Limits) -> Corpus {
    let rings = DEFAULT_SPECS.iter().map(|s| entry_from_spec(s).expect("built-in spec")).collect();
    Corpus { rings, limits }
}

/// Reads a corpus file. A file whose first non-blank character is `[` or `{`
/// is JSON (one raw-ring document or an array of them); otherwise each
/// non-blank line not starting with `#` is a ring spec or a one-line raw-ring
/// document.
pub fn load_corpus(path: &Path, limits: Limits) -> Result<Corpus, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
    let trimmed = text.trim_start();
    let mut rings = Vec::new();
    if trimmed.starts_with('[') {
        let raws: Vec<RawRing> = serde_json::from_str(trimmed)?;
        for r in &raws {
            rings.push(entry_from_raw(r)?);
        }
    } else if trimmed.starts_with('{') && serde_json::from_str::<RawRing>(trimmed).is_ok() {
        rings.push(entry_from_raw(&serde_json::from_str(trimmed)?)?);
    } else {
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line.starts_with('{') {
                rings.push(entry_from_raw(&serde_json::from_str(line)?)?);
            } else {
                rings.push(entry_from_spec(line)?);
            }
        }
    }
    let mut names: Vec<&str> = rings.iter().map(|r| r.name.as_str()).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(CliError::Input(format!("duplicate ring name {}", w[0])));
    }
    Ok(Corpus { rings, limits })
}
