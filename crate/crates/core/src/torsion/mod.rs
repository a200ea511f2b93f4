//! Singular and small modules, the Goldie radical, the small-module torsion
//! radical and reject, ring classifiers and the splitting decision.

mod cg;
mod classify;
mod facts;
mod product;
mod reject;
mod singular;
mod small;
mod splitting;

pub use cg::{cg_radical, cg_radical_oracle, is_cg_torsion, is_cg_torsionfree};
pub use classify::{
    classifiers, classify_ring, classify_ring_with, ideal_elements, teply_condition, Classifiers, RingReport,
    TheoremResult,
};
pub use facts::{module_facts, ModuleFacts};
pub use product::{component, product_decomposition_check, ProductCheck};
pub use reject::{generalov_rho, is_perp_torsion, reject_small, reject_small_by_homs};
pub use singular::{goldie_radical, is_singular_module, singular_submodule, trace_submodule};
pub use small::{is_small_module, is_small_module_by_injectives, zstar, zstar_checked, zstar_hull};
pub use splitting::{
    cg_splitting, corpus_facts, CorpusChecks, Decomposition, SplitWitness, TorsionKind, TorsionVerdict,
};
