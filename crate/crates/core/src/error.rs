use thiserror::Error;

/// Errors raised by ring, module and radical computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    AssociativityViolation(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    UnitViolation(usize),
    #[error("multiplication of basis elements ({0}, {1}) is incompatible with the additive orders")]
    OrderIncompatibility(usize, usize),
    #[error("malformed ring table: {0}")]
    MalformedTable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),
    #[error("generators do not span a two-sided ideal: {0}")]
    NotTwoSidedIdeal(String),
    #[error("ring {0} is not commutative")]
    NotCommutative(String),
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("modules live over different base rings")]
    DifferentBaseRings,
    #[error("element set is not a submodule")]
    NotASubmodule,
    #[error("module of size {0} exceeds the size cutoff {1}")]
    SizeCutoffExceeded(u128, u128),
    #[error("enumeration of {0} homomorphisms exceeds the cutoff {1}")]
    EnumerationCutoffExceeded(u128, u128),
    #[error("no projective matches the top of the module: {0}")]
    TopDecompositionFailure(String),
    #[error("R/Z*(R) is not semisimple")]
    SemilocalHypothesisViolated,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
