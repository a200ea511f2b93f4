//! Exact finite rings and finite left modules, with the structural and
//! torsion-theoretic computations built on them.

pub mod bitset;
pub mod constructors;
pub mod context;
pub mod corpus;
pub mod error;
pub mod hom;
pub mod homological;
pub mod intmat;
pub mod modsnf;
pub mod module;
pub mod morphism;
pub mod presentation;
pub mod ring;
pub mod spec;
pub mod submodule;
pub mod torsion;

pub use context::{Limits, RingContext};
pub use error::{Error, Result};
pub use module::{regular_module, FinModule};
pub use morphism::ModuleMorphism;
pub use ring::{make_ring, Coords, FiniteRing, RawRing};
pub use spec::build_ring;
pub use submodule::{Submodule, SubmoduleSet};
