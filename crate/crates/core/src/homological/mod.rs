//! Radicals, socles, projectivity and injectivity, covers, hulls, duality and
//! decompositions.

mod decompose;
mod dual;
mod injective;
mod projective;
mod radical;

pub use decompose::{decompose, decompose_with, find_complement, SearchOrder, Summand};
pub use dual::{character_dual, dual_morphism};
pub use injective::{injective_hull, is_injective, is_injective_baer, is_injective_dual, HullResult};
pub(crate) use projective::{compute_projectives, compute_simples};
pub use projective::{is_projective, projective_cover, simple_modules, top_multiplicities, CoverResult};
pub use radical::{
    is_essential, is_essential_by_socle, is_essential_direct, is_small_in, is_small_in_direct, j_radical, j_socle,
    lattice_radical, lattice_socle, radical, socle,
};
