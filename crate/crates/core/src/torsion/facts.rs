//! The torsion-theoretic data of one module, computed once.

use crate::context::RingContext;
use crate::error::Result;
use crate::homological::{is_injective, is_projective};
use crate::module::FinModule;
use crate::submodule::Submodule;

use super::cg::cg_radical;
use super::singular::{goldie_radical, singular_submodule};
use super::small::{is_small_module_by_injectives, zstar};

#[derive(Clone, Debug)]
pub struct ModuleFacts {
    pub zstar: Submodule,
    pub cg_radical: Submodule,
    pub singular: Submodule,
    pub goldie: Submodule,
    pub small: bool,
    pub projective: bool,
    pub injective: bool,
}

impl ModuleFacts {
    pub fn cg_torsion(&self) -> bool {
        self.cg_radical.is_full()
    }

    pub fn cg_torsionfree(&self) -> bool {
        self.zstar.is_zero()
    }

    pub fn singular_module(&self) -> bool {
        self.singular.is_full()
    }
}

pub fn module_facts(ctx: &RingContext, m: &FinModule) -> Result<ModuleFacts> {
    Ok(ModuleFacts {
        zstar: zstar(ctx, m)?,
        cg_radical: cg_radical(ctx, m)?,
        singular: singular_submodule(ctx, m)?,
        goldie: goldie_radical(ctx, m)?,
        small: is_small_module_by_injectives(ctx, m)?,
        projective: is_projective(ctx, m)?,
        injective: is_injective(ctx, m)?,
    })
}
