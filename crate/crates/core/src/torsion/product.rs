//! Componentwise behaviour over a product ring `R1 × R2`.

use std::sync::Arc;

use crate::constructors::product;
use crate::context::RingContext;
use crate::corpus::CorpusModule;
use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::morphism::ModuleMorphism;
use crate::submodule::{join, submodule_module, Submodule};

use super::cg::cg_radical;

/// `e·M` as a module over the component whose basis occupies `range` of the
/// product basis, with the inclusion of `e·M` into `M` as `R`-modules. Both
/// share coordinates, so submodules transfer by index.
pub fn component(
    m: &FinModule,
    component_ring: &Arc<crate::ring::FiniteRing>,
    range: std::ops::Range<usize>,
    idempotent: &[u64],
) -> Result<(FinModule, ModuleMorphism)> {
    let part = Submodule::from_indices(m.len(), (0..m.len()).map(|x| m.index_of(&m.ring_act(idempotent, &m.coords_of(x)))));
    let (s, incl) = submodule_module(m, &part)?;
    let action = s.action()[range].to_vec();
    let restricted = FinModule::new(component_ring.clone(), s.orders().to_vec(), action)?;
    Ok((restricted, incl))
}

/// Per-module outcome of the componentwise comparison.
#[derive(Clone, Debug)]
pub struct ProductCheck {
    pub label: String,
    pub whole: Submodule,
    pub from_components: Submodule,
}

impl ProductCheck {
    pub fn agrees(&self) -> bool {
        self.whole == self.from_components
    }
}

/// Compares `cg_radical(M)` with `cg_radical(e₁M) ⊕ cg_radical(e₂M)` for every
/// corpus module over `R = R1 × R2`.
pub fn product_decomposition_check(
    ctx: &RingContext,
    c1: &RingContext,
    c2: &RingContext,
    corpus: &[CorpusModule],
) -> Result<Vec<ProductCheck>> {
    let r1 = c1.ring();
    let r2 = c2.ring();
    let expected = product(r1, r2)?;
    let ring = ctx.ring();
    if expected.orders() != ring.orders() || expected.mult_table() != ring.mult_table() {
        return Err(Error::DifferentBaseRings);
    }
    let k1 = r1.dim();
    let k = ring.dim();
    let mut e1 = ring.zero();
    e1[..k1].copy_from_slice(&r1.one());
    let mut e2 = ring.zero();
    e2[k1..].copy_from_slice(&r2.one());
    let mut out = Vec::new();
    for cm in corpus {
        let m = &cm.module;
        let whole = cg_radical(ctx, m)?;
        let (m1, i1) = component(m, r1, 0..k1, &e1)?;
        let (m2, i2) = component(m, r2, k1..k, &e2)?;
        let t1 = i1.image_of(&cg_radical(c1, &m1)?);
        let t2 = i2.image_of(&cg_radical(c2, &m2)?);
        out.push(ProductCheck { label: cm.label.clone(), whole, from_components: join(m, &t1, &t2) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Limits;
    use crate::corpus::corpus_modules;
    use crate::spec::build_ring;

    fn ctx(s: &str) -> RingContext {
        RingContext::new(build_ring(s).unwrap(), Limits::default())
    }

    #[test]
    fn gf2_times_z4() {
        let c = ctx("GF(2) x Z/4");
        let (c1, c2) = (ctx("GF(2)"), ctx("Z/4"));
        let corpus = corpus_modules(&c).unwrap();
        let checks = product_decomposition_check(&c, &c1, &c2, &corpus).unwrap();
        assert!(checks.iter().all(ProductCheck::agrees));
        let reg = checks.iter().find(|p| p.label == "R").unwrap();
        assert_eq!(reg.whole.size(), 4);
    }

    #[test]
    fn z2_times_z3() {
        let c = ctx("Z/2 x Z/3");
        let corpus = corpus_modules(&c).unwrap();
        let checks = product_decomposition_check(&c, &ctx("Z/2"), &ctx("Z/3"), &corpus).unwrap();
        assert!(checks.iter().all(|p| p.agrees() && p.whole.is_zero()));
    }
}
