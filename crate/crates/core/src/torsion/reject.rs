//! Reject of the small modules and Generalov's radical.

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::hom::hom_space;
use crate::module::FinModule;
use crate::submodule::{quotient_module, submodule_lattice, submodule_module, Submodule};

use super::small::is_small_module_by_injectives;

/// Smallest `K ⊆ M` with `M/K` a small module.
///
/// Such `K` are closed under intersection (`M/(K ∩ L)` embeds in
/// `M/K ⊕ M/L`), so the first one in size order is the minimum.
pub fn reject_small(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    let lat = submodule_lattice(m, ctx.limits().module_cutoff)?;
    for k in lat.members() {
        let (q, _) = quotient_module(m, k)?;
        if is_small_module_by_injectives(ctx, &q)? {
            return Ok(k.clone());
        }
    }
    Err(Error::Internal("M/M is not small".into()))
}

/// `reject_small` as the common kernel of all maps `M -> Rad E_i`.
///
/// Each `Rad E_i` is a small module, and every small module embeds in a sum
/// of them, so these maps detect all small quotients.
pub fn reject_small_by_homs(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    m.check_enumerable()?;
    let mut acc = Submodule::full(m);
    for e in ctx.injectives()? {
        let (rad, _) = submodule_module(&e.module, &e.radical)?;
        for f in hom_space(m, &rad)?.basis_morphisms() {
            acc = acc.meet(&f.kernel_image().0);
        }
    }
    Ok(acc)
}

/// `σ¹ = reject_small(M)`, `σ^{n+1} = reject_small(σ^n)` until it stops.
pub fn generalov_rho(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    let mut cur = Submodule::full(m);
    for _ in 0..=m.len() {
        let (s, incl) = submodule_module(m, &cur)?;
        let next = incl.image_of(&reject_small(ctx, &s)?);
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::Internal("Generalov iteration did not stabilise".into()))
}

/// No nonzero quotient of `M` is a small module.
pub fn is_perp_torsion(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    Ok(reject_small(ctx, m)?.is_full())
}
