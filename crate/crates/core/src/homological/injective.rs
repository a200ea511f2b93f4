//! Injectivity tests and injective hulls.

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::hom::hom_count;
use crate::module::FinModule;
use crate::morphism::ModuleMorphism;
use crate::submodule::j_socle;

use super::dual::{character_dual, dual_morphism};
use super::projective::{is_projective, projective_cover};

/// An injective module containing `M` essentially.
#[derive(Clone, Debug)]
pub struct HullResult {
    pub hull: FinModule,
    pub embedding: ModuleMorphism,
}

/// Baer's criterion. Restriction `Hom(R, E) = E -> Hom(I, E)` has kernel
/// `ann_E(I) ≅ Hom(R/I, E)`, so every map out of `I` extends exactly when
/// `|Hom(I, E)| · |Hom(R/I, E)| = |E|`.
pub fn is_injective_baer(ctx: &RingContext, e: &FinModule) -> Result<bool> {
    ctx.check_module(e)?;
    for (i, q) in ctx.ideal_modules()? {
        if hom_count(i, e)? * hom_count(q, e)? != e.size() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E` is injective iff its character dual is projective over the opposite ring.
pub fn is_injective_dual(ctx: &RingContext, e: &FinModule) -> Result<bool> {
    ctx.check_module(e)?;
    let d = character_dual(e, ctx.op_ring());
    is_projective(ctx.op(), &d)
}

pub fn is_injective(ctx: &RingContext, e: &FinModule) -> Result<bool> {
    is_injective_baer(ctx, e)
}

/// `E(M) = D(P(D(M)))`, with the dual of the cover map as embedding.
///
/// Checks that the embedding is injective, that its image contains the socle
/// of the hull (so is essential), and that the hull passes Baer's test.
pub fn injective_hull(ctx: &RingContext, m: &FinModule) -> Result<HullResult> {
    ctx.check_module(m)?;
    let d = character_dual(m, ctx.op_ring());
    let cov = projective_cover(ctx.op(), &d)?;
    let hull = character_dual(&cov.cover, ctx.ring());
    // D(D(M)) is M on the nose
    let embedding = dual_morphism(&cov.surjection, m, &hull);
    hull.check_enumerable()?;
    let image = embedding.image();
    if image.size() as u128 != m.size() {
        return Err(Error::Internal("hull embedding is not injective".into()));
    }
    if !j_socle(&hull).is_subset(&image) {
        return Err(Error::Internal("hull embedding is not essential".into()));
    }
    if !is_injective_baer(ctx, &hull)? {
        return Err(Error::Internal("hull fails Baer's criterion".into()));
    }
    Ok(HullResult { hull, embedding })
}
