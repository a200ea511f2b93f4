//! Small modules and `Z*`.

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::hom::hom_space;
use crate::homological::injective_hull;
use crate::module::FinModule;
use crate::submodule::{extend, is_submodule, j_radical, Submodule};

/// `M` is small iff its image in `E(M)` lies in `Rad E(M)`.
pub fn is_small_module(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    ctx.check_module(m)?;
    let h = injective_hull(ctx, m)?;
    let rad = j_radical(&h.hull);
    Ok(h.embedding.image().is_subset(&rad))
}

/// Same predicate through the indecomposable injectives: every map from `M`
/// into some `E_i` must land in `Rad E_i`. A basis of each Hom group suffices.
pub fn is_small_module_by_injectives(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    ctx.check_module(m)?;
    for e in ctx.injectives()? {
        for f in hom_space(m, &e.module)?.basis_morphisms() {
            if !f.images().iter().all(|y| e.radical.contains(e.module.index_of(y))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Z*(M)` as the sum of the small cyclic submodules of `M`.
pub fn zstar(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    m.check_enumerable()?;
    let mut acc = Submodule::zero(m);
    for x in 1..m.len() {
        if acc.contains(x) {
            continue;
        }
        if ctx.cyclic_is_small(&ctx.annihilator(m, x))? {
            acc = extend(m, &acc, x);
        }
    }
    Ok(acc)
}

/// `Z*(M)` as the preimage of `Rad E(M)` under the hull embedding.
pub fn zstar_hull(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    m.check_enumerable()?;
    let h = injective_hull(ctx, m)?;
    let rad = j_radical(&h.hull);
    let z = h.embedding.preimage(&rad);
    debug_assert!(is_submodule(m, z.bits()));
    Ok(z)
}

/// Both forms of `Z*`, failing if they differ.
pub fn zstar_checked(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    let a = zstar(ctx, m)?;
    let b = zstar_hull(ctx, m)?;
    if a != b {
        return Err(Error::Internal(format!(
            "Z* mismatch: trace form has {} elements, hull form {}",
            a.size(),
            b.size()
        )));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Limits;
    use crate::spec::build_ring;

    fn ctx(s: &str) -> RingContext {
        RingContext::new(build_ring(s).unwrap(), Limits::default())
    }

    #[test]
    fn z4_examples() {
        let c = ctx("Z/4");
        let s = FinModule::new(c.ring().clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        assert!(is_small_module(&c, &s).unwrap());
        assert!(is_small_module_by_injectives(&c, &s).unwrap());
        assert!(!is_small_module(&c, c.regular()).unwrap());
        let z = zstar_checked(&c, c.regular()).unwrap();
        assert_eq!(z.elements().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn no_small_modules_over_fields() {
        let c = ctx("GF(3)");
        let m = FinModule::new(c.ring().clone(), vec![3, 3], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert!(zstar_checked(&c, &m).unwrap().is_zero());
        assert!(!is_small_module(&c, &m).unwrap());
    }

    #[test]
    fn tri_regular() {
        let c = ctx("Tri(2,GF(2))");
        let r = c.regular();
        let z = zstar_checked(&c, r).unwrap();
        assert_eq!(z, crate::submodule::j_socle(r));
    }
}
