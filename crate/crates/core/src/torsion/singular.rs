//! Singular submodules and the Goldie radical.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::hom::hom_space;
use crate::homological::is_essential;
use crate::module::FinModule;
use crate::submodule::{join, quotient_module, Submodule};

/// `Z(M) = {x : ann(x) ⊴ _R R}`.
pub fn singular_submodule(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    m.check_enumerable()?;
    let reg = ctx.regular();
    let mut cache: HashMap<BitSet, bool> = HashMap::new();
    let mut members = Vec::new();
    for x in 0..m.len() {
        let ann = ctx.annihilator(m, x);
        let ess = match cache.get(&ann) {
            Some(&v) => v,
            None => {
                let v = is_essential(reg, &Submodule::from_bits(ann.clone()));
                cache.insert(ann, v);
                v
            }
        };
        if ess {
            members.push(x);
        }
    }
    let z = Submodule::from_indices(m.len(), members);
    if !crate::submodule::is_submodule(m, z.bits()) {
        return Err(Error::Internal("Z(M) is not a submodule".into()));
    }
    Ok(z)
}

pub fn is_singular_module(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    Ok(singular_submodule(ctx, m)?.is_full())
}

/// Sum of the images of all maps from the given modules into `M`.
pub fn trace_submodule(sources: &[FinModule], m: &FinModule) -> Result<Submodule> {
    let mut acc = Submodule::zero(m);
    for s in sources {
        for f in hom_space(s, m)?.basis_morphisms() {
            acc = join(m, &acc, &f.image());
        }
    }
    Ok(acc)
}

/// `Z₂(M)`, the preimage of `Z(M/Z(M))`.
pub fn goldie_radical(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    let z = singular_submodule(ctx, m)?;
    let (q, pi) = quotient_module(m, &z)?;
    let z2 = pi.preimage(&singular_submodule(ctx, &q)?);
    let (q2, _) = quotient_module(m, &z2)?;
    if !singular_submodule(ctx, &q2)?.is_zero() {
        return Err(Error::Internal("Z(M/Z₂(M)) is nonzero".into()));
    }
    Ok(z2)
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
        let r = c.regular();
        let z = singular_submodule(&c, r).unwrap();
        assert_eq!(z.elements().collect::<Vec<_>>(), vec![0, 2]);
        assert!(goldie_radical(&c, r).unwrap().is_full());
        let s = FinModule::new(c.ring().clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        assert!(is_singular_module(&c, &s).unwrap());
        assert!(goldie_radical(&c, &s).unwrap().is_full());
    }

    #[test]
    fn fields_are_nonsingular() {
        let c = ctx("GF(4)");
        assert!(singular_submodule(&c, c.regular()).unwrap().is_zero());
        assert!(goldie_radical(&c, c.regular()).unwrap().is_zero());
    }

    #[test]
    fn trace_of_singular_simple() {
        let c = ctx("Z/4");
        let s = FinModule::new(c.ring().clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        let t = trace_submodule(&[s], c.regular()).unwrap();
        assert_eq!(t, singular_submodule(&c, c.regular()).unwrap());
    }
}
