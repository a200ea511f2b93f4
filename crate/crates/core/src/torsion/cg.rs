//! Torsion radical of the theory generated by small modules.

use crate::bitset::BitSet;
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::submodule::{additive_generators, join, quotient_module, submodule_lattice, Submodule};

use super::small::{is_small_module, zstar};

/// Largest dual-Goldie torsion submodule: `T₀ = 0`, `T_{n+1}/T_n = Z*(M/T_n)`.
pub fn cg_radical(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    m.check_enumerable()?;
    let mut t = Submodule::zero(m);
    for _ in 0..=m.len() {
        let (q, pi) = quotient_module(m, &t)?;
        let z = zstar(ctx, &q)?;
        if z.is_zero() {
            return Ok(t);
        }
        t = pi.preimage(&z);
    }
    Err(Error::Internal("cg radical iteration did not stabilise".into()))
}

pub fn is_cg_torsion(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    Ok(cg_radical(ctx, m)?.is_full())
}

pub fn is_cg_torsionfree(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    Ok(zstar(ctx, m)?.is_zero())
}

/// Largest `T ⊆ M` all of whose nonzero subquotients `V/U` have `Z*(V/U) ≠ 0`.
///
/// `Z*(V/U) ≠ 0` iff `V/U` has a simple submodule that is a small module, and
/// the simple submodules of `V/U` are `A/U` for the covers `A` of `U` inside
/// `V`. So `T` qualifies iff every covering pair below `T` has a small simple
/// factor. Simple factors are identified by their annihilator ideal and
/// tested for smallness through their hulls.
pub fn cg_radical_oracle(ctx: &RingContext, m: &FinModule) -> Result<Submodule> {
    ctx.check_module(m)?;
    let lat = submodule_lattice(m, ctx.limits().module_cutoff)?;
    let ring = ctx.ring();
    let rn = ring.size();
    let elems = ring.elements();
    let mut classes: Vec<(BitSet, bool)> = Vec::new();
    for s in ctx.simples()? {
        let sm = &s.module;
        let ann = BitSet::from_indices(
            rn,
            (0..rn).filter(|&r| (0..sm.dim()).all(|u| sm.is_zero(&sm.ring_act(&elems[r], &sm.generator(u))))),
        );
        classes.push((ann, is_small_module(ctx, sm)?));
    }
    let table = m.ring_act_table();
    let n = m.len();
    // tops of covering pairs with a non-small factor
    let mut bad = vec![false; lat.len()];
    for u in 0..lat.len() {
        let su = lat.get(u);
        for &v in lat.upper_covers(u) {
            let gens = additive_generators(m, lat.get(v));
            let ann = BitSet::from_indices(
                rn,
                (0..rn).filter(|&r| gens.iter().all(|&x| su.contains(table[r * n + x] as usize))),
            );
            let small = classes
                .iter()
                .find(|(a, _)| *a == ann)
                .map(|(_, s)| *s)
                .ok_or_else(|| Error::Internal("simple factor matches no simple class".into()))?;
            if !small {
                bad[v] = true;
            }
        }
    }
    let bad_tops: Vec<&Submodule> = (0..lat.len()).filter(|&v| bad[v]).map(|v| lat.get(v)).collect();
    let mut top = Submodule::zero(m);
    let mut members = Vec::new();
    for t in lat.members() {
        if bad_tops.iter().all(|b| !b.is_subset(t)) {
            top = join(m, &top, t);
            members.push(t);
        }
    }
    if !members.contains(&&top) {
        return Err(Error::Internal("torsion members are not closed under sums".into()));
    }
    Ok(top)
}
