//! Direct-sum decomposition into indecomposables by complement search.

use std::cmp::Ordering;

use crate::error::Result;
use crate::module::FinModule;
use crate::morphism::ModuleMorphism;
use crate::submodule::{subquotient, submodule_lattice, Submodule};

/// Which complemented pair to split along first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    SmallestFirst,
    LargestFirst,
}

/// One indecomposable summand with its biproduct maps.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: FinModule,
    pub inclusion: ModuleMorphism,
    pub projection: ModuleMorphism,
}

/// Full decomposition, splitting along the smallest complemented summand.
pub fn decompose(m: &FinModule, cutoff: u128) -> Result<Vec<Summand>> {
    decompose_with(m, cutoff, SearchOrder::SmallestFirst)
}

pub fn decompose_with(m: &FinModule, cutoff: u128, order: SearchOrder) -> Result<Vec<Summand>> {
    let mut out = Vec::new();
    split_into(m, cutoff, order, &mut out)?;
    out.sort_by(|a, b| canonical_cmp(&a.module, &b.module));
    Ok(out)
}

fn canonical_cmp(a: &FinModule, b: &FinModule) -> Ordering {
    a.size()
        .cmp(&b.size())
        .then_with(|| a.orders().cmp(b.orders()))
        .then_with(|| a.action().cmp(b.action()))
}

/// A complemented pair `(A, B)` with `A` nonzero and proper, if any.
pub fn find_complement(m: &FinModule, cutoff: u128, order: SearchOrder) -> Result<Option<(Submodule, Submodule)>> {
    let lat = submodule_lattice(m, cutoff)?;
    let n = lat.len();
    let candidates: Vec<usize> = match order {
        SearchOrder::SmallestFirst => (1..n.saturating_sub(1)).collect(),
        SearchOrder::LargestFirst => (1..n.saturating_sub(1)).rev().collect(),
    };
    let total = m.len();
    for a in candidates {
        let sa = lat.get(a);
        if !total.is_multiple_of(sa.size()) {
            continue;
        }
        let want = total / sa.size();
        for b in 1..n - 1 {
            let sb = lat.get(b);
            if sb.size() == want && lat.meet(a, b) == 0 {
                return Ok(Some((sa.clone(), sb.clone())));
            }
        }
    }
    Ok(None)
}

fn split_into(m: &FinModule, cutoff: u128, order: SearchOrder, out: &mut Vec<Summand>) -> Result<()> {
    if m.size() == 1 {
        return Ok(());
    }
    let Some((a, b)) = find_complement(m, cutoff, order)? else {
        out.push(Summand {
            module: m.clone(),
            inclusion: ModuleMorphism::identity(m),
            projection: ModuleMorphism::identity(m),
        });
        return Ok(());
    };
    for (x, y) in [(&a, &b), (&b, &a)] {
        let (sub, pres) = subquotient(m, Some(x), &Submodule::zero(m));
        let incl = ModuleMorphism::new_unchecked(sub.clone(), m.clone(), pres.lifts.clone());
        // projection along y: m_u = a + b with a in x, b in y
        let images = (0..m.dim())
            .map(|u| {
                let g = m.generator(u);
                let a = x
                    .elements()
                    .map(|e| m.coords_of(e))
                    .find(|e| y.contains(m.index_of(&m.sub(&g, e))))
                    .expect("complement decomposes every element");
                pres.coords(&a)
            })
            .collect();
        let proj = ModuleMorphism::new_unchecked(m.clone(), sub.clone(), images);
        let mut inner = Vec::new();
        split_into(&sub, cutoff, order, &mut inner)?;
        for s in inner {
            out.push(Summand { module: s.module, inclusion: s.inclusion.then(&incl), projection: proj.then(&s.projection) });
        }
    }
    Ok(())
}
