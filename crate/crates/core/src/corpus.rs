//! The module corpus of a ring: subquotients of `R ⊕ R` up to isomorphism,
//! plus the simples, their hulls and their projective covers.

use std::collections::HashMap;

use crate::context::RingContext;
use crate::error::Result;
use crate::hom::{additive_type, are_isomorphic};
use crate::homological::{injective_hull, projective_cover};
use crate::module::FinModule;
use crate::morphism::direct_sum;
use crate::submodule::{j_radical, j_socle, quotient_module, submodule_lattice, submodule_module};

/// A corpus member with a short description.
#[derive(Clone, Debug)]
pub struct CorpusModule {
    /// a module spec (`R`, `R/rad`, `simple:0`, `hull(simple:1)`, ...) when one
    /// matches, otherwise `sq:<n>`
    pub label: String,
    pub module: FinModule,
    /// isomorphic to a subquotient of `R ⊕ R`
    pub subquotient: bool,
}

type Signature = (u128, Vec<u64>, usize, usize);

fn signature(m: &FinModule) -> Signature {
    (m.size(), additive_type(m), j_radical(m).size(), j_socle(m).size())
}

#[derive(Default)]
struct Classes {
    members: Vec<(FinModule, Option<String>, bool)>,
    by_sig: HashMap<Signature, Vec<usize>>,
}

impl Classes {
    /// Index of the class of `m`, and whether it is new.
    fn insert(&mut self, m: FinModule) -> Result<(usize, bool)> {
        let sig = signature(&m);
        if let Some(ids) = self.by_sig.get(&sig) {
            for &i in ids {
                if are_isomorphic(&self.members[i].0, &m)? {
                    return Ok((i, false));
                }
            }
        }
        let id = self.members.len();
        self.members.push((m, None, false));
        self.by_sig.entry(sig).or_default().push(id);
        Ok((id, true))
    }

    fn name(&mut self, m: FinModule, label: String) -> Result<()> {
        let (id, _) = self.insert(m)?;
        if self.members[id].1.is_none() {
            self.members[id].1 = Some(label);
        }
        Ok(())
    }
}

/// Builds the corpus. Modules above the module cutoff are left out.
pub fn corpus_modules(ctx: &RingContext) -> Result<Vec<CorpusModule>> {
    let cutoff = ctx.limits().module_cutoff;
    let reg = ctx.regular();
    let rr = direct_sum(reg, reg)?.module;
    let mut classes = Classes::default();

    let start = [&rr, reg].into_iter().find(|m| m.size() <= cutoff).cloned();
    if let Some(start) = start {
        let first = classes.insert(start)?.0;
        classes.members[first].2 = true;
        let mut queue = vec![first];
        while let Some(id) = queue.pop() {
            let x = classes.members[id].0.clone();
            let lat = submodule_lattice(&x, cutoff)?;
            let mut next = Vec::new();
            for &k in &lat.maximal() {
                next.push(submodule_module(&x, lat.get(k))?.0);
            }
            for &n in &lat.minimal() {
                next.push(quotient_module(&x, lat.get(n))?.0);
            }
            for y in next {
                if y.size() > 1 {
                    let (yid, new) = classes.insert(y)?;
                    classes.members[yid].2 = true;
                    if new {
                        queue.push(yid);
                    }
                }
            }
        }
    }

    let mut named: Vec<(String, FinModule)> = vec![("R".into(), reg.clone()), ("R+R".into(), rr.clone())];
    named.push(("R/rad".into(), quotient_module(reg, &j_radical(reg))?.0));
    named.push(("R/soc".into(), quotient_module(reg, &j_socle(reg))?.0));
    for (i, s) in ctx.simples()?.iter().enumerate() {
        named.push((format!("simple:{i}"), s.module.clone()));
        named.push((format!("hull(simple:{i})"), injective_hull(ctx, &s.module)?.hull));
        named.push((format!("cover(simple:{i})"), projective_cover(ctx, &s.module)?.cover));
    }
    for (label, m) in named {
        if m.size() > 1 && m.size() <= cutoff {
            classes.name(m, label)?;
        }
    }

    let mut out = classes.members;
    out.sort_by(|a, b| {
        a.0.size()
            .cmp(&b.0.size())
            .then_with(|| a.0.orders().cmp(b.0.orders()))
            .then_with(|| a.0.action().cmp(b.0.action()))
    });
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(i, (module, label, subquotient))| CorpusModule {
            label: label.unwrap_or_else(|| format!("sq:{i}")),
            module,
            subquotient,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Limits;
    use crate::spec::build_ring;

    #[test]
    fn z4_corpus() {
        let c = RingContext::new(build_ring("Z/4").unwrap(), Limits::default());
        let corpus = corpus_modules(&c).unwrap();
        // Z/2, Z/4, Z/2^2, Z/2+Z/4, Z/4^2
        let mut types: Vec<Vec<u64>> = corpus.iter().map(|m| additive_type(&m.module)).collect();
        types.sort();
        assert_eq!(types.len(), 5);
        assert!(corpus.iter().any(|m| m.label == "R"));
        assert!(corpus.iter().any(|m| m.label == "R/rad"));
    }

    #[test]
    fn field_corpus() {
        let c = RingContext::new(build_ring("GF(2)").unwrap(), Limits::default());
        assert_eq!(corpus_modules(&c).unwrap().len(), 2);
    }
}
