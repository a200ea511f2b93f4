//! Whether the small-module torsion theory splits, with witnesses and
//! corpus-wide consistency checks.

use serde::Serialize;

use crate::constructors::quotient_ring;
use crate::context::RingContext;
use crate::corpus::CorpusModule;
use crate::error::{Error, Result};
use crate::hom::hom_count;
use crate::homological::{injective_hull, is_injective, is_projective};
use crate::module::FinModule;
use crate::ring::{Coords, FiniteRing};
use crate::submodule::{j_radical, quotient_module, submodule_lattice, Submodule};

use super::cg::cg_radical;
use super::facts::{module_facts, ModuleFacts};
use super::small::zstar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionKind {
    /// ξ: nothing is torsion
    Trivial,
    /// χ: everything is torsion
    Improper,
    Proper,
}

impl TorsionKind {
    pub fn symbol(self) -> &'static str {
        match self {
            TorsionKind::Trivial => "ξ",
            TorsionKind::Improper => "χ",
            TorsionKind::Proper => "proper",
        }
    }
}

/// `R ≅ T × S` along a central idempotent `e` with `Re` the torsion part.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub idempotent: Coords,
    pub t_size: usize,
    pub s_size: usize,
    pub t_almost_small: bool,
    pub s_semisimple: bool,
    #[serde(skip)]
    pub t_ring: Option<FiniteRing>,
    #[serde(skip)]
    pub s_ring: Option<FiniteRing>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SplitWitness {
    Decomposition(Decomposition),
    /// An injective simple module that is not projective.
    InjectiveNotProjective {
        simple: usize,
        size: u128,
        injective: bool,
        projective: bool,
        #[serde(skip)]
        module: FinModule,
    },
    /// The decision said "splits" but no central idempotent cuts out the
    /// torsion ideal.
    Missing,
}

/// Labels of corpus modules failing each check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusChecks {
    pub modules: usize,
    /// (a) torsion submodule is not a direct summand
    pub not_summand: Vec<String>,
    /// (c) torsion module whose hull is not torsion
    pub unstable: Vec<String>,
    /// (d) torsionfree module that is not projective
    pub torsionfree_not_projective: Vec<String>,
    /// (g) singular module that is not torsion
    pub singular_not_torsion: Vec<String>,
    /// torsionfree module with a quotient that is not torsionfree
    pub quotient_not_torsionfree: Vec<String>,
    /// torsionfree module `M` with `E(M)/M` not torsionfree
    pub hull_quotient_not_torsionfree: Vec<String>,
    /// `Z₂(M) ⊄` torsion submodule
    pub goldie_not_below: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionVerdict {
    /// elements of the torsion left ideal of `R`
    pub radical_of_r: Vec<Coords>,
    pub kind: TorsionKind,
    pub splits: bool,
    /// every injective simple is projective
    pub injective_simples_projective: bool,
    /// every injective simple embeds in `R`
    pub injective_simples_embed: bool,
    pub witness: SplitWitness,
    /// corpus-extensional
    pub cohereditary: bool,
    /// corpus-extensional, through `E(M)/M`
    pub cohereditary_by_hulls: bool,
    /// corpus-extensional
    pub stable: bool,
    /// corpus-extensional
    pub goldie_leq_cg: bool,
    pub checks: CorpusChecks,
    /// consistency checks that disagree with the decision
    pub contradictions: Vec<String>,
}

fn submodule_coords(m: &FinModule, s: &Submodule) -> Vec<Coords> {
    s.elements().map(|x| m.coords_of(x)).collect()
}

fn has_complement(m: &FinModule, t: &Submodule, cutoff: u128) -> Result<bool> {
    if t.is_zero() || t.is_full() {
        return Ok(true);
    }
    let lat = submodule_lattice(m, cutoff)?;
    let want = m.len() / t.size();
    Ok(lat.members().iter().any(|b| b.size() == want && b.meet(t).size() == 1))
}

fn decomposition(ctx: &RingContext, t: &Submodule) -> Result<Option<Decomposition>> {
    let ring = ctx.ring();
    let reg = ctx.regular();
    let elems = ring.elements();
    let found = ring.central_idempotents().into_iter().find(|e| {
        let re = Submodule::from_indices(reg.len(), elems.iter().map(|r| ring.index_of(&ring.mul(r, e))));
        re == *t
    });
    let Some(e) = found else { return Ok(None) };
    let f = ring.sub(&ring.one(), &e);
    let span_of = |x: &Coords| -> Vec<Coords> { elems.iter().map(|r| ring.mul(r, x)).collect() };
    let part = |keep: &Coords, kill: &Coords| -> Result<Option<FiniteRing>> {
        if ring.is_zero(keep) {
            Ok(None)
        } else if ring.is_zero(kill) {
            Ok(Some(ring.as_ref().clone()))
        } else {
            quotient_ring(ring, &span_of(kill)).map(Some)
        }
    };
    let t_ring = part(&e, &f)?;
    let s_ring = part(&f, &e)?;
    let t_almost_small = match &t_ring {
        None => true,
        Some(tr) => {
            let c = RingContext::new(tr.clone(), ctx.limits());
            cg_radical(&c, c.regular())?.is_full()
        }
    };
    let s_semisimple = match &s_ring {
        None => true,
        Some(sr) => sr.jacobson_generators().iter().all(|g| sr.is_zero(g)),
    };
    Ok(Some(Decomposition {
        t_size: t_ring.as_ref().map_or(1, |r| r.size()),
        s_size: s_ring.as_ref().map_or(1, |r| r.size()),
        idempotent: e,
        t_almost_small,
        s_semisimple,
        t_ring,
        s_ring,
    }))
}

/// Facts about every corpus module, in corpus order.
pub fn corpus_facts(ctx: &RingContext, corpus: &[CorpusModule]) -> Result<Vec<ModuleFacts>> {
    corpus.iter().map(|c| module_facts(ctx, &c.module)).collect()
}

/// Decides splitting by the injective simples and runs the consistency checks
/// over the given corpus.
pub fn cg_splitting(ctx: &RingContext, corpus: &[CorpusModule], facts: &[ModuleFacts]) -> Result<TorsionVerdict> {
    let reg = ctx.regular();
    let zs = zstar(ctx, reg)?;
    let (top, _) = quotient_module(reg, &zs)?;
    if !j_radical(&top).is_zero() {
        return Err(Error::SemilocalHypothesisViolated);
    }
    let t = cg_radical(ctx, reg)?;
    let simples = ctx.simples()?;
    let mut all_injective = true;
    let mut e_ok = true;
    let mut h_ok = true;
    let mut failing = None;
    for (j, s) in simples.iter().enumerate() {
        if !is_injective(ctx, &s.module)? {
            all_injective = false;
            continue;
        }
        let proj = is_projective(ctx, &s.module)?;
        if !proj {
            e_ok = false;
            failing.get_or_insert(j);
        }
        if hom_count(&s.module, reg)? <= 1 {
            h_ok = false;
        }
    }
    let kind = if t.is_full() {
        TorsionKind::Improper
    } else if t.is_zero() && all_injective {
        TorsionKind::Trivial
    } else {
        TorsionKind::Proper
    };
    let splits = e_ok;
    let mut contradictions = Vec::new();
    if e_ok != h_ok {
        contradictions.push("injective simples: projective and embedding tests disagree".to_string());
    }
    let witness = match failing {
        Some(j) => SplitWitness::InjectiveNotProjective {
            simple: j,
            size: simples[j].module.size(),
            injective: true,
            projective: false,
            module: simples[j].module.clone(),
        },
        None => match decomposition(ctx, &t)? {
            Some(d) => {
                if !d.t_almost_small || !d.s_semisimple {
                    contradictions.push("decomposition factors have the wrong type".to_string());
                }
                SplitWitness::Decomposition(d)
            }
            None => {
                contradictions.push("no central idempotent generates the torsion ideal".to_string());
                SplitWitness::Missing
            }
        },
    };

    let checks = corpus_checks(ctx, corpus, facts)?;
    if splits {
        for (name, list) in [
            ("(a) summand", &checks.not_summand),
            ("(c) stability", &checks.unstable),
            ("(d) projectivity", &checks.torsionfree_not_projective),
            ("(f) Goldie below", &checks.goldie_not_below),
            ("(g) singular torsion", &checks.singular_not_torsion),
        ] {
            if let Some(first) = list.first() {
                contradictions.push(format!("{name} fails on {first}"));
            }
        }
    }
    Ok(TorsionVerdict {
        radical_of_r: submodule_coords(reg, &t),
        kind,
        splits,
        injective_simples_projective: e_ok,
        injective_simples_embed: h_ok,
        witness,
        cohereditary: checks.quotient_not_torsionfree.is_empty(),
        cohereditary_by_hulls: checks.hull_quotient_not_torsionfree.is_empty(),
        stable: checks.unstable.is_empty(),
        goldie_leq_cg: checks.goldie_not_below.is_empty(),
        checks,
        contradictions,
    })
}

fn corpus_checks(ctx: &RingContext, corpus: &[CorpusModule], facts: &[ModuleFacts]) -> Result<CorpusChecks> {
    let cutoff = ctx.limits().module_cutoff;
    let mut c = CorpusChecks { modules: corpus.len(), ..Default::default() };
    for (cm, f) in corpus.iter().zip(facts) {
        let m = &cm.module;
        let label = || cm.label.clone();
        if !has_complement(m, &f.cg_radical, cutoff)? {
            c.not_summand.push(label());
        }
        if f.cg_torsion() {
            let h = injective_hull(ctx, m)?;
            if !cg_radical(ctx, &h.hull)?.is_full() {
                c.unstable.push(label());
            }
        }
        if f.cg_torsionfree() {
            if !f.projective {
                c.torsionfree_not_projective.push(label());
            }
            let lat = submodule_lattice(m, cutoff)?;
            for k in lat.members().iter().skip(1) {
                let (q, _) = quotient_module(m, k)?;
                if !zstar(ctx, &q)?.is_zero() {
                    c.quotient_not_torsionfree.push(label());
                    break;
                }
            }
            let h = injective_hull(ctx, m)?;
            let (q, _) = quotient_module(&h.hull, &h.embedding.image())?;
            if !zstar(ctx, &q)?.is_zero() {
                c.hull_quotient_not_torsionfree.push(label());
            }
        }
        if f.singular_module() && !f.cg_torsion() {
            c.singular_not_torsion.push(label());
        }
        if !f.goldie.is_subset(&f.cg_radical) {
            c.goldie_not_below.push(label());
        }
    }
    Ok(c)
}
