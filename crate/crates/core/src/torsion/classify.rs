//! Ring classifiers and per-ring theorem checks.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::context::RingContext;
use crate::corpus::{corpus_modules, CorpusModule};
use crate::error::Result;
use crate::hom::hom_count;
use crate::homological::{injective_hull, is_injective};
use crate::ring::{Coords, FiniteRing};
use crate::submodule::{additive_span, j_radical, j_socle, Submodule};

use super::cg::cg_radical;
use super::facts::ModuleFacts;
use super::reject::is_perp_torsion;
use super::splitting::{cg_splitting, corpus_facts, TorsionKind, TorsionVerdict};

#[derive(Clone, Debug, Serialize)]
pub struct Classifiers {
    pub semisimple: bool,
    pub local: bool,
    pub division: bool,
    pub commutative: bool,
    /// `_R R` injective
    pub qf: bool,
    /// `R_R` injective, computed on the opposite ring
    pub qf_right: bool,
    pub v_ring: bool,
    pub kasch: bool,
    pub almost_small: bool,
    pub right_almost_small: bool,
    pub small_ring: bool,
    /// a finite product of local rings
    pub semiperfect_product: bool,
    /// `_R R` has no nonzero small quotient
    pub regular_perp_torsion: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl TheoremResult {
    pub fn new(id: &str, passed: bool, detail: impl Into<String>) -> Self {
        TheoremResult { id: id.to_string(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub ring: String,
    pub size: usize,
    pub classifiers: Classifiers,
    /// `Soc(_R R) ⊆ Soc(R_R)`
    pub socle_inclusion_lr: bool,
    /// `Soc(R_R) ⊆ Soc(_R R)`
    pub socle_inclusion_rl: bool,
    /// `l(r(J)) = J`
    pub teply_condition: bool,
    /// every non-zero-divisor is a unit
    pub regular_elements_are_units: bool,
    pub verdict: TorsionVerdict,
    pub theorem_results: Vec<TheoremResult>,
}

fn element_set(ring: &FiniteRing, xs: &[Coords]) -> BitSet {
    BitSet::from_indices(ring.size(), xs.iter().map(|x| ring.index_of(x)))
}

/// `{x : a x = 0 for all a}`.
fn right_annihilator(ring: &FiniteRing, gens: &[Coords]) -> Vec<Coords> {
    ring.elements().iter().filter(|x| gens.iter().all(|a| ring.is_zero(&ring.mul(a, x)))).cloned().collect()
}

/// `{y : y a = 0 for all a}`.
fn left_annihilator(ring: &FiniteRing, gens: &[Coords]) -> Vec<Coords> {
    ring.elements().iter().filter(|y| gens.iter().all(|a| ring.is_zero(&ring.mul(y, a)))).cloned().collect()
}

pub fn teply_condition(ring: &FiniteRing) -> bool {
    let j = ring.jacobson_generators();
    let j_set = element_set(ring, &crate::constructors::additive_span(ring, &j));
    let rj = right_annihilator(ring, &j);
    let lrj = left_annihilator(ring, &rj);
    element_set(ring, &lrj) == j_set
}

/// A non-zero-divisor on both sides is a unit; checked element by element.
fn regular_elements_are_units(ring: &FiniteRing) -> bool {
    let elems = ring.elements();
    let one = ring.one();
    elems.iter().all(|a| {
        let zero_divisor = elems
            .iter()
            .any(|b| !ring.is_zero(b) && (ring.is_zero(&ring.mul(a, b)) || ring.is_zero(&ring.mul(b, a))));
        zero_divisor || elems.iter().any(|b| ring.mul(a, b) == one && ring.mul(b, a) == one)
    })
}

/// Primitive central idempotents.
fn blocks(ring: &FiniteRing) -> Vec<Coords> {
    let central: Vec<Coords> = ring.central_idempotents().into_iter().filter(|e| !ring.is_zero(e)).collect();
    central
        .iter()
        .filter(|e| {
            !central.iter().any(|f| f != *e && ring.mul(f, e) == *f)
        })
        .cloned()
        .collect()
}

/// `R` is a product of local rings iff every block `eR` has `eR/eJ` a
/// division ring: exactly one simple class on which `e` acts, one-dimensional
/// over its endomorphisms.
fn semiperfect_product(ctx: &RingContext) -> Result<bool> {
    let ring = ctx.ring();
    let simples = ctx.simples()?;
    for e in blocks(ring) {
        let on: Vec<_> = simples
            .iter()
            .filter(|s| (0..s.module.dim()).any(|u| !s.module.is_zero(&s.module.ring_act(&e, &s.module.generator(u)))))
            .collect();
        if on.len() != 1 || on[0].end_size != on[0].module.size() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn classifiers(ctx: &RingContext) -> Result<Classifiers> {
    let ring = ctx.ring();
    let reg = ctx.regular();
    let rad = j_radical(reg);
    let lat = ctx.left_ideals()?;
    let local = lat.maximal().len() == 1;
    let semisimple = rad.is_zero();
    let simples = ctx.simples()?;
    let mut v_ring = true;
    let mut kasch = true;
    for s in simples {
        v_ring &= is_injective(ctx, &s.module)?;
        kasch &= hom_count(&s.module, reg)? > 1;
    }
    let hull = injective_hull(ctx, reg)?;
    let op = ctx.op();
    Ok(Classifiers {
        semisimple,
        local,
        division: local && semisimple,
        commutative: ring.is_commutative(),
        qf: is_injective(ctx, reg)?,
        qf_right: is_injective(op, op.regular())?,
        v_ring,
        kasch,
        almost_small: cg_radical(ctx, reg)?.is_full(),
        right_almost_small: cg_radical(op, op.regular())?.is_full(),
        small_ring: j_radical(&hull.hull).is_full(),
        semiperfect_product: semiperfect_product(ctx)?,
        regular_perp_torsion: is_perp_torsion(ctx, reg)?,
    })
}

fn socles(ctx: &RingContext) -> (Submodule, Submodule) {
    let left = j_socle(ctx.regular());
    let op = ctx.op();
    // R_R is the left regular module of op(R), on the same coordinates
    let right = j_socle(op.regular());
    (left, right)
}

/// Full report over the default corpus of the ring.
pub fn classify_ring(ctx: &RingContext) -> Result<RingReport> {
    let corpus = corpus_modules(ctx)?;
    let facts = corpus_facts(ctx, &corpus)?;
    classify_ring_with(ctx, &corpus, &facts)
}

pub fn classify_ring_with(ctx: &RingContext, corpus: &[CorpusModule], facts: &[ModuleFacts]) -> Result<RingReport> {
    let ring = ctx.ring();
    let cl = classifiers(ctx)?;
    let (soc_l, soc_r) = socles(ctx);
    let socle_inclusion_lr = soc_l.is_subset(&soc_r);
    let socle_inclusion_rl = soc_r.is_subset(&soc_l);
    let teply = teply_condition(ring);
    let units = regular_elements_are_units(ring);
    let verdict = cg_splitting(ctx, corpus, facts)?;
    let kind = verdict.kind;

    let mut th = Vec::new();
    let xi = kind == TorsionKind::Trivial;
    th.push(TheoremResult::new(
        "P3.1",
        cl.v_ring == xi && xi == cl.regular_perp_torsion,
        format!("V-ring={} trivial={} R perp-torsion={}", cl.v_ring, xi, cl.regular_perp_torsion),
    ));
    th.push(TheoremResult::new("P3.3", !cl.small_ring, format!("small ring={}", cl.small_ring)));
    let local_nd = cl.local && !cl.division;
    th.push(TheoremResult::new(
        "P3.8",
        !local_nd || (cl.almost_small && cl.right_almost_small),
        format!(
            "local non-division={} left almost small={} right almost small={}",
            local_nd, cl.almost_small, cl.right_almost_small
        ),
    ));
    th.push(TheoremResult::new(
        "P4.10",
        !teply || cl.kasch,
        format!("l(r(J))=J: {} Kasch: {}", teply, cl.kasch),
    ));
    th.push(TheoremResult::new(
        "P4.12",
        !socle_inclusion_rl || verdict.injective_simples_projective,
        format!(
            "Soc(R_R)⊆Soc(_RR): {} injective simples projective: {}",
            socle_inclusion_rl, verdict.injective_simples_projective
        ),
    ));
    th.push(TheoremResult::new(
        "T4.7",
        verdict.contradictions.is_empty(),
        if verdict.contradictions.is_empty() {
            format!("(e)={} (h)={} splits={}", verdict.injective_simples_projective, verdict.injective_simples_embed, verdict.splits)
        } else {
            verdict.contradictions.join("; ")
        },
    ));
    th.push(TheoremResult::new(
        "T3.4",
        units,
        if units { "hypothesis vacuous" } else { "a regular element is not a unit" },
    ));
    let mut inv = Vec::new();
    if cl.division && !cl.v_ring {
        inv.push("division ring that is not a V-ring");
    }
    if cl.qf && !cl.kasch {
        inv.push("QF ring that is not Kasch");
    }
    if cl.almost_small && kind != TorsionKind::Improper {
        inv.push("almost small ring with a proper torsion radical");
    }
    if cl.qf != cl.qf_right {
        inv.push("left and right self-injectivity differ");
    }
    th.push(TheoremResult::new(
        "classifiers",
        inv.is_empty(),
        if inv.is_empty() { "consistent".to_string() } else { inv.join("; ") },
    ));

    Ok(RingReport {
        ring: ring.name().to_string(),
        size: ring.size(),
        classifiers: cl,
        socle_inclusion_lr,
        socle_inclusion_rl,
        teply_condition: teply,
        regular_elements_are_units: units,
        verdict,
        theorem_results: th,
    })
}

/// Elements of a left ideal given by additive generators.
pub fn ideal_elements(ctx: &RingContext, gens: &[Coords]) -> Submodule {
    let reg = ctx.regular();
    let idx: Vec<usize> = gens.iter().map(|g| reg.index_of(g)).collect();
    additive_span(reg, &idx)
}
