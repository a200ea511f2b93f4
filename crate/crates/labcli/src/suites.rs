//! Theorem suites over a ring corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use ringlab_core::constructors::quotient_ring;
use ringlab_core::hom::hom_space;
use ringlab_core::homological::{
    decompose, injective_hull, is_injective, is_injective_dual, is_projective, character_dual,
};
use ringlab_core::morphism::direct_sum;
use ringlab_core::submodule::{j_radical, quotient_module, span, submodule_lattice, submodule_module, Submodule};
use ringlab_core::torsion::{
    cg_radical, cg_radical_oracle, component, generalov_rho, is_singular_module, is_small_module,
    is_small_module_by_injectives, product_decomposition_check, reject_small, reject_small_by_homs, trace_submodule,
    zstar, zstar_hull, SplitWitness,
};
use ringlab_core::{Coords, FinModule, FiniteRing, Limits, RingContext};

use crate::analysis::{analyze_entry, RingAnalysis};
use crate::corpus::{Corpus, RingEntry};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    T1_1,
    P2_3ab,
    L2_4,
    P3_1,
    P3_3,
    P3_8,
    L4_2,
    C4_3,
    C4_4,
    T4_5,
    P4_6,
    T4_7,
    P4_10,
    P4_12,
    R4_11,
    OpenQ,
}

impl SuiteId {
    pub const ALL: [SuiteId; 16] = [
        SuiteId::T1_1,
        SuiteId::P2_3ab,
        SuiteId::L2_4,
        SuiteId::P3_1,
        SuiteId::P3_3,
        SuiteId::P3_8,
        SuiteId::L4_2,
        SuiteId::C4_3,
        SuiteId::C4_4,
        SuiteId::T4_5,
        SuiteId::P4_6,
        SuiteId::T4_7,
        SuiteId::P4_10,
        SuiteId::P4_12,
        SuiteId::R4_11,
        SuiteId::OpenQ,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::T1_1 => "T1.1",
            SuiteId::P2_3ab => "P2.3ab",
            SuiteId::L2_4 => "L2.4",
            SuiteId::P3_1 => "P3.1",
            SuiteId::P3_3 => "P3.3",
            SuiteId::P3_8 => "P3.8",
            SuiteId::L4_2 => "L4.2",
            SuiteId::C4_3 => "C4.3",
            SuiteId::C4_4 => "C4.4",
            SuiteId::T4_5 => "T4.5",
            SuiteId::P4_6 => "P4.6",
            SuiteId::T4_7 => "T4.7",
            SuiteId::P4_10 => "P4.10",
            SuiteId::P4_12 => "P4.12",
            SuiteId::R4_11 => "R4.11",
            SuiteId::OpenQ => "OPEN-Q",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CliError::UnknownSuite(s.to_string()))
    }
}

/// Parses `all` or a comma-separated list of suite ids.
pub fn parse_suites(s: &str) -> Result<Vec<SuiteId>, CliError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(SuiteId::ALL.to_vec());
    }
    let mut ids: Vec<SuiteId> = s.split(',').map(str::parse).collect::<Result<_, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
    #[serde(rename = "N/A")]
    NotApplicable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::NotApplicable => "N/A",
        }
    }
}

/// Enough data to re-run one check: the ring, a module spec or corpus label,
/// and the predicate values observed.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub ring: String,
    pub module: String,
    pub values: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub ring: String,
    pub status: Status,
    pub detail: String,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Aggregate {
    pub suite: String,
    pub rings_checked: usize,
    pub passes: usize,
    pub failures: usize,
    pub skipped: usize,
    pub not_applicable: usize,
}

pub struct SuiteResult {
    pub analyses: Vec<Result<RingAnalysis, (String, CliError)>>,
    pub checks: Vec<CheckResult>,
    pub aggregates: Vec<Aggregate>,
}

impl SuiteResult {
    pub fn any_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn any_skip(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Skipped)
    }

    /// 0 all pass, 1 some failure, 3 skips only.
    pub fn exit_code(&self) -> i32 {
        if self.any_failure() {
            1
        } else if self.any_skip() {
            3
        } else {
            0
        }
    }
}

struct Outcome {
    status: Status,
    detail: String,
    witnesses: Vec<Witness>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Pass, detail: detail.into(), witnesses: vec![] }
    }

    fn na(detail: impl Into<String>) -> Self {
        Outcome { status: Status::NotApplicable, detail: detail.into(), witnesses: vec![] }
    }

    /// Pass when no witness was collected, fail otherwise.
    fn from_witnesses(ok_detail: impl Into<String>, fail_detail: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        if witnesses.is_empty() {
            Outcome::pass(ok_detail)
        } else {
            Outcome { status: Status::Fail, detail: fail_detail.into(), witnesses }
        }
    }

    fn check(ok: bool, detail: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        Outcome { status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into(), witnesses }
    }
}

fn witness(ring: &str, module: &str, values: &[(&str, Value)]) -> Witness {
    Witness {
        ring: ring.to_string(),
        module: module.to_string(),
        values: values.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
    }
}

/// Runs the requested suites over every ring of the corpus.
pub fn run_suite(corpus: &Corpus, ids: &[SuiteId]) -> SuiteResult {
    let analyses: Vec<Result<RingAnalysis, (String, CliError)>> = corpus
        .rings
        .par_iter()
        .map(|e| analyze_entry(e, corpus.limits).map_err(|err| (e.name.clone(), err)))
        .collect();
    run_suites_on(analyses, ids, corpus.limits)
}

/// Runs suites over analyses that were already computed.
pub fn run_suites_on(
    analyses: Vec<Result<RingAnalysis, (String, CliError)>>,
    ids: &[SuiteId],
    limits: Limits,
) -> SuiteResult {
    let checks: Vec<CheckResult> = analyses
        .par_iter()
        .flat_map_iter(|a| {
            ids.iter()
                .map(|&id| match a {
                    Ok(a) => run_one(id, a, limits),
                    Err((ring, err)) => CheckResult {
                        suite: id.to_string(),
                        ring: ring.clone(),
                        status: if err.is_cutoff() { Status::Skipped } else { Status::Fail },
                        detail: err.to_string(),
                        witnesses: vec![],
                    },
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let aggregates = ids
        .iter()
        .map(|id| {
            let mut agg = Aggregate { suite: id.to_string(), ..Default::default() };
            for c in checks.iter().filter(|c| c.suite == id.as_str()) {
                match c.status {
                    Status::Pass => agg.passes += 1,
                    Status::Fail => agg.failures += 1,
                    Status::Skipped => agg.skipped += 1,
                    Status::NotApplicable => agg.not_applicable += 1,
                }
                if matches!(c.status, Status::Pass | Status::Fail) {
                    agg.rings_checked += 1;
                }
            }
            agg
        })
        .collect();
    SuiteResult { analyses, checks, aggregates }
}

fn run_one(id: SuiteId, a: &RingAnalysis, limits: Limits) -> CheckResult {
    let result = match id {
        SuiteId::T1_1 => check_t1_1(a),
        SuiteId::P2_3ab => check_p2_3(a),
        SuiteId::L2_4 => check_l2_4(a),
        SuiteId::P3_1 => check_p3_1(a),
        SuiteId::P3_3 | SuiteId::P3_8 | SuiteId::P4_10 | SuiteId::P4_12 => Ok(from_report(a, id.as_str())),
        SuiteId::L4_2 => check_l4_2(a),
        SuiteId::C4_3 => check_c4_3(a, limits),
        SuiteId::C4_4 => check_c4_4(a),
        SuiteId::T4_5 => check_t4_5(a),
        SuiteId::P4_6 => check_p4_6(a),
        SuiteId::T4_7 => check_t4_7(a),
        SuiteId::R4_11 => check_r4_11(a),
        SuiteId::OpenQ => check_open_q(a),
    };
    let o = result.unwrap_or_else(|err| Outcome {
        status: if err.is_cutoff() { Status::Skipped } else { Status::Fail },
        detail: err.to_string(),
        witnesses: vec![],
    });
    CheckResult {
        suite: id.to_string(),
        ring: a.entry.name.clone(),
        status: o.status,
        detail: o.detail,
        witnesses: o.witnesses,
    }
}

fn from_report(a: &RingAnalysis, id: &str) -> Outcome {
    match a.report.theorem_results.iter().find(|t| t.id == id) {
        Some(t) => {
            let w = if t.passed { vec![] } else { vec![witness(&a.entry.name, "R", &[("detail", json!(t.detail))])] };
            Outcome::check(t.passed, t.detail.clone(), w)
        }
        None => Outcome::na("not evaluated"),
    }
}

fn limits_of(a: &RingAnalysis) -> Limits {
    a.ctx.limits()
}

/// Decomposition shadow: every module is projective ⊕ small and injective ⊕
/// singular iff every indecomposable summand is one or the other. Also checks
/// the simple dichotomies and closure of the small class.
fn check_t1_1(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let ctx = &a.ctx;
    let ring = &a.entry.name;
    let cl = &a.report.classifiers;
    let cutoff = limits_of(a).module_cutoff;
    let mut bad = Vec::new();
    if cl.qf != cl.qf_right {
        bad.push(witness(ring, "R", &[("qf", json!(cl.qf)), ("qf_right", json!(cl.qf_right))]));
    }
    for (j, s) in ctx.simples()?.iter().enumerate() {
        let small = is_small_module(ctx, &s.module)?;
        let inj = is_injective(ctx, &s.module)?;
        let sing = is_singular_module(ctx, &s.module)?;
        let proj = is_projective(ctx, &s.module)?;
        if small == inj || sing == proj {
            bad.push(witness(
                ring,
                &format!("simple:{j}"),
                &[("small", json!(small)), ("injective", json!(inj)), ("singular", json!(sing)), ("projective", json!(proj))],
            ));
        }
    }
    let small_modules: Vec<usize> = (0..a.corpus.len()).filter(|&i| a.facts[i].small).collect();
    for &i in &small_modules {
        let m = &a.corpus[i].module;
        let lat = submodule_lattice(m, cutoff)?;
        for k in lat.members() {
            let sub = submodule_module(m, k)?.0;
            let quo = quotient_module(m, k)?.0;
            if !is_small_module_by_injectives(ctx, &sub)? || !is_small_module_by_injectives(ctx, &quo)? {
                bad.push(witness(ring, &a.corpus[i].label, &[("closure", json!("subquotient of a small module is not small"))]));
                break;
            }
        }
        for &j in &small_modules {
            let n = &a.corpus[j].module;
            if j < i || m.size() * n.size() > cutoff {
                continue;
            }
            if !is_small_module_by_injectives(ctx, &direct_sum(m, n)?.module)? {
                bad.push(witness(
                    ring,
                    &format!("{}+{}", a.corpus[i].label, a.corpus[j].label),
                    &[("closure", json!("sum of small modules is not small"))],
                ));
            }
        }
    }
    if !bad.is_empty() {
        return Ok(Outcome { status: Status::Fail, detail: "dichotomy or closure violated".into(), witnesses: bad });
    }

    let mut violations = Vec::new();
    for cm in &a.corpus {
        let mut proj_small = true;
        let mut inj_sing = true;
        for s in decompose(&cm.module, cutoff)? {
            let p = is_projective(ctx, &s.module)?;
            let sm = is_small_module_by_injectives(ctx, &s.module)?;
            let i = is_injective(ctx, &s.module)?;
            let sg = is_singular_module(ctx, &s.module)?;
            proj_small &= p || sm;
            inj_sing &= i || sg;
        }
        if !proj_small || !inj_sing {
            violations.push(witness(
                ring,
                &cm.label,
                &[("projective_plus_small", json!(proj_small)), ("injective_plus_singular", json!(inj_sing))],
            ));
        }
    }
    let n = a.corpus.len();
    Ok(if cl.qf {
        Outcome::from_witnesses(
            format!("QF; all {n} corpus modules decompose both ways"),
            "QF ring with a module that does not decompose",
            violations,
        )
    } else if violations.is_empty() {
        Outcome::pass("not QF; no violating corpus module")
    } else {
        let first = violations[0].module.clone();
        Outcome {
            status: Status::Pass,
            detail: format!("not QF; violating corpus module {first}"),
            witnesses: violations.into_iter().take(1).collect(),
        }
    })
}

/// Two computations of the reject, the simple-quotient reading of (b), and
/// Generalov's iteration.
fn check_p2_3(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let ctx = &a.ctx;
    let ring = &a.entry.name;
    let cutoff = limits_of(a).module_cutoff;
    let mut bad = Vec::new();
    let mut perp_count = 0;
    for cm in &a.corpus {
        let m = &cm.module;
        let r1 = reject_small(ctx, m)?;
        let r2 = reject_small_by_homs(ctx, m)?;
        let perp = r1.is_full();
        // a nonzero small quotient has a simple small quotient
        let lat = submodule_lattice(m, cutoff)?;
        let mut no_small_quotient = true;
        for &k in &lat.maximal() {
            if is_small_module(ctx, &quotient_module(m, lat.get(k))?.0)? {
                no_small_quotient = false;
                break;
            }
        }
        let rho = generalov_rho(ctx, m)?;
        let (rm, incl) = submodule_module(m, &rho)?;
        let rho2 = incl.image_of(&generalov_rho(ctx, &rm)?);
        let ok = r1 == r2 && perp == no_small_quotient && rho2 == rho && rho.is_full() == perp;
        perp_count += perp as usize;
        if !ok {
            bad.push(witness(
                ring,
                &cm.label,
                &[
                    ("reject_lattice", json!(r1.size())),
                    ("reject_homs", json!(r2.size())),
                    ("perp_torsion", json!(perp)),
                    ("no_small_quotient", json!(no_small_quotient)),
                    ("rho", json!(rho.size())),
                    ("rho_rho", json!(rho2.size())),
                ],
            ));
        }
    }
    Ok(Outcome::from_witnesses(
        format!("{} modules, {perp_count} perp-torsion", a.corpus.len()),
        "reject computations disagree",
        bad,
    ))
}

fn essential_in(m: &FinModule, n: &Submodule, t: &Submodule) -> bool {
    n.is_subset(t) && t.elements().skip(1).all(|x| span(m, &[x]).bits().intersect(n.bits()).count() > 1)
}

/// Torsionfree versus perp-torsion classes, plus the radical laws: both forms of
/// `Z*`, essentiality in the radical, the brute-force oracle, heredity,
/// idempotence, functoriality and orthogonality.
fn check_l2_4(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let ctx = &a.ctx;
    let ring = &a.entry.name;
    let cutoff = limits_of(a).module_cutoff;
    let mut bad = Vec::new();
    let mut perp = Vec::new();
    for (cm, f) in a.corpus.iter().zip(&a.facts) {
        let m = &cm.module;
        let label = cm.label.as_str();
        let hull_form = zstar_hull(ctx, m)?;
        if hull_form != f.zstar {
            bad.push(witness(ring, label, &[("zstar_trace", json!(f.zstar.size())), ("zstar_hull", json!(hull_form.size()))]));
        }
        if !f.cg_radical.is_zero() && !essential_in(m, &f.zstar, &f.cg_radical) {
            bad.push(witness(ring, label, &[("zstar_essential_in_radical", json!(false))]));
        }
        let oracle = cg_radical_oracle(ctx, m)?;
        if oracle != f.cg_radical {
            bad.push(witness(ring, label, &[("fixpoint", json!(f.cg_radical.size())), ("oracle", json!(oracle.size()))]));
        }
        let (q, _) = quotient_module(m, &f.cg_radical)?;
        if !cg_radical(ctx, &q)?.is_zero() {
            bad.push(witness(ring, label, &[("radical_of_quotient_zero", json!(false))]));
        }
        let lat = submodule_lattice(m, cutoff)?;
        let mut submodules_perp = true;
        let is_perp = reject_small(ctx, m)?.is_full();
        for n in lat.members() {
            let (nm, incl) = submodule_module(m, n)?;
            if incl.image_of(&cg_radical(ctx, &nm)?) != n.meet(&f.cg_radical) {
                bad.push(witness(ring, label, &[("hereditary", json!(false)), ("submodule_size", json!(n.size()))]));
                break;
            }
            if is_perp && submodules_perp && !reject_small(ctx, &nm)?.is_full() {
                submodules_perp = false;
            }
        }
        perp.push((is_perp, submodules_perp));
    }
    for (cm, f) in a.corpus.iter().zip(&a.facts) {
        for (cn, g) in a.corpus.iter().zip(&a.facts) {
            let hs = hom_space(&cm.module, &cn.module)?;
            if f.cg_torsion() && g.cg_torsionfree() && hs.count() != 1 {
                bad.push(witness(ring, &format!("{} -> {}", cm.label, cn.label), &[("homs", json!(hs.count().to_string()))]));
            }
            for h in hs.basis_morphisms() {
                if !h.image_of(&f.cg_radical).is_subset(&g.cg_radical) {
                    bad.push(witness(ring, &format!("{} -> {}", cm.label, cn.label), &[("functorial", json!(false))]));
                    break;
                }
            }
        }
    }
    // torsionfree class equals perp-torsion class iff cohereditary and the
    // perp-torsion class is closed under submodules
    let classes_equal = a.facts.iter().zip(&perp).all(|(f, (p, _))| f.cg_torsionfree() == *p);
    let perp_hereditary = perp.iter().all(|(p, s)| !p || *s);
    let coh = a.report.verdict.cohereditary;
    if classes_equal != (coh && perp_hereditary) {
        bad.push(witness(
            ring,
            "corpus",
            &[
                ("torsionfree_equals_perp", json!(classes_equal)),
                ("cohereditary", json!(coh)),
                ("perp_hereditary", json!(perp_hereditary)),
            ],
        ));
    }
    Ok(Outcome::from_witnesses(
        format!(
            "{} modules; torsionfree = perp-torsion: {classes_equal}; cohereditary: {coh}; perp-torsion hereditary: {perp_hereditary}",
            a.corpus.len()
        ),
        "radical laws violated",
        bad,
    ))
}

/// V-ring, trivial theory (no corpus module has torsion) and `_R R`
/// perp-torsion, computed separately.
fn check_p3_1(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let cl = &a.report.classifiers;
    let trivial = a.facts.iter().all(|f| f.cg_radical.is_zero());
    let kind_trivial = a.report.verdict.kind == ringlab_core::torsion::TorsionKind::Trivial;
    let ok = cl.v_ring == trivial && trivial == cl.regular_perp_torsion && kind_trivial == trivial;
    let detail = format!(
        "V-ring={} trivial={} R perp-torsion={} verdict={}",
        cl.v_ring,
        trivial,
        cl.regular_perp_torsion,
        a.report.verdict.kind.symbol()
    );
    let w = if ok {
        vec![]
    } else {
        vec![witness(&a.entry.name, "R", &[("v_ring", json!(cl.v_ring)), ("trivial", json!(trivial))])]
    };
    Ok(Outcome::check(ok, detail, w))
}

struct Components {
    c1: RingContext,
    c2: RingContext,
    e1: Coords,
    e2: Coords,
    k1: usize,
}

fn components(a: &RingAnalysis) -> Option<Components> {
    let (r1, r2) = a.entry.factors.as_ref()?;
    let ring = a.ctx.ring();
    let k1 = r1.dim();
    let mut e1 = ring.zero();
    e1[..k1].copy_from_slice(&r1.one());
    let mut e2 = ring.zero();
    e2[k1..].copy_from_slice(&r2.one());
    Some(Components {
        c1: RingContext::new(r1.clone(), a.ctx.limits()),
        c2: RingContext::new(r2.clone(), a.ctx.limits()),
        e1,
        e2,
        k1,
    })
}

/// `Z*` and the torsionfree class are computed componentwise.
fn check_l4_2(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let Some(c) = components(a) else { return Ok(Outcome::na("not a product")) };
    let ring = &a.entry.name;
    let k = a.ctx.ring().dim();
    let mut bad = Vec::new();
    for (cm, f) in a.corpus.iter().zip(&a.facts) {
        let m = &cm.module;
        let (m1, i1) = component(m, c1_ring(&c), 0..c.k1, &c.e1)?;
        let (m2, i2) = component(m, c2_ring(&c), c.k1..k, &c.e2)?;
        let z1 = zstar(&c.c1, &m1)?;
        let z2 = zstar(&c.c2, &m2)?;
        let joined = ringlab_core::submodule::join(m, &i1.image_of(&z1), &i2.image_of(&z2));
        let tf = z1.is_zero() && z2.is_zero();
        if joined != f.zstar || tf != f.cg_torsionfree() {
            bad.push(witness(ring, &cm.label, &[("zstar", json!(f.zstar.size())), ("componentwise", json!(joined.size()))]));
        }
    }
    Ok(Outcome::from_witnesses(format!("{} modules split componentwise", a.corpus.len()), "Z* not componentwise", bad))
}

fn c1_ring(c: &Components) -> &std::sync::Arc<FiniteRing> {
    c.c1.ring()
}

fn c2_ring(c: &Components) -> &std::sync::Arc<FiniteRing> {
    c.c2.ring()
}

/// The torsion radical and the splitting verdict over a product.
fn check_c4_3(a: &RingAnalysis, limits: Limits) -> Result<Outcome, CliError> {
    let Some(c) = components(a) else { return Ok(Outcome::na("not a product")) };
    let ring = &a.entry.name;
    let mut bad: Vec<Witness> = product_decomposition_check(&a.ctx, &c.c1, &c.c2, &a.corpus)?
        .into_iter()
        .filter(|p| !p.agrees())
        .map(|p| {
            witness(ring, &p.label, &[("radical", json!(p.whole.size())), ("componentwise", json!(p.from_components.size()))])
        })
        .collect();
    let (r1, r2) = a.entry.factors.clone().expect("product");
    let s1 = analyze_entry(&RingEntry { name: r1.name().to_string(), ring: r1, factors: None }, limits)?;
    let s2 = analyze_entry(&RingEntry { name: r2.name().to_string(), ring: r2, factors: None }, limits)?;
    let (v, v1, v2) = (a.report.verdict.splits, s1.report.verdict.splits, s2.report.verdict.splits);
    if v != (v1 && v2) {
        bad.push(witness(ring, "R", &[("splits", json!(v)), ("first", json!(v1)), ("second", json!(v2))]));
    }
    Ok(Outcome::from_witnesses(
        format!("radicals componentwise on {} modules; splits {} = {} and {}", a.corpus.len(), v, v1, v2),
        "product law violated",
        bad,
    ))
}

/// Central idempotents `e` with `eR` almost small, and whether `(1-e)R` is a
/// V-ring.
fn product_splittings(ctx: &RingContext) -> Result<Vec<(Coords, bool, bool)>, CliError> {
    let ring = ctx.ring();
    let corner = |e: &Coords| -> Result<Option<FiniteRing>, CliError> {
        let f = ring.sub(&ring.one(), e);
        if ring.is_zero(e) {
            Ok(None)
        } else if ring.is_zero(&f) {
            Ok(Some(ring.as_ref().clone()))
        } else {
            let gens: Vec<Coords> = (0..ring.dim()).map(|i| ring.mul(&ring.basis(i), &f)).collect();
            Ok(Some(quotient_ring(ring, &gens)?))
        }
    };
    let mut out = Vec::new();
    for e in ring.central_idempotents() {
        let f = ring.sub(&ring.one(), &e);
        let almost_small = match corner(&e)? {
            None => true,
            Some(t) => {
                let c = RingContext::new(t, ctx.limits());
                cg_radical(&c, c.regular())?.is_full()
            }
        };
        let v_ring = match corner(&f)? {
            None => true,
            Some(s) => {
                let c = RingContext::new(s, ctx.limits());
                let mut all = true;
                for s in c.simples()? {
                    all &= is_injective(&c, &s.module)?;
                }
                all
            }
        };
        out.push((e, almost_small, v_ring));
    }
    Ok(out)
}

/// Commutative rings are products of local rings and split as almost small
/// times semisimple.
fn check_c4_4(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let cl = &a.report.classifiers;
    if !cl.commutative {
        return Ok(Outcome::na("not commutative"));
    }
    let dec = match &a.report.verdict.witness {
        SplitWitness::Decomposition(d) => d.t_almost_small && d.s_semisimple,
        _ => false,
    };
    let ok = cl.semiperfect_product && a.report.verdict.splits && dec;
    let detail = format!(
        "product of locals={} splits={} T x S with |T|={} |S|={}",
        cl.semiperfect_product,
        a.report.verdict.splits,
        match &a.report.verdict.witness {
            SplitWitness::Decomposition(d) => d.t_size.to_string(),
            _ => "-".into(),
        },
        match &a.report.verdict.witness {
            SplitWitness::Decomposition(d) => d.s_size.to_string(),
            _ => "-".into(),
        },
    );
    let w = if ok { vec![] } else { vec![witness(&a.entry.name, "R", &[("decomposition", json!(dec))])] };
    Ok(Outcome::check(ok, detail, w))
}

/// Splitting and cohereditary iff `R ≅ T × S` with `T` almost small and `S` a
/// V-ring, the latter searched over all central idempotents.
fn check_t4_5(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let v = &a.report.verdict;
    let lhs = v.splits && v.cohereditary;
    let found = product_splittings(&a.ctx)?.into_iter().find(|(_, t, s)| *t && *s);
    let rhs = found.is_some();
    let detail = format!(
        "splits and cohereditary={} decomposition={}",
        lhs,
        found.as_ref().map_or("none".to_string(), |(e, _, _)| format!("e={e:?}"))
    );
    let w = if lhs == rhs {
        vec![]
    } else {
        vec![witness(&a.entry.name, "R", &[("splits_and_cohereditary", json!(lhs)), ("decomposition", json!(rhs))])]
    };
    Ok(Outcome::check(lhs == rhs, detail, w))
}

/// Cohereditary by quotients agrees with the hull criterion; torsionfree
/// modules are cosemisimple when it holds.
fn check_p4_6(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let v = &a.report.verdict;
    let mut bad = hull_checks(a)?;
    if v.cohereditary != v.cohereditary_by_hulls {
        bad.push(witness(
            &a.entry.name,
            "corpus",
            &[("quotients", json!(v.cohereditary)), ("hulls", json!(v.cohereditary_by_hulls))],
        ));
    }
    if v.cohereditary {
        for (cm, f) in a.corpus.iter().zip(&a.facts) {
            if f.cg_torsionfree() && !j_radical(&cm.module).is_zero() {
                bad.push(witness(&a.entry.name, &cm.label, &[("cosemisimple", json!(false))]));
            }
        }
    }
    Ok(Outcome::from_witnesses(
        format!("cohereditary={} (by hulls {})", v.cohereditary, v.cohereditary_by_hulls),
        "hull or cohereditary checks failed",
        bad,
    ))
}

/// Decision coherence, plus the trace description of `Z` on subquotients.
fn check_t4_7(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let v = &a.report.verdict;
    let ring = &a.entry.name;
    let mut bad: Vec<Witness> =
        v.contradictions.iter().map(|c| witness(ring, "R", &[("contradiction", json!(c))])).collect();
    let singular: Vec<FinModule> =
        a.corpus.iter().zip(&a.facts).filter(|(_, f)| f.singular_module()).map(|(c, _)| c.module.clone()).collect();
    for (cm, f) in a.corpus.iter().zip(&a.facts) {
        let t = trace_submodule(&singular, &cm.module)?;
        let ok = if cm.subquotient { t == f.singular } else { t.is_subset(&f.singular) };
        if !ok {
            bad.push(witness(ring, &cm.label, &[("Z", json!(f.singular.size())), ("trace", json!(t.size()))]));
        }
    }
    let c = &v.checks;
    let detail = format!(
        "(e)={} (h)={} splits={}; corpus: (a) {} (c) {} (d) {} (f) {} (g) {} failing of {}",
        v.injective_simples_projective,
        v.injective_simples_embed,
        v.splits,
        c.not_summand.len(),
        c.unstable.len(),
        c.torsionfree_not_projective.len(),
        c.goldie_not_below.len(),
        c.singular_not_torsion.len(),
        c.modules
    );
    Ok(Outcome::from_witnesses(detail.clone(), detail, bad))
}

/// A non-splitting ring carries an injective, non-projective simple witness;
/// for `Tri(2,GF(2))` it is `R/Soc(_R R)`.
fn check_r4_11(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let v = &a.report.verdict;
    let ring = &a.entry.name;
    let tri = ring == "Tri(2,GF(2))";
    if v.splits {
        return Ok(if tri {
            Outcome::check(false, "splits", vec![witness(ring, "R", &[("splits", json!(true))])])
        } else {
            Outcome::na("splits")
        });
    }
    let SplitWitness::InjectiveNotProjective { module, .. } = &v.witness else {
        return Ok(Outcome::check(false, "no witness", vec![]));
    };
    let ctx = &a.ctx;
    let label = a.witness_label.clone().unwrap_or_default();
    let baer = is_injective(ctx, module)?;
    let dual = is_injective_dual(ctx, module)?;
    let proj = is_projective(ctx, module)?;
    let ok = baer && dual && !proj && (!tri || label == "R/soc");
    let w = witness(
        ring,
        &label,
        &[("injective", json!(baer)), ("injective_dual", json!(dual)), ("projective", json!(proj)), ("splits", json!(false))],
    );
    Ok(Outcome::check(ok, format!("splits=false witness={label} injective={baer} projective={proj}"), vec![w]))
}

fn check_open_q(a: &RingAnalysis) -> Result<Outcome, CliError> {
    let v = &a.report.verdict;
    let hit = v.splits && !v.cohereditary;
    Ok(if hit {
        Outcome::check(
            false,
            "splits but not cohereditary",
            vec![witness(&a.entry.name, "R", &[("splits", json!(true)), ("cohereditary", json!(false))])],
        )
    } else {
        Outcome::pass(format!("no hit (splits={}, cohereditary={})", v.splits, v.cohereditary))
    })
}

/// Baer and duality agree, hulls behave, double duals return the module.
fn hull_checks(a: &RingAnalysis) -> Result<Vec<Witness>, CliError> {
    let ctx = &a.ctx;
    let ring = &a.entry.name;
    let mut bad = Vec::new();
    for cm in &a.corpus {
        let m = &cm.module;
        let baer = is_injective(ctx, m)?;
        let dual = is_injective_dual(ctx, m)?;
        let h = injective_hull(ctx, m)?;
        let hull_ok = h.embedding.is_injective()
            && is_injective(ctx, &h.hull)?
            && ringlab_core::submodule::j_socle(&h.hull).is_subset(&h.embedding.image())
            && (!baer || h.hull.size() == m.size());
        let d = character_dual(m, ctx.op_ring());
        let dd = character_dual(&d, ctx.ring());
        let double_ok = dd.orders() == m.orders() && dd.action() == m.action();
        if baer != dual || !hull_ok || !double_ok {
            bad.push(witness(
                ring,
                &cm.label,
                &[("baer", json!(baer)), ("dual", json!(dual)), ("hull", json!(hull_ok)), ("double_dual", json!(double_ok))],
            ));
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::entry_from_spec;

    fn small_corpus(specs: &[&str]) -> Corpus {
        Corpus { rings: specs.iter().map(|s| entry_from_spec(s).unwrap()).collect(), limits: Limits::default() }
    }

    #[test]
    fn ids_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.as_str().parse::<SuiteId>().unwrap(), id);
        }
        assert_eq!("open-q".parse::<SuiteId>().unwrap(), SuiteId::OpenQ);
        assert!(matches!("T9.9".parse::<SuiteId>(), Err(CliError::UnknownSuite(_))));
        assert_eq!(parse_suites("all").unwrap().len(), 16);
        assert_eq!(parse_suites("R4.11,P3.1,R4.11").unwrap(), vec![SuiteId::P3_1, SuiteId::R4_11]);
    }

    #[test]
    fn tri_counterexample_suite() {
        let res = run_suite(&small_corpus(&["Tri(2,GF(2))", "Z/4"]), &[SuiteId::R4_11, SuiteId::OpenQ]);
        assert_eq!(res.exit_code(), 0);
        let tri = res.checks.iter().find(|c| c.suite == "R4.11" && c.ring == "Tri(2,GF(2))").unwrap();
        assert_eq!(tri.status, Status::Pass);
        assert_eq!(tri.witnesses[0].module, "R/soc");
        let z4 = res.checks.iter().find(|c| c.suite == "R4.11" && c.ring == "Z/4").unwrap();
        assert_eq!(z4.status, Status::NotApplicable);
        assert_eq!(res.aggregates[0].rings_checked, 1);
    }

    #[test]
    fn cutoff_is_skipped_not_failed() {
        let mut c = small_corpus(&["Z/8"]);
        c.limits.module_cutoff = 4;
        let res = run_suite(&c, &[SuiteId::P3_1]);
        assert_eq!(res.checks[0].status, Status::Skipped);
        assert_eq!(res.exit_code(), 3);
    }

    #[test]
    fn every_suite_passes_on_small_rings() {
        let res = run_suite(&small_corpus(&["Z/6", "GF(2)[x]/(x^2)", "GF(2) x Z/4"]), &SuiteId::ALL);
        for c in &res.checks {
            assert_ne!(c.status, Status::Fail, "{} {}: {}", c.suite, c.ring, c.detail);
        }
        let l42 = res.aggregates.iter().find(|a| a.suite == "L4.2").unwrap();
        assert_eq!((l42.passes, l42.not_applicable), (1, 2));
    }
}
