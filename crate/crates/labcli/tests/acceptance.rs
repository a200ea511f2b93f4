//! Acceptance gate: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use ringlab::analysis::{analyze, RingAnalysis};
use ringlab::corpus::default_corpus;
use ringlab::modspec::{build_module, ModExpr};
use ringlab::suites::{run_suite, CheckResult, Status, SuiteId, SuiteResult};
use ringlab_core::hom::are_isomorphic;
use ringlab_core::homological::{character_dual, injective_hull, is_injective, is_injective_dual, j_socle};
use ringlab_core::morphism::ModuleMorphism;
use ringlab_core::submodule::{span, submodule_module};
use ringlab_core::torsion::{
    cg_radical, cg_radical_oracle, generalov_rho, reject_small, zstar, zstar_hull, TorsionKind,
};
use ringlab_core::Limits;

const BIN: &str = env!("CARGO_BIN_EXE_ringlab");

struct Gate {
    failures: usize,
}

impl Gate {
    fn record(&mut self, n: usize, what: &str, result: Result<String, String>) {
        match result {
            Ok(d) => println!("PASS criterion {n:>2}: {what}: {d}"),
            Err(d) => {
                self.failures += 1;
                println!("FAIL criterion {n:>2}: {what}: {d}");
            }
        }
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(t.as_secs_f64() < limit_secs as f64, || format!("took {:.1}s, limit {limit_secs}s", t.as_secs_f64()))
}

fn analyses(res: &SuiteResult) -> Vec<&RingAnalysis> {
    res.analyses.iter().map(|a| a.as_ref().expect("no default ring hits a cutoff")).collect()
}

fn find<'a>(res: &'a SuiteResult, ring: &str) -> &'a RingAnalysis {
    analyses(res).into_iter().find(|a| a.entry.name == ring).unwrap_or_else(|| panic!("{ring} not in corpus"))
}

fn checks(res: &SuiteResult, id: SuiteId) -> impl Iterator<Item = &CheckResult> {
    res.checks.iter().filter(move |c| c.suite == id.as_str())
}

fn suite_clean(res: &SuiteResult, id: SuiteId) -> Result<usize, String> {
    let mut n = 0;
    for c in checks(res, id) {
        match c.status {
            Status::Pass => n += 1,
            Status::NotApplicable => {}
            _ => return Err(format!("{} {} {}: {}", id, c.ring, c.status.label(), c.detail)),
        }
    }
    Ok(n)
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let out = Command::new(BIN).args(["analyze", "Tri(2,GF(2))", "--format", "json"]).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let verdict = &v["verdict"];
    ensure(verdict["splits"] == Value::Bool(false), || "splits is not false".into())?;
    let w = &verdict["witness"];
    ensure(w["injective"] == Value::Bool(true) && w["projective"] == Value::Bool(false), || format!("witness {w}"))?;
    ensure(verdict["witness_module"] == "R/soc", || format!("witness module {}", verdict["witness_module"]))?;
    // independent check: the reported simple against R/Soc(_R R)
    let a = analyze("Tri(2,GF(2))", Limits::default()).map_err(|e| e.to_string())?;
    let simple = w["simple"].as_u64().ok_or("no simple index")? as usize;
    let s = build_module(&a.ctx, &ModExpr::Simple(simple)).map_err(|e| e.to_string())?;
    let q = build_module(&a.ctx, &ModExpr::SocQuotient).map_err(|e| e.to_string())?;
    ensure(are_isomorphic(&s, &q).unwrap(), || "witness is not R/soc".into())?;
    ensure(is_injective(&a.ctx, &q).unwrap() && is_injective_dual(&a.ctx, &q).unwrap(), || "R/soc not injective".into())?;
    within(elapsed, 5)?;
    Ok(format!("splits=false, witness R/soc injective and not projective, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    let rings = ["Z/4", "Z/8", "Z/9", "Z/16", "GF(2)[x]/(x^2)", "GF(2)[x]/(x^3)", "GF(3)[x]/(x^2)"];
    for r in rings {
        let a = analyze(r, Limits::default()).map_err(|e| e.to_string())?;
        let cl = &a.report.classifiers;
        ensure(cl.local && !cl.division, || format!("{r} is not local non-division"))?;
        let rad = cg_radical(&a.ctx, a.ctx.regular()).map_err(|e| e.to_string())?;
        ensure(rad.is_full(), || format!("{r}: radical of R has {} elements", rad.size()))?;
        ensure(a.report.verdict.kind == TorsionKind::Improper, || format!("{r}: verdict {:?}", a.report.verdict.kind))?;
    }
    within(start.elapsed(), 30)?;
    Ok(format!("{} local rings almost small, {:.2}s", rings.len(), start.elapsed().as_secs_f64()))
}

fn criterion_3(res: &SuiteResult) -> Result<String, String> {
    let mut n = 0;
    for a in analyses(res) {
        let cl = &a.report.classifiers;
        let trivial = a.report.verdict.kind == TorsionKind::Trivial;
        ensure(cl.v_ring == trivial && trivial == cl.regular_perp_torsion, || {
            format!("{}: V-ring={} trivial={} perp={}", a.entry.name, cl.v_ring, trivial, cl.regular_perp_torsion)
        })?;
        if cl.semisimple {
            ensure(trivial && cl.regular_perp_torsion, || format!("{} semisimple but not trivial", a.entry.name))?;
            n += 1;
        }
    }
    for r in ["Z/2", "Z/3", "Z/5", "GF(2)", "GF(3)", "GF(4)", "GF(8)", "GF(9)", "Mat(2,GF(2))", "Z/6"] {
        ensure(find(res, r).report.classifiers.semisimple, || format!("{r} not semisimple"))?;
    }
    // Z/6 through its CRT components
    for r in ["Z/2", "Z/3"] {
        ensure(find(res, r).report.verdict.kind == TorsionKind::Trivial, || format!("{r} not trivial"))?;
    }
    Ok(format!("{n} semisimple rings trivial; V-ring, trivial and perp-torsion agree on all rings"))
}

fn criterion_4(res: &SuiteResult) -> Result<String, String> {
    let mut n = 0;
    for a in analyses(res) {
        for cm in &a.corpus {
            let m = &cm.module;
            let z = zstar(&a.ctx, m).unwrap();
            let h = zstar_hull(&a.ctx, m).unwrap();
            ensure(z == h, || format!("{} {}: trace {} hull {}", a.entry.name, cm.label, z.size(), h.size()))?;
            let t = cg_radical(&a.ctx, m).unwrap();
            if !t.is_zero() {
                let essential = z.is_subset(&t)
                    && t.elements().filter(|&x| x != 0).all(|x| span(m, &[x]).meet(&z).size() > 1);
                ensure(essential, || format!("{} {}: Z* not essential in the radical", a.entry.name, cm.label))?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} corpus modules, zero mismatches"))
}

fn criterion_5(res: &SuiteResult) -> Result<String, String> {
    let start = Instant::now();
    let mut n = 0;
    for a in analyses(res) {
        for cm in &a.corpus {
            let m = &cm.module;
            let fix = cg_radical(&a.ctx, m).unwrap();
            let oracle = cg_radical_oracle(&a.ctx, m).unwrap();
            ensure(fix == oracle, || format!("{} {}: fixpoint {} oracle {}", a.entry.name, cm.label, fix.size(), oracle.size()))?;
            let rho = generalov_rho(&a.ctx, m).unwrap();
            let (rm, incl) = submodule_module(m, &rho).unwrap();
            let again = incl.image_of(&generalov_rho(&a.ctx, &rm).unwrap());
            ensure(again == rho, || format!("{} {}: rho not idempotent", a.entry.name, cm.label))?;
            let perp = reject_small(&a.ctx, m).unwrap().is_full();
            ensure(rho.is_full() == perp, || format!("{} {}: rho and reject disagree", a.entry.name, cm.label))?;
            n += 1;
        }
    }
    within(start.elapsed(), 600)?;
    Ok(format!("{n} corpus modules, zero mismatches, {:.1}s", start.elapsed().as_secs_f64()))
}

fn criterion_6(res: &SuiteResult) -> Result<String, String> {
    for a in analyses(res) {
        let v = &a.report.verdict;
        ensure(v.injective_simples_projective == v.injective_simples_embed, || format!("{}: (e) != (h)", a.entry.name))?;
        ensure(v.contradictions.is_empty(), || format!("{}: {:?}", a.entry.name, v.contradictions))?;
    }
    let n = suite_clean(res, SuiteId::T4_7)?;
    Ok(format!("{n} rings, zero contradictions"))
}

fn criterion_7(res: &SuiteResult) -> Result<String, String> {
    let mut qf = Vec::new();
    for a in analyses(res) {
        let cl = &a.report.classifiers;
        ensure(cl.qf == cl.qf_right, || format!("{}: left and right self-injectivity differ", a.entry.name))?;
        if cl.qf {
            qf.push(a.entry.name.clone());
        }
    }
    for r in ["Z/4", "Z/8", "Z/9", "Z/16", "GF(2)[x]/(x^2)"] {
        ensure(qf.iter().any(|q| q == r), || format!("{r} not self-injective"))?;
    }
    suite_clean(res, SuiteId::T1_1)?;
    let tri = checks(res, SuiteId::T1_1).find(|c| c.ring == "Tri(2,GF(2))").ok_or("no Tri(2,GF(2)) result")?;
    ensure(!tri.witnesses.is_empty(), || "no violating module for Tri(2,GF(2))".into())?;
    Ok(format!("{} self-injective rings decompose; Tri(2,GF(2)) violated by {}", qf.len(), tri.witnesses[0].module))
}

fn criterion_8(res: &SuiteResult) -> Result<String, String> {
    let (mut teply, mut socle) = (0, 0);
    for a in analyses(res) {
        let r = &a.report;
        if r.teply_condition {
            teply += 1;
            ensure(r.classifiers.kasch, || format!("{}: l(r(J)) = J but not Kasch", a.entry.name))?;
        }
        if r.socle_inclusion_rl {
            socle += 1;
            ensure(r.verdict.injective_simples_projective, || format!("{}: injective simple not projective", a.entry.name))?;
        }
    }
    suite_clean(res, SuiteId::P4_10)?;
    suite_clean(res, SuiteId::P4_12)?;
    Ok(format!("{teply} rings with l(r(J)) = J, {socle} with the socle inclusion, zero violations"))
}

fn criterion_9(res: &SuiteResult) -> Result<String, String> {
    let products = ["GF(2) x Z/4", "Z/4 x Z/9", "Tri(2,GF(2)) x GF(2)"];
    for id in [SuiteId::L4_2, SuiteId::C4_3] {
        for p in products {
            let c = checks(res, id).find(|c| c.ring == p).ok_or_else(|| format!("{p} missing"))?;
            ensure(c.status == Status::Pass, || format!("{id} {p}: {}", c.detail))?;
        }
        suite_clean(res, id)?;
    }
    Ok(format!("{} products, componentwise radicals and verdicts agree", products.len()))
}

fn criterion_10(res: &SuiteResult) -> Result<String, String> {
    let mut n = 0;
    for a in analyses(res) {
        let ctx = &a.ctx;
        ensure(!a.report.classifiers.small_ring, || format!("{} is a small ring", a.entry.name))?;
        for cm in &a.corpus {
            let m = &cm.module;
            let name = || format!("{} {}", a.entry.name, cm.label);
            ensure(is_injective(ctx, m).unwrap() == is_injective_dual(ctx, m).unwrap(), || format!("{}: Baer and duality differ", name()))?;
            let h = injective_hull(ctx, m).unwrap();
            ensure(
                h.embedding.is_injective()
                    && is_injective(ctx, &h.hull).unwrap()
                    && j_socle(&h.hull).is_subset(&h.embedding.image()),
                || format!("{}: hull postcondition", name()),
            )?;
            let dd = character_dual(&character_dual(m, ctx.op_ring()), ctx.ring());
            let identity = ModuleMorphism::new(m.clone(), dd.clone(), (0..m.dim()).map(|u| m.generator(u)).collect());
            ensure(identity.is_ok() || are_isomorphic(m, &dd).unwrap(), || format!("{}: double dual", name()))?;
            n += 1;
        }
    }
    Ok(format!("{n} corpus modules, zero mismatches; no corpus ring is small"))
}

fn criterion_11() -> Result<String, String> {
    let out = Command::new(BIN)
        .args(["scan", "--predicate", "splits & !cohereditary"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    ensure(!text.lines().any(|l| l.starts_with("hit ")), || text.to_string())?;
    ensure(text.contains("0 hits"), || text.to_string())?;
    Ok("zero hits, exit code 0".into())
}

fn main() {
    let mut gate = Gate { failures: 0 };
    gate.record(1, "splitting counterexample", criterion_1());
    gate.record(2, "local rings are almost small", criterion_2());
    let corpus = default_corpus(Limits::default());
    let res = run_suite(&corpus, &SuiteId::ALL);
    gate.record(3, "V-ring law", criterion_3(&res));
    gate.record(4, "Z* identity", criterion_4(&res));
    gate.record(5, "radical oracle equivalence", criterion_5(&res));
    gate.record(6, "splitting criteria coherence", criterion_6(&res));
    gate.record(7, "QF decomposition shadow", criterion_7(&res));
    gate.record(8, "Kasch criteria", criterion_8(&res));
    gate.record(9, "product law", criterion_9(&res));
    gate.record(10, "homological self-consistency", criterion_10(&res));
    gate.record(11, "open question scan", criterion_11());
    let total_fail = res.checks.iter().filter(|c| c.status == Status::Fail).count();
    println!("suite checks: {} run, {} failed", res.checks.len(), total_fail);
    if gate.failures > 0 {
        println!("{} criteria failed", gate.failures);
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
