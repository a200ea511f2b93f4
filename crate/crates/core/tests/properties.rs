//! Structural invariants on random choices of ring, modules and maps.

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ringlab_core::corpus::{corpus_modules, CorpusModule};
use ringlab_core::hom::{are_isomorphic, hom_count, hom_space};
use ringlab_core::homological::{character_dual, decompose, injective_hull, is_injective, j_socle};
use ringlab_core::morphism::direct_sum;
use ringlab_core::submodule::{quotient_module, submodule_lattice, submodule_module};
use ringlab_core::torsion::{cg_radical, is_small_module_by_injectives, singular_submodule, zstar};
use ringlab_core::{build_ring, FinModule, Limits, RingContext};

const SPECS: &[&str] = &["Z/4", "Z/12", "GF(2)[x]/(x^3)", "Tri(2,GF(2))", "op(Tri(2,GF(2)))", "GF(2) x Z/4", "Mat(2,GF(2))"];
const MAX: u128 = 64;

struct Fixture {
    ctx: RingContext,
    modules: Vec<CorpusModule>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        SPECS
            .iter()
            .map(|s| {
                let ctx = RingContext::new(build_ring(s).unwrap(), Limits::default());
                let modules = corpus_modules(&ctx).unwrap().into_iter().filter(|m| m.module.size() <= MAX).collect();
                Fixture { ctx, modules }
            })
            .collect()
    })
}

fn pick(ring: usize, i: usize) -> (&'static Fixture, &'static FinModule) {
    let f = &fixtures()[ring % SPECS.len()];
    (f, &f.modules[i % f.modules.len()].module)
}

fn ring_and_modules() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0..SPECS.len(), any::<usize>(), any::<usize>(), any::<usize>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn biproduct_hom_law((r, a, b, c) in ring_and_modules()) {
        let (_, m) = pick(r, a);
        let (_, n) = pick(r, b);
        let (_, k) = pick(r, c);
        prop_assume!(m.size() * n.size() <= 256);
        let s = direct_sum(m, n).unwrap().module;
        prop_assert_eq!(hom_count(&s, k).unwrap(), hom_count(m, k).unwrap() * hom_count(n, k).unwrap());
        prop_assert_eq!(hom_count(k, &s).unwrap(), hom_count(k, m).unwrap() * hom_count(k, n).unwrap());
    }

    #[test]
    fn isomorphism_is_an_equivalence((r, a, b, c) in ring_and_modules()) {
        let (_, m) = pick(r, a);
        let (_, n) = pick(r, b);
        let (_, k) = pick(r, c);
        prop_assert!(are_isomorphic(m, m).unwrap());
        let mn = are_isomorphic(m, n).unwrap();
        prop_assert_eq!(mn, are_isomorphic(n, m).unwrap());
        if mn && are_isomorphic(n, k).unwrap() {
            prop_assert!(are_isomorphic(m, k).unwrap());
        }
        // the sum is symmetric up to isomorphism
        if m.size() * n.size() <= 256 {
            let s = direct_sum(m, n).unwrap().module;
            let t = direct_sum(n, m).unwrap().module;
            prop_assert!(are_isomorphic(&s, &t).unwrap());
        }
    }

    #[test]
    fn lattice_correspondence((r, a, i) in (0..SPECS.len(), any::<usize>(), any::<usize>())) {
        let (_, m) = pick(r, a);
        let lat = submodule_lattice(m, 4096).unwrap();
        let n = lat.get(i % lat.len());
        let (q, proj) = quotient_module(m, n).unwrap();
        let above = lat.members().iter().filter(|k| n.is_subset(k)).count();
        prop_assert_eq!(submodule_lattice(&q, 4096).unwrap().len(), above);
        let (s, _) = submodule_module(m, n).unwrap();
        let below = lat.members().iter().filter(|k| k.is_subset(n)).count();
        prop_assert_eq!(submodule_lattice(&s, 4096).unwrap().len(), below);
        prop_assert_eq!(proj.image_of(n).size(), 1);
    }

    #[test]
    fn small_class_is_closed((r, a, b, i) in ring_and_modules()) {
        let (f, m) = pick(r, a);
        let (_, n) = pick(r, b);
        let ctx = &f.ctx;
        let small = is_small_module_by_injectives(ctx, m).unwrap();
        if small {
            let lat = submodule_lattice(m, 4096).unwrap();
            let k = lat.get(i % lat.len());
            prop_assert!(is_small_module_by_injectives(ctx, &submodule_module(m, k).unwrap().0).unwrap());
            prop_assert!(is_small_module_by_injectives(ctx, &quotient_module(m, k).unwrap().0).unwrap());
            if is_small_module_by_injectives(ctx, n).unwrap() && m.size() * n.size() <= 1024 {
                prop_assert!(is_small_module_by_injectives(ctx, &direct_sum(m, n).unwrap().module).unwrap());
            }
        }
        // injective modules are never small unless zero
        if is_injective(ctx, m).unwrap() {
            prop_assert!(!small);
        }
    }

    #[test]
    fn radical_laws((r, a, b, seed) in ring_and_modules()) {
        let (f, m) = pick(r, a);
        let (_, n) = pick(r, b);
        let ctx = &f.ctx;
        let t = cg_radical(ctx, m).unwrap();
        prop_assert!(zstar(ctx, m).unwrap().is_subset(&t));
        let (tm, incl) = submodule_module(m, &t).unwrap();
        prop_assert_eq!(incl.image_of(&cg_radical(ctx, &tm).unwrap()), t.clone());
        let (q, _) = quotient_module(m, &t).unwrap();
        prop_assert!(cg_radical(ctx, &q).unwrap().is_zero());
        let hs = hom_space(m, n).unwrap();
        let h = hs.random(&mut ChaCha8Rng::seed_from_u64(seed as u64));
        prop_assert!(h.image_of(&t).is_subset(&cg_radical(ctx, n).unwrap()));
        prop_assert!(h.image_of(&singular_submodule(ctx, m).unwrap()).is_subset(&singular_submodule(ctx, n).unwrap()));
    }

    #[test]
    fn duality_reverses_homs((r, a, b) in (0..SPECS.len(), any::<usize>(), any::<usize>())) {
        let (f, m) = pick(r, a);
        let (_, n) = pick(r, b);
        let op = f.ctx.op_ring();
        let (dm, dn) = (character_dual(m, op), character_dual(n, op));
        prop_assert_eq!(dm.size(), m.size());
        prop_assert_eq!(hom_count(m, n).unwrap(), hom_count(&dn, &dm).unwrap());
        let ddm = character_dual(&dm, f.ctx.ring());
        prop_assert_eq!(ddm.action(), m.action());
    }

    #[test]
    fn hulls_are_injective_essential_and_idempotent((r, a) in (0..SPECS.len(), any::<usize>())) {
        let (f, m) = pick(r, a);
        let ctx = &f.ctx;
        let h = injective_hull(ctx, m).unwrap();
        prop_assert!(h.embedding.is_injective());
        prop_assert!(is_injective(ctx, &h.hull).unwrap());
        prop_assert!(j_socle(&h.hull).is_subset(&h.embedding.image()));
        prop_assert_eq!(is_injective(ctx, m).unwrap(), h.hull.size() == m.size());
        prop_assert!(are_isomorphic(&injective_hull(ctx, &h.hull).unwrap().hull, &h.hull).unwrap());
    }

    #[test]
    fn decompositions_are_indecomposable((r, a) in (0..SPECS.len(), any::<usize>())) {
        let (_, m) = pick(r, a);
        let parts = decompose(m, 4096).unwrap();
        prop_assert_eq!(parts.iter().map(|p| p.module.size()).product::<u128>(), m.size());
        for p in &parts {
            prop_assert_eq!(decompose(&p.module, 4096).unwrap().len(), 1);
            let round = p.inclusion.then(&p.projection);
            prop_assert!(round.equals(&ringlab_core::ModuleMorphism::identity(&p.module)));
        }
    }
}
