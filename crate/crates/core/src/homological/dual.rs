//! Character duality `D(M) = Hom_Z(M, Q/Z)` between left `R`-modules and
//! left `op(R)`-modules.
//!
//! `D(M)` has the same coordinate orders as `M`; the vector `w` pairs with
//! `m` as `Σ_u w_u m_u / e_u` mod 1.

use std::sync::Arc;

use crate::module::FinModule;
use crate::morphism::ModuleMorphism;
use crate::ring::FiniteRing;

/// `D(M)` as a module over `op_ring`, which must be the opposite of `M`'s ring.
pub fn character_dual(m: &FinModule, op_ring: &Arc<FiniteRing>) -> FinModule {
    debug_assert!(**op_ring == m.ring().opposite());
    let e = m.orders();
    let dim = m.dim();
    // (b_i * eps_u)(m_v) = eps_u(b_i m_v) = a_{ivu} / e_u
    let action = (0..m.ring().dim())
        .map(|i| {
            (0..dim)
                .map(|u| {
                    (0..dim)
                        .map(|v| {
                            let a = m.action()[i][v][u] as u128;
                            ((e[v] as u128 * a / e[u] as u128) % e[v] as u128) as u64
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    FinModule::new(op_ring.clone(), e.to_vec(), action).expect("dual of a module is a module")
}

/// `D(f) : D(N) -> D(M)` for `f : M -> N`, given the two duals.
pub fn dual_morphism(f: &ModuleMorphism, dual_target: &FinModule, dual_source: &FinModule) -> ModuleMorphism {
    let (m, n) = (f.source(), f.target());
    let images = (0..n.dim())
        .map(|w| {
            (0..m.dim())
                .map(|u| {
                    let e = m.orders()[u] as u128;
                    let fw = f.images()[u][w] as u128;
                    ((e * fw / n.orders()[w] as u128) % e) as u64
                })
                .collect()
        })
        .collect();
    ModuleMorphism::new_unchecked(dual_target.clone(), dual_source.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::are_isomorphic;
    use crate::module::regular_module;
    use crate::spec::build_ring;

    #[test]
    fn cyclic_self_dual() {
        let r = Arc::new(build_ring("Z/4").unwrap());
        let op = Arc::new(r.opposite());
        let m = regular_module(&r);
        let d = character_dual(&m, &op);
        assert_eq!(d.size(), 4);
        let dd = character_dual(&d, &r);
        assert_eq!(dd.action(), m.action());
    }

    #[test]
    fn double_dual_on_tri() {
        let r = Arc::new(build_ring("Tri(2,GF(2))").unwrap());
        let op = Arc::new(r.opposite());
        let m = regular_module(&r);
        let lat = crate::submodule::submodule_lattice(&m, 4096).unwrap();
        for s in lat.members() {
            let q = crate::submodule::quotient_module(&m, s).unwrap().0;
            let dd = character_dual(&character_dual(&q, &op), &r);
            assert_eq!(dd.orders(), q.orders());
            assert_eq!(dd.action(), q.action());
        }
    }

    #[test]
    fn simple_duals_are_simple() {
        let r = Arc::new(build_ring("Tri(2,GF(2))").unwrap());
        let op = Arc::new(r.opposite());
        let m = regular_module(&r);
        let lat = crate::submodule::submodule_lattice(&m, 4096).unwrap();
        for &i in &lat.maximal() {
            let s = crate::submodule::quotient_module(&m, lat.get(i)).unwrap().0;
            let d = character_dual(&s, &op);
            assert_eq!(crate::submodule::submodule_lattice(&d, 4096).unwrap().len(), 2);
        }
    }

    #[test]
    fn dual_of_sum_is_sum_of_duals() {
        let r = Arc::new(build_ring("Z/4").unwrap());
        let op = Arc::new(r.opposite());
        let m = regular_module(&r);
        let n = FinModule::new(r.clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        let s = crate::morphism::direct_sum(&m, &n).unwrap().module;
        let ds = character_dual(&s, &op);
        let sd = crate::morphism::direct_sum(&character_dual(&m, &op), &character_dual(&n, &op)).unwrap().module;
        assert!(are_isomorphic(&ds, &sd).unwrap());
    }

    #[test]
    fn dual_morphism_is_linear() {
        let r = Arc::new(build_ring("Tri(2,GF(2))").unwrap());
        let op = Arc::new(r.opposite());
        let m = regular_module(&r);
        let homs = crate::hom::hom_set(&m, &m, 1 << 16).unwrap();
        let d = character_dual(&m, &op);
        for f in homs {
            let df = dual_morphism(&f, &d, &d);
            assert!(ModuleMorphism::new(d.clone(), d.clone(), df.images().to_vec()).is_ok());
        }
    }
}
