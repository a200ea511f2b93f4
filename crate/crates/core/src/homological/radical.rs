//! Radical, socle, essential and small submodules.

use crate::error::Result;
use crate::module::FinModule;
use crate::submodule::{join, submodule_lattice, Submodule, SubmoduleSet};

pub use crate::submodule::{j_radical, j_socle};

/// Intersection of the maximal submodules.
pub fn radical(m: &FinModule, cutoff: u128) -> Result<Submodule> {
    let lat = submodule_lattice(m, cutoff)?;
    Ok(lattice_radical(&lat))
}

/// Sum of the minimal submodules.
pub fn socle(m: &FinModule, cutoff: u128) -> Result<Submodule> {
    let lat = submodule_lattice(m, cutoff)?;
    Ok(lattice_socle(&lat))
}

pub fn lattice_radical(lat: &SubmoduleSet) -> Submodule {
    lat.maximal().iter().fold(lat.get(lat.top()).clone(), |acc, &i| acc.meet(lat.get(i)))
}

pub fn lattice_socle(lat: &SubmoduleSet) -> Submodule {
    let m = lat.ambient();
    lat.minimal().iter().fold(Submodule::zero(m), |acc, &i| join(m, &acc, lat.get(i)))
}

/// `N ⊴ M`: `N` meets `Rx` nontrivially for every nonzero `x`.
pub fn is_essential(m: &FinModule, n: &Submodule) -> bool {
    (1..m.len()).all(|x| {
        let c = crate::submodule::span(m, &[x]);
        c.bits().intersect(n.bits()).count() > 1
    })
}

/// `N ⊴ M` via `Soc(M) ⊆ N`, valid for finite modules.
pub fn is_essential_by_socle(m: &FinModule, n: &Submodule) -> bool {
    j_socle(m).is_subset(n)
}

/// `N ≪ M`, i.e. `N ⊆ Rad M` for finite modules.
pub fn is_small_in(m: &FinModule, n: &Submodule) -> bool {
    n.is_subset(&j_radical(m))
}

/// `N + K ≠ M` for every proper `K`, straight from the lattice.
pub fn is_small_in_direct(lat: &SubmoduleSet, n: usize) -> bool {
    (0..lat.top()).all(|k| lat.join(n, k) != lat.top())
}

/// `N ∩ K ≠ 0` for every nonzero `K`, straight from the lattice.
pub fn is_essential_direct(lat: &SubmoduleSet, n: usize) -> bool {
    (1..lat.len()).all(|k| lat.meet(n, k) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::spec::build_ring;
    use std::sync::Arc;

    fn reg(s: &str) -> FinModule {
        regular_module(&Arc::new(build_ring(s).unwrap()))
    }

    #[test]
    fn z4() {
        let m = reg("Z/4");
        let rad = radical(&m, 4096).unwrap();
        assert_eq!(rad.elements().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(rad, j_radical(&m));
        assert!(is_essential(&m, &rad));
        assert!(is_small_in(&m, &rad));
        assert!(!is_essential(&m, &Submodule::zero(&m)));
    }

    #[test]
    fn tri_socle() {
        let m = reg("Tri(2,GF(2))");
        let soc = socle(&m, 4096).unwrap();
        assert_eq!(soc.size(), 4);
        assert_eq!(soc, j_socle(&m));
        assert_eq!(radical(&m, 4096).unwrap().size(), 2);
    }

    #[test]
    fn simple_module() {
        let m = reg("GF(4)");
        assert!(radical(&m, 4096).unwrap().is_zero());
        assert!(socle(&m, 4096).unwrap().is_full());
    }

    #[test]
    fn agrees_with_direct_definitions() {
        for s in ["Z/8", "Tri(2,GF(2))", "Z/12", "GF(2)[x]/(x^3)"] {
            let m = reg(s);
            let lat = submodule_lattice(&m, 4096).unwrap();
            for (i, n) in lat.members().iter().enumerate() {
                assert_eq!(is_small_in(&m, n), is_small_in_direct(&lat, i), "{s}");
                assert_eq!(is_essential(&m, n), is_essential_direct(&lat, i), "{s}");
                assert_eq!(is_essential(&m, n), is_essential_by_socle(&m, n), "{s}");
            }
        }
    }
}
