//! R-linear maps between finite modules.

use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::ring::Coords;
use crate::submodule::{self, Submodule};

/// A module homomorphism, stored as the images of the source generators.
#[derive(Clone, Debug)]
pub struct ModuleMorphism {
    source: FinModule,
    target: FinModule,
    images: Vec<Coords>,
}

impl ModuleMorphism {
    /// Checks additive order compatibility and linearity on ring basis elements.
    pub fn new(source: FinModule, target: FinModule, images: Vec<Coords>) -> Result<Self> {
        source.check_same_ring(&target)?;
        if images.len() != source.dim() || images.iter().any(|v| v.len() != target.dim()) {
            return Err(Error::InvalidMorphism("image table has the wrong shape".into()));
        }
        let images: Vec<Coords> =
            images.iter().map(|v| v.iter().zip(target.orders()).map(|(&a, &e)| a % e).collect()).collect();
        let f = ModuleMorphism { source, target, images };
        for u in 0..f.source.dim() {
            if !f.target.is_zero(&f.target.scale(&f.images[u], f.source.orders()[u])) {
                return Err(Error::InvalidMorphism(format!("order of generator {u} does not kill its image")));
            }
            for i in 0..f.source.ring().dim() {
                let lhs = f.apply(&f.source.basis_act(i, &f.source.generator(u)));
                let rhs = f.target.basis_act(i, &f.images[u]);
                if lhs != rhs {
                    return Err(Error::InvalidMorphism(format!("not linear for b_{i} on generator {u}")));
                }
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: FinModule, target: FinModule, images: Vec<Coords>) -> Self {
        debug_assert!(ModuleMorphism::new(source.clone(), target.clone(), images.clone()).is_ok());
        ModuleMorphism { source, target, images }
    }

    pub fn identity(m: &FinModule) -> Self {
        ModuleMorphism { source: m.clone(), target: m.clone(), images: (0..m.dim()).map(|u| m.generator(u)).collect() }
    }

    pub fn zero(source: &FinModule, target: &FinModule) -> Self {
        ModuleMorphism { source: source.clone(), target: target.clone(), images: vec![target.zero(); source.dim()] }
    }

    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    pub fn images(&self) -> &[Coords] {
        &self.images
    }

    pub fn apply(&self, x: &[u64]) -> Coords {
        let mut acc = vec![0u128; self.target.dim()];
        for (u, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (a, &v) in acc.iter_mut().zip(&self.images[u]) {
                *a += c as u128 * v as u128;
            }
        }
        acc.iter().zip(self.target.orders()).map(|(&a, &e)| (a % e as u128) as u64).collect()
    }

    pub fn apply_idx(&self, x: usize) -> usize {
        self.target.index_of(&self.apply(&self.source.coords_of(x)))
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &ModuleMorphism) -> ModuleMorphism {
        let images = self.images.iter().map(|v| after.apply(v)).collect();
        ModuleMorphism { source: self.source.clone(), target: after.target.clone(), images }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| self.target.is_zero(v))
    }

    /// Kernel in the source and image in the target.
    pub fn kernel_image(&self) -> (Submodule, Submodule) {
        let image = self.image();
        let n = self.source.len();
        let kernel = Submodule::from_indices(n, (0..n).filter(|&x| self.target.is_zero(&self.apply(&self.source.coords_of(x)))));
        (kernel, image)
    }

    pub fn image(&self) -> Submodule {
        let gens: Vec<usize> = self.images.iter().map(|v| self.target.index_of(v)).collect();
        submodule::additive_span(&self.target, &gens)
    }

    pub fn image_of(&self, n: &Submodule) -> Submodule {
        let gens: Vec<usize> = submodule::additive_generators(&self.source, n).iter().map(|&x| self.apply_idx(x)).collect();
        submodule::additive_span(&self.target, &gens)
    }

    /// Preimage of a submodule of the target.
    pub fn preimage(&self, n: &Submodule) -> Submodule {
        let len = self.source.len();
        Submodule::from_indices(len, (0..len).filter(|&x| n.contains(self.apply_idx(x))))
    }

    pub fn is_injective(&self) -> bool {
        self.image().size() as u128 == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().size() as u128 == self.target.size()
    }

    pub fn equals(&self, other: &ModuleMorphism) -> bool {
        self.images == other.images
    }
}

/// A finite direct sum with its biproduct structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: FinModule,
    pub injections: Vec<ModuleMorphism>,
    pub projections: Vec<ModuleMorphism>,
}

/// `M_1 ⊕ ... ⊕ M_t` in block form; the empty sum is the zero module.
pub fn direct_sum_all(ring: &std::sync::Arc<crate::ring::FiniteRing>, parts: &[FinModule]) -> Result<DirectSum> {
    for p in parts {
        if !(std::sync::Arc::ptr_eq(p.ring_arc(), ring) || **p.ring_arc() == **ring) {
            return Err(Error::DifferentBaseRings);
        }
    }
    let k = ring.dim();
    let dim: usize = parts.iter().map(|p| p.dim()).sum();
    let mut orders = Vec::with_capacity(dim);
    let mut offsets = Vec::with_capacity(parts.len());
    for p in parts {
        offsets.push(orders.len());
        orders.extend_from_slice(p.orders());
    }
    let mut action = vec![vec![vec![0u64; dim]; dim]; k];
    for (p, &off) in parts.iter().zip(&offsets) {
        for (i, row) in action.iter_mut().enumerate() {
            for u in 0..p.dim() {
                row[off + u][off..off + p.dim()].copy_from_slice(&p.action()[i][u]);
            }
        }
    }
    let module = FinModule::new(ring.clone(), orders, action)?;
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (p, &off) in parts.iter().zip(&offsets) {
        let inj = (0..p.dim())
            .map(|u| {
                let mut v = vec![0u64; dim];
                v[off + u] = 1 % p.orders()[u];
                v
            })
            .collect();
        injections.push(ModuleMorphism { source: p.clone(), target: module.clone(), images: inj });
        let proj = (0..dim)
            .map(|w| {
                let mut v = vec![0u64; p.dim()];
                if w >= off && w < off + p.dim() {
                    v[w - off] = 1 % p.orders()[w - off];
                }
                v
            })
            .collect();
        projections.push(ModuleMorphism { source: module.clone(), target: p.clone(), images: proj });
    }
    Ok(DirectSum { module, injections, projections })
}

/// `M ⊕ N`.
pub fn direct_sum(m: &FinModule, n: &FinModule) -> Result<DirectSum> {
    m.check_same_ring(n)?;
    direct_sum_all(m.ring_arc(), &[m.clone(), n.clone()])
}

/// The map `⊕ M_i -> N` restricting to `f_i` on each summand.
pub fn copair(sum: &DirectSum, maps: &[ModuleMorphism], target: &FinModule) -> ModuleMorphism {
    let images = maps.iter().flat_map(|f| f.images.iter().cloned()).collect();
    ModuleMorphism::new_unchecked(sum.module.clone(), target.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::spec::build_ring;
    use std::sync::Arc;

    #[test]
    fn doubling_on_z4() {
        let r = Arc::new(build_ring("Z/4").unwrap());
        let m = regular_module(&r);
        let f = ModuleMorphism::new(m.clone(), m.clone(), vec![vec![2]]).unwrap();
        let (k, i) = f.kernel_image();
        // oracle: evaluate on all four elements
        let ker: Vec<usize> = (0..4).filter(|x| (2 * x) % 4 == 0).collect();
        let img: Vec<usize> = {
            let mut v: Vec<usize> = (0..4).map(|x| (2 * x) % 4).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(k.elements().collect::<Vec<_>>(), ker);
        assert_eq!(i.elements().collect::<Vec<_>>(), img);
    }

    #[test]
    fn identity_and_zero() {
        let r = Arc::new(build_ring("Tri(2,GF(2))").unwrap());
        let m = regular_module(&r);
        let (k, i) = ModuleMorphism::identity(&m).kernel_image();
        assert_eq!((k.size(), i.size()), (1, 8));
        let (k, i) = ModuleMorphism::zero(&m, &m).kernel_image();
        assert_eq!((k.size(), i.size()), (8, 1));
    }

    #[test]
    fn biproduct_identities() {
        let r = Arc::new(build_ring("Z/4").unwrap());
        let m = regular_module(&r);
        let n = FinModule::new(r.clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        let s = direct_sum(&m, &n).unwrap();
        assert_eq!(s.module.size(), 8);
        for a in 0..2 {
            for b in 0..2 {
                let c = s.injections[a].then(&s.projections[b]);
                if a == b {
                    assert!(c.equals(&ModuleMorphism::identity(c.source())));
                } else {
                    assert!(c.is_zero());
                }
            }
        }
        let z = crate::module::zero_module(&r);
        assert_eq!(direct_sum(&m, &z).unwrap().module.size(), 4);
    }

    #[test]
    fn rejects_non_linear() {
        let r = Arc::new(build_ring("Tri(2,GF(2))").unwrap());
        let m = regular_module(&r);
        // swapping e11 and e22 is additive but not R-linear
        let bad = ModuleMorphism::new(m.clone(), m.clone(), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(matches!(bad, Err(Error::InvalidMorphism(_))));
        let z4 = regular_module(&Arc::new(build_ring("Z/4").unwrap()));
        let z2 = regular_module(&Arc::new(build_ring("Z/2").unwrap()));
        assert!(matches!(ModuleMorphism::new(z4, z2, vec![vec![1]]), Err(Error::DifferentBaseRings)));
    }
}
