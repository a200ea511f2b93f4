//! Homomorphism groups `Hom_R(M, N)`, solved prime by prime over `Z/p^a`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::modsnf::{factorize, inverse_mod, kernel_basis, lcm, span_basis, PrimePower};
use crate::module::FinModule;
use crate::submodule::{j_radical, j_socle};
use crate::morphism::ModuleMorphism;
use crate::ring::Coords;

/// Default bound on `|Hom(M, N)|` for explicit enumeration.
pub const DEFAULT_HOM_CUTOFF: u128 = 1 << 16;

/// `Hom(M, N)` as a direct sum of cyclic groups, each given by a generating
/// morphism (as images of the source generators) and its order.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: FinModule,
    target: FinModule,
    basis: Vec<(Vec<Coords>, u64)>,
}

impl HomSpace {
    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    /// `|Hom(M, N)|`.
    pub fn count(&self) -> u128 {
        self.basis.iter().map(|&(_, o)| o as u128).product()
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_morphisms(&self) -> Vec<ModuleMorphism> {
        (0..self.basis.len())
            .map(|t| {
                let mut c = vec![0u64; self.basis.len()];
                c[t] = 1;
                self.combination(&c)
            })
            .collect()
    }

    /// The morphism `Σ c_t g_t`.
    pub fn combination(&self, coeffs: &[u64]) -> ModuleMorphism {
        let (m, n) = (self.source.dim(), self.target.dim());
        let mut images = vec![vec![0u128; n]; m];
        for ((g, _), &c) in self.basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for u in 0..m {
                for w in 0..n {
                    images[u][w] += c as u128 * g[u][w] as u128;
                }
            }
        }
        let images = images
            .iter()
            .map(|v| v.iter().zip(self.target.orders()).map(|(&a, &e)| (a % e as u128) as u64).collect())
            .collect();
        ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), images)
    }

    /// All morphisms in mixed-radix order of their coefficients.
    pub fn iter(&self) -> impl Iterator<Item = ModuleMorphism> + '_ {
        let orders: Vec<u64> = self.basis.iter().map(|&(_, o)| o).collect();
        let total = self.count();
        (0..total).map(move |mut idx| {
            let mut c = vec![0u64; orders.len()];
            for t in (0..orders.len()).rev() {
                c[t] = (idx % orders[t] as u128) as u64;
                idx /= orders[t] as u128;
            }
            self.combination(&c)
        })
    }

    pub fn random(&self, rng: &mut impl Rng) -> ModuleMorphism {
        let c: Vec<u64> = self.basis.iter().map(|&(_, o)| rng.gen_range(0..o)).collect();
        self.combination(&c)
    }
}

/// Solves the linear congruences defining `Hom(M, N)`.
pub fn hom_space(m: &FinModule, n: &FinModule) -> Result<HomSpace> {
    m.check_same_ring(n)?;
    let (dm, dn, k) = (m.dim(), n.dim(), m.ring().dim());
    let nvars = dm * dn;
    let var = |u: usize, w: usize| u * dn + w;
    let exponent = n.orders().iter().fold(1u64, |a, &b| lcm(a, b));
    let mut basis = Vec::new();

    for (p, _) in factorize(exponent) {
        let bval: Vec<u32> = n.orders().iter().map(|&e| vp(e, p)).collect();
        let a = *bval.iter().max().unwrap();
        if a == 0 {
            continue;
        }
        let pp = PrimePower::new(p, a);
        let modulus = pp.modulus as i128;
        // rows of the system, each already scaled to live mod p^a
        let mut rows: Vec<Vec<i128>> = Vec::new();
        let mut push = |coeffs: Vec<(usize, i128)>, s: u32| {
            if s == 0 {
                return;
            }
            let scale = p.pow(a - s) as i128;
            let mut row = vec![0i128; nvars];
            for (j, c) in coeffs {
                row[j] = (row[j] + c * scale).rem_euclid(modulus);
            }
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        };
        for u in 0..dm {
            for w in 0..dn {
                push(vec![(var(u, w), m.orders()[u] as i128)], bval[w]);
            }
        }
        for i in 0..k {
            for u in 0..dm {
                for w2 in 0..dn {
                    let mut coeffs = Vec::new();
                    for v in 0..dm {
                        let c = m.action()[i][u][v] as i128;
                        if c != 0 {
                            coeffs.push((var(v, w2), c));
                        }
                    }
                    for w in 0..dn {
                        let c = n.action()[i][w][w2] as i128;
                        if c != 0 {
                            coeffs.push((var(u, w), -c));
                        }
                    }
                    push(coeffs, bval[w2]);
                }
            }
        }
        let data: Vec<u64> = rows.iter().flatten().map(|&x| x as u64).collect();
        let kernel = kernel_basis(&pp, rows.len(), nvars, data);
        // x ↦ (p^{a-b_j} x_j) kills exactly the trivial solutions p^{b_j} e_j
        let cols: Vec<Vec<u64>> = kernel
            .iter()
            .map(|g| {
                (0..nvars)
                    .map(|j| {
                        let b = bval[j % dn];
                        ((g.vector[j] as u128 * p.pow(a - b) as u128) % pp.modulus as u128) as u64
                    })
                    .collect()
            })
            .collect();
        for g in span_basis(&pp, nvars, &cols) {
            if g.order == 1 {
                continue;
            }
            let mut images = vec![vec![0u64; dn]; dm];
            for u in 0..dm {
                for w in 0..dn {
                    let j = var(u, w);
                    let b = bval[w];
                    if b == 0 {
                        continue;
                    }
                    let y = g.vector[j] / p.pow(a - b); // residue mod p^b
                    images[u][w] = crt_embed(y, p.pow(b), n.orders()[w]);
                }
            }
            basis.push((images, g.order));
        }
    }
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis })
}

fn vp(mut e: u64, p: u64) -> u32 {
    let mut v = 0;
    while e.is_multiple_of(p) {
        e /= p;
        v += 1;
    }
    v
}

/// The element of `Z/n` that is `y` mod `q` (a prime power dividing `n`) and
/// `0` modulo the cofactor.
fn crt_embed(y: u64, q: u64, n: u64) -> u64 {
    let c = n / q;
    let inv = inverse_mod(c % q, q).expect("coprime cofactor");
    ((y as u128 * inv as u128 % q as u128) * c as u128 % n as u128) as u64
}

pub fn hom_count(m: &FinModule, n: &FinModule) -> Result<u128> {
    Ok(hom_space(m, n)?.count())
}

/// Every morphism `M -> N`, or an error when there are more than `cutoff`.
pub fn hom_set(m: &FinModule, n: &FinModule, cutoff: u128) -> Result<Vec<ModuleMorphism>> {
    let h = hom_space(m, n)?;
    let c = h.count();
    if c > cutoff {
        return Err(Error::EnumerationCutoffExceeded(c, cutoff));
    }
    Ok(h.iter().collect())
}

/// Multiset of prime-power cyclic factors of the additive group.
pub fn additive_type(m: &FinModule) -> Vec<u64> {
    let mut out: Vec<u64> = m
        .orders()
        .iter()
        .flat_map(|&e| factorize(e).into_iter().map(|(p, k)| p.pow(k)))
        .collect();
    out.sort_unstable();
    out
}

/// Injectivity tester: a map out of `M` is injective iff it is nonzero on
/// every nonzero socle element.
pub(crate) struct InjectivityTest {
    socle: Vec<Coords>,
}

impl InjectivityTest {
    pub(crate) fn new(m: &FinModule) -> Self {
        let soc = j_socle(m);
        InjectivityTest { socle: soc.elements().skip(1).map(|x| m.coords_of(x)).collect() }
    }

    pub(crate) fn is_injective(&self, f: &ModuleMorphism) -> bool {
        self.socle.iter().all(|s| !f.target().is_zero(&f.apply(s)))
    }
}

/// Decides `M ≅ N`.
///
/// Invariants are compared first; then random morphisms are tried; then the
/// full morphism set is searched, directly when it is small and through
/// indecomposable summands otherwise.
pub fn are_isomorphic(m: &FinModule, n: &FinModule) -> Result<bool> {
    Ok(isomorphism(m, n, DEFAULT_HOM_CUTOFF)?.is_some() || iso_by_summands(m, n)?)
}

/// An explicit isomorphism, when one is found by sampling or enumeration
/// within `cutoff`. `None` means none exists, unless the morphism set is
/// larger than `cutoff`.
pub fn isomorphism(m: &FinModule, n: &FinModule, cutoff: u128) -> Result<Option<ModuleMorphism>> {
    match iso_search(m, n, cutoff)? {
        IsoSearch::Found(f) => Ok(Some(f)),
        _ => Ok(None),
    }
}

enum IsoSearch {
    Found(ModuleMorphism),
    Impossible,
    Undecided,
}

fn iso_search(m: &FinModule, n: &FinModule, cutoff: u128) -> Result<IsoSearch> {
    m.check_same_ring(n)?;
    if m.size() != n.size() || additive_type(m) != additive_type(n) {
        return Ok(IsoSearch::Impossible);
    }
    m.check_enumerable()?;
    n.check_enumerable()?;
    if j_radical(m).size() != j_radical(n).size() || j_socle(m).size() != j_socle(n).size() {
        return Ok(IsoSearch::Impossible);
    }
    let h = hom_space(m, n)?;
    let c = h.count();
    if c != hom_count(m, m)? || c != hom_count(n, n)? {
        return Ok(IsoSearch::Impossible);
    }
    let test = InjectivityTest::new(m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..256 {
        let f = h.random(&mut rng);
        if test.is_injective(&f) {
            return Ok(IsoSearch::Found(f));
        }
    }
    if c <= cutoff {
        return Ok(match h.iter().find(|f| test.is_injective(f)) {
            Some(f) => IsoSearch::Found(f),
            None => IsoSearch::Impossible,
        });
    }
    Ok(IsoSearch::Undecided)
}

/// Fallback for large morphism sets: compare indecomposable summands.
fn iso_by_summands(m: &FinModule, n: &FinModule) -> Result<bool> {
    if !matches!(iso_search(m, n, DEFAULT_HOM_CUTOFF)?, IsoSearch::Undecided) {
        return Ok(false);
    }
    let dm = crate::homological::decompose(m, crate::submodule::DEFAULT_MODULE_CUTOFF.max(m.size()))?;
    let dn = crate::homological::decompose(n, crate::submodule::DEFAULT_MODULE_CUTOFF.max(n.size()))?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    if dm.len() == 1 {
        // indecomposable: search the whole morphism set lazily
        let h = hom_space(m, n)?;
        let test = InjectivityTest::new(m);
        return Ok(h.iter().any(|f| test.is_injective(&f)));
    }
    let mut used = vec![false; dn.len()];
    for a in &dm {
        let mut matched = false;
        for (j, b) in dn.iter().enumerate() {
            if !used[j] && are_isomorphic(&a.module, &b.module)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::spec::build_ring;
    use std::sync::Arc;

    fn ring(s: &str) -> Arc<crate::ring::FiniteRing> {
        Arc::new(build_ring(s).unwrap())
    }

    /// Oracle: all additive maps given by generator images, filtered by
    /// validity.
    fn brute_hom_count(m: &FinModule, n: &FinModule) -> usize {
        let nn = n.len();
        let dm = m.dim();
        let total = nn.pow(dm as u32);
        (0..total)
            .filter(|&idx| {
                let mut t = idx;
                let images: Vec<Coords> = (0..dm)
                    .map(|_| {
                        let x = t % nn;
                        t /= nn;
                        n.coords_of(x)
                    })
                    .collect();
                ModuleMorphism::new(m.clone(), n.clone(), images).is_ok()
            })
            .count()
    }

    #[test]
    fn z2_into_z4() {
        let r = ring("Z/4");
        let z4 = regular_module(&r);
        let z2 = FinModule::new(r.clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        let homs = hom_set(&z2, &z4, DEFAULT_HOM_CUTOFF).unwrap();
        assert_eq!(homs.len(), brute_hom_count(&z2, &z4));
        assert_eq!(homs.len(), 2);
        let mut imgs: Vec<u64> = homs.iter().map(|f| f.images()[0][0]).collect();
        imgs.sort();
        assert_eq!(imgs, vec![0, 2]);
    }

    #[test]
    fn into_zero_and_fields() {
        let r = ring("GF(2)");
        let m = regular_module(&r);
        let z = crate::module::zero_module(&r);
        assert_eq!(hom_count(&m, &z).unwrap(), 1);
        assert_eq!(hom_count(&m, &m).unwrap(), 2);
    }

    #[test]
    fn counts_match_brute_force() {
        for spec in ["Z/6", "Z/4", "Tri(2,GF(2))", "GF(4)", "Z/2 x Z/4", "GF(2)[x]/(x^2)"] {
            let r = ring(spec);
            let m = regular_module(&r);
            let lat = crate::submodule::submodule_lattice(&m, 4096).unwrap();
            let mods: Vec<FinModule> = lat
                .members()
                .iter()
                .map(|s| crate::submodule::quotient_module(&m, s).unwrap().0)
                .chain(lat.members().iter().map(|s| crate::submodule::submodule_module(&m, s).unwrap().0))
                .collect();
            for a in &mods {
                for b in &mods {
                    if (b.len() as u128).pow(a.dim() as u32) > 5000 {
                        continue;
                    }
                    assert_eq!(hom_count(a, b).unwrap() as usize, brute_hom_count(a, b), "{spec}");
                }
            }
        }
    }

    #[test]
    fn cutoff_error() {
        let r = ring("GF(2)");
        let m = FinModule::new(r, vec![2; 5], vec![(0..5).map(|u| (0..5).map(|v| (u == v) as u64).collect()).collect()]).unwrap();
        assert!(matches!(hom_set(&m, &m, 1000), Err(Error::EnumerationCutoffExceeded(_, 1000))));
    }

    #[test]
    fn isomorphism_tests() {
        let r = ring("Z/4");
        let z4 = regular_module(&r);
        let v = FinModule::new(r.clone(), vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert!(!are_isomorphic(&v, &z4).unwrap());
        assert!(are_isomorphic(&z4, &z4).unwrap());

        let t = ring("Tri(2,GF(2))");
        let m = regular_module(&t);
        // the left ideals R e11 and R e12
        let a = crate::submodule::span(&m, &[m.index_of(&[1, 0, 0])]);
        let b = crate::submodule::span(&m, &[m.index_of(&[0, 1, 0])]);
        assert_eq!((a.size(), b.size()), (2, 2));
        let sa = crate::submodule::submodule_module(&m, &a).unwrap().0;
        let sb = crate::submodule::submodule_module(&m, &b).unwrap().0;
        assert!(are_isomorphic(&sa, &sb).unwrap());
        // R e22 is not isomorphic to either
        let c = crate::submodule::span(&m, &[m.index_of(&[0, 0, 1])]);
        let sc = crate::submodule::submodule_module(&m, &c).unwrap().0;
        assert!(!are_isomorphic(&sa, &sc).unwrap());
    }
}
