//! Simple modules, indecomposable projectives and projective covers.

use crate::context::{ProjectiveClass, RingContext, SimpleClass};
use crate::error::{Error, Result};
use crate::hom::{are_isomorphic, hom_count};
use crate::module::{zero_module, FinModule};
use crate::morphism::{copair, direct_sum_all, ModuleMorphism};
use crate::submodule::{additive_generators, extend, j_radical, quotient_module, Submodule};

use super::decompose::decompose;

/// A projective module mapping onto `M` with small kernel.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub cover: FinModule,
    pub surjection: ModuleMorphism,
    /// simple-class index of each indecomposable summand of the cover
    pub summands: Vec<usize>,
}

/// One representative per isomorphism class of simple modules.
pub fn simple_modules(ctx: &RingContext) -> Result<Vec<FinModule>> {
    Ok(ctx.simples()?.iter().map(|s| s.module.clone()).collect())
}

pub(crate) fn compute_simples(ctx: &RingContext) -> Result<Vec<SimpleClass>> {
    let lat = ctx.left_ideals()?;
    let mut out: Vec<SimpleClass> = Vec::new();
    for &i in &lat.maximal() {
        let (q, _) = quotient_module(ctx.regular(), lat.get(i))?;
        let mut seen = false;
        for s in &out {
            if are_isomorphic(&s.module, &q)? {
                seen = true;
                break;
            }
        }
        if !seen {
            let end_size = hom_count(&q, &q)?;
            out.push(SimpleClass { module: q, end_size, ideal: i });
        }
    }
    Ok(out)
}

pub(crate) fn compute_projectives(ctx: &RingContext) -> Result<Vec<ProjectiveClass>> {
    let simples = ctx.simples()?;
    let regular = ctx.regular();
    let ring = ctx.ring();
    let parts = decompose(regular, ctx.limits().module_cutoff.max(regular.size()))?;
    let mut found: Vec<Option<ProjectiveClass>> = vec![None; simples.len()];
    for part in parts {
        let p = part.module;
        let rad = j_radical(&p);
        let (top, _) = quotient_module(&p, &rad)?;
        let j = ctx.simple_index(&top).map_err(|_| Error::TopDecompositionFailure("summand of R has no simple top".into()))?;
        if found[j].is_some() {
            continue;
        }
        let gen_idx = (0..p.len())
            .find(|&x| !rad.contains(x))
            .ok_or_else(|| Error::TopDecompositionFailure("zero summand".into()))?;
        let generator = p.coords_of(gen_idx);
        let elems = ring.elements();
        let multipliers = (0..p.dim())
            .map(|u| {
                let g = p.generator(u);
                elems
                    .iter()
                    .find(|r| p.ring_act(r, &generator) == g)
                    .cloned()
                    .ok_or_else(|| Error::TopDecompositionFailure("summand is not cyclic".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let ann = Submodule::from_indices(
            regular.len(),
            (0..elems.len()).filter(|&r| p.is_zero(&p.ring_act(&elems[r], &generator))),
        );
        let annihilator = additive_generators(regular, &ann).iter().map(|&x| regular.coords_of(x)).collect();
        found[j] = Some(ProjectiveClass { module: p, generator, multipliers, annihilator });
    }
    found
        .into_iter()
        .enumerate()
        .map(|(j, p)| p.ok_or_else(|| Error::TopDecompositionFailure(format!("no projective with top simple {j}"))))
        .collect()
}

/// `log_b(n)` for an exact power.
fn exact_log(n: u128, b: u128) -> Result<usize> {
    let mut k = 0;
    let mut acc = 1u128;
    while acc < n {
        acc *= b;
        k += 1;
    }
    if acc != n {
        return Err(Error::TopDecompositionFailure(format!("{n} is not a power of {b}")));
    }
    Ok(k)
}

/// Multiplicity of each simple class in the top `M / Rad M`.
pub fn top_multiplicities(ctx: &RingContext, m: &FinModule) -> Result<Vec<usize>> {
    ctx.simples()?
        .iter()
        .map(|s| exact_log(hom_count(m, &s.module)?, s.end_size))
        .collect()
}

/// Projective cover assembled from indecomposable projectives matching the top.
pub fn projective_cover(ctx: &RingContext, m: &FinModule) -> Result<CoverResult> {
    ctx.check_module(m)?;
    m.check_enumerable()?;
    let ring = ctx.ring();
    if m.size() == 1 {
        let z = zero_module(ring);
        return Ok(CoverResult { surjection: ModuleMorphism::zero(&z, m), cover: z, summands: vec![] });
    }
    let mult = top_multiplicities(ctx, m)?;
    let projectives = ctx.projectives()?;
    let mut covered = j_radical(m);
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    let mut summands = Vec::new();
    for (j, &count) in mult.iter().enumerate() {
        let pc = &projectives[j];
        for _ in 0..count {
            let x = (0..m.len())
                .find(|&x| {
                    !covered.contains(x) && {
                        let c = m.coords_of(x);
                        pc.annihilator.iter().all(|a| m.is_zero(&m.ring_act(a, &c)))
                    }
                })
                .ok_or_else(|| Error::TopDecompositionFailure(format!("no lift for a copy of simple {j}")))?;
            let xc = m.coords_of(x);
            let images = pc.multipliers.iter().map(|r| m.ring_act(r, &xc)).collect();
            maps.push(ModuleMorphism::new_unchecked(pc.module.clone(), m.clone(), images));
            parts.push(pc.module.clone());
            summands.push(j);
            covered = extend(m, &covered, x);
        }
    }
    let sum = direct_sum_all(ring, &parts)?;
    let surjection = copair(&sum, &maps, m);
    if !covered.is_full() || !surjection.is_surjective() {
        return Err(Error::TopDecompositionFailure("cover map is not onto".into()));
    }
    Ok(CoverResult { cover: sum.module, surjection, summands })
}

/// `M` is projective iff it is its own projective cover.
pub fn is_projective(ctx: &RingContext, m: &FinModule) -> Result<bool> {
    Ok(projective_cover(ctx, m)?.cover.size() == m.size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Limits;
    use crate::spec::build_ring;

    fn ctx(s: &str) -> RingContext {
        RingContext::new(build_ring(s).unwrap(), Limits::default())
    }

    #[test]
    fn simple_counts() {
        assert_eq!(simple_modules(&ctx("GF(4)")).unwrap().len(), 1);
        assert_eq!(simple_modules(&ctx("Tri(2,GF(2))")).unwrap().len(), 2);
        let z6 = simple_modules(&ctx("Z/6")).unwrap();
        let mut sizes: Vec<u128> = z6.iter().map(|s| s.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn cover_of_z2_over_z4() {
        let c = ctx("Z/4");
        let s = simple_modules(&c).unwrap()[0].clone();
        let cov = projective_cover(&c, &s).unwrap();
        assert_eq!(cov.cover.size(), 4);
        assert!(are_isomorphic(&cov.cover, c.regular()).unwrap());
        let (k, _) = cov.surjection.kernel_image();
        assert!(k.is_subset(&j_radical(&cov.cover)));
        assert!(!is_projective(&c, &s).unwrap());
        assert!(is_projective(&c, c.regular()).unwrap());
    }

    #[test]
    fn tri_mod_socle_not_projective() {
        let c = ctx("Tri(2,GF(2))");
        let m = c.regular();
        let soc = crate::submodule::j_socle(m);
        let (q, _) = quotient_module(m, &soc).unwrap();
        assert_eq!(q.size(), 2);
        assert!(!is_projective(&c, &q).unwrap());
        let regular_cover = projective_cover(&c, m).unwrap();
        assert_eq!(regular_cover.cover.size(), 8);
        assert_eq!(c.projectives().unwrap().len(), 2);
    }
}
