//! Per-ring data shared by the structural and torsion computations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::bitset::BitSet;

use crate::error::{Error, Result};
use crate::hom::DEFAULT_HOM_CUTOFF;
use crate::module::{regular_module, FinModule};
use crate::ring::{Coords, FiniteRing};
use crate::submodule::{j_radical, submodule_lattice, Submodule, SubmoduleSet, DEFAULT_MODULE_CUTOFF};

/// Resource limits for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// largest `|M|` whose submodule lattice is enumerated
    pub module_cutoff: u128,
    /// largest `|Hom(M, N)|` that is enumerated explicitly
    pub hom_cutoff: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { module_cutoff: DEFAULT_MODULE_CUTOFF, hom_cutoff: DEFAULT_HOM_CUTOFF }
    }
}

/// A simple module class.
#[derive(Clone, Debug)]
pub struct SimpleClass {
    pub module: FinModule,
    /// `|End(S)|`
    pub end_size: u128,
    /// the maximal left ideal it was built from, as lattice index
    pub ideal: usize,
}

/// An indecomposable projective `P = R p` with top isomorphic to a simple class.
#[derive(Clone, Debug)]
pub struct ProjectiveClass {
    pub module: FinModule,
    /// cyclic generator of `P`
    pub generator: Coords,
    /// ring elements `r_u` with `r_u p` equal to the `u`-th coordinate generator
    pub multipliers: Vec<Coords>,
    /// additive generators of the left annihilator of `generator`
    pub annihilator: Vec<Coords>,
}

/// An indecomposable injective `E = D(P)` for an indecomposable projective
/// `P` over the opposite ring, with its radical.
#[derive(Clone, Debug)]
pub struct InjectiveClass {
    pub module: FinModule,
    pub radical: Submodule,
}

/// Lazily computed facts about one ring. Not shared between analyses.
pub struct RingContext {
    ring: Arc<FiniteRing>,
    op_ring: Arc<FiniteRing>,
    limits: Limits,
    regular: FinModule,
    lattice: OnceLock<Result<Arc<SubmoduleSet>>>,
    ideals: OnceLock<Vec<(FinModule, FinModule)>>,
    simples: OnceLock<Result<Vec<SimpleClass>>>,
    projectives: OnceLock<Result<Vec<ProjectiveClass>>>,
    op: OnceLock<Box<RingContext>>,
    injectives: OnceLock<Result<Vec<InjectiveClass>>>,
    small_cyclic: Mutex<HashMap<BitSet, bool>>,
}

impl std::fmt::Debug for RingContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingContext").field("ring", &self.ring.name()).field("limits", &self.limits).finish()
    }
}

impl RingContext {
    pub fn new(ring: FiniteRing, limits: Limits) -> Self {
        let ring = Arc::new(ring);
        let op_ring = Arc::new(ring.opposite());
        RingContext::with_op(ring, op_ring, limits)
    }

    fn with_op(ring: Arc<FiniteRing>, op_ring: Arc<FiniteRing>, limits: Limits) -> Self {
        let regular = regular_module(&ring);
        RingContext {
            ring,
            op_ring,
            limits,
            regular,
            lattice: OnceLock::new(),
            ideals: OnceLock::new(),
            simples: OnceLock::new(),
            projectives: OnceLock::new(),
            op: OnceLock::new(),
            injectives: OnceLock::new(),
            small_cyclic: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn op_ring(&self) -> &Arc<FiniteRing> {
        &self.op_ring
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// `_R R`.
    pub fn regular(&self) -> &FinModule {
        &self.regular
    }

    /// Context of the opposite ring, whose own opposite is this ring.
    pub fn op(&self) -> &RingContext {
        self.op.get_or_init(|| Box::new(RingContext::with_op(self.op_ring.clone(), self.ring.clone(), self.limits)))
    }

    /// Lattice of left ideals.
    pub fn left_ideals(&self) -> Result<Arc<SubmoduleSet>> {
        self.lattice
            .get_or_init(|| submodule_lattice(&self.regular, self.limits.module_cutoff).map(Arc::new))
            .clone()
    }

    /// Every left ideal `I` paired with `R/I`, both as modules, in lattice order.
    pub fn ideal_modules(&self) -> Result<&[(FinModule, FinModule)]> {
        let lat = self.left_ideals()?;
        Ok(self.ideals.get_or_init(|| {
            lat.members()
                .iter()
                .map(|i| {
                    let sub = crate::submodule::submodule_module(&self.regular, i).expect("lattice member").0;
                    let quo = crate::submodule::quotient_module(&self.regular, i).expect("lattice member").0;
                    (sub, quo)
                })
                .collect()
        }))
    }

    /// Simple module classes, in the order of the maximal left ideals.
    pub fn simples(&self) -> Result<&[SimpleClass]> {
        self.simples
            .get_or_init(|| crate::homological::compute_simples(self))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// Indecomposable projectives; entry `j` is the projective cover of simple `j`.
    pub fn projectives(&self) -> Result<&[ProjectiveClass]> {
        self.projectives
            .get_or_init(|| crate::homological::compute_projectives(self))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// Indecomposable injectives, one per simple class (in the order of the
    /// opposite ring's simples).
    pub fn injectives(&self) -> Result<&[InjectiveClass]> {
        self.injectives
            .get_or_init(|| {
                let op = self.op();
                let ps = op.projectives()?;
                Ok(ps
                    .iter()
                    .map(|p| {
                        let module = crate::homological::character_dual(&p.module, &self.ring);
                        let radical = j_radical(&module);
                        InjectiveClass { module, radical }
                    })
                    .collect())
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// Whether the cyclic module `R/L` is a small module, for a left ideal `L`
    /// given as a set of ring element indices.
    ///
    /// `R/L` is small iff every map from it to an indecomposable injective
    /// lands in the radical; such maps are the elements of `E` killed by `L`.
    pub fn cyclic_is_small(&self, ideal: &BitSet) -> Result<bool> {
        if let Some(&v) = self.small_cyclic.lock().expect("cache lock").get(ideal) {
            return Ok(v);
        }
        let elems = self.ring.elements();
        let reg = &self.regular;
        let gens: Vec<Coords> = crate::submodule::additive_generators(reg, &Submodule::from_bits(ideal.clone()))
            .iter()
            .map(|&x| elems[x].clone())
            .collect();
        let mut small = true;
        'outer: for e in self.injectives()? {
            let m = &e.module;
            for x in 0..m.len() {
                if e.radical.contains(x) {
                    continue;
                }
                let c = m.coords_of(x);
                if gens.iter().all(|g| m.is_zero(&m.ring_act(g, &c))) {
                    small = false;
                    break 'outer;
                }
            }
        }
        self.small_cyclic.lock().expect("cache lock").insert(ideal.clone(), small);
        Ok(small)
    }

    /// Left annihilator `{r : r x = 0}` of an element, as ring element indices.
    pub fn annihilator(&self, m: &FinModule, x: usize) -> BitSet {
        self.annihilator_into(m, x, &Submodule::zero(m))
    }

    /// `{r : r x ∈ N}`.
    pub fn annihilator_into(&self, m: &FinModule, x: usize, n: &Submodule) -> BitSet {
        let rn = self.ring.size();
        let len = m.len();
        let table = m.ring_act_table();
        BitSet::from_indices(rn, (0..rn).filter(|&r| n.contains(table[r * len + x] as usize)))
    }

    /// Index of the simple class isomorphic to `s`.
    pub fn simple_index(&self, s: &FinModule) -> Result<usize> {
        for (j, c) in self.simples()?.iter().enumerate() {
            if c.module.size() == s.size() && crate::hom::are_isomorphic(&c.module, s)? {
                return Ok(j);
            }
        }
        Err(Error::Internal("module is not isomorphic to any simple".into()))
    }

    /// Checks that a module is over this ring.
    pub fn check_module(&self, m: &FinModule) -> Result<()> {
        if Arc::ptr_eq(m.ring_arc(), &self.ring) || **m.ring_arc() == *self.ring {
            Ok(())
        } else {
            Err(Error::DifferentBaseRings)
        }
    }
}
