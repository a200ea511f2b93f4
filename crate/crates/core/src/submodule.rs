//! Submodules as element sets, quotients and subobjects as modules, and the
//! full submodule lattice.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::morphism::ModuleMorphism;
use crate::presentation::AbelianSubquotient;
use crate::ring::Coords;

/// Default bound on `|M|` for lattice enumeration.
pub const DEFAULT_MODULE_CUTOFF: u128 = 4096;

/// A submodule, stored as the set of indices of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    bits: BitSet,
    size: usize,
}

impl Ord for Submodule {
    /// By size, then lexicographically by sorted element list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| self.bits.cmp_elements(&other.bits))
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Submodule {
    pub fn from_bits(bits: BitSet) -> Self {
        let size = bits.count();
        Submodule { bits, size }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        Submodule::from_bits(BitSet::from_indices(len, idx))
    }

    pub fn zero(m: &FinModule) -> Self {
        Submodule::from_indices(m.len(), [0])
    }

    pub fn full(m: &FinModule) -> Self {
        Submodule::from_bits(BitSet::full(m.len()))
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn is_full(&self) -> bool {
        self.size == self.bits.capacity()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.size <= other.size && self.bits.is_subset(&other.bits)
    }

    pub fn meet(&self, other: &Submodule) -> Submodule {
        Submodule::from_bits(self.bits.intersect(&other.bits))
    }

    /// Coordinates of all elements, for reporting.
    pub fn element_coords(&self, m: &FinModule) -> Vec<Coords> {
        self.elements().map(|x| m.coords_of(x)).collect()
    }
}

/// Growing additive subgroup, extended one element at a time by coset
/// expansion.
struct AddSpan {
    bits: BitSet,
    members: Vec<usize>,
}

impl AddSpan {
    fn new(m: &FinModule) -> Self {
        AddSpan { bits: BitSet::from_indices(m.len(), [0]), members: vec![0] }
    }

    fn from_submodule(s: &Submodule) -> Self {
        AddSpan { bits: s.bits.clone(), members: s.elements().collect() }
    }

    /// Returns true when `h` was new.
    fn push(&mut self, m: &FinModule, h: usize) -> bool {
        if self.bits.contains(h) {
            return false;
        }
        let base = self.members.clone();
        let hc = m.coords_of(h);
        let mut t = hc.clone();
        while !self.bits.contains(m.index_of(&t)) {
            for &b in &base {
                let s = m.index_of(&m.add(&m.coords_of(b), &t));
                if self.bits.insert(s) {
                    self.members.push(s);
                }
            }
            t = m.add(&t, &hc);
        }
        true
    }

    fn finish(self) -> Submodule {
        Submodule { size: self.members.len(), bits: self.bits }
    }
}

/// Additive subgroup generated by the given element indices.
pub fn additive_span(m: &FinModule, gens: &[usize]) -> Submodule {
    let mut s = AddSpan::new(m);
    for &g in gens {
        s.push(m, g);
    }
    s.finish()
}

/// A small additive generating set of `n`, chosen greedily in index order.
pub fn additive_generators(m: &FinModule, n: &Submodule) -> Vec<usize> {
    let mut s = AddSpan::new(m);
    let mut gens = Vec::new();
    for x in n.elements() {
        if s.push(m, x) {
            gens.push(x);
            if s.members.len() == n.size() {
                break;
            }
        }
    }
    gens
}

/// The submodule generated by the given elements.
pub fn span(m: &FinModule, gens: &[usize]) -> Submodule {
    let k = m.ring().dim();
    let mut s = AddSpan::new(m);
    for &g in gens {
        s.push(m, g);
        for i in 0..k {
            s.push(m, m.basis_act_idx(i, g));
        }
    }
    s.finish()
}

/// `N + Rx`.
pub fn extend(m: &FinModule, n: &Submodule, x: usize) -> Submodule {
    let mut s = AddSpan::from_submodule(n);
    s.push(m, x);
    for i in 0..m.ring().dim() {
        s.push(m, m.basis_act_idx(i, x));
    }
    s.finish()
}

pub fn join(m: &FinModule, a: &Submodule, b: &Submodule) -> Submodule {
    let (big, small) = if a.size >= b.size { (a, b) } else { (b, a) };
    let mut s = AddSpan::from_submodule(big);
    for x in small.elements() {
        s.push(m, x);
    }
    s.finish()
}

/// `J M`, the radical of a finite module.
pub fn j_radical(m: &FinModule) -> Submodule {
    let jg = m.ring().jacobson_generators();
    let gens: Vec<usize> = jg
        .iter()
        .flat_map(|j| (0..m.dim()).map(move |u| m.index_of(&m.ring_act(j, &m.generator(u)))))
        .collect();
    additive_span(m, &gens)
}

/// `{x : J x = 0}`, the socle of a finite module.
pub fn j_socle(m: &FinModule) -> Submodule {
    let jg = m.ring().jacobson_generators();
    let n = m.len();
    Submodule::from_indices(
        n,
        (0..n).filter(|&x| {
            let c = m.coords_of(x);
            jg.iter().all(|j| m.is_zero(&m.ring_act(j, &c)))
        }),
    )
}

/// Whether an element set is closed under addition and the ring action.
pub fn is_submodule(m: &FinModule, set: &BitSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    let elems: Vec<usize> = set.iter().collect();
    let k = m.ring().dim();
    elems.iter().all(|&x| (0..k).all(|i| set.contains(m.basis_act_idx(i, x))))
        && elems.iter().all(|&x| elems.iter().all(|&y| set.contains(m.add_idx(x, y))))
}

fn check_member(m: &FinModule, n: &Submodule) -> Result<()> {
    if n.bits.capacity() != m.len() || !is_submodule(m, &n.bits) {
        return Err(Error::NotASubmodule);
    }
    Ok(())
}

/// `V/U` as a module together with its presentation.
pub fn subquotient(m: &FinModule, v: Option<&Submodule>, u: &Submodule) -> (FinModule, AbelianSubquotient) {
    let to_coords = |s: &Submodule| -> Vec<Coords> { additive_generators(m, s).iter().map(|&x| m.coords_of(x)).collect() };
    let ugens = to_coords(u);
    let pres = match v {
        None => AbelianSubquotient::new(m.orders(), None, &ugens),
        Some(v) => AbelianSubquotient::new(m.orders(), Some(&to_coords(v)), &ugens),
    };
    let k = m.ring().dim();
    let action = (0..k)
        .map(|i| pres.lifts.iter().map(|l| pres.coords(&m.basis_act(i, l))).collect())
        .collect();
    let module = FinModule::new(m.ring_arc().clone(), pres.orders.clone(), action).expect("subquotient is a module");
    (module, pres)
}

/// `M/N` with the canonical projection.
pub fn quotient_module(m: &FinModule, n: &Submodule) -> Result<(FinModule, ModuleMorphism)> {
    check_member(m, n)?;
    let (q, pres) = subquotient(m, None, n);
    let images = (0..m.dim()).map(|u| pres.coords(&m.generator(u))).collect();
    let proj = ModuleMorphism::new_unchecked(m.clone(), q.clone(), images);
    Ok((q, proj))
}

/// `N` as a module in its own right with the inclusion into `M`.
pub fn submodule_module(m: &FinModule, n: &Submodule) -> Result<(FinModule, ModuleMorphism)> {
    check_member(m, n)?;
    let (s, pres) = subquotient(m, Some(n), &Submodule::zero(m));
    let incl = ModuleMorphism::new_unchecked(s.clone(), m.clone(), pres.lifts.clone());
    Ok((s, incl))
}

/// `V/U` for `U ⊆ V ⊆ M`.
pub fn subquotient_module(m: &FinModule, v: &Submodule, u: &Submodule) -> Result<FinModule> {
    check_member(m, v)?;
    check_member(m, u)?;
    if !u.is_subset(v) {
        return Err(Error::NotASubmodule);
    }
    Ok(subquotient(m, Some(v), u).0)
}

/// All submodules of a module, canonically ordered, with the covering
/// relation of the lattice.
#[derive(Clone, Debug)]
pub struct SubmoduleSet {
    ambient: FinModule,
    members: Vec<Submodule>,
    index: HashMap<BitSet, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

/// Whether a left ideal (a set of ring element indices) is maximal.
fn is_maximal_left_ideal(ring: &crate::ring::FiniteRing, ideal: &BitSet) -> bool {
    let elems = ring.elements();
    let one = ring.one();
    let n = elems.len();
    if ideal.count() == n {
        return false;
    }
    // maximal iff 1 ∈ A + Rr for every r outside A
    (0..n).filter(|&r| !ideal.contains(r)).all(|r| {
        elems.iter().any(|s| {
            let t = ring.sub(&ring.mul(s, &elems[r]), &one);
            ideal.contains(ring.index_of(&t))
        })
    })
}

/// Enumerates the full lattice. Fails if `|M|` exceeds `cutoff`.
pub fn submodule_lattice(m: &FinModule, cutoff: u128) -> Result<SubmoduleSet> {
    if m.size() > cutoff {
        return Err(Error::SizeCutoffExceeded(m.size(), cutoff));
    }
    let n = m.len();
    let ring = m.ring();
    let rn = ring.size();
    let table = m.ring_act_table();
    let mut maximal_cache: HashMap<BitSet, bool> = HashMap::new();

    let mut members = vec![Submodule::zero(m)];
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    index.insert(members[0].bits.clone(), 0);
    let mut upper: Vec<Vec<usize>> = vec![Vec::new()];
    let mut next = 0;
    while next < members.len() {
        let cur = members[next].clone();
        let mut covered = cur.bits.clone();
        for x in 0..n {
            if covered.contains(x) {
                continue;
            }
            // (N + Rx)/N is simple iff {r : r x ∈ N} is a maximal left ideal
            let ann = BitSet::from_indices(rn, (0..rn).filter(|&r| cur.contains(table[r * n + x] as usize)));
            let simple = *maximal_cache.entry(ann.clone()).or_insert_with(|| is_maximal_left_ideal(ring, &ann));
            if !simple {
                continue;
            }
            let c = extend(m, &cur, x);
            covered.union_with(&c.bits);
            let id = match index.get(&c.bits) {
                Some(&id) => id,
                None => {
                    let id = members.len();
                    index.insert(c.bits.clone(), id);
                    members.push(c);
                    upper.push(Vec::new());
                    id
                }
            };
            upper[next].push(id);
        }
        next += 1;
    }

    // canonical order
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&a, &b| members[a].cmp(&members[b]));
    let mut rank = vec![0usize; members.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let members: Vec<Submodule> = order.iter().map(|&old| members[old].clone()).collect();
    let mut up: Vec<Vec<usize>> = order.iter().map(|&old| upper[old].iter().map(|&c| rank[c]).collect()).collect();
    let mut lower = vec![Vec::new(); members.len()];
    for (a, cs) in up.iter_mut().enumerate() {
        cs.sort_unstable();
        for &c in cs.iter() {
            lower[c].push(a);
        }
    }
    let index = members.iter().enumerate().map(|(i, s)| (s.bits.clone(), i)).collect();
    Ok(SubmoduleSet { ambient: m.clone(), members, index, upper: up, lower })
}

impl SubmoduleSet {
    pub fn ambient(&self) -> &FinModule {
        &self.ambient
    }

    pub fn members(&self) -> &[Submodule] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.members[i]
    }

    pub fn position(&self, s: &Submodule) -> Option<usize> {
        self.index.get(&s.bits).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.members.len() - 1
    }

    /// Members covering member `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Members covered by member `i`.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Minimal nonzero submodules.
    pub fn minimal(&self) -> Vec<usize> {
        self.upper[0].clone()
    }

    /// Maximal proper submodules.
    pub fn maximal(&self) -> Vec<usize> {
        self.lower[self.top()].clone()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let s = join(&self.ambient, &self.members[a], &self.members[b]);
        self.index[&s.bits]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&self.members[a].bits.intersect(&self.members[b].bits)]
    }

    /// Members containing member `i` (an interval, in canonical order).
    pub fn above(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.members[i].is_subset(&self.members[j])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::spec::build_ring;
    use std::sync::Arc;

    fn lattice(spec: &str) -> SubmoduleSet {
        let r = Arc::new(build_ring(spec).unwrap());
        submodule_lattice(&regular_module(&r), DEFAULT_MODULE_CUTOFF).unwrap()
    }

    /// Brute force: every subset closed under the operations.
    fn brute_count(m: &FinModule) -> usize {
        let n = m.len();
        (0u64..(1 << n)).filter(|mask| is_submodule(m, &BitSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1)))).count()
    }

    #[test]
    fn z4_lattice() {
        let l = lattice("Z/4");
        assert_eq!(l.len(), 3);
        assert_eq!(l.get(1).elements().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn plane_over_f2() {
        let r = Arc::new(build_ring("GF(2)").unwrap());
        let m = FinModule::new(r, vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap();
        let l = submodule_lattice(&m, DEFAULT_MODULE_CUTOFF).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.len(), brute_count(&m));
    }

    #[test]
    fn tri_lattice() {
        let l = lattice("Tri(2,GF(2))");
        assert_eq!(l.maximal().len(), 2);
        assert_eq!(l.len(), brute_count(l.ambient()));
        for i in 0..l.len() {
            for j in 0..l.len() {
                let mj = l.meet(i, j);
                assert!(l.get(mj).is_subset(l.get(i)));
                let jn = l.join(i, j);
                assert!(l.get(i).is_subset(l.get(jn)));
            }
        }
    }

    #[test]
    fn quotients_and_subs() {
        let r = Arc::new(build_ring("Z/4").unwrap());
        let m = regular_module(&r);
        let two = span(&m, &[2]);
        let (q, p) = quotient_module(&m, &two).unwrap();
        assert_eq!(q.size(), 2);
        assert!(p.is_surjective());
        let (q0, p0) = quotient_module(&m, &Submodule::zero(&m)).unwrap();
        assert_eq!(q0.size(), 4);
        assert!(p0.is_injective());
        let (s, i) = submodule_module(&m, &two).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(i.image(), two);
        let bogus = Submodule::from_indices(4, [0, 1]);
        assert!(matches!(quotient_module(&m, &bogus), Err(Error::NotASubmodule)));
    }

    #[test]
    fn cutoff() {
        let r = Arc::new(build_ring("Z/4").unwrap());
        let m = regular_module(&r);
        assert!(matches!(submodule_lattice(&m, 3), Err(Error::SizeCutoffExceeded(4, 3))));
    }

    #[test]
    fn tri_mod_socle_is_simple() {
        let r = Arc::new(build_ring("Tri(2,GF(2))").unwrap());
        let m = regular_module(&r);
        let l = submodule_lattice(&m, DEFAULT_MODULE_CUTOFF).unwrap();
        let soc = l.minimal().iter().fold(Submodule::zero(&m), |acc, &i| join(&m, &acc, l.get(i)));
        assert_eq!(soc.size(), 4);
        let (q, _) = quotient_module(&m, &soc).unwrap();
        assert_eq!(q.size(), 2);
    }
}
